#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "gste/netlist.hpp"
#include "gste/state.hpp"

namespace gste {

/// The declared set of symbolic constants, kept sorted by name.
class Constants {
 public:
  Constants() = default;
  Constants(std::initializer_list<std::string> names);

  /// Returns false if the name was already declared.
  bool add(std::string name);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  /// npos when undeclared.
  std::size_t index_of(std::string_view name) const;

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  std::vector<std::string> names_;
};

/// Total assignment of Booleans to the declared constants; bit i belongs to
/// constant i of the (sorted) Constants.
struct Valuation {
  std::uint64_t bits = 0;

  bool operator[](std::size_t i) const { return (bits >> i) & 1U; }
  void set(std::size_t i, bool v) {
    bits = v ? bits | (std::uint64_t{1} << i) : bits & ~(std::uint64_t{1} << i);
  }

  friend bool operator==(Valuation, Valuation) = default;
};

/// All 2^|W| valuations in lexicographic order of the sorted constant names
/// (the first constant varies slowest).
std::vector<Valuation> all_valuations(const Constants& constants);

/// "{a=0, b=1}"
std::string to_string(const Valuation& phi, const Constants& constants);

/// Propositional formula over symbolic constants.
struct Prop {
  enum class Kind { Const, Var, Not, And, Or };

  Kind kind = Kind::Const;
  bool value = true;           // Const
  std::string name;            // Var
  std::size_t var = Constants::npos;  // Var: index into Constants
  std::vector<Prop> args;      // Not: 1, And/Or: 2
  int column = 0;              // source column of a Var, for diagnostics

  static Prop constant(bool v);
  static Prop variable(std::string name, std::size_t index);
  static Prop negation(Prop p);
  static Prop conj(Prop a, Prop b);
  static Prop disj(Prop a, Prop b);

  bool is_const() const { return kind == Kind::Const; }
};

bool eval_prop(const Prop& p, const Valuation& phi);

/// Trajectory evaluation logic:
///   f ::= n is P | f & ... & f | P -> f | N f
/// The empty conjunction is `true`. `n is P` with a constant P is the basic
/// atom `n is 0` / `n is 1`; a non-constant P is the usual shorthand for
/// (!P -> n is 0) & (P -> n is 1).
struct Formula {
  enum class Kind { Is, And, Guard, Next };

  Kind kind = Kind::And;
  std::string node;   // Is
  NodeId id{};        // Is, valid once bound
  bool bound = false; // Is
  Prop prop;          // Is: the value; Guard: the guard
  std::vector<Formula> args;  // And: conjuncts; Guard/Next: the body
  int line = 0;       // source position of an Is atom
  int column = 0;

  static Formula truth() { return Formula{}; }
  static Formula is(std::string node, Prop value);
  static Formula is(std::string node, bool value) { return is(std::move(node), Prop::constant(value)); }
  static Formula conj(std::vector<Formula> parts);
  static Formula guard(Prop p, Formula body);
  static Formula next(Formula body, std::size_t times = 1);

  bool is_true() const { return kind == Kind::And && args.empty(); }
  const Formula& body() const { return args.front(); }
};

/// Maximal nesting of N.
std::size_t depth(const Formula& f);

/// Where a formula's text starts in its file, for diagnostics.
struct TextPos {
  int line = 0;
  int column = 1;
};

/// Throws ParseError (Syntax, UnknownConstant).
Prop parse_prop(std::string_view text, const Constants& constants, TextPos at = {});
/// Throws ParseError (Syntax, UnknownConstant).
Formula parse_tel(std::string_view text, const Constants& constants, TextPos at = {});
/// As parse_tel but rejects N (NextInGtel).
Formula parse_gtel(std::string_view text, const Constants& constants, TextPos at = {});

/// Canonical concrete syntax; parse_tel(render(f)) is structurally equal to f.
std::string render(const Prop& p);
std::string render(const Formula& f);

/// Resolves node names against a netlist. Throws ParseError(UndeclaredNode).
Formula bind(const Formula& f, const Netlist& net);

/// Rewrites every non-constant `n is P` into its guarded pair.
Formula expand_sugar(const Formula& f);

/// State satisfaction of an N-free, bound formula. `n is b` holds iff the
/// node's value is at least b in the information order, so Top satisfies
/// both `n is 0` and `n is 1`.
bool sat_state(const Valuation& phi, const State& s, const Formula& g);

/// Sequence satisfaction; N shifts time by one. Throws std::invalid_argument
/// if depth(f) exceeds the sequence depth.
bool sat_seq(const Valuation& phi, const Sequence& seq, const Formula& f);

/// Weakest state satisfying an N-free, bound formula under phi. Conflicting
/// demands produce Top.
State defining_state(const Valuation& phi, const Formula& g, std::size_t nodes);

/// Splits a formula into N-free per-time formulas (index = time), pushing N
/// outward through conjunctions and guards. The result has max(depth(f),
/// min_depth) + 1 entries; unconstrained slots are `true`.
std::vector<Formula> strata(const Formula& f, std::size_t min_depth = 0);

}  // namespace gste
