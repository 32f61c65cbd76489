#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gste/formula.hpp"
#include "gste/netlist.hpp"
#include "gste/state.hpp"
#include "gste/verdict.hpp"

namespace gste {

/// Closure for sequences: forward propagation through the gates at every
/// time point and through the registers from t to t+1. Depth-preserving.
Sequence f_seq(const Netlist& net, const Sequence& seq);

/// True iff the sequence is a fixpoint of f_seq.
bool is_trajectory(const Netlist& net, const Sequence& seq);

/// An STE assertion A => C checked over trajectories of exactly `depth`.
struct SteAssertion {
  Formula antecedent;
  Formula consequent;
  std::size_t depth = 0;  // >= depth of both formulas

  /// Uses max(depth(A), depth(C)).
  static SteAssertion make(Formula antecedent, Formula consequent);
};

/// "A => C"
std::string render(const SteAssertion& a);

/// Weakest sequence of the given depth satisfying a bound formula under phi.
Sequence defining_sequence(const Valuation& phi, const Formula& f, std::size_t depth, const Netlist& net);

/// Decides A => C for every valuation using the weakest A-satisfying
/// trajectory tau = f_seq(defining_sequence(A)):
///   simple:   defining_sequence(C) <= tau
///   normal:   tau holds Top, or simple
///   cautious: simple and tau is Top-free
/// Formulas must be bound to `net`.
Verdict check_ste(const Netlist& net, const SteAssertion& assertion, const Constants& constants,
                  Semantics semantics, bool fail_fast = false);

/// Contents of an STE assertion file: `const a b ...` declarations and
/// `assert <A> => <C>` lines.
struct SteFile {
  Constants constants;
  std::vector<SteAssertion> assertions;
  std::vector<int> lines;  // source line of each assertion
};

/// Throws ParseError.
SteFile parse_ste_file(std::string_view text);

}  // namespace gste
