#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gste/state.hpp"

namespace gste {

enum class NodeKind { Input, Register, Gate };
enum class GateKind { And, Or };

/// A gate input: a node, optionally through an implicit inverter.
struct Literal {
  NodeId node;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Gate {
  GateKind kind = GateKind::And;
  NodeId out;
  Literal lhs;
  Literal rhs;
};

/// Validated gate-level circuit.
///
/// Every node is exactly one of: circuit input, register output (its register
/// input is another node, conventionally named with a trailing '), or the
/// output of one AND/OR gate. The gate graph is acyclic. Immutable once built.
class Netlist {
 public:
  Netlist() = default;

  std::size_t node_count() const { return names_.size(); }
  const std::string& name(NodeId n) const { return names_[n.index]; }
  const std::vector<std::string>& names() const { return names_; }
  NodeKind kind(NodeId n) const { return kinds_[n.index]; }
  std::optional<NodeId> find(std::string_view name) const;
  /// Throws std::out_of_range for unknown names.
  NodeId id(std::string_view name) const;

  /// Register pairs (output, input) in declaration order.
  const std::vector<std::pair<NodeId, NodeId>>& registers() const { return registers_; }
  /// Gates in a topological order of the combinational graph.
  const std::vector<Gate>& gates() const { return gates_; }

  /// The induced closure function F_c: forward propagation through every
  /// gate, each output joined with its value in the input state.
  State closure(const State& s) const;

  /// Information carried by the registers to the next time point: each
  /// register output gets the value of its input in s, everything else X.
  State nextf(const State& s) const;

  State all_x() const { return State(node_count(), Quad::X); }
  State all_top() const { return State(node_count(), Quad::Top); }

  /// Builds "in=1,set=0" style partial states; unnamed nodes are X.
  State state(std::initializer_list<std::pair<std::string_view, Quad>> values) const;

  /// Renders back to the netlist file format, one definition per line.
  std::string render() const;

  friend class NetlistBuilder;

 private:
  std::vector<std::string> names_;
  std::vector<NodeKind> kinds_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::pair<NodeId, NodeId>> registers_;
  std::vector<Gate> gates_;
};

/// Source position of a token, for diagnostics (0 when synthetic).
struct SourcePos {
  int line = 0;
  int column = 0;
};

/// Programmatic construction. Definitions may reference nodes declared later;
/// build() validates exactly like the parser. Literals are written "p" or "!p".
class NetlistBuilder {
 public:
  using Pos = SourcePos;

  NetlistBuilder& input(std::string name, Pos at = {});
  NetlistBuilder& reg(std::string out, std::string in, Pos at = {}, Pos in_at = {});
  NetlistBuilder& gate(GateKind kind, std::string out, std::string lhs, std::string rhs, Pos at = {},
                       Pos lhs_at = {}, Pos rhs_at = {});
  NetlistBuilder& and_gate(std::string out, std::string lhs, std::string rhs) {
    return gate(GateKind::And, std::move(out), std::move(lhs), std::move(rhs));
  }
  NetlistBuilder& or_gate(std::string out, std::string lhs, std::string rhs) {
    return gate(GateKind::Or, std::move(out), std::move(lhs), std::move(rhs));
  }

  /// Throws ParseError.
  Netlist build() const;

 private:
  struct Def {
    NodeKind kind;
    GateKind gate_kind = GateKind::And;
    std::string out;
    std::vector<std::string> operands;
    Pos at;
    std::vector<Pos> operand_at;
  };
  std::vector<Def> defs_;
};

/// Parses the line-oriented netlist format:
///   input <node> | reg <out> <in> | and <out> <lit> <lit> | or <out> <lit> <lit>
/// with <lit> := <node> | !<node> and '#' comments. Throws ParseError.
Netlist parse_netlist(std::string_view text);

bool is_node_name(std::string_view token);

}  // namespace gste
