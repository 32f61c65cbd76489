#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gste/agraph.hpp"
#include "gste/formula.hpp"
#include "gste/netlist.hpp"
#include "gste/verdict.hpp"

namespace gste {

/// One application of the operator Fsg_Sigma:
///   initial e:  F(sigma(e))
///   otherwise:  F(sigma(e) lub  glb_{i in ine(e)} nextf(delta(i)))
/// The glb of no states is all-Top. Throws std::invalid_argument on shape
/// mismatch.
SequenceGraph fsg_step(const Netlist& net, const Shape& shape, const SequenceGraph& sigma, const SequenceGraph& delta);

struct FixpointResult {
  SequenceGraph graph;
  std::size_t iterations = 0;  // operator applications, including the one confirming the fixpoint
};

/// 2 * |E| * |nodes| + 2: a decreasing chain of sequence graphs cannot be longer.
std::size_t iteration_cap(const Shape& shape, const Netlist& net);

/// Fsg(sigma): the greatest fixpoint of Fsg_Sigma, reached by iterating from
/// the all-Top graph. Throws std::logic_error if the chain ever increases or
/// the iteration cap is exceeded.
FixpointResult gfp_delta(const Netlist& net, const Shape& shape, const SequenceGraph& sigma);

/// The alternative iteration that starts from F(sigma) on initial edges and
/// Top elsewhere and meets each new iterate with the previous one. Converges
/// to the same graph as gfp_delta.
FixpointResult gamma_iterate(const Netlist& net, const Shape& shape, const SequenceGraph& sigma);

/// Per-edge defining states of edge labels under phi (labels must be bound).
SequenceGraph defining_seq_graph(const Valuation& phi, const std::vector<Formula>& labels, std::size_t nodes);

/// gfp_delta of the antecedent's defining sequence graph.
FixpointResult defining_traj_graph(const Netlist& net, const Valuation& phi, const AssertionGraph& g);

struct GsteOptions {
  bool fail_fast = false;
  std::size_t max_consts = 20;
  unsigned jobs = 1;
  /// Called once per checked valuation, in valuation order, with the
  /// defining trajectory graph.
  std::function<void(const Valuation&, const SequenceGraph&)> on_trajectory;
};

/// Decides the assertion graph for every valuation of its constants:
///   simple:   <cons> <= <ant>^F, compared per edge and node
///   cautious: simple and <ant>^F is Top-free
/// Normal semantics is not defined for graphs (std::invalid_argument).
/// Throws LimitExceeded when the graph has more than max_consts constants.
Verdict check_gste(const Netlist& net, const AssertionGraph& g, Semantics semantics, const GsteOptions& options = {});

}  // namespace gste
