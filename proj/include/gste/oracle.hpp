#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gste/agraph.hpp"
#include "gste/formula.hpp"
#include "gste/netlist.hpp"
#include "gste/state.hpp"
#include "gste/verdict.hpp"

// Brute-force reference implementations of the semantic definitions. Nothing
// here calls into the STE or GSTE engines; only netlist closure/nextf and the
// lattice are shared.
namespace gste::oracle {

constexpr std::size_t kDefaultMaxSlots = 12;

/// Calls `visit` for every trajectory of the given depth, in lexicographic
/// order of (time, node) with values ordered 0 < 1 < X < Top. With
/// `three_valued` only Top-free trajectories are produced. Throws
/// LimitExceeded when nodes * (depth + 1) > max_slots.
void for_each_trajectory(const Netlist& net, std::size_t depth, bool three_valued,
                         const std::function<void(const Sequence&)>& visit, std::size_t max_slots = kDefaultMaxSlots);

std::vector<Sequence> enum_trajectories(const Netlist& net, std::size_t depth, bool three_valued,
                                        std::size_t max_slots = kDefaultMaxSlots);

/// Truth of A => C under one valuation in each of the three semantics.
struct SteTruth {
  bool normal = true;
  bool simple = true;
  bool cautious = true;

  bool get(Semantics s) const;
};

/// A and C must be bound. The depth is the assertion depth.
SteTruth oracle_check_ste(const Netlist& net, const Formula& a, const Formula& c, std::size_t depth,
                          const Valuation& phi, std::size_t max_slots = kDefaultMaxSlots);

/// Same, over a precomputed list of all (four-valued) trajectories of the
/// assertion depth.
SteTruth oracle_check_ste(const std::vector<Sequence>& trajectories, const Formula& a, const Formula& c,
                          const Valuation& phi);

/// Every sequence graph delta over {0,1,X,Top} with Fsg_Sigma(delta) = delta,
/// in lexicographic order of (edge, node). Throws LimitExceeded when
/// edges * nodes > max_slots.
std::vector<SequenceGraph> enum_fixpoints(const Netlist& net, const Shape& shape, const SequenceGraph& sigma,
                                          std::size_t max_slots = kDefaultMaxSlots);

/// Every initial path of depth <= bound satisfies its STE assertion in the
/// simple semantics, for all valuations. Labels must be bound. The slot cap
/// applies to the deepest trajectories examined.
bool forall_semantics_check(const Netlist& net, const AssertionGraph& g, std::size_t bound,
                            std::size_t max_slots = kDefaultMaxSlots);

}  // namespace gste::oracle
