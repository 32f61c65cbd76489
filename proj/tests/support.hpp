#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gste/agraph.hpp"
#include "gste/formula.hpp"
#include "gste/netlist.hpp"
#include "gste/state.hpp"
#include "gste/ste.hpp"

namespace gste::testing {

using Rng = std::mt19937_64;

std::string data_path(const std::string& name);
std::string read_file(const std::string& path);

Netlist load_netlist(const std::string& name);
/// Parsed and bound to `net`.
AssertionGraph load_agraph(const std::string& name, const Netlist& net);

Netlist netlist(const std::string& text);
AssertionGraph agraph(const std::string& text, const Netlist& net);
/// Parses a TEL formula over `constants` and binds it to `net`.
Formula tel(const std::string& text, const Netlist& net, const Constants& constants = {});

/// Random acyclic netlist with 1..max_nodes nodes: gates read earlier nodes,
/// registers may read any node.
Netlist random_netlist(Rng& rng, std::size_t max_nodes);

State random_state(Rng& rng, std::size_t nodes, bool three_valued = false);
Sequence random_sequence(Rng& rng, std::size_t nodes, std::size_t depth, bool three_valued = false);

/// Random shape with 1..max_edges edges in which every vertex is reachable.
Shape random_shape(Rng& rng, std::size_t max_edges);
SequenceGraph random_seq_graph(Rng& rng, const Shape& shape, std::size_t nodes, bool three_valued = false);

/// Random N-free formula with about `size` atoms; constants are referenced by
/// index into `constants`.
Formula random_gtel(Rng& rng, const Netlist& net, const Constants& constants, std::size_t size);
/// Random TEL formula of depth exactly `depth` (when depth > 0).
Formula random_tel(Rng& rng, const Netlist& net, const Constants& constants, std::size_t depth, std::size_t size);

/// Assertion graph v0 -> v1 -> ... -> vk with random labels; k in 1..max_edges.
AssertionGraph random_linear_agraph(Rng& rng, const Netlist& net, const Constants& constants, std::size_t max_edges);

/// Every netlist with 1..max_nodes nodes where gates only read earlier nodes
/// (all acyclic netlists, up to renaming of nodes in topological order).
std::vector<Netlist> all_small_netlists(std::size_t max_nodes);

/// Every shape with 1..max_edges edges and all vertices reachable, up to
/// renaming of non-initial vertices and reordering of edges.
std::vector<Shape> all_small_shapes(std::size_t max_edges);

}  // namespace gste::testing
