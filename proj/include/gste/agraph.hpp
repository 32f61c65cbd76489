#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gste/formula.hpp"
#include "gste/netlist.hpp"
#include "gste/state.hpp"
#include "gste/ste.hpp"

namespace gste {

/// Vertices and edges of a rooted directed multigraph. Edges are identified
/// by index; parallel edges and self-loops are allowed.
class Shape {
 public:
  struct Edge {
    std::size_t src = 0;
    std::size_t dst = 0;
  };

  Shape() = default;
  Shape(std::size_t vertices, std::size_t init, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t init() const { return init_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  bool is_initial(std::size_t e) const { return edges_[e].src == init_; }

  /// ine(e): edges whose end vertex is the start vertex of e.
  const std::vector<std::size_t>& incoming(std::size_t e) const { return incoming_[e]; }
  /// Edges leaving vertex v, by index.
  const std::vector<std::size_t>& outgoing(std::size_t v) const { return outgoing_[v]; }

  /// Every vertex and every edge lies on some initial path.
  bool all_reachable() const;
  std::vector<bool> reachable_vertices() const;

  friend bool operator==(const Shape& a, const Shape& b) {
    return a.vertex_count_ == b.vertex_count_ && a.init_ == b.init_ && a.edges_.size() == b.edges_.size() &&
           std::equal(a.edges_.begin(), a.edges_.end(), b.edges_.begin(),
                      [](const Edge& x, const Edge& y) { return x.src == y.src && x.dst == y.dst; });
  }

 private:
  std::size_t vertex_count_ = 0;
  std::size_t init_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incoming_;
  std::vector<std::vector<std::size_t>> outgoing_;
};

/// A circuit state per edge of a shape. Order and bounds are pointwise;
/// comparisons require the same shape (equal edge count and node count).
struct SequenceGraph {
  std::vector<State> states;

  static SequenceGraph filled(std::size_t edges, std::size_t nodes, Quad v) {
    return SequenceGraph{std::vector<State>(edges, State(nodes, v))};
  }

  std::size_t edge_count() const { return states.size(); }
  const State& operator[](std::size_t e) const { return states[e]; }
  State& operator[](std::size_t e) { return states[e]; }
  bool has_top() const;

  friend bool operator==(const SequenceGraph&, const SequenceGraph&) = default;
};

/// Throws std::invalid_argument on shape mismatch.
bool leq(const SequenceGraph& a, const SequenceGraph& b);
SequenceGraph lub(const SequenceGraph& a, const SequenceGraph& b);
SequenceGraph glb(const SequenceGraph& a, const SequenceGraph& b);

/// A list of adjacent edges; depth = length - 1.
struct Path {
  std::vector<std::size_t> edges;

  std::size_t depth() const { return edges.empty() ? 0 : edges.size() - 1; }
  friend bool operator==(const Path&, const Path&) = default;
};

/// True iff non-empty, adjacent, and starting with an initial edge.
bool is_initial_path(const Shape& shape, const Path& path);

/// The sequence a path picks out of a sequence graph. Throws
/// std::invalid_argument when the path is not an initial path of the shape.
Sequence seqp(const Shape& shape, const SequenceGraph& graph, const Path& path);

/// All initial paths of depth <= bound, shortest first; paths of equal depth
/// in lexicographic order of their edge keys (edge index by default).
std::vector<Path> enumerate_paths(const Shape& shape, std::size_t bound);
std::vector<Path> enumerate_paths(const Shape& shape, std::size_t bound, const std::vector<std::string>& edge_keys);

/// Assertion graph: a shape with antecedent/consequent GTEL labels per edge.
struct AssertionGraph {
  Constants constants;
  std::vector<std::string> vertices;
  std::vector<std::string> edge_ids;
  Shape shape;
  std::vector<Formula> ant;
  std::vector<Formula> cons;

  std::optional<std::size_t> find_edge(std::string_view id) const;
  std::optional<std::size_t> find_vertex(std::string_view name) const;
  /// "v->w" style label of an edge's endpoints.
  std::string describe_edge(std::size_t e) const;
};

/// Parses the assertion-graph format:
///   const <name>...
///   vertex <name>...
///   init <name>
///   edge <id> <src> -> <dst> [ <gtel> / <gtel> ]
/// Unlabeled sides default to true. Throws ParseError.
AssertionGraph parse_agraph(std::string_view text);

/// Canonical text; parse_agraph(render(g)) reproduces the same ids and labels.
std::string render(const AssertionGraph& g);

/// Resolves every label against a netlist. Throws ParseError(UndeclaredNode).
AssertionGraph bind(const AssertionGraph& g, const Netlist& net);

/// ine(e) by edge index.
inline const std::vector<std::size_t>& ine(const AssertionGraph& g, std::size_t e) { return g.shape.incoming(e); }

/// ass(G, rho): conjunction of N^t ant(rho(t)) => conjunction of N^t
/// cons(rho(t)); the assertion depth is the path depth.
SteAssertion ass(const AssertionGraph& g, const Path& path);

struct EnumeratedAssertion {
  Path path;
  SteAssertion assertion;
};

/// ass(G, rho) for every initial path of depth <= bound, in path order.
std::vector<EnumeratedAssertion> enumerate_assertions(const AssertionGraph& g, std::size_t bound);

/// {"edge id": {"node": "value", ...}, ...} in edge and node declaration order.
nlohmann::ordered_json sequence_graph_json(const AssertionGraph& g, const Netlist& net, const SequenceGraph& graph);

/// Graphviz rendering; edges are labeled "<id>: <state vector>".
std::string sequence_graph_dot(const AssertionGraph& g, const Netlist& net, const SequenceGraph& graph,
                               std::string_view title = "sequence_graph");

}  // namespace gste
