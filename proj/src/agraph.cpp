#include "gste/agraph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "gste/diagnostics.hpp"
#include "text.hpp"

namespace gste {

Shape::Shape(std::size_t vertices, std::size_t init, std::vector<Edge> edges)
    : vertex_count_(vertices), init_(init), edges_(std::move(edges)) {
  if (vertices == 0 || init >= vertices) throw std::invalid_argument("shape: initial vertex out of range");
  outgoing_.assign(vertices, {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].src >= vertices || edges_[e].dst >= vertices) throw std::invalid_argument("shape: edge endpoint out of range");
    outgoing_[edges_[e].src].push_back(e);
  }
  incoming_.assign(edges_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].dst == edges_[e].src) incoming_[e].push_back(i);
    }
  }
}

std::vector<bool> Shape::reachable_vertices() const {
  std::vector<bool> seen(vertex_count_, false);
  std::deque<std::size_t> queue{init_};
  seen[init_] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : outgoing_[v]) {
      if (!seen[edges_[e].dst]) {
        seen[edges_[e].dst] = true;
        queue.push_back(edges_[e].dst);
      }
    }
  }
  return seen;
}

bool Shape::all_reachable() const {
  // An edge is reachable iff its source is; a vertex other than init also
  // needs an incoming edge, which reachability from init already implies.
  const auto seen = reachable_vertices();
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool SequenceGraph::has_top() const {
  return std::any_of(states.begin(), states.end(), [](const State& s) { return s.has_top(); });
}

namespace {

void check_same_shape(const SequenceGraph& a, const SequenceGraph& b) {
  if (a.edge_count() != b.edge_count()) throw std::invalid_argument("sequence graphs differ in edge count");
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    if (a[e].size() != b[e].size()) throw std::invalid_argument("sequence graphs differ in node count");
  }
}

}  // namespace

bool leq(const SequenceGraph& a, const SequenceGraph& b) {
  check_same_shape(a, b);
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    if (!leq(a[e], b[e])) return false;
  }
  return true;
}

SequenceGraph lub(const SequenceGraph& a, const SequenceGraph& b) {
  check_same_shape(a, b);
  SequenceGraph out;
  out.states.reserve(a.edge_count());
  for (std::size_t e = 0; e < a.edge_count(); ++e) out.states.push_back(lub(a[e], b[e]));
  return out;
}

SequenceGraph glb(const SequenceGraph& a, const SequenceGraph& b) {
  check_same_shape(a, b);
  SequenceGraph out;
  out.states.reserve(a.edge_count());
  for (std::size_t e = 0; e < a.edge_count(); ++e) out.states.push_back(glb(a[e], b[e]));
  return out;
}

bool is_initial_path(const Shape& shape, const Path& path) {
  if (path.edges.empty()) return false;
  for (std::size_t e : path.edges) {
    if (e >= shape.edge_count()) return false;
  }
  if (!shape.is_initial(path.edges.front())) return false;
  for (std::size_t k = 1; k < path.edges.size(); ++k) {
    if (shape.edge(path.edges[k - 1]).dst != shape.edge(path.edges[k]).src) return false;
  }
  return true;
}

Sequence seqp(const Shape& shape, const SequenceGraph& graph, const Path& path) {
  if (graph.edge_count() != shape.edge_count()) throw std::invalid_argument("seqp: sequence graph does not match shape");
  if (!is_initial_path(shape, path)) throw std::invalid_argument("seqp: not an initial path");
  Sequence seq;
  seq.states.reserve(path.edges.size());
  for (std::size_t e : path.edges) seq.states.push_back(graph[e]);
  return seq;
}

std::vector<Path> enumerate_paths(const Shape& shape, std::size_t bound, const std::vector<std::string>& edge_keys) {
  if (edge_keys.size() != shape.edge_count()) throw std::invalid_argument("enumerate_paths: one key per edge required");
  auto key_less = [&](const Path& a, const Path& b) {
    return std::lexicographical_compare(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                                        [&](std::size_t x, std::size_t y) { return edge_keys[x] < edge_keys[y]; });
  };
  std::vector<Path> out;
  std::vector<Path> level;
  for (std::size_t e : shape.outgoing(shape.init())) level.push_back(Path{{e}});
  for (std::size_t d = 0; d <= bound && !level.empty(); ++d) {
    std::sort(level.begin(), level.end(), key_less);
    out.insert(out.end(), level.begin(), level.end());
    if (d == bound) break;
    std::vector<Path> next;
    for (const Path& p : level) {
      for (std::size_t e : shape.outgoing(shape.edge(p.edges.back()).dst)) {
        Path q = p;
        q.edges.push_back(e);
        next.push_back(std::move(q));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<Path> enumerate_paths(const Shape& shape, std::size_t bound) {
  // Zero-padded indices sort numerically.
  std::vector<std::string> keys;
  for (std::size_t e = 0; e < shape.edge_count(); ++e) {
    std::string k = std::to_string(e);
    keys.push_back(std::string(20 - k.size(), '0') + k);
  }
  return enumerate_paths(shape, bound, keys);
}

std::optional<std::size_t> AssertionGraph::find_edge(std::string_view id) const {
  for (std::size_t e = 0; e < edge_ids.size(); ++e) {
    if (edge_ids[e] == id) return e;
  }
  return std::nullopt;
}

std::optional<std::size_t> AssertionGraph::find_vertex(std::string_view name) const {
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v] == name) return v;
  }
  return std::nullopt;
}

std::string AssertionGraph::describe_edge(std::size_t e) const {
  return vertices[shape.edge(e).src] + "->" + vertices[shape.edge(e).dst];
}

namespace {

struct PendingEdge {
  std::string id;
  std::size_t src;
  std::size_t dst;
  Formula ant;
  Formula cons;
  int line;
};

bool is_identifier(std::string_view s) { return is_node_name(s) && s.back() != '\''; }

Formula parse_side(std::string_view line, std::size_t begin, std::size_t end, const Constants& constants, int line_no) {
  const std::string_view text = line.substr(begin, end - begin);
  if (tokenize(text).empty()) return Formula::truth();
  return parse_gtel(text, constants, TextPos{line_no, static_cast<int>(begin) + 1});
}

}  // namespace

AssertionGraph parse_agraph(std::string_view text) {
  AssertionGraph g;
  const auto lines = split_lines(text);
  std::vector<int> vertex_lines;
  std::optional<std::size_t> init;
  int init_line = 0;

  auto declare_vertex = [&](const Token& tok, int line_no) {
    if (!is_identifier(tok.text)) fail(DiagCode::Syntax, line_no, tok.column, "invalid vertex name '" + tok.text + "'");
    if (g.find_vertex(tok.text))
      fail(DiagCode::DuplicateDeclaration, line_no, tok.column, "vertex '" + tok.text + "' declared twice");
    g.vertices.push_back(tok.text);
    vertex_lines.push_back(line_no);
    return g.vertices.size() - 1;
  };

  // First pass: constants and vertices, so edges and labels may refer to
  // declarations further down.
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const int line_no = static_cast<int>(k) + 1;
    const auto tokens = tokenize(strip_comment(lines[k]));
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0].text;
    if (kw == "const") {
      if (tokens.size() < 2) fail(DiagCode::Syntax, line_no, tokens[0].column, "'const' expects at least one name");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!is_identifier(tokens[i].text) || tokens[i].text == "N")
          fail(DiagCode::Syntax, line_no, tokens[i].column, "invalid constant name '" + tokens[i].text + "'");
        if (!g.constants.add(tokens[i].text))
          fail(DiagCode::DuplicateDeclaration, line_no, tokens[i].column,
               "constant '" + tokens[i].text + "' declared twice");
      }
    } else if (kw == "vertex") {
      if (tokens.size() < 2) fail(DiagCode::Syntax, line_no, tokens[0].column, "'vertex' expects at least one name");
      for (std::size_t i = 1; i < tokens.size(); ++i) declare_vertex(tokens[i], line_no);
    } else if (kw == "init") {
      if (tokens.size() != 2) fail(DiagCode::Syntax, line_no, tokens[0].column, "'init' expects exactly one vertex");
      if (init)
        fail(DiagCode::DuplicateDeclaration, line_no, tokens[0].column,
             "initial vertex already declared on line " + std::to_string(init_line));
      const auto existing = g.find_vertex(tokens[1].text);
      init = existing ? *existing : declare_vertex(tokens[1], line_no);
      init_line = line_no;
    } else if (kw != "edge") {
      fail(DiagCode::Syntax, line_no, tokens[0].column, "unknown declaration '" + kw + "'");
    }
  }
  if (g.vertices.empty()) fail(DiagCode::MissingInit, 1, 1, "assertion graph declares no vertices");
  const std::size_t init_vertex = init.value_or(0);

  std::vector<PendingEdge> edges;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const int line_no = static_cast<int>(k) + 1;
    const std::string_view line = strip_comment(lines[k]);
    const auto all_tokens = tokenize(line);
    if (all_tokens.empty() || all_tokens[0].text != "edge") continue;

    const std::size_t open = line.find('[');
    const auto tokens = tokenize(line.substr(0, open));
    if (tokens.size() < 5 || tokens[3].text != "->") {
      const int col = tokens.size() > 3 ? tokens[3].column : column_after(line, line.size());
      fail(DiagCode::Syntax, line_no, col, "expected 'edge <id> <src> -> <dst> [ ant / cons ]'");
    }
    if (tokens.size() > 5) fail(DiagCode::Syntax, line_no, tokens[5].column, "unexpected '" + tokens[5].text + "'");
    const Token& id = tokens[1];
    if (!is_identifier(id.text)) fail(DiagCode::Syntax, line_no, id.column, "invalid edge id '" + id.text + "'");
    for (const PendingEdge& other : edges) {
      if (other.id == id.text)
        fail(DiagCode::DuplicateDeclaration, line_no, id.column,
             "edge '" + id.text + "' already declared on line " + std::to_string(other.line));
    }
    auto vertex = [&](const Token& tok) {
      const auto v = g.find_vertex(tok.text);
      if (!v) fail(DiagCode::UnknownVertex, line_no, tok.column, "unknown vertex '" + tok.text + "'");
      return *v;
    };
    PendingEdge edge{id.text, vertex(tokens[2]), vertex(tokens[4]), Formula::truth(), Formula::truth(), line_no};

    if (open != std::string_view::npos) {
      const std::size_t close = line.rfind(']');
      if (close == std::string_view::npos || close < open)
        fail(DiagCode::Syntax, line_no, static_cast<int>(line.size()) + 1, "missing ']' after edge label");
      if (column_after(line, close + 1) <= static_cast<int>(line.size()))
        fail(DiagCode::Syntax, line_no, column_after(line, close + 1), "unexpected text after edge label");
      const std::size_t slash = line.find('/', open);
      if (slash == std::string_view::npos || slash > close)
        fail(DiagCode::Syntax, line_no, static_cast<int>(close) + 1, "edge label needs 'antecedent / consequent'");
      edge.ant = parse_side(line, open + 1, slash, g.constants, line_no);
      edge.cons = parse_side(line, slash + 1, close, g.constants, line_no);
    }
    edges.push_back(std::move(edge));
  }

  std::vector<Shape::Edge> shape_edges;
  for (PendingEdge& e : edges) {
    shape_edges.push_back({e.src, e.dst});
    g.edge_ids.push_back(e.id);
    g.ant.push_back(std::move(e.ant));
    g.cons.push_back(std::move(e.cons));
  }
  g.shape = Shape(g.vertices.size(), init_vertex, std::move(shape_edges));

  const auto seen = g.shape.reachable_vertices();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!seen[g.shape.edge(e).src])
      fail(DiagCode::Unreachable, edges[e].line, 1,
           "edge '" + g.edge_ids[e] + "' is not reachable from '" + g.vertices[init_vertex] + "'");
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (!seen[v])
      fail(DiagCode::Unreachable, vertex_lines[v], 1,
           "vertex '" + g.vertices[v] + "' is not reachable from '" + g.vertices[init_vertex] + "'");
  }
  return g;
}

std::string render(const AssertionGraph& g) {
  std::ostringstream out;
  if (!g.constants.empty()) {
    out << "const";
    for (const auto& c : g.constants.names()) out << ' ' << c;
    out << '\n';
  }
  out << "init " << g.vertices[g.shape.init()] << '\n';
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (v != g.shape.init()) out << "vertex " << g.vertices[v] << '\n';
  }
  for (std::size_t e = 0; e < g.edge_ids.size(); ++e) {
    out << "edge " << g.edge_ids[e] << ' ' << g.vertices[g.shape.edge(e).src] << " -> "
        << g.vertices[g.shape.edge(e).dst] << " [ " << render(g.ant[e]) << " / " << render(g.cons[e]) << " ]\n";
  }
  return out.str();
}

AssertionGraph bind(const AssertionGraph& g, const Netlist& net) {
  AssertionGraph out = g;
  for (auto& f : out.ant) f = bind(f, net);
  for (auto& f : out.cons) f = bind(f, net);
  return out;
}

SteAssertion ass(const AssertionGraph& g, const Path& path) {
  if (!is_initial_path(g.shape, path)) throw std::invalid_argument("ass: not an initial path");
  std::vector<Formula> ant;
  std::vector<Formula> cons;
  for (std::size_t t = 0; t < path.edges.size(); ++t) {
    const std::size_t e = path.edges[t];
    if (!g.ant[e].is_true()) ant.push_back(Formula::next(g.ant[e], t));
    if (!g.cons[e].is_true()) cons.push_back(Formula::next(g.cons[e], t));
  }
  return SteAssertion{Formula::conj(std::move(ant)), Formula::conj(std::move(cons)), path.depth()};
}

std::vector<EnumeratedAssertion> enumerate_assertions(const AssertionGraph& g, std::size_t bound) {
  std::vector<EnumeratedAssertion> out;
  for (Path& p : enumerate_paths(g.shape, bound, g.edge_ids)) {
    SteAssertion a = ass(g, p);
    out.push_back({std::move(p), std::move(a)});
  }
  return out;
}

nlohmann::ordered_json sequence_graph_json(const AssertionGraph& g, const Netlist& net, const SequenceGraph& graph) {
  if (graph.edge_count() != g.edge_ids.size()) throw std::invalid_argument("sequence graph does not match assertion graph");
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    nlohmann::ordered_json nodes = nlohmann::ordered_json::object();
    for (std::uint32_t i = 0; i < net.node_count(); ++i) nodes[net.name(NodeId{i})] = std::string(1, to_char(graph[e].at(i)));
    out[g.edge_ids[e]] = std::move(nodes);
  }
  return out;
}

std::string sequence_graph_dot(const AssertionGraph& g, const Netlist& net, const SequenceGraph& graph,
                               std::string_view title) {
  if (graph.edge_count() != g.edge_ids.size()) throw std::invalid_argument("sequence graph does not match assertion graph");
  std::ostringstream out;
  out << "digraph \"" << title << "\" {\n";
  out << "  // state vectors list nodes in order:";
  for (const auto& n : net.names()) out << ' ' << n;
  out << '\n';
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out << "  \"" << g.vertices[v] << '"';
    if (v == g.shape.init()) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    out << "  \"" << g.vertices[g.shape.edge(e).src] << "\" -> \"" << g.vertices[g.shape.edge(e).dst] << "\" [label=\""
        << g.edge_ids[e] << ": " << graph[e].to_string() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gste
