#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#ifndef GSTE_DATA_DIR
#error "GSTE_DATA_DIR must be defined"
#endif

namespace gste::testing {

std::string data_path(const std::string& name) { return std::string(GSTE_DATA_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Netlist load_netlist(const std::string& name) { return parse_netlist(read_file(data_path(name))); }

AssertionGraph load_agraph(const std::string& name, const Netlist& net) {
  return bind(parse_agraph(read_file(data_path(name))), net);
}

Netlist netlist(const std::string& text) { return parse_netlist(text); }

AssertionGraph agraph(const std::string& text, const Netlist& net) { return bind(parse_agraph(text), net); }

Formula tel(const std::string& text, const Netlist& net, const Constants& constants) {
  return bind(parse_tel(text, constants), net);
}

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

std::string node_name(std::size_t i) { return "n" + std::to_string(i); }

}  // namespace

Netlist random_netlist(Rng& rng, std::size_t max_nodes) {
  const std::size_t n = 1 + pick(rng, max_nodes);
  NetlistBuilder b;
  auto lit = [&](std::size_t below) { return (coin(rng) ? "!" : "") + node_name(pick(rng, below)); };
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t kind = i == 0 ? pick(rng, 2) : pick(rng, 4);
    if (kind == 0) {
      b.input(node_name(i));
    } else if (kind == 1) {
      b.reg(node_name(i), node_name(pick(rng, n)));
    } else {
      b.gate(kind == 2 ? GateKind::And : GateKind::Or, node_name(i), lit(i), lit(i));
    }
  }
  return b.build();
}

State random_state(Rng& rng, std::size_t nodes, bool three_valued) {
  State s(nodes);
  for (std::size_t i = 0; i < nodes; ++i) s.at(i) = kAllQuads[pick(rng, three_valued ? 3 : 4)];
  return s;
}

Sequence random_sequence(Rng& rng, std::size_t nodes, std::size_t depth, bool three_valued) {
  Sequence seq;
  for (std::size_t t = 0; t <= depth; ++t) seq.states.push_back(random_state(rng, nodes, three_valued));
  return seq;
}

Shape random_shape(Rng& rng, std::size_t max_edges) {
  const std::size_t edges = 1 + pick(rng, max_edges);
  const std::size_t vertices = 1 + pick(rng, std::min<std::size_t>(edges, 3) + 1);
  std::vector<Shape::Edge> list;
  // A spanning tree from vertex 0 keeps every vertex reachable.
  for (std::size_t v = 1; v < vertices; ++v) list.push_back({pick(rng, v), v});
  while (list.size() < std::max(edges, vertices - 1) || list.empty())
    list.push_back({pick(rng, vertices), pick(rng, vertices)});
  std::shuffle(list.begin(), list.end(), rng);
  return Shape(vertices, 0, list);
}

SequenceGraph random_seq_graph(Rng& rng, const Shape& shape, std::size_t nodes, bool three_valued) {
  SequenceGraph g;
  for (std::size_t e = 0; e < shape.edge_count(); ++e) g.states.push_back(random_state(rng, nodes, three_valued));
  return g;
}

namespace {

Prop random_prop(Rng& rng, const Constants& constants) {
  if (constants.empty() || coin(rng, 0.3)) return Prop::constant(coin(rng));
  auto var = [&] {
    const std::size_t i = pick(rng, constants.size());
    return Prop::variable(constants.names()[i], i);
  };
  switch (pick(rng, 4)) {
    case 0: return Prop::negation(var());
    case 1: return Prop::conj(var(), var());
    case 2: return Prop::disj(var(), Prop::negation(var()));
    default: return var();
  }
}

Formula random_atom(Rng& rng, const Netlist& net, const Constants& constants) {
  const std::string& node = net.names()[pick(rng, net.node_count())];
  Formula atom = Formula::is(node, coin(rng, 0.6) ? Prop::constant(coin(rng)) : random_prop(rng, constants));
  if (coin(rng, 0.25)) return Formula::guard(random_prop(rng, constants), std::move(atom));
  return atom;
}

}  // namespace

Formula random_gtel(Rng& rng, const Netlist& net, const Constants& constants, std::size_t size) {
  std::vector<Formula> parts;
  const std::size_t n = pick(rng, size + 1);
  for (std::size_t i = 0; i < n; ++i) parts.push_back(random_atom(rng, net, constants));
  Formula f = Formula::conj(std::move(parts));
  if (!f.is_true() && coin(rng, 0.1)) f = Formula::guard(random_prop(rng, constants), std::move(f));
  return bind(f, net);
}

Formula random_tel(Rng& rng, const Netlist& net, const Constants& constants, std::size_t depth, std::size_t size) {
  std::vector<Formula> parts;
  const std::size_t n = 1 + pick(rng, size);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t t = i == 0 ? depth : pick(rng, depth + 1);
    Formula part = Formula::next(random_atom(rng, net, constants), t);
    if (coin(rng, 0.15)) part = Formula::guard(random_prop(rng, constants), std::move(part));
    parts.push_back(std::move(part));
  }
  return bind(Formula::conj(std::move(parts)), net);
}

AssertionGraph random_linear_agraph(Rng& rng, const Netlist& net, const Constants& constants, std::size_t max_edges) {
  const std::size_t k = 1 + pick(rng, max_edges);
  AssertionGraph g;
  g.constants = constants;
  std::vector<Shape::Edge> edges;
  for (std::size_t v = 0; v <= k; ++v) g.vertices.push_back("v" + std::to_string(v));
  for (std::size_t e = 0; e < k; ++e) {
    edges.push_back({e, e + 1});
    g.edge_ids.push_back("e" + std::to_string(e));
    g.ant.push_back(random_gtel(rng, net, constants, 3));
    g.cons.push_back(random_gtel(rng, net, constants, 2));
  }
  g.shape = Shape(k + 1, 0, edges);
  return g;
}

std::vector<Netlist> all_small_netlists(std::size_t max_nodes) {
  std::vector<Netlist> out;
  // Definition choices for node i of an n-node netlist.
  auto choices = [](std::size_t i, std::size_t n) {
    std::vector<std::function<void(NetlistBuilder&)>> list;
    list.push_back([i](NetlistBuilder& b) { b.input(node_name(i)); });
    for (std::size_t j = 0; j < n; ++j)
      list.push_back([i, j](NetlistBuilder& b) { b.reg(node_name(i), node_name(j)); });
    std::vector<std::string> lits;
    for (std::size_t j = 0; j < i; ++j) {
      lits.push_back(node_name(j));
      lits.push_back("!" + node_name(j));
    }
    for (GateKind kind : {GateKind::And, GateKind::Or}) {
      for (std::size_t x = 0; x < lits.size(); ++x) {
        for (std::size_t y = x; y < lits.size(); ++y)
          list.push_back([=](NetlistBuilder& b) { b.gate(kind, node_name(i), lits[x], lits[y]); });
      }
    }
    return list;
  };
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    std::vector<std::vector<std::function<void(NetlistBuilder&)>>> per_node;
    for (std::size_t i = 0; i < n; ++i) per_node.push_back(choices(i, n));
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      NetlistBuilder b;
      for (std::size_t i = 0; i < n; ++i) per_node[i][idx[i]](b);
      out.push_back(b.build());
      std::size_t k = n;
      while (k > 0 && ++idx[k - 1] == per_node[k - 1].size()) {
        idx[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
  return out;
}

std::vector<Shape> all_small_shapes(std::size_t max_edges) {
  std::vector<Shape> out;
  std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
  for (std::size_t vertices = 1; vertices <= max_edges + 1; ++vertices) {
    for (std::size_t edges = std::max<std::size_t>(1, vertices - 1); edges <= max_edges; ++edges) {
      const std::size_t slots = 2 * edges;
      std::vector<std::size_t> ends(slots, 0);
      while (true) {
        std::vector<Shape::Edge> list;
        for (std::size_t e = 0; e < edges; ++e) list.push_back({ends[2 * e], ends[2 * e + 1]});
        const Shape shape(vertices, 0, list);
        if (shape.all_reachable()) {
          // Canonical form: minimum sorted edge list over relabelings of the
          // non-initial vertices.
          std::vector<std::size_t> perm(vertices);
          for (std::size_t v = 0; v < vertices; ++v) perm[v] = v;
          std::vector<std::pair<std::size_t, std::size_t>> best;
          do {
            std::vector<std::pair<std::size_t, std::size_t>> form;
            for (const auto& e : list) form.push_back({perm[e.src], perm[e.dst]});
            std::sort(form.begin(), form.end());
            if (best.empty() || form < best) best = form;
          } while (std::next_permutation(perm.begin() + 1, perm.end()));
          if (seen.insert(best).second) out.push_back(shape);
        }
        std::size_t k = slots;
        while (k > 0 && ++ends[k - 1] == vertices) {
          ends[k - 1] = 0;
          --k;
        }
        if (k == 0) break;
      }
    }
  }
  return out;
}

}  // namespace gste::testing
