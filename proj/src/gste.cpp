#include "gste/gste.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

#include "gste/diagnostics.hpp"

namespace gste {

namespace {

void check_shape(const Shape& shape, const SequenceGraph& g, const char* what) {
  if (g.edge_count() != shape.edge_count())
    throw std::invalid_argument(std::string(what) + ": sequence graph does not match shape");
}

// glb over nextf(graph(i)) for i in ine(e); all-Top when ine(e) is empty.
State incoming_meet(const Netlist& net, const Shape& shape, const SequenceGraph& graph, std::size_t e) {
  State meet = net.all_top();
  for (std::size_t i : shape.incoming(e)) meet = glb(meet, net.nextf(graph[i]));
  return meet;
}

}  // namespace

SequenceGraph fsg_step(const Netlist& net, const Shape& shape, const SequenceGraph& sigma, const SequenceGraph& delta) {
  check_shape(shape, sigma, "fsg_step");
  check_shape(shape, delta, "fsg_step");
  SequenceGraph out;
  out.states.reserve(shape.edge_count());
  for (std::size_t e = 0; e < shape.edge_count(); ++e) {
    if (shape.is_initial(e)) {
      out.states.push_back(net.closure(sigma[e]));
    } else {
      out.states.push_back(net.closure(lub(sigma[e], incoming_meet(net, shape, delta, e))));
    }
  }
  return out;
}

std::size_t iteration_cap(const Shape& shape, const Netlist& net) {
  return 2 * shape.edge_count() * net.node_count() + 2;
}

FixpointResult gfp_delta(const Netlist& net, const Shape& shape, const SequenceGraph& sigma) {
  check_shape(shape, sigma, "gfp_delta");
  const std::size_t cap = iteration_cap(shape, net);
  FixpointResult r{SequenceGraph::filled(shape.edge_count(), net.node_count(), Quad::Top), 0};
  while (true) {
    SequenceGraph next = fsg_step(net, shape, sigma, r.graph);
    ++r.iterations;
    if (!leq(next, r.graph)) throw std::logic_error("gfp_delta: iterate increased");
    if (next == r.graph) return r;
    if (r.iterations >= cap) throw std::logic_error("gfp_delta: iteration cap exceeded");
    r.graph = std::move(next);
  }
}

FixpointResult gamma_iterate(const Netlist& net, const Shape& shape, const SequenceGraph& sigma) {
  check_shape(shape, sigma, "gamma_iterate");
  const std::size_t cap = iteration_cap(shape, net);
  FixpointResult r;
  for (std::size_t e = 0; e < shape.edge_count(); ++e)
    r.graph.states.push_back(shape.is_initial(e) ? net.closure(sigma[e]) : net.all_top());
  while (true) {
    SequenceGraph next;
    next.states.reserve(shape.edge_count());
    for (std::size_t e = 0; e < shape.edge_count(); ++e)
      next.states.push_back(glb(r.graph[e], net.closure(lub(sigma[e], incoming_meet(net, shape, r.graph, e)))));
    ++r.iterations;
    if (next == r.graph) return r;
    if (r.iterations >= cap) throw std::logic_error("gamma_iterate: iteration cap exceeded");
    r.graph = std::move(next);
  }
}

SequenceGraph defining_seq_graph(const Valuation& phi, const std::vector<Formula>& labels, std::size_t nodes) {
  SequenceGraph out;
  out.states.reserve(labels.size());
  for (const Formula& f : labels) out.states.push_back(defining_state(phi, f, nodes));
  return out;
}

FixpointResult defining_traj_graph(const Netlist& net, const Valuation& phi, const AssertionGraph& g) {
  return gfp_delta(net, g.shape, defining_seq_graph(phi, g.ant, net.node_count()));
}

namespace {

struct Outcome {
  ValuationResult result;
  std::vector<Witness> witnesses;
  SequenceGraph trajectory;
};

Outcome check_valuation(const Netlist& net, const AssertionGraph& g, Semantics semantics, const Valuation& phi) {
  const std::size_t nodes = net.node_count();
  const SequenceGraph ant = defining_seq_graph(phi, g.ant, nodes);
  const SequenceGraph cons = defining_seq_graph(phi, g.cons, nodes);
  FixpointResult traj = gfp_delta(net, g.shape, ant);

  Outcome out;
  out.result = {phi, true, traj.iterations};
  std::vector<Witness> tops;
  for (std::size_t e = 0; e < g.shape.edge_count(); ++e) {
    for (std::uint32_t i = 0; i < nodes; ++i) {
      const NodeId n{i};
      const Quad actual = traj.graph[e][n];
      if (!leq(cons[e][n], actual))
        out.witnesses.push_back({phi, WitnessKind::Consequent, std::nullopt, g.edge_ids[e], net.name(n), cons[e][n], actual});
      if (semantics == Semantics::Cautious && actual == Quad::Top)
        tops.push_back({phi, WitnessKind::AntecedentFailure, std::nullopt, g.edge_ids[e], net.name(n), ant[e][n], actual});
    }
  }
  out.witnesses.insert(out.witnesses.end(), tops.begin(), tops.end());
  out.result.satisfied = out.witnesses.empty();
  out.trajectory = std::move(traj.graph);
  return out;
}

}  // namespace

Verdict check_gste(const Netlist& net, const AssertionGraph& g, Semantics semantics, const GsteOptions& options) {
  if (semantics == Semantics::Normal) throw std::invalid_argument("check_gste: semantics must be simple or cautious");
  if (g.constants.size() > options.max_consts)
    throw LimitExceeded("assertion graph declares " + std::to_string(g.constants.size()) +
                        " constants; the limit is " + std::to_string(options.max_consts));

  const std::vector<Valuation> valuations = all_valuations(g.constants);
  std::vector<Outcome> outcomes(valuations.size());
  std::size_t checked = valuations.size();

  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(valuations.size())));
  if (jobs == 1) {
    for (std::size_t k = 0; k < valuations.size(); ++k) {
      outcomes[k] = check_valuation(net, g, semantics, valuations[k]);
      if (options.fail_fast && !outcomes[k].result.satisfied) {
        checked = k + 1;
        break;
      }
    }
  } else {
    // Workers claim valuations in index order; results are merged by index so
    // the report does not depend on scheduling.
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_failure{valuations.size()};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = next++; k < valuations.size(); k = next++) {
            if (options.fail_fast && k > first_failure.load()) break;
            outcomes[k] = check_valuation(net, g, semantics, valuations[k]);
            if (!outcomes[k].result.satisfied) {
              std::size_t seen = first_failure.load();
              while (k < seen && !first_failure.compare_exchange_weak(seen, k)) {
              }
            }
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    if (options.fail_fast && first_failure.load() < valuations.size()) checked = first_failure.load() + 1;
  }

  Verdict verdict;
  verdict.semantics = semantics;
  verdict.constants = g.constants;
  for (std::size_t k = 0; k < checked; ++k) {
    Outcome& o = outcomes[k];
    if (options.on_trajectory) options.on_trajectory(valuations[k], o.trajectory);
    verdict.valuations.push_back(o.result);
    if (!o.result.satisfied) verdict.satisfied = false;
    verdict.witnesses.insert(verdict.witnesses.end(), o.witnesses.begin(), o.witnesses.end());
  }
  return verdict;
}

}  // namespace gste
