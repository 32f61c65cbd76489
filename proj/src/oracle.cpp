#include "gste/oracle.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "gste/diagnostics.hpp"

namespace gste::oracle {

namespace {

constexpr Quad kFour[] = {Quad::Zero, Quad::One, Quad::X, Quad::Top};

void check_slots(std::size_t slots, std::size_t max_slots, const char* what) {
  if (slots > max_slots)
    throw LimitExceeded(std::string(what) + " needs " + std::to_string(slots) + " value slots; the limit is " +
                        std::to_string(max_slots));
}

bool truth(const Prop& p, const Valuation& phi) {
  switch (p.kind) {
    case Prop::Kind::Const: return p.value;
    case Prop::Kind::Var: return phi[p.var];
    case Prop::Kind::Not: return !truth(p.args[0], phi);
    case Prop::Kind::And: return truth(p.args[0], phi) && truth(p.args[1], phi);
    case Prop::Kind::Or: return truth(p.args[0], phi) || truth(p.args[1], phi);
  }
  return false;
}

// phi, seq^t |= f. `n is P` with non-constant P abbreviates
// (!P -> n is 0) & (P -> n is 1), so it demands the value P takes under phi.
bool holds(const Valuation& phi, const Sequence& seq, std::size_t t, const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Is: {
      if (!f.bound) throw std::invalid_argument("oracle: formula is not bound to a netlist");
      const Quad want = truth(f.prop, phi) ? Quad::One : Quad::Zero;
      return leq(want, seq[t][f.id]);
    }
    case Formula::Kind::And:
      for (const Formula& g : f.args) {
        if (!holds(phi, seq, t, g)) return false;
      }
      return true;
    case Formula::Kind::Guard: return !truth(f.prop, phi) || holds(phi, seq, t, f.body());
    case Formula::Kind::Next:
      if (t + 1 >= seq.length()) throw std::invalid_argument("oracle: formula deeper than sequence");
      return holds(phi, seq, t + 1, f.body());
  }
  return false;
}

// F_seq as defined: F(sigma(0)) at time 0, F(sigma(t+1) lub nextf(F_seq(sigma)(t))) after.
Sequence closure_seq(const Netlist& net, const Sequence& sigma) {
  Sequence out;
  for (std::size_t t = 0; t < sigma.length(); ++t) {
    State in = sigma[t];
    if (t > 0) {
      const State carried = net.nextf(out[t - 1]);
      for (std::size_t i = 0; i < in.size(); ++i) in.at(i) = lub(in.at(i), carried.at(i));
    }
    out.states.push_back(net.closure(in));
  }
  return out;
}

std::vector<State> all_states(std::size_t nodes, bool three_valued) {
  const std::size_t base = three_valued ? 3 : 4;
  std::size_t total = 1;
  for (std::size_t i = 0; i < nodes; ++i) total *= base;
  std::vector<State> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    State s(nodes);
    std::size_t rest = code;
    for (std::size_t i = nodes; i-- > 0;) {
      s.at(i) = kFour[rest % base];
      rest /= base;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

void for_each_trajectory(const Netlist& net, std::size_t depth, bool three_valued,
                         const std::function<void(const Sequence&)>& visit, std::size_t max_slots) {
  check_slots(net.node_count() * (depth + 1), max_slots, "trajectory enumeration");
  const std::vector<State> states = all_states(net.node_count(), three_valued);
  Sequence seq;
  seq.states.reserve(depth + 1);

  // F_seq(sigma)(t) only depends on sigma(0..t), so a prefix that F_seq does
  // not already fix cannot be extended to a trajectory. Once sigma(0..t-1) is
  // fixed, sigma(t) must equal F(sigma(t) lub nextf(sigma(t-1))); the states
  // passing that test depend only on the carried-over nextf value.
  std::map<std::string, std::vector<State>> fitting;
  auto candidates = [&](const State* prev) -> const std::vector<State>& {
    const State carried = prev ? net.nextf(*prev) : State(net.node_count(), Quad::X);
    auto [it, fresh] = fitting.try_emplace(carried.to_string());
    if (fresh) {
      for (const State& s : states) {
        State in = s;
        for (std::size_t i = 0; i < in.size(); ++i) in.at(i) = lub(in.at(i), carried.at(i));
        if (net.closure(in) == s) it->second.push_back(s);
      }
    }
    return it->second;
  };

  std::function<void(std::size_t)> extend = [&](std::size_t t) {
    for (const State& s : candidates(t == 0 ? nullptr : &seq[t - 1])) {
      seq.states.push_back(s);
      if (t == depth) {
        if (closure_seq(net, seq) != seq) throw std::logic_error("oracle: emitted a non-trajectory");
        visit(seq);
      } else {
        extend(t + 1);
      }
      seq.states.pop_back();
    }
  };
  extend(0);
}

std::vector<Sequence> enum_trajectories(const Netlist& net, std::size_t depth, bool three_valued,
                                        std::size_t max_slots) {
  std::vector<Sequence> out;
  for_each_trajectory(net, depth, three_valued, [&](const Sequence& s) { out.push_back(s); }, max_slots);
  return out;
}

bool SteTruth::get(Semantics s) const {
  switch (s) {
    case Semantics::Normal: return normal;
    case Semantics::Simple: return simple;
    case Semantics::Cautious: return cautious;
  }
  return false;
}

SteTruth oracle_check_ste(const std::vector<Sequence>& trajectories, const Formula& a, const Formula& c,
                          const Valuation& phi) {
  // normal:   every three-valued trajectory satisfying A satisfies C
  // simple:   every trajectory satisfying A satisfies C
  // cautious: normal, and some three-valued trajectory satisfies A
  SteTruth r;
  bool a_satisfiable = false;
  for (const Sequence& tau : trajectories) {
    if (!holds(phi, tau, 0, a)) continue;
    const bool three_valued = !tau.has_top();
    if (three_valued) a_satisfiable = true;
    if (!holds(phi, tau, 0, c)) {
      r.simple = false;
      if (three_valued) r.normal = false;
    }
  }
  r.cautious = r.normal && a_satisfiable;
  return r;
}

SteTruth oracle_check_ste(const Netlist& net, const Formula& a, const Formula& c, std::size_t depth,
                          const Valuation& phi, std::size_t max_slots) {
  return oracle_check_ste(enum_trajectories(net, depth, false, max_slots), a, c, phi);
}

std::vector<SequenceGraph> enum_fixpoints(const Netlist& net, const Shape& shape, const SequenceGraph& sigma,
                                          std::size_t max_slots) {
  const std::size_t edges = shape.edge_count();
  const std::size_t nodes = net.node_count();
  check_slots(edges * nodes, max_slots, "fixpoint enumeration");
  if (sigma.edge_count() != edges) throw std::invalid_argument("oracle: sequence graph does not match shape");

  const std::vector<State> candidates = all_states(nodes, false);
  std::vector<std::size_t> pick(edges, 0);
  std::vector<SequenceGraph> out;

  // Fsg_Sigma(delta)(e), written out from the definition.
  auto apply = [&](const SequenceGraph& delta, std::size_t e) {
    if (shape.edge(e).src == shape.init()) return net.closure(sigma[e]);
    State meet(nodes, Quad::Top);
    for (std::size_t i = 0; i < edges; ++i) {
      if (shape.edge(i).dst != shape.edge(e).src) continue;
      const State carried = net.nextf(delta[i]);
      for (std::size_t n = 0; n < nodes; ++n) meet.at(n) = glb(meet.at(n), carried.at(n));
    }
    State in = sigma[e];
    for (std::size_t n = 0; n < nodes; ++n) in.at(n) = lub(in.at(n), meet.at(n));
    return net.closure(in);
  };

  while (true) {
    SequenceGraph delta;
    for (std::size_t e = 0; e < edges; ++e) delta.states.push_back(candidates[pick[e]]);
    bool fixed = true;
    for (std::size_t e = 0; e < edges && fixed; ++e) fixed = apply(delta, e) == delta[e];
    if (fixed) out.push_back(std::move(delta));

    std::size_t k = edges;
    while (k > 0 && ++pick[k - 1] == candidates.size()) {
      pick[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

bool forall_semantics_check(const Netlist& net, const AssertionGraph& g, std::size_t bound, std::size_t max_slots) {
  check_slots(net.node_count() * (bound + 1), max_slots, "forall check");
  const Shape& shape = g.shape;

  // Initial paths grouped by depth.
  std::vector<std::vector<std::vector<std::size_t>>> by_depth(bound + 1);
  std::vector<std::size_t> path;
  std::function<void()> walk = [&] {
    by_depth[path.size() - 1].push_back(path);
    if (path.size() == bound + 1) return;
    for (std::size_t e = 0; e < shape.edge_count(); ++e) {
      if (shape.edge(e).src != shape.edge(path.back()).dst) continue;
      path.push_back(e);
      walk();
      path.pop_back();
    }
  };
  for (std::size_t e = 0; e < shape.edge_count(); ++e) {
    if (shape.edge(e).src != shape.init()) continue;
    path.push_back(e);
    walk();
    path.pop_back();
  }

  const std::vector<Valuation> valuations = all_valuations(g.constants);
  bool ok = true;
  for (std::size_t d = 0; d <= bound && ok; ++d) {
    if (by_depth[d].empty()) continue;
    for_each_trajectory(
        net, d, false,
        [&](const Sequence& tau) {
          if (!ok) return;
          for (const auto& rho : by_depth[d]) {
            for (const Valuation& phi : valuations) {
              bool ant = true;
              for (std::size_t t = 0; t <= d && ant; ++t) ant = holds(phi, tau, t, g.ant[rho[t]]);
              if (!ant) continue;
              for (std::size_t t = 0; t <= d; ++t) {
                if (!holds(phi, tau, t, g.cons[rho[t]])) {
                  ok = false;
                  return;
                }
              }
            }
          }
        },
        max_slots);
  }
  return ok;
}

}  // namespace gste::oracle
