#include "gste/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "gste/diagnostics.hpp"
#include "text.hpp"

namespace gste {

bool is_node_name(std::string_view token) {
  if (token.empty()) return false;
  if (token == "true" || token == "false") return false;
  const auto ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  const auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  if (!ident_start(token.front())) return false;
  std::size_t i = 1;
  while (i < token.size() && ident_char(token[i])) ++i;
  while (i < token.size() && token[i] == '\'') ++i;
  return i == token.size();
}

std::optional<NodeId> Netlist::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId Netlist::id(std::string_view name) const {
  if (auto n = find(name)) return *n;
  throw std::out_of_range("unknown node '" + std::string(name) + "'");
}

namespace {

Quad literal_value(const State& s, const Literal& lit) {
  Quad v = s[lit.node];
  return lit.negated ? not4(v) : v;
}

}  // namespace

State Netlist::closure(const State& s) const {
  State out = s;
  for (const Gate& g : gates_) {
    const Quad a = literal_value(out, g.lhs);
    const Quad b = literal_value(out, g.rhs);
    const Quad derived = g.kind == GateKind::And ? and4(a, b) : or4(a, b);
    out[g.out] = lub(derived, s[g.out]);
  }
  return out;
}

State Netlist::nextf(const State& s) const {
  State out(node_count(), Quad::X);
  for (const auto& [reg_out, reg_in] : registers_) out[reg_out] = s[reg_in];
  return out;
}

State Netlist::state(std::initializer_list<std::pair<std::string_view, Quad>> values) const {
  State s = all_x();
  for (const auto& [name, v] : values) s[id(name)] = v;
  return s;
}

std::string Netlist::render() const {
  std::ostringstream out;
  const auto lit = [this](const Literal& l) { return (l.negated ? "!" : "") + name(l.node); };
  std::vector<const Gate*> gate_of(node_count(), nullptr);
  for (const Gate& g : gates_) gate_of[g.out.index] = &g;
  std::vector<NodeId> reg_in(node_count());
  for (const auto& [o, i] : registers_) reg_in[o.index] = i;
  for (std::uint32_t i = 0; i < node_count(); ++i) {
    const NodeId n{i};
    switch (kinds_[i]) {
      case NodeKind::Input: out << "input " << name(n) << '\n'; break;
      case NodeKind::Register: out << "reg " << name(n) << ' ' << name(reg_in[i]) << '\n'; break;
      case NodeKind::Gate: {
        const Gate& g = *gate_of[i];
        out << (g.kind == GateKind::And ? "and " : "or ") << name(n) << ' ' << lit(g.lhs) << ' ' << lit(g.rhs)
            << '\n';
        break;
      }
    }
  }
  return out.str();
}

NetlistBuilder& NetlistBuilder::input(std::string name, Pos at) {
  defs_.push_back(Def{NodeKind::Input, GateKind::And, std::move(name), {}, at, {}});
  return *this;
}

NetlistBuilder& NetlistBuilder::reg(std::string out, std::string in, Pos at, Pos in_at) {
  defs_.push_back(Def{NodeKind::Register, GateKind::And, std::move(out), {std::move(in)}, at, {in_at}});
  return *this;
}

NetlistBuilder& NetlistBuilder::gate(GateKind kind, std::string out, std::string lhs, std::string rhs, Pos at,
                                     Pos lhs_at, Pos rhs_at) {
  defs_.push_back(Def{NodeKind::Gate, kind, std::move(out), {std::move(lhs), std::move(rhs)}, at, {lhs_at, rhs_at}});
  return *this;
}

Netlist NetlistBuilder::build() const {
  Netlist net;
  std::vector<std::size_t> def_of;

  for (std::size_t d = 0; d < defs_.size(); ++d) {
    const Def& def = defs_[d];
    if (!is_node_name(def.out)) fail(DiagCode::Syntax, def.at.line, def.at.column, "invalid node name '" + def.out + "'");
    if (net.index_.count(def.out))
      fail(DiagCode::DuplicateDriver, def.at.line, def.at.column, "node '" + def.out + "' is defined more than once");
    const NodeId id{static_cast<std::uint32_t>(net.names_.size())};
    net.index_.emplace(def.out, id);
    net.names_.push_back(def.out);
    net.kinds_.push_back(def.kind);
    def_of.push_back(d);
  }

  const auto resolve = [&](const Def& def, std::size_t k, bool allow_negation) -> Literal {
    std::string_view text = def.operands[k];
    const Pos at = k < def.operand_at.size() ? def.operand_at[k] : def.at;
    Literal lit;
    if (!text.empty() && text.front() == '!') {
      if (!allow_negation) fail(DiagCode::Syntax, at.line, at.column, "register input cannot be negated");
      lit.negated = true;
      text.remove_prefix(1);
    }
    if (!is_node_name(text)) fail(DiagCode::Syntax, at.line, at.column, "invalid literal '" + def.operands[k] + "'");
    auto n = net.find(text);
    if (!n) fail(DiagCode::UndeclaredNode, at.line, at.column, "undeclared node '" + std::string(text) + "'");
    lit.node = *n;
    return lit;
  };

  // Gates in declaration order first; topologically sorted below.
  std::vector<Gate> gates;
  std::vector<std::size_t> gate_def;
  for (std::size_t d = 0; d < defs_.size(); ++d) {
    const Def& def = defs_[d];
    const NodeId out = net.index_.at(def.out);
    if (def.kind == NodeKind::Register) {
      net.registers_.emplace_back(out, resolve(def, 0, false).node);
    } else if (def.kind == NodeKind::Gate) {
      gates.push_back(Gate{def.gate_kind, out, resolve(def, 0, true), resolve(def, 1, true)});
      gate_def.push_back(d);
    }
  }

  // Kahn's algorithm over gate-to-gate dependencies.
  std::vector<int> gate_index(net.names_.size(), -1);
  for (std::size_t g = 0; g < gates.size(); ++g) gate_index[gates[g].out.index] = static_cast<int>(g);
  std::vector<int> pending(gates.size(), 0);
  std::vector<std::vector<std::size_t>> users(gates.size());
  for (std::size_t g = 0; g < gates.size(); ++g) {
    for (const Literal& lit : {gates[g].lhs, gates[g].rhs}) {
      const int src = gate_index[lit.node.index];
      if (src >= 0) {
        ++pending[g];
        users[static_cast<std::size_t>(src)].push_back(g);
      }
    }
  }
  std::vector<std::size_t> ready;
  for (std::size_t g = 0; g < gates.size(); ++g)
    if (pending[g] == 0) ready.push_back(g);
  std::vector<bool> placed(gates.size(), false);
  // Process in declaration order among ready gates for a stable result.
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end());
    const std::size_t g = *it;
    ready.erase(it);
    placed[g] = true;
    net.gates_.push_back(gates[g]);
    for (std::size_t u : users[g])
      if (--pending[u] == 0) ready.push_back(u);
  }
  if (net.gates_.size() != gates.size()) {
    // Walk unplaced dependencies until a node repeats to name the cycle.
    std::size_t g = 0;
    while (placed[g]) ++g;
    std::vector<std::size_t> walk;
    std::vector<bool> seen(gates.size(), false);
    while (!seen[g]) {
      seen[g] = true;
      walk.push_back(g);
      for (const Literal& lit : {gates[g].lhs, gates[g].rhs}) {
        const int src = gate_index[lit.node.index];
        if (src >= 0 && !placed[static_cast<std::size_t>(src)]) {
          g = static_cast<std::size_t>(src);
          break;
        }
      }
    }
    std::string cycle;
    auto start = std::find(walk.begin(), walk.end(), g);
    for (auto w = start; w != walk.end(); ++w) cycle += net.names_[gates[*w].out.index] + " <- ";
    cycle += net.names_[gates[g].out.index];
    const Def& def = defs_[gate_def[g]];
    fail(DiagCode::CombinationalCycle, def.at.line, def.at.column, "combinational cycle: " + cycle);
  }
  return net;
}

Netlist parse_netlist(std::string_view text) {
  NetlistBuilder builder;
  int line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    const auto tokens = tokenize(strip_comment(line));
    if (tokens.empty()) continue;
    const auto pos = [&](std::size_t k) { return NetlistBuilder::Pos{line_no, tokens[k].column}; };
    const std::string& kw = tokens[0].text;
    const auto expect_arity = [&](std::size_t n) {
      if (tokens.size() < n + 1)
        fail(DiagCode::Syntax, line_no, tokens.back().column + static_cast<int>(tokens.back().text.size()),
             "'" + kw + "' expects " + std::to_string(n) + " operand(s)");
      if (tokens.size() > n + 1)
        fail(DiagCode::Syntax, line_no, tokens[n + 1].column, "unexpected token '" + tokens[n + 1].text + "'");
    };
    if (kw == "input") {
      expect_arity(1);
      builder.input(tokens[1].text, pos(1));
    } else if (kw == "reg") {
      expect_arity(2);
      builder.reg(tokens[1].text, tokens[2].text, pos(1), pos(2));
    } else if (kw == "and" || kw == "or") {
      expect_arity(3);
      builder.gate(kw == "and" ? GateKind::And : GateKind::Or, tokens[1].text, tokens[2].text, tokens[3].text, pos(1),
                   pos(2), pos(3));
    } else {
      fail(DiagCode::Syntax, line_no, tokens[0].column, "unknown definition '" + kw + "'");
    }
  }
  return builder.build();
}

}  // namespace gste
