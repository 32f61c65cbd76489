#include "gste/ste.hpp"

#include <algorithm>
#include <stdexcept>

#include "gste/diagnostics.hpp"
#include "text.hpp"

namespace gste {

Sequence f_seq(const Netlist& net, const Sequence& seq) {
  Sequence out;
  out.states.reserve(seq.length());
  for (std::size_t t = 0; t < seq.length(); ++t) {
    if (t == 0) {
      out.states.push_back(net.closure(seq[0]));
    } else {
      out.states.push_back(net.closure(lub(seq[t], net.nextf(out[t - 1]))));
    }
  }
  return out;
}

bool is_trajectory(const Netlist& net, const Sequence& seq) { return f_seq(net, seq) == seq; }

SteAssertion SteAssertion::make(Formula antecedent, Formula consequent) {
  const std::size_t d = std::max(gste::depth(antecedent), gste::depth(consequent));
  return SteAssertion{std::move(antecedent), std::move(consequent), d};
}

std::string render(const SteAssertion& a) { return render(a.antecedent) + " => " + render(a.consequent); }

Sequence defining_sequence(const Valuation& phi, const Formula& f, std::size_t depth, const Netlist& net) {
  if (gste::depth(f) > depth) throw std::invalid_argument("formula depth exceeds requested sequence depth");
  Sequence seq;
  for (const Formula& slot : strata(f, depth)) seq.states.push_back(defining_state(phi, slot, net.node_count()));
  return seq;
}

Verdict check_ste(const Netlist& net, const SteAssertion& assertion, const Constants& constants, Semantics semantics,
                  bool fail_fast) {
  Verdict verdict;
  verdict.semantics = semantics;
  verdict.constants = constants;
  for (const Valuation& phi : all_valuations(constants)) {
    const Sequence ant = defining_sequence(phi, assertion.antecedent, assertion.depth, net);
    const Sequence cons = defining_sequence(phi, assertion.consequent, assertion.depth, net);
    const Sequence tau = f_seq(net, ant);

    std::vector<Witness> consequent_failures;
    std::vector<Witness> top_failures;
    for (std::size_t t = 0; t < tau.length(); ++t) {
      for (std::uint32_t i = 0; i < net.node_count(); ++i) {
        const NodeId n{i};
        if (!leq(cons[t][n], tau[t][n]))
          consequent_failures.push_back({phi, WitnessKind::Consequent, t, std::nullopt, net.name(n), cons[t][n], tau[t][n]});
        if (tau[t][n] == Quad::Top)
          top_failures.push_back({phi, WitnessKind::AntecedentFailure, t, std::nullopt, net.name(n), ant[t][n], Quad::Top});
      }
    }
    const bool simple = consequent_failures.empty();
    const bool top = !top_failures.empty();

    bool ok = simple;
    std::vector<Witness> witnesses;
    switch (semantics) {
      case Semantics::Simple: witnesses = std::move(consequent_failures); break;
      case Semantics::Normal:
        ok = top || simple;
        if (!ok) witnesses = std::move(consequent_failures);
        break;
      case Semantics::Cautious:
        ok = simple && !top;
        witnesses = std::move(consequent_failures);
        witnesses.insert(witnesses.end(), top_failures.begin(), top_failures.end());
        break;
    }
    verdict.valuations.push_back({phi, ok, 0});
    if (!ok) {
      verdict.satisfied = false;
      verdict.witnesses.insert(verdict.witnesses.end(), witnesses.begin(), witnesses.end());
      if (fail_fast) break;
    }
  }
  return verdict;
}

SteFile parse_ste_file(std::string_view text) {
  SteFile file;
  const auto lines = split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const int line_no = static_cast<int>(k) + 1;
    const auto tokens = tokenize(strip_comment(lines[k]));
    if (tokens.empty() || tokens[0].text != "const") continue;
    if (tokens.size() < 2) fail(DiagCode::Syntax, line_no, tokens[0].column, "'const' expects at least one name");
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (!is_node_name(tokens[i].text) || tokens[i].text == "N")
        fail(DiagCode::Syntax, line_no, tokens[i].column, "invalid constant name '" + tokens[i].text + "'");
      if (!file.constants.add(tokens[i].text))
        fail(DiagCode::DuplicateDeclaration, line_no, tokens[i].column, "constant '" + tokens[i].text + "' declared twice");
    }
  }
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const int line_no = static_cast<int>(k) + 1;
    const std::string_view line = strip_comment(lines[k]);
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].text == "const") continue;
    if (tokens[0].text != "assert")
      fail(DiagCode::Syntax, line_no, tokens[0].column, "unknown declaration '" + tokens[0].text + "'");
    const std::size_t body = static_cast<std::size_t>(tokens[0].column - 1) + tokens[0].text.size();
    const std::size_t arrow = line.find("=>", body);
    if (arrow == std::string_view::npos)
      fail(DiagCode::Syntax, line_no, static_cast<int>(line.size()) + 1, "expected '=>' in assertion");
    const std::string_view lhs = line.substr(body, arrow - body);
    const std::string_view rhs = line.substr(arrow + 2);
    const auto lhs_tokens = tokenize(lhs);
    const auto rhs_tokens = tokenize(rhs);
    if (lhs_tokens.empty()) fail(DiagCode::Syntax, line_no, static_cast<int>(arrow) + 1, "missing antecedent");
    if (rhs_tokens.empty()) fail(DiagCode::Syntax, line_no, static_cast<int>(arrow) + 3, "missing consequent");
    Formula a = parse_tel(lhs, file.constants, TextPos{line_no, static_cast<int>(body) + 1});
    Formula c = parse_tel(rhs, file.constants, TextPos{line_no, static_cast<int>(arrow) + 3});
    file.assertions.push_back(SteAssertion::make(std::move(a), std::move(c)));
    file.lines.push_back(line_no);
  }
  return file;
}

}  // namespace gste
