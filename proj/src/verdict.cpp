#include "gste/verdict.hpp"

namespace gste {

std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::Normal: return "normal";
    case Semantics::Simple: return "simple";
    case Semantics::Cautious: return "cautious";
  }
  return "?";
}

std::optional<Semantics> parse_semantics(std::string_view text) {
  if (text == "normal") return Semantics::Normal;
  if (text == "simple") return Semantics::Simple;
  if (text == "cautious") return Semantics::Cautious;
  return std::nullopt;
}

std::string_view to_string(WitnessKind k) {
  return k == WitnessKind::Consequent ? "consequent" : "antecedent_failure";
}

std::size_t Verdict::total_iterations() const {
  std::size_t total = 0;
  for (const auto& v : valuations) total += v.iterations;
  return total;
}

}  // namespace gste
