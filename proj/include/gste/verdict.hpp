#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gste/formula.hpp"
#include "gste/lattice.hpp"

namespace gste {

enum class Semantics { Normal, Simple, Cautious };

std::string_view to_string(Semantics s);
/// Accepts "normal", "simple", "cautious".
std::optional<Semantics> parse_semantics(std::string_view text);

enum class WitnessKind {
  Consequent,         // the consequent demands more than the antecedent yields
  AntecedentFailure,  // the weakest antecedent-satisfying object holds Top
};

std::string_view to_string(WitnessKind k);

/// One refuting (valuation, location, node) triple. STE witnesses carry a
/// time point, GSTE witnesses an edge id.
struct Witness {
  Valuation valuation;
  WitnessKind kind = WitnessKind::Consequent;
  std::optional<std::size_t> time;
  std::optional<std::string> edge;
  std::string node;
  Quad required = Quad::X;
  Quad actual = Quad::X;
};

struct ValuationResult {
  Valuation valuation;
  bool satisfied = true;
  std::size_t iterations = 0;  // fixpoint steps; 0 for STE
};

struct Verdict {
  Semantics semantics = Semantics::Simple;
  bool satisfied = true;
  Constants constants;
  std::vector<ValuationResult> valuations;
  std::vector<Witness> witnesses;

  std::size_t total_iterations() const;
};

}  // namespace gste
