#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "gste/lattice.hpp"

namespace gste {

/// Index of a node in a netlist, in declaration order.
struct NodeId {
  std::uint32_t index = 0;

  friend constexpr bool operator==(NodeId, NodeId) = default;
  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

/// Total assignment of a Quad to every node of a fixed netlist.
///
/// The lifted order and bounds are pointwise. Operations on two states
/// require equal sizes.
class State {
 public:
  using Storage = boost::container::small_vector<Quad, 12>;

  State() = default;
  explicit State(std::size_t nodes, Quad fill = Quad::X) : values_(nodes, fill) {}

  static State all(std::size_t nodes, Quad v) { return State(nodes, v); }

  /// Parses a vector such as "11X" or "0XT". Throws std::invalid_argument.
  static State parse(std::string_view text);

  std::size_t size() const noexcept { return values_.size(); }
  Quad operator[](NodeId n) const { return values_[n.index]; }
  Quad& operator[](NodeId n) { return values_[n.index]; }
  Quad at(std::size_t i) const { return values_[i]; }
  Quad& at(std::size_t i) { return values_[i]; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }
  auto begin() { return values_.begin(); }
  auto end() { return values_.end(); }

  bool has_top() const;
  bool is_three_valued() const { return !has_top(); }

  /// "11X" style rendering in node order.
  std::string to_string() const;

  friend bool operator==(const State&, const State&) = default;

 private:
  Storage values_;
};

bool leq(const State& a, const State& b);
State lub(const State& a, const State& b);
State glb(const State& a, const State& b);

/// A finite sequence of states: time 0..depth.
struct Sequence {
  std::vector<State> states;

  std::size_t depth() const { return states.empty() ? 0 : states.size() - 1; }
  std::size_t length() const { return states.size(); }
  const State& operator[](std::size_t t) const { return states[t]; }
  State& operator[](std::size_t t) { return states[t]; }

  bool has_top() const;
  /// "[11X, X11]"
  std::string to_string() const;

  friend bool operator==(const Sequence&, const Sequence&) = default;
};

bool leq(const Sequence& a, const Sequence& b);

/// Builds a sequence from vectors such as {"11X", "X11"}.
Sequence make_sequence(const std::vector<std::string>& vectors);

/// Enumerates every state over the given value alphabet, in lexicographic
/// order with node 0 varying slowest.
template <typename Alphabet>
std::vector<State> enumerate_states(std::size_t nodes, const Alphabet& alphabet) {
  std::vector<State> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < nodes; ++i) total *= alphabet.size();
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    State s(nodes);
    std::size_t rest = code;
    for (std::size_t i = nodes; i-- > 0;) {
      s.at(i) = alphabet[rest % alphabet.size()];
      rest /= alphabet.size();
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace gste
