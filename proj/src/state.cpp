#include "gste/state.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gste {

State State::parse(std::string_view text) {
  State s(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto v = quad_from_char(text[i]);
    if (!v) throw std::invalid_argument("bad state vector character in '" + std::string(text) + "'");
    s.values_[i] = *v;
  }
  return s;
}

bool State::has_top() const {
  return std::find(values_.begin(), values_.end(), Quad::Top) != values_.end();
}

std::string State::to_string() const {
  std::string out;
  out.reserve(values_.size());
  for (Quad v : values_) out += to_char(v);
  return out;
}

bool leq(const State& a, const State& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!leq(a.at(i), b.at(i))) return false;
  return true;
}

State lub(const State& a, const State& b) {
  assert(a.size() == b.size());
  State out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.at(i) = lub(a.at(i), b.at(i));
  return out;
}

State glb(const State& a, const State& b) {
  assert(a.size() == b.size());
  State out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.at(i) = glb(a.at(i), b.at(i));
  return out;
}

bool Sequence::has_top() const {
  return std::any_of(states.begin(), states.end(), [](const State& s) { return s.has_top(); });
}

std::string Sequence::to_string() const {
  std::string out = "[";
  for (std::size_t t = 0; t < states.size(); ++t) {
    if (t) out += ", ";
    out += states[t].to_string();
  }
  return out + "]";
}

bool leq(const Sequence& a, const Sequence& b) {
  if (a.length() != b.length()) throw std::invalid_argument("sequence depth mismatch");
  for (std::size_t t = 0; t < a.length(); ++t)
    if (!leq(a[t], b[t])) return false;
  return true;
}

Sequence make_sequence(const std::vector<std::string>& vectors) {
  Sequence seq;
  for (const auto& v : vectors) seq.states.push_back(State::parse(v));
  return seq;
}

}  // namespace gste
