#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace gste {

/// Element of the four-valued information lattice.
///
/// X carries no information, 0 and 1 are the Boolean values and Top is the
/// over-constrained value. Ordered by information content: X <= 0, X <= 1,
/// 0 <= Top, 1 <= Top; 0 and 1 are incomparable.
enum class Quad : std::uint8_t { Zero = 0, One = 1, X = 2, Top = 3 };

inline constexpr std::array<Quad, 4> kAllQuads = {Quad::Zero, Quad::One, Quad::X, Quad::Top};
inline constexpr std::array<Quad, 3> kThreeValued = {Quad::Zero, Quad::One, Quad::X};

namespace detail {

constexpr std::size_t idx(Quad v) { return static_cast<std::size_t>(v); }

using Table = std::array<std::array<Quad, 4>, 4>;
inline constexpr Quad O = Quad::Zero;
inline constexpr Quad I = Quad::One;
inline constexpr Quad U = Quad::X;
inline constexpr Quad T = Quad::Top;

// Rows and columns in the order 0, 1, X, Top.
inline constexpr std::array<std::array<bool, 4>, 4> kLeq = {{
    {true, false, false, true},
    {false, true, false, true},
    {true, true, true, true},
    {false, false, false, true},
}};

inline constexpr Table kLub = {{
    {O, T, O, T},
    {T, I, I, T},
    {O, I, U, T},
    {T, T, T, T},
}};

inline constexpr Table kGlb = {{
    {O, U, U, O},
    {U, I, U, I},
    {U, U, U, U},
    {O, I, U, T},
}};

inline constexpr Table kAnd = {{
    {O, O, O, T},
    {O, I, U, T},
    {O, U, U, T},
    {T, T, T, T},
}};

inline constexpr Table kOr = {{
    {O, I, U, T},
    {I, I, I, T},
    {U, I, U, T},
    {T, T, T, T},
}};

inline constexpr std::array<Quad, 4> kNot = {I, O, U, T};

}  // namespace detail

constexpr bool leq(Quad a, Quad b) { return detail::kLeq[detail::idx(a)][detail::idx(b)]; }
constexpr Quad lub(Quad a, Quad b) { return detail::kLub[detail::idx(a)][detail::idx(b)]; }
constexpr Quad glb(Quad a, Quad b) { return detail::kGlb[detail::idx(a)][detail::idx(b)]; }
constexpr Quad and4(Quad a, Quad b) { return detail::kAnd[detail::idx(a)][detail::idx(b)]; }
constexpr Quad or4(Quad a, Quad b) { return detail::kOr[detail::idx(a)][detail::idx(b)]; }
constexpr Quad not4(Quad a) { return detail::kNot[detail::idx(a)]; }

constexpr Quad from_bool(bool b) { return b ? Quad::One : Quad::Zero; }
constexpr bool is_boolean(Quad v) { return v == Quad::Zero || v == Quad::One; }

/// Renders as '0', '1', 'X' or 'T'.
constexpr char to_char(Quad v) {
  constexpr std::array<char, 4> chars = {'0', '1', 'X', 'T'};
  return chars[detail::idx(v)];
}

constexpr std::optional<Quad> quad_from_char(char c) {
  switch (c) {
    case '0': return Quad::Zero;
    case '1': return Quad::One;
    case 'X':
    case 'x': return Quad::X;
    case 'T':
    case 't': return Quad::Top;
    default: return std::nullopt;
  }
}

}  // namespace gste
