#include <gtest/gtest.h>

#include <set>

#include "gste/lattice.hpp"
#include "gste/state.hpp"

namespace {

using gste::Quad;
using gste::kAllQuads;

// Reference order: X is bottom, Top is top, 0 and 1 are incomparable.
bool ref_leq(Quad a, Quad b) { return a == b || a == Quad::X || b == Quad::Top; }

Quad ref_lub(Quad a, Quad b) {
  for (Quad c : kAllQuads) {
    if (!ref_leq(a, c) || !ref_leq(b, c)) continue;
    bool least = true;
    for (Quad d : kAllQuads) {
      if (ref_leq(a, d) && ref_leq(b, d) && !ref_leq(c, d)) least = false;
    }
    if (least) return c;
  }
  return Quad::Top;
}

Quad ref_glb(Quad a, Quad b) {
  for (Quad c : kAllQuads) {
    if (!ref_leq(c, a) || !ref_leq(c, b)) continue;
    bool greatest = true;
    for (Quad d : kAllQuads) {
      if (ref_leq(d, a) && ref_leq(d, b) && !ref_leq(d, c)) greatest = false;
    }
    if (greatest) return c;
  }
  return Quad::X;
}

// Three-valued values as sets of Booleans: X = {0,1}. Top is absorbing.
std::set<bool> as_set(Quad v) {
  if (v == Quad::Zero) return {false};
  if (v == Quad::One) return {true};
  return {false, true};
}

Quad from_set(const std::set<bool>& s) {
  if (s.size() == 2) return Quad::X;
  return *s.begin() ? Quad::One : Quad::Zero;
}

template <typename Op>
Quad ref_binary(Quad a, Quad b, Op op) {
  if (a == Quad::Top || b == Quad::Top) return Quad::Top;
  std::set<bool> out;
  for (bool x : as_set(a)) {
    for (bool y : as_set(b)) out.insert(op(x, y));
  }
  return from_set(out);
}

TEST(Lattice, OrderMatchesHasseDiagram) {
  for (Quad a : kAllQuads) {
    for (Quad b : kAllQuads) EXPECT_EQ(gste::leq(a, b), ref_leq(a, b)) << to_char(a) << to_char(b);
  }
}

TEST(Lattice, LubAndGlbAreLeastAndGreatestBounds) {
  for (Quad a : kAllQuads) {
    for (Quad b : kAllQuads) {
      EXPECT_EQ(gste::lub(a, b), ref_lub(a, b)) << to_char(a) << to_char(b);
      EXPECT_EQ(gste::glb(a, b), ref_glb(a, b)) << to_char(a) << to_char(b);
    }
  }
}

TEST(Lattice, AndOrAgreeWithSetLifting) {
  for (Quad a : kAllQuads) {
    for (Quad b : kAllQuads) {
      EXPECT_EQ(gste::and4(a, b), ref_binary(a, b, [](bool x, bool y) { return x && y; }));
      EXPECT_EQ(gste::or4(a, b), ref_binary(a, b, [](bool x, bool y) { return x || y; }));
    }
  }
}

TEST(Lattice, TopAbsorbsConjunctionEvenWithZero) {
  EXPECT_EQ(gste::and4(Quad::Zero, Quad::Top), Quad::Top);
  EXPECT_EQ(gste::and4(Quad::Top, Quad::Zero), Quad::Top);
  EXPECT_EQ(gste::or4(Quad::One, Quad::Top), Quad::Top);
}

TEST(Lattice, Negation) {
  EXPECT_EQ(gste::not4(Quad::Zero), Quad::One);
  EXPECT_EQ(gste::not4(Quad::One), Quad::Zero);
  EXPECT_EQ(gste::not4(Quad::X), Quad::X);
  EXPECT_EQ(gste::not4(Quad::Top), Quad::Top);
}

TEST(Lattice, ZeroLubOneIsTopAndGlbIsX) {
  EXPECT_EQ(gste::lub(Quad::Zero, Quad::One), Quad::Top);
  EXPECT_EQ(gste::glb(Quad::Zero, Quad::One), Quad::X);
  EXPECT_EQ(gste::glb(Quad::Top, Quad::One), Quad::One);
}

TEST(Lattice, AlgebraicLaws) {
  for (Quad a : kAllQuads) {
    EXPECT_EQ(gste::lub(a, a), a);
    EXPECT_EQ(gste::glb(a, a), a);
    for (Quad b : kAllQuads) {
      EXPECT_EQ(gste::lub(a, b), gste::lub(b, a));
      EXPECT_EQ(gste::glb(a, b), gste::glb(b, a));
      EXPECT_EQ(gste::lub(a, gste::glb(a, b)), a);
      EXPECT_EQ(gste::glb(a, gste::lub(a, b)), a);
      EXPECT_EQ(gste::leq(a, b), gste::lub(a, b) == b);
      for (Quad c : kAllQuads) {
        EXPECT_EQ(gste::lub(a, gste::lub(b, c)), gste::lub(gste::lub(a, b), c));
        EXPECT_EQ(gste::glb(a, gste::glb(b, c)), gste::glb(gste::glb(a, b), c));
      }
    }
  }
}

TEST(Lattice, GateOperatorsAreMonotone) {
  for (Quad a : kAllQuads) {
    for (Quad a2 : kAllQuads) {
      if (!gste::leq(a, a2)) continue;
      EXPECT_TRUE(gste::leq(gste::not4(a), gste::not4(a2)));
      for (Quad b : kAllQuads) {
        for (Quad b2 : kAllQuads) {
          if (!gste::leq(b, b2)) continue;
          EXPECT_TRUE(gste::leq(gste::and4(a, b), gste::and4(a2, b2)));
          EXPECT_TRUE(gste::leq(gste::or4(a, b), gste::or4(a2, b2)));
        }
      }
    }
  }
}

TEST(Lattice, CharacterRoundTrip) {
  for (Quad a : kAllQuads) EXPECT_EQ(gste::quad_from_char(gste::to_char(a)), a);
  EXPECT_EQ(gste::quad_from_char('x'), Quad::X);
  EXPECT_FALSE(gste::quad_from_char('2').has_value());
}

TEST(State, ParseAndRender) {
  const gste::State s = gste::State::parse("01XT");
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(s.at(3), Quad::Top);
  EXPECT_EQ(s.to_string(), "01XT");
  EXPECT_TRUE(s.has_top());
  EXPECT_THROW(gste::State::parse("01?"), std::invalid_argument);
}

TEST(State, PointwiseOperations) {
  const auto a = gste::State::parse("0X1X");
  const auto b = gste::State::parse("01X0");
  EXPECT_EQ(gste::lub(a, b).to_string(), "0110");
  EXPECT_EQ(gste::glb(a, b).to_string(), "0XXX");
  EXPECT_TRUE(gste::leq(gste::State::parse("XXXX"), a));
  EXPECT_FALSE(gste::leq(a, b));
}

TEST(State, SequenceRendering) {
  const auto seq = gste::make_sequence({"11X", "X11"});
  EXPECT_EQ(seq.depth(), 1u);
  EXPECT_EQ(seq.to_string(), "[11X, X11]");
  EXPECT_THROW(gste::leq(seq, gste::make_sequence({"11X"})), std::invalid_argument);
}

TEST(State, EnumerationOrderFirstNodeSlowest) {
  const auto states = gste::enumerate_states(2, gste::kThreeValued);
  ASSERT_EQ(states.size(), 9u);
  EXPECT_EQ(states[0].to_string(), "00");
  EXPECT_EQ(states[1].to_string(), "01");
  EXPECT_EQ(states[3].to_string(), "10");
  EXPECT_EQ(states[8].to_string(), "XX");
}

}  // namespace
