#include <gtest/gtest.h>

#include <algorithm>

#include "gste/diagnostics.hpp"
#include "gste/gste.hpp"
#include "gste/oracle.hpp"
#include "gste/ste.hpp"
#include "support.hpp"

namespace {

using gste::SequenceGraph;
using gste::Shape;
using gste::State;
using gste::testing::load_agraph;
using gste::testing::load_netlist;
using gste::testing::netlist;
using gste::testing::tel;
namespace oracle = gste::oracle;

SequenceGraph seq_graph(std::initializer_list<const char*> states) {
  SequenceGraph g;
  for (const char* s : states) g.states.push_back(State::parse(s));
  return g;
}

TEST(Oracle, SingleInputHasThreeTrajectoriesOfDepthZero) {
  const auto t = oracle::enum_trajectories(netlist("input i\n"), 0, true);
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(oracle::enum_trajectories(netlist("input i\n"), 0, false).size(), 4u);
}

TEST(Oracle, AndGateDepthZeroMatchesClosureFilter) {
  const auto net = load_netlist("and_gate.net");
  std::vector<gste::Sequence> expected;
  for (const State& s : gste::enumerate_states(3, gste::kThreeValued)) {
    if (net.closure(s) == s) expected.push_back(gste::Sequence{{s}});
  }
  EXPECT_EQ(oracle::enum_trajectories(net, 0, true), expected);
}

TEST(Oracle, LatchTrajectoriesIncludeExample) {
  const auto net = load_netlist("latch.net");
  const auto t = oracle::enum_trajectories(net, 1, true);
  EXPECT_NE(std::find(t.begin(), t.end(), gste::make_sequence({"11X", "X11"})), t.end());
  for (const auto& s : t) EXPECT_TRUE(gste::is_trajectory(net, s));
}

TEST(Oracle, TrajectoryCapIsEnforced) {
  const auto net = load_netlist("memory_cell.net");
  EXPECT_THROW(oracle::enum_trajectories(net, 2, true), gste::LimitExceeded);
  EXPECT_NO_THROW(oracle::enum_trajectories(net, 1, true));
}

TEST(Oracle, AndGateSteSemantics) {
  const auto net = load_netlist("and_gate.net");
  const gste::Constants c{"a", "b"};
  const auto a = tel("out = 1 & in1 = a & in2 = b", net, c);
  const auto cons = tel("in1 = 1 & in2 = 1", net, c);
  for (const auto& phi : gste::all_valuations(c)) {
    const auto truth = oracle::oracle_check_ste(net, a, cons, 0, phi);
    EXPECT_TRUE(truth.normal);
    EXPECT_EQ(truth.cautious, phi[0] && phi[1]);
  }
}

TEST(Oracle, ReflexiveAssertionHoldsSimply) {
  gste::testing::Rng rng(41);
  const gste::Constants c{"a"};
  for (int k = 0; k < 60; ++k) {
    const auto net = gste::testing::random_netlist(rng, 3);
    const auto f = gste::testing::random_tel(rng, net, c, k % 3, 3);
    for (const auto& phi : gste::all_valuations(c))
      EXPECT_TRUE(oracle::oracle_check_ste(net, f, f, gste::depth(f), phi).simple);
  }
}

TEST(Oracle, MemoryCellDepthOneAssertion) {
  const auto net = load_netlist("memory_cell.net");
  const gste::Constants c{"a"};
  const auto a = tel("in = a & set = 1", net, c);
  const auto cons = tel("N(out = a)", net, c);
  for (const auto& phi : gste::all_valuations(c)) {
    const auto truth = oracle::oracle_check_ste(net, a, cons, 1, phi);
    EXPECT_TRUE(truth.normal && truth.simple && truth.cautious);
  }
}

TEST(Oracle, LatchHasExactlyTwoFixpoints) {
  const auto net = load_netlist("latch.net");
  const Shape shape(2, 0, {{0, 1}, {1, 1}});
  const auto all = oracle::enum_fixpoints(net, shape, seq_graph({"1XX", "XXX"}));
  ASSERT_EQ(all.size(), 2u);
  EXPECT_NE(std::find(all.begin(), all.end(), seq_graph({"11X", "X11"})), all.end());
  EXPECT_NE(std::find(all.begin(), all.end(), seq_graph({"11X", "XXX"})), all.end());
}

TEST(Oracle, RegisterFreeSingleEdgeFixpointIsUnique) {
  const auto net = load_netlist("and_gate.net");
  const Shape shape(2, 0, {{0, 1}});
  const auto sigma = seq_graph({"1X0"});
  const auto all = oracle::enum_fixpoints(net, shape, sigma);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0][0], net.closure(sigma[0]));
}

TEST(Oracle, AllTopSigmaHasAllTopFixpoint) {
  const auto net = netlist("input in\nreg out in\n");
  const Shape shape(3, 0, {{0, 1}, {1, 1}, {1, 2}, {2, 2}});
  const auto top = SequenceGraph::filled(4, 2, gste::Quad::Top);
  const auto all = oracle::enum_fixpoints(net, shape, top);
  EXPECT_NE(std::find(all.begin(), all.end(), top), all.end());
}

// The engine's fixpoint is the greatest of all fixpoints.
TEST(Oracle, GfpIsGreatestFixpoint) {
  gste::testing::Rng rng(43);
  for (int k = 0; k < 60; ++k) {
    const auto net = gste::testing::random_netlist(rng, 2);
    const Shape shape = gste::testing::random_shape(rng, 3);
    if (shape.edge_count() * net.node_count() > 6) continue;
    const auto sigma = gste::testing::random_seq_graph(rng, shape, net.node_count(), k % 2 == 0);
    const auto gfp = gste::gfp_delta(net, shape, sigma).graph;
    const auto all = oracle::enum_fixpoints(net, shape, sigma);
    EXPECT_NE(std::find(all.begin(), all.end(), gfp), all.end());
    for (const auto& f : all) EXPECT_TRUE(gste::leq(f, gfp));
  }
}

TEST(Oracle, ForallSemanticsExamples) {
  const auto info = load_netlist("info_loss.net");
  const auto ig = load_agraph("info_loss.ag", info);
  EXPECT_TRUE(oracle::forall_semantics_check(info, ig, 2));
  EXPECT_FALSE(gste::check_gste(info, ig, gste::Semantics::Simple).satisfied);

  const auto mem = load_netlist("memory_cell.net");
  const auto mg = load_agraph("memory_cell.ag", mem);
  EXPECT_TRUE(oracle::forall_semantics_check(mem, mg, 1));
  EXPECT_THROW(oracle::forall_semantics_check(mem, mg, 3), gste::LimitExceeded);
}

}  // namespace
