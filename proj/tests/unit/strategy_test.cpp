#include <gtest/gtest.h>

#include <cmath>

#include "approach/adversary.hpp"
#include "approach/responses.hpp"
#include "approach/rng.hpp"
#include "approach/strategy.hpp"
#include "approach/worked_examples.hpp"

using namespace approach;

namespace {

ResponsePtr xstar1() { return std::make_shared<GenericXStar>(example1::target()); }

}  // namespace

TEST(Blocks, CompletedBlocks) {
  EXPECT_EQ(completed_blocks(0), 0);
  EXPECT_EQ(completed_blocks(1), 1);
  EXPECT_EQ(completed_blocks(2), 1);
  EXPECT_EQ(completed_blocks(3), 2);
  EXPECT_EQ(completed_blocks(5), 2);
  EXPECT_EQ(completed_blocks(6), 3);
  EXPECT_EQ(completed_blocks(5050), 100);
  EXPECT_EQ(completed_blocks(5049), 99);
}

TEST(Blocks, FirstRoundIsUniform) {
  BlockStrategy s(2, 2, xstar1());
  const MixedAction x = s.act();
  EXPECT_DOUBLE_EQ(x[0], 0.5);
  EXPECT_DOUBLE_EQ(x[1], 0.5);
}

TEST(Blocks, BlockStructure) {
  BlockStrategy s(2, 2, xstar1());
  for (int t = 1; t <= 10; ++t) {
    s.act();
    s.observe(example1::at(0.3));
  }
  EXPECT_EQ(s.rounds(), 10);
  EXPECT_EQ(s.block(), 5);  // blocks 1..4 cover 10 rounds
  EXPECT_EQ(s.position(), 0);
  EXPECT_EQ(s.response_calls(), 4);
  EXPECT_EQ(s.block_targets().size(), 4u);
}

TEST(Blocks, ZeroDiscrepancyWhenPlayMatchesResponse) {
  // Round 1 is uniform; with a constant response equal to uniform and a
  // single-column game, delta stays 0 and play stays uniform.
  const auto m = PayoffMatrix::from_columns({{1.0, 2.0}, {1.0, 2.0}});
  BlockStrategy s(2, 2, std::make_shared<ConstantResponse>(MixedAction::uniform(2)));
  for (int t = 1; t <= 50; ++t) {
    const MixedAction x = s.act();
    EXPECT_DOUBLE_EQ(x[0], 0.5);
    s.observe(m);
    EXPECT_NEAR(s.discrepancy().norm(), 0.0, 1e-12);
  }
}

TEST(Blocks, ConstantPlayMatchingConstantResponseKeepsDeltaZero) {
  // The "play x0, respond x0" invariant with varying matrices.
  const MixedAction x0(Vec::Constant(2, 0.5));
  BlockStrategy s(2, 2, std::make_shared<ConstantResponse>(x0));
  for (int t = 1; t <= 3; ++t) {
    s.act();
    s.observe(example1::at(t == 2 ? 1.0 : 0.0));
  }
  // Blocks 1 and 2 were played uniformly; uniform is also the response.
  EXPECT_NEAR(s.discrepancy().norm(), 0.0, 1e-12);
}

TEST(Blocks, DegenerateSingleAction) {
  const auto m = PayoffMatrix::from_columns({{0.7}});
  BlockStrategy s(1, 1, std::make_shared<ConstantResponse>(MixedAction::pure(1, 0)));
  for (int t = 1; t <= 30; ++t) {
    EXPECT_DOUBLE_EQ(s.act()[0], 1.0);
    s.observe(m);
  }
  EXPECT_NEAR(s.discrepancy()(0), 0.0, 1e-12);
}

TEST(Blocks, DiscrepancyAuditAgreesWithRunningVector) {
  BlockStrategy s(2, 2, xstar1());
  Xoshiro256 rng(3);
  for (int t = 1; t <= 400; ++t) {
    s.act();
    s.observe(example1::at(rng.uniform()));
  }
  EXPECT_LT((s.discrepancy() - s.audit_discrepancy()).norm(), 1e-9);
}

TEST(Blocks, DiscrepancyWithinBetaBound) {
  BlockStrategy s(2, 2, xstar1());
  const double k = std::sqrt(52.0);
  for (int t = 1; t <= 5050; ++t) {
    s.act();
    s.observe(example1::at(completed_blocks(t - 1) % 2 == 0 ? 1.0 : 0.0));
  }
  const auto& norms = s.block_start_norms();
  ASSERT_FALSE(norms.empty());
  for (std::size_t i = 0; i < norms.size(); ++i) {
    // norms[i] is ||delta_{n+1}|| with n = i + 1 finished blocks.
    EXPECT_LE(norms[i], discrepancy_bound(k, 2, static_cast<long>(i + 1)) + 1e-9);
  }
}

TEST(Blocks, CertificateAtFirstRound) {
  BlockStrategy s(2, 2, xstar1());
  s.act();
  s.observe(example1::at(1.0));
  const auto c = s.certificate(1, std::sqrt(52.0));
  ASSERT_TRUE(c);
  // Psi(m1) (.) m1 with m1 = m_dagger is (3, 4); play was uniform (1.5, 4.5).
  EXPECT_NEAR(c->comparator(0), 3.0, 1e-9);
  EXPECT_NEAR(c->comparator(1), 4.0, 1e-9);
  EXPECT_NEAR(c->gap, std::hypot(1.5, 0.5), 1e-9);
  EXPECT_NEAR(c->bound, 8.0 * std::sqrt(52.0) * std::sqrt(std::log(2.0)) + std::sqrt(2.0) * std::sqrt(52.0), 1e-9);
  EXPECT_LE(c->gap, c->bound);
}

TEST(Blocks, CertificateOnBlockBoundary) {
  BlockStrategy s(2, 2, xstar1());
  const double nus[3] = {1.0, 0.0, 0.5};
  for (double nu : nus) {
    s.act();
    s.observe(example1::at(nu));
  }
  // T = 3 = N(N+1)/2 with N = 2: one finished block, then two rounds of
  // partial average (m_sharp + m(1/2)) / 2 = m(1/4).
  const auto c = s.certificate(3, std::sqrt(52.0));
  ASSERT_TRUE(c);
  GenericXStar psi(example1::target());
  const PayoffMatrix part = example1::at(0.25);
  const Vec expect = (combine(psi.respond(example1::at(1.0)), example1::at(1.0)) +
                      2.0 * combine(psi.respond(part), part)) / 3.0;
  EXPECT_LT((c->comparator - expect).norm(), 1e-9);
}

TEST(Blocks, CertificateRejectsRoundZero) {
  BlockStrategy s(2, 2, xstar1());
  s.act();
  s.observe(example1::at(0.0));
  EXPECT_ANY_THROW(s.certificate(0, 1.0));
  EXPECT_ANY_THROW(s.certificate(2, 1.0));
}

TEST(Blocks, RejectsWrongShape) {
  BlockStrategy s(2, 2, xstar1());
  s.act();
  EXPECT_ANY_THROW(s.observe(PayoffMatrix::zero(1, 2)));
}

TEST(Recurrence, RatioBelowOne) {
  Xoshiro256 rng(11);
  for (int i = 0; i < 50; ++i) {
    const double g1 = 10.0 * (1.0 - rng.uniform());
    const double g2 = 10.0 * (1.0 - rng.uniform());
    EXPECT_LE(recurrence_ratio(g1, g2, 2000), 1.0);
  }
}

TEST(Recurrence, DiscrepancyBoundFormula) {
  EXPECT_NEAR(discrepancy_bound(1.0, 2, 1), 2.0 * std::sqrt(2.0 * std::log(2.0)), 1e-15);
}
