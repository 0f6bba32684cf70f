#include <algorithm>
#include <map>

#include <gtest/gtest.h>

#include "qrat/sbtree.hpp"

using namespace qrat;

namespace {

RatFunc rf(IntPoly n, IntPoly d) { return RatFunc(std::move(n), std::move(d)); }

const QRational& node_at(const std::vector<QRational>& nodes, const Rat& x) {
  auto it = std::find_if(nodes.begin(), nodes.end(), [&](const QRational& n) { return n.value == x; });
  if (it == nodes.end()) throw std::runtime_error("missing node " + to_string(x));
  return *it;
}

// Plain Stern-Brocot layer construction on values only.
std::vector<Rat> plain_tree(long depth) {
  std::vector<Rat> seq{0, 1}, out;
  for (long d = 0; d <= depth; ++d) {
    std::vector<Rat> next;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      next.push_back(seq[i]);
      Rat m = rat_reduce(seq[i].get_num() + seq[i + 1].get_num(), seq[i].get_den() + seq[i + 1].get_den());
      next.push_back(m);
    }
    next.push_back(seq.back());
    seq = next;
  }
  return {seq.begin() + 1, seq.end() - 1};
}

}  // namespace

TEST(Mediant, Examples) {
  EXPECT_EQ(mediant(Rat(0), Rat(1)), Rat(1, 2));
  EXPECT_EQ(mediant(Rat(1, 3), Rat(1, 2)), Rat(2, 5));
  EXPECT_THROW(mediant(Rat(0), Rat(2)), InvalidInput);
}

TEST(Parents, Examples) {
  Parents p = parents_of(Rat(2, 5));
  EXPECT_EQ(p.left, Rat(1, 3));
  EXPECT_EQ(p.right, Rat(1, 2));
  p = parents_of(Rat(1, 2));
  EXPECT_EQ(p.left, Rat(0));
  EXPECT_EQ(p.right, Rat(1));
  EXPECT_EQ(deeper_parent(Rat(3, 5)), Rat(2, 3));
  EXPECT_THROW(parents_of(Rat(3)), InvalidInput);
}

TEST(Tree, PublishedFigure) {
  auto nodes = build_qtree(0, 3);
  ASSERT_EQ(nodes.size(), 15u);
  EXPECT_EQ(node_at(nodes, Rat(1, 2)).deform, rf(IntPoly{0, 1}, IntPoly{1, 1}));
  EXPECT_EQ(node_at(nodes, Rat(1, 3)).deform, rf(IntPoly{0, 0, 1}, IntPoly{1, 1, 1}));
  EXPECT_EQ(node_at(nodes, Rat(2, 3)).deform, rf(IntPoly{0, 1, 1}, IntPoly{1, 1, 1}));
  EXPECT_EQ(node_at(nodes, Rat(1, 4)).deform, rf(IntPoly{0, 0, 0, 1}, IntPoly{1, 1, 1, 1}));
  EXPECT_EQ(node_at(nodes, Rat(2, 5)).deform, rf(IntPoly{0, 0, 1, 1}, IntPoly{1, 1, 2, 1}));
  EXPECT_EQ(node_at(nodes, Rat(3, 5)).deform, rf(IntPoly{0, 1, 1, 1}, IntPoly{1, 2, 1, 1}));
  EXPECT_EQ(node_at(nodes, Rat(3, 4)).deform, rf(IntPoly{0, 1, 1, 1}, IntPoly{1, 1, 1, 1}));
  // The bottom layer is only shown to leading order: q^4 on top of 1/5, and
  // every other entry monic of degree 4.
  for (const auto& n : nodes) {
    if (n.depth != 3) continue;
    EXPECT_EQ(n.deform.den().degree(), 4) << to_string(n.value);
    EXPECT_EQ(n.deform.den().leading(), 1) << to_string(n.value);
    EXPECT_EQ(n.deform.num().degree(), 4) << to_string(n.value);
    EXPECT_EQ(n.deform.num().leading(), 1) << to_string(n.value);
  }
  EXPECT_EQ(node_at(nodes, Rat(1, 5)).deform.num(), IntPoly::monomial(1, 4));
}

TEST(Tree, ValuesMatchPlainSternBrocot) {
  std::vector<Rat> values;
  for (const auto& n : build_qtree(0, 8)) values.push_back(n.value);
  EXPECT_EQ(values, plain_tree(8));
  for (const auto& n : build_qtree(0, 8)) {
    ASSERT_EQ(n.depth, depth_of(n.value));
    ASSERT_EQ(static_cast<long>(n.path.size()) - 1, n.depth);
  }
}

TEST(Tree, WeightedFareyEqualsContinuedFraction) {
  for (long m = -3; m <= 2; ++m)
    for (const auto& n : build_qtree(m, 7))
      ASSERT_EQ(n.deform, deform_function(n.value)) << to_string(n.value);
}

TEST(Tree, RawPairsAreAlreadyReduced) {
  for (const auto& n : build_qtree_nodes(0, 8)) {
    ASSERT_EQ(n.raw.num, n.q.deform.num()) << to_string(n.q.value);
    ASSERT_EQ(n.raw.den, n.q.deform.den()) << to_string(n.q.value);
  }
}

TEST(Tree, ShiftedStartIsQIntegerShift) {
  auto base = build_qtree(0, 5);
  auto shifted = build_qtree(2, 5);
  ASSERT_EQ(base.size(), shifted.size());
  for (std::size_t i = 0; i < base.size(); ++i)
    ASSERT_EQ(shifted[i].deform, shift_by_integer(base[i].deform, 2));
}

TEST(Lineage, OrderTwo) {
  Lineage lin = lineage_extract(Rat(1, 2), 2);
  ASSERT_EQ(lin.order(), 2u);
  EXPECT_EQ(lin.members[0].value, Rat(0));
  EXPECT_EQ(lin.members[1].value, Rat(1, 2));
  EXPECT_TRUE(lin.vanishing);
}

TEST(Lineage, VanishingExamples) {
  Lineage lin = lineage_extract(Rat(3, 5), 4);
  std::vector<Rat> vals;
  for (const auto& m : lin.members) vals.push_back(m.value);
  EXPECT_EQ(vals, (std::vector<Rat>{Rat(1), Rat(1, 2), Rat(2, 3), Rat(3, 5)}));
  EXPECT_EQ(lin.f, (std::vector<Integer>{1, 0, 1, 1}));
  EXPECT_EQ(lin.g, (std::vector<Integer>{0, 1, 1, 2}));
  EXPECT_TRUE(lin.vanishing);
  EXPECT_THROW(lagrange_coefficients(lin), VanishingLineage);
  EXPECT_TRUE(lineage_extract(Rat(1, 4), 4).vanishing);
  EXPECT_TRUE(lineage_extract(Rat(2, 5), 4).vanishing);
}

TEST(Lineage, NonVanishingExample) {
  Lineage lin = lineage_extract(Rat(3, 7), 4);
  std::vector<Rat> vals;
  for (const auto& m : lin.members) vals.push_back(m.value);
  EXPECT_EQ(vals, (std::vector<Rat>{Rat(1, 2), Rat(1, 3), Rat(2, 5), Rat(3, 7)}));
  EXPECT_FALSE(lin.vanishing);
  EXPECT_EQ(lin.zeta[2], 1);
  EXPECT_EQ(lin.zeta[3], 1);
  EXPECT_EQ(lin.f, (std::vector<Integer>{1, 0, 1, 2}));
  EXPECT_EQ(lin.g, (std::vector<Integer>{0, 1, 1, 1}));
  auto c = lagrange_coefficients(lin);
  ASSERT_EQ(c.size(), 3u);
  // Case-1 orientation multiset {2, 2, -1}.
  std::vector<Rat> sorted(c.begin(), c.end());
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<Rat>{-1, 2, 2}));
}

TEST(Lineage, InsufficientDepth) {
  EXPECT_THROW(lineage_extract(Rat(1, 2), 4), InsufficientDepth);
  EXPECT_THROW(lineage_extract(Rat(1, 3), 1), InvalidInput);
  try {
    lineage_extract(Rat(1, 3), 5);
  } catch (const InsufficientDepth& e) {
    EXPECT_EQ(e.max_order, 3);
  }
}

TEST(Lineage, OrderThreeCoefficients) {
  for (const auto& n : build_qtree(0, 6)) {
    if (n.depth < 1) continue;
    Lineage lin = lineage_extract(n.value, 3);
    if (lin.vanishing) continue;
    EXPECT_EQ(lagrange_coefficients(lin), (std::vector<Rat>{1, 1})) << to_string(n.value);
  }
}

// Every member equals f_n (a_1 raw) + g_n (a_2 raw) at q = 1, and the F/G
// polynomials rebuild the raw tree pairs exactly.
TEST(Lineage, WeightsReconstructMembers) {
  for (int m = 3; m <= 6; ++m)
    for (const auto& n : build_qtree(0, 8)) {
      if (n.depth < m - 2) continue;
      Lineage lin = lineage_extract(n.value, m);
      const RawPair &p1 = lin.raw[0], &p2 = lin.raw[1];
      for (std::size_t i = 0; i < lin.order(); ++i) {
        Integer num = lin.f[i] * p1.num.eval_at_one() + lin.g[i] * p2.num.eval_at_one();
        Integer den = lin.f[i] * p1.den.eval_at_one() + lin.g[i] * p2.den.eval_at_one();
        ASSERT_EQ(rat_reduce(num, den), lin.members[i].value) << to_string(n.value);
        ASSERT_EQ(lin.Fpoly[i] * p1.num + lin.Gpoly[i] * p2.num, lin.raw[i].num);
        ASSERT_EQ(lin.Fpoly[i] * p1.den + lin.Gpoly[i] * p2.den, lin.raw[i].den);
        ASSERT_EQ(lin.Fpoly[i].eval_at_one(), lin.f[i]);
      }
    }
}

TEST(Lineage, ConsecutiveMembersUnimodular) {
  for (const auto& n : build_qtree(0, 7)) {
    if (n.depth < 3) continue;
    Lineage lin = lineage_extract(n.value, 5);
    for (std::size_t i = 1; i + 1 < lin.order(); ++i) {
      const Rat &x = lin.members[i].value, &y = lin.members[i + 1].value;
      ASSERT_EQ(abs(x.get_num() * y.get_den() - x.get_den() * y.get_num()), 1);
    }
  }
}

TEST(Delta, Examples) {
  RatFunc half(IntPoly{0, 1}, IntPoly{1, 1});
  // alpha = q, beta = 1 + q: alpha' = beta' = 1
  EXPECT_EQ(delta(half, 1), Rat(1, 2) - Rat(1, 4));
  EXPECT_EQ(delta(half, 1, DeltaForm::top_order), Rat(1, 4));
  RatFunc third(IntPoly{0, 0, 1}, IntPoly{1, 1, 1});
  EXPECT_EQ(delta(third, 2), Rat(2, 3) + Rat(2, 27));
  EXPECT_EQ(delta(third, 2, DeltaForm::top_order), Rat(2, 3) - Rat(2, 9));
  EXPECT_THROW(delta(half, 0), InvalidInput);
}

TEST(Dependence, OrderFourHoldsOnTreeSweep) {
  std::size_t checked = 0;
  for (const auto& n : build_qtree(0, 7)) {
    if (n.depth < 2) continue;
    Lineage lin = lineage_extract(n.value, 4);
    if (lin.vanishing) continue;
    ASSERT_TRUE(weight_dependence(lin, DeltaForm::published).holds()) << to_string(n.value);
    ASSERT_TRUE(weight_dependence(lin, DeltaForm::top_order).holds()) << to_string(n.value);
    ++checked;
  }
  EXPECT_GT(checked, 0u);
}

TEST(Dependence, TopOrderHoldsAtOrderFiveAndSix) {
  for (int m : {5, 6})
    for (const auto& n : build_qtree(0, 7)) {
      if (n.depth < m - 2) continue;
      Lineage lin = lineage_extract(n.value, m);
      if (lin.vanishing) continue;
      ASSERT_TRUE(weight_dependence(lin, DeltaForm::top_order).holds())
          << to_string(n.value) << " order " << m;
    }
}

// On the members' own q-deformations the order-4 gap is exactly 1/b_m^2.
TEST(Dependence, MemberResidualAtOrderFour) {
  for (const auto& n : build_qtree(0, 7)) {
    if (n.depth < 2) continue;
    Lineage lin = lineage_extract(n.value, 4);
    if (lin.vanishing) continue;
    const Integer& b = n.value.get_den();
    EXPECT_EQ(member_dependence(lin, DeltaForm::published).residual(), Rat(Integer(1), b * b))
        << to_string(n.value);
  }
}
