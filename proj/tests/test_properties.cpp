// Randomised property checks. Generators are hand-rolled over a fixed-seed
// mt19937_64 so failures reproduce.

#include <random>

#include <gtest/gtest.h>

#include "qrat/qrat.hpp"

using namespace qrat;

namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  // Reduced a/b with 1 <= b <= max_b and lo <= a/b < hi.
  Rat fraction(long max_b, long lo = 0, long hi = 1) {
    while (true) {
      long b = integer(1, max_b), a = integer(lo * b, hi * b - 1);
      if (gcd(Integer(a), Integer(b)) == 1) return Rat(a, b);
    }
  }

  std::pair<Integer, Integer> coprime(long max) {
    while (true) {
      long p = integer(1, max), q = integer(1, max);
      if (gcd(Integer(p), Integer(q)) == 1) return {p, q};
    }
  }

  IntPoly poly(int max_deg, long bound) {
    std::vector<Integer> c(integer(0, max_deg) + 1);
    for (auto& v : c) v = integer(-bound, bound);
    return IntPoly(std::move(c));
  }

  RatFunc ratfunc() {
    while (true) {
      IntPoly d = poly(3, 4);
      if (!d.is_zero()) return RatFunc(poly(3, 4), d);
    }
  }

 private:
  std::mt19937_64 rng_;
};

constexpr int kTrials = 200;

}  // namespace

TEST(Property, RatFuncFieldLaws) {
  Gen g(1);
  for (int t = 0; t < kTrials; ++t) {
    RatFunc a = g.ratfunc(), b = g.ratfunc(), c = g.ratfunc();
    ASSERT_EQ((a + b) * c, a * c + b * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    if (!b.num().is_zero()) {
      ASSERT_EQ((a / b) * b, a);
    }
  }
}

TEST(Property, PolyGcdDividesBoth) {
  Gen g(2);
  for (int t = 0; t < kTrials; ++t) {
    IntPoly common = g.poly(2, 3), a = g.poly(3, 5) * common, b = g.poly(3, 5) * common;
    if (a.is_zero() || b.is_zero()) continue;
    IntPoly d = poly_gcd(a, b);
    ASSERT_EQ(divide_exact(a, d) * d, a);
    ASSERT_EQ(divide_exact(b, d) * d, b);
    ASSERT_GE(d.degree(), common.primitive().degree());
  }
}

TEST(Property, DeformRecoversValue) {
  Gen g(3);
  for (int t = 0; t < kTrials; ++t) {
    Rat x = g.fraction(500, -5, 5);
    RatFunc d = deform_function(x);
    ASSERT_EQ(d.value_at_one(), x) << to_string(x);
    ASSERT_EQ(d.num().eval_at_one(), x.get_num()) << to_string(x);
    ASSERT_EQ(d.den().eval_at_one(), x.get_den()) << to_string(x);
  }
}

TEST(Property, ClosedFormsMatchExactEngine) {
  Gen g(4);
  for (int t = 0; t < kTrials; ++t) {
    Rat x = g.fraction(150, 0, 3);
    RatFunc d = deform_function(x);
    ASSERT_EQ(derivative_at_one(d, 1), d1_closed(x)) << to_string(x);
    ASSERT_EQ(derivative_at_one(d, 2), d2_closed(x.get_num(), x.get_den())) << to_string(x);
  }
}

TEST(Property, ParentsAreFareyNeighbours) {
  Gen g(5);
  for (int t = 0; t < kTrials; ++t) {
    Rat x = g.fraction(400, -3, 3);
    if (x.get_den() == 1) continue;
    Parents p = parents_of(x);
    ASSERT_LT(p.left, x);
    ASSERT_LT(x, p.right);
    ASSERT_EQ(mediant(p.left, p.right), x);
    ASSERT_EQ(std::max(depth_of(p.left), depth_of(p.right)), depth_of(x) - 1) << to_string(x);
  }
}

TEST(Property, RawTreeMatchesContinuedFraction) {
  Gen g(6);
  for (int t = 0; t < 60; ++t) {
    Rat x = g.fraction(120, -2, 2);
    RawTree tree(floor_of(x));
    const RawPair& p = tree.pair(x);
    ASSERT_EQ(RatFunc(p.num, p.den), deform_function(x)) << to_string(x);
  }
}

TEST(Property, ReciprocityAtFourOne) {
  Gen g(7);
  for (int t = 0; t < 60; ++t) {
    auto [p, q] = g.coprime(80);
    ASSERT_EQ(reciprocity_residual(4, 1, p, q), 0) << p << "/" << q;
  }
}

TEST(Property, InverseSymmetry) {
  Gen g(8);
  for (int t = 0; t < 60; ++t) {
    auto [a, b] = g.coprime(80);
    ASSERT_EQ(s_sum(3, 1, mod_inverse(a, b), b), s_sum(1, 3, a, b)) << a << "/" << b;
  }
}

TEST(Property, ReflectionNegatesOddSum) {
  Gen g(9);
  for (int t = 0; t < 60; ++t) {
    auto [a, b] = g.coprime(80);
    ASSERT_EQ(s_sum(1, 3, b - a, b), -s_sum(1, 3, a, b)) << a << "/" << b;
  }
}

TEST(Property, LagrangeCoefficientsReproduceWeights) {
  Gen g(10);
  int seen = 0;
  for (int t = 0; t < kTrials && seen < 40; ++t) {
    Rat x = g.fraction(60);
    if (depth_of(x) < 3) continue;
    Lineage lin = lineage_extract(x, 5);
    if (lin.vanishing) continue;
    ++seen;
    auto c = lagrange_coefficients(lin);
    // Homogeneous Lagrange interpolation: exact on every f^k g^{3-k}.
    for (int k = 0; k <= 3; ++k) {
      Rat lhs = 0;
      auto pw = [](const Integer& v, int e) {
        Integer r = 1;
        for (int i = 0; i < e; ++i) r *= v;
        return r;
      };
      for (std::size_t i = 0; i < c.size(); ++i) lhs += c[i] * Rat(pw(lin.f[i], k) * pw(lin.g[i], 3 - k));
      ASSERT_EQ(lhs, Rat(pw(lin.f[4], k) * pw(lin.g[4], 3 - k))) << to_string(x);
    }
  }
  EXPECT_GT(seen, 0);
}
