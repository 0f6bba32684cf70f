#ifndef QRAT_SBTREE_HPP
#define QRAT_SBTREE_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "closedforms.hpp"
#include "exact.hpp"
#include "qdeform.hpp"

namespace qrat {

/// (a+c)/(b+d) for a tree edge |ad - bc| = 1.
inline Rat mediant(const Rat& x, const Rat& y) {
  const Integer &a = x.get_num(), &b = x.get_den(), &c = y.get_num(), &d = y.get_den();
  if (abs(a * d - b * c) != 1)
    throw InvalidInput(to_string(x) + " and " + to_string(y) + " are not Farey neighbours");
  return rat_reduce(a + c, b + d);
}

struct Parents {
  Rat left, right;
};

/// The two Farey parents of a non-integer x = a/b, smaller one first.
inline Parents parents_of(const Rat& x) {
  if (x.get_den() == 1) throw InvalidInput("integers have no parents in the tree");
  const Integer &a = x.get_num(), &b = x.get_den();
  Integer q1 = mod_inverse(a, b);
  Integer p1 = (a * q1 - 1) / b;
  return {rat_reduce(p1, q1), rat_reduce(a - p1, b - q1)};
}

inline Rat deeper_parent(const Rat& x) {
  Parents p = parents_of(x);
  return depth_of(p.right) > depth_of(p.left) ? p.right : p.left;
}

/// Numerator/denominator pair as produced by the weighted Farey recursion,
/// before any reduction.
struct RawPair {
  IntPoly num, den;
};

// q-power for left (+) right: deg(left den) - deg(right den) + 1 when the left
// denominator has the larger degree, otherwise 1.
inline unsigned farey_exponent(const IntPoly& left_den, const IntPoly& right_den) {
  int gap = left_den.degree() - right_den.degree();
  return gap > 0 ? static_cast<unsigned>(gap + 1) : 1u;
}

inline RawPair weighted_farey_sum(const RawPair& left, const RawPair& right) {
  unsigned n = farey_exponent(left.den, right.den);
  return {left.num + right.num.shifted(n), left.den + right.den.shifted(n)};
}

/// Endpoint pair for the integer k on the tree spanning [m, m+1]. Both
/// endpoints share the denominator q^e, e = max(0, -m).
inline RawPair tree_endpoint(const Integer& k, const Integer& m) {
  unsigned long e = m < 0 ? Integer(-m).get_ui() : 0;
  IntPoly den = IntPoly::monomial(1, e);
  if (k >= 0) return {IntPoly(std::vector<Integer>(k.get_ui(), 1)).shifted(e), den};
  unsigned long kk = Integer(-k).get_ui();
  return {-IntPoly(std::vector<Integer>(kk, 1)).shifted(e - kk), den};
}

/// Memoised weighted-Farey pairs for the tree spanning [m, m+1].
class RawTree {
 public:
  explicit RawTree(Integer m) : m_(std::move(m)) {}

  const Integer& start() const { return m_; }

  const RawPair& pair(const Rat& x) {
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second;
    RawPair p;
    if (x.get_den() == 1) {
      if (x.get_num() != m_ && x.get_num() != m_ + 1)
        throw InvalidInput(to_string(x) + " is not on the tree starting at " + m_.get_str());
      p = tree_endpoint(x.get_num(), m_);
    } else {
      if (floor_of(x) != m_)
        throw InvalidInput(to_string(x) + " is not on the tree starting at " + m_.get_str());
      Parents pr = parents_of(x);
      RawPair l = pair(pr.left);
      p = weighted_farey_sum(l, pair(pr.right));
    }
    return memo_.emplace(x, std::move(p)).first->second;
  }

 private:
  Integer m_;
  std::map<Rat, RawPair> memo_;
};

struct TreeNode {
  QRational q;
  RawPair raw;
};

/// Nodes strictly between m and m+1 down to the given depth, in increasing
/// order, built layer by layer with weighted Farey sums.
inline std::vector<TreeNode> build_qtree_nodes(const Integer& m, long depth) {
  if (depth < 0) throw InvalidInput("depth must be nonnegative");
  struct Item {
    Rat value;
    RawPair raw;
    long depth;
  };
  std::vector<Item> seq{{Rat(m), tree_endpoint(m, m), -1},
                        {Rat(m + 1), tree_endpoint(m + 1, m), -1}};
  for (long d = 0; d <= depth; ++d) {
    std::vector<Item> next;
    next.reserve(2 * seq.size());
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      next.push_back(seq[i]);
      next.push_back({mediant(seq[i].value, seq[i + 1].value),
                      weighted_farey_sum(seq[i].raw, seq[i + 1].raw), d});
    }
    next.push_back(seq.back());
    seq = std::move(next);
  }
  std::vector<TreeNode> out;
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    const Item& it = seq[i];
    out.push_back({QRational{it.value, RatFunc(it.raw.num, it.raw.den), it.depth,
                             path_of(it.value)},
                   it.raw});
  }
  return out;
}

inline std::vector<QRational> build_qtree(const Integer& m, long depth) {
  std::vector<QRational> out;
  for (auto& n : build_qtree_nodes(m, depth)) out.push_back(std::move(n.q));
  return out;
}

/// Chain a_1 ... a_m ending at x. a_{n-1} is the deeper parent of a_n; a_1 is
/// the other parent of a_3 (for m = 2, the shallower parent of x).
/// Indices in zeta/xi/previous_is_left are 1-based member numbers and are
/// meaningful for n >= 3 only (entries for n = 1, 2 are zero/false).
struct Lineage {
  std::vector<QRational> members;
  std::vector<RawPair> raw;
  std::vector<int> zeta;
  std::vector<unsigned> xi;
  // a_{n-1} < a_{zeta_n}: then F_n = F_{n-1} + q^xi F_zeta, else F_zeta + q^xi F_{n-1}.
  std::vector<bool> previous_is_left;
  std::vector<IntPoly> Fpoly, Gpoly;
  std::vector<Integer> f, g;
  bool vanishing = false;

  std::size_t order() const { return members.size(); }
};

inline Lineage lineage_extract(const Rat& x, int m) {
  if (m < 2) throw InvalidInput("lineage order must be at least 2");
  const long d = depth_of(x);
  if (d < m - 2) throw InsufficientDepth(m, static_cast<int>(d + 2));

  std::vector<Rat> chain{x};
  for (int k = 0; k < m - 2; ++k) chain.push_back(deeper_parent(chain.back()));
  std::reverse(chain.begin(), chain.end());  // a_2 ... a_m
  Rat first;
  if (m == 2) {
    Parents p = parents_of(x);
    first = depth_of(p.right) < depth_of(p.left) ? p.right : p.left;
  } else {
    Parents p = parents_of(chain[1]);
    first = p.left == chain[0] ? p.right : p.left;
  }
  std::vector<Rat> vals{first};
  vals.insert(vals.end(), chain.begin(), chain.end());

  Lineage lin;
  RawTree tree(floor_of(x));
  for (const Rat& v : vals) {
    lin.members.push_back(deform(v));
    lin.raw.push_back(tree.pair(v));
  }
  lin.zeta.assign(m, 0);
  lin.xi.assign(m, 0);
  lin.previous_is_left.assign(m, false);
  lin.Fpoly = {IntPoly{1}, IntPoly{}};
  lin.Gpoly = {IntPoly{}, IntPoly{1}};
  lin.f = {1, 0};
  lin.g = {0, 1};
  for (int n = 2; n < m; ++n) {  // 0-based index of a_{n+1}
    Parents p = parents_of(vals[n]);
    const Rat& prev = vals[n - 1];
    Rat other = p.left == prev ? p.right : p.left;
    int z = static_cast<int>(std::find(vals.begin(), vals.end(), other) - vals.begin());
    if (z >= n - 1) throw Error("internal: lineage parent outside the chain");
    bool prev_left = prev < other;
    int li = prev_left ? n - 1 : z, ri = prev_left ? z : n - 1;
    unsigned e = farey_exponent(lin.raw[li].den, lin.raw[ri].den);
    lin.zeta[n] = z + 1;
    lin.xi[n] = e;
    lin.previous_is_left[n] = prev_left;
    lin.Fpoly.push_back(lin.Fpoly[li] + lin.Fpoly[ri].shifted(e));
    lin.Gpoly.push_back(lin.Gpoly[li] + lin.Gpoly[ri].shifted(e));
    lin.f.push_back(lin.f[n - 1] + lin.f[z]);
    lin.g.push_back(lin.g[n - 1] + lin.g[z]);
  }
  lin.vanishing = vals[0].get_den() == 1;
  return lin;
}

/// C_i = prod_{n != i, n < m} (f_m g_n - f_n g_m) / (f_i g_n - f_n g_i), i < m.
inline std::vector<Rat> lagrange_coefficients(const Lineage& lin) {
  if (lin.vanishing) throw VanishingLineage();
  const std::size_t m = lin.order();
  const auto &f = lin.f, &g = lin.g;
  std::vector<Rat> c;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    Rat prod = 1;
    for (std::size_t n = 0; n + 1 < m; ++n) {
      if (n == i) continue;
      Integer den = f[i] * g[n] - f[n] * g[i];
      if (den == 0) throw DegenerateWeights("weights of members " + std::to_string(i + 1) +
                                            " and " + std::to_string(n + 1) + " are proportional");
      prod *= rat_reduce(f[m - 1] * g[n] - f[n] * g[m - 1], den);
    }
    c.push_back(prod);
  }
  return c;
}

enum class DeltaForm {
  published,  // alpha^(i)/beta + (-1)^i alpha beta^(i) / beta^(i+1)
  top_order   // alpha^(i)/beta - alpha beta^(i) / beta^2
};

inline Rat delta(const IntPoly& num, const IntPoly& den, int i, DeltaForm form = DeltaForm::published) {
  if (i < 1) throw InvalidInput("delta order must be at least 1");
  const Integer b = den.eval_at_one();
  if (b == 0) throw PoleAtOne();
  const Rat a(num.eval_at_one()), bq(b);
  const Rat ai(num.derivative_at_one(i)), bi(den.derivative_at_one(i));
  if (form == DeltaForm::top_order) return ai / bq - a * bi / (bq * bq);
  Rat pw = 1;
  for (int k = 0; k <= i; ++k) pw *= bq;
  return ai / bq + (i % 2 == 0 ? 1 : -1) * a * bi / pw;
}

inline Rat delta(const RatFunc& rf, int i, DeltaForm form = DeltaForm::published) {
  return delta(rf.num(), rf.den(), i, form);
}

struct DependenceCheck {
  Rat lhs, rhs;
  bool holds() const { return lhs == rhs; }
  Rat residual() const { return lhs - rhs; }
};

namespace detail {

template <class PairAt>
DependenceCheck dependence(const Lineage& lin, DeltaForm form, PairAt pair_at) {
  const std::size_t m = lin.order();
  std::vector<Rat> c = lagrange_coefficients(lin);
  const int k = static_cast<int>(m) - 3;
  if (k < 1) throw InvalidInput("the dependence identity needs order at least 4");
  RawPair target = pair_at(m - 1);
  const Rat bm(target.den.eval_at_one());
  DependenceCheck out{delta(target.num, target.den, k, form), 0};
  for (std::size_t i = 0; i + 1 < m; ++i) {
    RawPair p = pair_at(i);
    Rat s = Rat(p.den.eval_at_one()) / bm, pw = 1;
    for (std::size_t e = 0; e + 2 < m; ++e) pw *= s;
    out.rhs += c[i] * pw * delta(p.num, p.den, k, form);
  }
  return out;
}

}  // namespace detail

/// Delta_{m-3}(a_m) against sum_i C_i (b_i(1)/b_m(1))^{m-2} Delta_{m-3}(a_i),
/// every member written as f_i (a_1, b_1) + g_i (a_2, b_2) with integer
/// weights, so only the part carried by the weights at q=1 is compared.
inline DependenceCheck weight_dependence(const Lineage& lin, DeltaForm form) {
  const RawPair &p1 = lin.raw[0], &p2 = lin.raw[1];
  return detail::dependence(lin, form, [&](std::size_t i) {
    return RawPair{lin.f[i] * p1.num + lin.g[i] * p2.num, lin.f[i] * p1.den + lin.g[i] * p2.den};
  });
}

/// The same comparison on the members' own reduced q-deformations.
inline DependenceCheck member_dependence(const Lineage& lin, DeltaForm form) {
  return detail::dependence(lin, form, [&](std::size_t i) {
    return RawPair{lin.members[i].deform.num(), lin.members[i].deform.den()};
  });
}

}  // namespace qrat

#endif  // QRAT_SBTREE_HPP
