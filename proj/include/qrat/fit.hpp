#ifndef QRAT_FIT_HPP
#define QRAT_FIT_HPP

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "closedforms.hpp"
#include "dedekind.hpp"
#include "exact.hpp"
#include "qdeform.hpp"
#include "sbtree.hpp"

namespace qrat {

enum class Ansatz { first_derivative, second_derivative };

inline std::size_t ansatz_size(Ansatz a) { return a == Ansatz::first_derivative ? 4 : 11; }

inline std::vector<std::string> feature_names(Ansatz a) {
  if (a == Ansatz::first_derivative) return {"x^2", "x", "1", "1/b^2"};
  return {"1/b^3", "a/b^3", "a^2/b^3", "a^3/b^3", "1/b^2", "a/b^2",
          "a^2/b^2", "1/b", "a/b", "1", "lambda"};
}

/// lambda(a/b) = sum_{n=1}^{b-1} <n/a>_b B_3(n/b)
inline Rat lambda_sum(const Integer& a, const Integer& b) {
  require_coprime(a, b);
  Rat s = 0;
  for (Integer n = 1; n < b; ++n) s += bracket(n, a, b) * bernoulli_poly(3, rat_reduce(n, b));
  return s;
}

inline RatVector features(Ansatz an, const Rat& x) {
  const Rat a(x.get_num()), ib = Rat(Integer(1), x.get_den());
  if (an == Ansatz::first_derivative) return {x * x, x, 1, ib * ib};
  const Rat ib2 = ib * ib, ib3 = ib2 * ib;
  return {ib3,     a * ib3, a * a * ib3, a * a * a * ib3, ib2,
          a * ib2, a * a * ib2, ib, a * ib, 1, lambda_sum(x.get_num(), x.get_den())};
}

struct FitRow {
  Rat sample;
  RatVector features;
  Rat rhs;
};

struct FitSystem {
  Ansatz ansatz;
  std::vector<FitRow> rows;

  RatMatrix matrix() const {
    RatMatrix m;
    for (const auto& r : rows) m.push_back(r.features);
    return m;
  }
  RatVector rhs() const {
    RatVector v;
    for (const auto& r : rows) v.push_back(r.rhs);
    return v;
  }
};

inline unsigned derivative_order(Ansatz a) { return a == Ansatz::first_derivative ? 1 : 2; }

/// Rows from the exact derivative engine.
inline FitSystem assemble(Ansatz an, const std::vector<Rat>& samples) {
  FitSystem sys{an, {}};
  for (const Rat& x : samples)
    sys.rows.push_back({x, features(an, x), derivative_at_one(deform_function(x), derivative_order(an))});
  return sys;
}

inline RatVector solve_fit(const FitSystem& sys) {
  if (sys.rows.size() < ansatz_size(sys.ansatz))
    throw SingularMatrix(matrix_rank(sys.matrix()),
                         "need at least " + std::to_string(ansatz_size(sys.ansatz)) + " samples");
  return solve_consistent(sys.matrix(), sys.rhs(), "use samples with more varied denominators");
}

/// (alpha, beta, gamma, delta) of alpha x^2 + beta x + gamma + delta f(x)^2.
inline std::array<Rat, 4> fit_d1(const std::vector<Rat>& samples) {
  RatVector c = solve_fit(assemble(Ansatz::first_derivative, samples));
  return {c[0], c[1], c[2], c[3]};
}

inline RatVector fit_d2(const std::vector<Rat>& samples) {
  return solve_fit(assemble(Ansatz::second_derivative, samples));
}

/// Greedy scan keeping each candidate that raises the rank: the
/// lexicographically first full-rank subset of the candidate order.
inline std::vector<Rat> first_full_rank_samples(Ansatz an, const std::vector<Rat>& candidates) {
  std::vector<Rat> chosen;
  RatMatrix rows;
  const std::size_t n = ansatz_size(an);
  for (const Rat& x : candidates) {
    rows.push_back(features(an, x));
    if (matrix_rank(rows) == rows.size()) {
      chosen.push_back(x);
      if (chosen.size() == n) return chosen;
    } else {
      rows.pop_back();
    }
  }
  throw SingularMatrix(rows.size(), "candidate pool is rank deficient");
}

/// Tree nodes in [0,1] to the given depth, ordered by (depth, value).
inline std::vector<Rat> tree_candidates(long depth) {
  std::vector<QRational> nodes = build_qtree(0, depth);
  std::stable_sort(nodes.begin(), nodes.end(),
                   [](const QRational& x, const QRational& y) { return x.depth < y.depth; });
  std::vector<Rat> out;
  for (const auto& n : nodes) out.push_back(n.value);
  return out;
}

inline std::vector<Rat> default_fit_samples(Ansatz an, long depth = 6) {
  return first_full_rank_samples(an, tree_candidates(depth));
}

/// Fixed-point decimal, rounded half away from zero.
inline std::string to_decimal(const Rat& x, unsigned places = 12) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  Rat y = abs(x) * Rat(scale) + Rat(1, 2);
  Integer n = floor_of(y);
  std::string digits = n.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = (x < 0 && n != 0) ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

struct PlotRow {
  Rat x;
  Rat value;
  Integer b;
  long depth;
};

/// Exact derivative of every tree node on [start, start+1] to the given depth.
inline std::vector<PlotRow> emit_plot_data(long depth, unsigned order, const Integer& start = 0) {
  if (order != 1 && order != 2) throw InvalidInput("order must be 1 or 2");
  std::vector<PlotRow> rows;
  for (const auto& n : build_qtree(start, depth))
    rows.push_back({n.value, derivative_at_one(n.deform, order), n.value.get_den(), n.depth});
  return rows;
}

}  // namespace qrat

#endif  // QRAT_FIT_HPP
