#ifndef QRAT_CLOSEDFORMS_HPP
#define QRAT_CLOSEDFORMS_HPP

#include <string>
#include <vector>

#include "exact.hpp"
#include "qdeform.hpp"

namespace qrat {

/// Representative of a^{-1} in [0, b-1]; 0 when b = 1.
inline Integer mod_inverse(const Integer& a, const Integer& b) {
  if (b < 1) throw InvalidInput("modulus must be positive");
  if (gcd(a, b) != 1) throw NoInverse(a.get_str() + " has no inverse mod " + b.get_str());
  if (b == 1) return 0;
  Integer r;
  mpz_invert(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Rat thomae(const Rat& x) { return Rat(Integer(1), x.get_den()); }

/// (x^2 - x + 1 - f(x)^2) / 2
inline Rat d1_closed(const Rat& x) {
  Rat f = thomae(x);
  return (x * x - x + 1 - f * f) / 2;
}

inline Rat poly_F(const Rat& x) { return x * x * x / 3 - x * x + Rat(5, 3) * x - 1; }
inline Rat poly_G(const Rat& x) { return 1 - x; }
inline Rat poly_H(const Rat& x) { return x * x * (1 - x); }

inline void require_coprime(const Integer& a, const Integer& b) {
  if (b < 1) throw InvalidInput("denominator must be positive");
  if (gcd(a, b) != 1) throw InvalidInput(a.get_str() + "/" + b.get_str() + " is not reduced");
}

/// <n/a>_b = (n a^{-1} mod b)/b - 1/2
inline Rat bracket(const Integer& n, const Integer& a, const Integer& b) {
  Integer r = n * mod_inverse(a, b);
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t());
  return rat_reduce(r, b) - Rat(1, 2);
}

/// sum_{n=1}^{b-1} <n/a>_b H(n/b)
inline Rat bracket_h_sum(const Integer& a, const Integer& b) {
  require_coprime(a, b);
  Rat s = 0;
  for (Integer n = 1; n < b; ++n) s += bracket(n, a, b) * poly_H(rat_reduce(n, b));
  return s;
}

inline Rat d2_closed(const Integer& a, const Integer& b) {
  require_coprime(a, b);
  Rat x(a, b);
  Rat f = thomae(x);
  return poly_F(x) + f * f * poly_G(x) + 20 * bracket_h_sum(a, b);
}

enum class DepthConvention { definition, farey_sums };

inline std::string to_string(DepthConvention c) {
  return c == DepthConvention::definition ? "depth" : "depth+1";
}

inline Integer depth_under(const Integer& a, const Integer& b, DepthConvention c) {
  long d = depth_of(Rat(a, b));
  return c == DepthConvention::definition ? Integer(d) : Integer(d + 1);
}

struct LemmaValue {
  Rat value;
  DepthConvention convention;
};

/// Predicted a'(1) for the numerator of [a/b]_q: (D b + a^{-1} - a)/2.
inline LemmaValue numerator_d1_closed(const Integer& a, const Integer& b, DepthConvention c) {
  require_coprime(a, b);
  Integer d = depth_under(a, b, c);
  return {rat_reduce(d * b + mod_inverse(a, b) - a, 2), c};
}

/// Predicted b'(1): (1 - a^2 + b a^{-1} + b^2 (1 - D)) / (2a).
inline LemmaValue denominator_d1_closed(const Integer& a, const Integer& b, DepthConvention c) {
  require_coprime(a, b);
  if (a == 0) throw InvalidInput("undefined for a = 0");
  Integer d = depth_under(a, b, c);
  return {rat_reduce(1 - a * a + b * mod_inverse(a, b) + b * b * (1 - d), 2 * a), c};
}

// a'(1) b - a b'(1) = b^2 d1(a/b), on the canonical numerator/denominator.
inline bool quotient_rule_consistent(const Integer& a, const Integer& b) {
  require_coprime(a, b);
  RatFunc r = deform_function(Rat(a, b));
  Integer an = r.num().derivative_at_one(1), bd = r.den().derivative_at_one(1);
  return Rat(an * b - a * bd) == Rat(b * b) * d1_closed(Rat(a, b));
}

struct TheoremRow {
  Integer a, b;
  Rat exact_d1, closed_d1, exact_d2, closed_d2;
  bool d1_match() const { return exact_d1 == closed_d1; }
  bool d2_match() const { return exact_d2 == closed_d2; }
};

inline TheoremRow theorem_row(const Integer& a, const Integer& b) {
  require_coprime(a, b);
  RatFunc r = deform_function(Rat(a, b));
  return {a, b, derivative_at_one(r, 1), d1_closed(Rat(a, b)), derivative_at_one(r, 2),
          d2_closed(a, b)};
}

/// Every reduced a/b with 1 <= b <= max_b and 0 <= a <= 2b.
inline std::vector<Rat> sweep_fractions(long max_b) {
  std::vector<Rat> out;
  for (long b = 1; b <= max_b; ++b)
    for (long a = 0; a <= 2 * b; ++a)
      if (gcd(Integer(a), Integer(b)) == 1) out.emplace_back(a, b);
  return out;
}

inline std::vector<TheoremRow> theorem_sweep(long max_b) {
  std::vector<TheoremRow> rows;
  for (const Rat& x : sweep_fractions(max_b)) rows.push_back(theorem_row(x.get_num(), x.get_den()));
  return rows;
}

struct CalibrationEntry {
  Integer a, b;
  Integer exact_num_d1, exact_den_d1;
  Rat predicted_num, predicted_den;  // predicted_den is 0 when a = 0
};

struct CalibrationReport {
  DepthConvention convention;
  std::vector<CalibrationEntry> entries;
  std::vector<Rat> numerator_mismatches;
  std::vector<Rat> denominator_mismatches;
};

inline CalibrationReport lemma_calibration(long max_b, DepthConvention c) {
  CalibrationReport rep{c, {}, {}, {}};
  for (const Rat& x : sweep_fractions(max_b)) {
    const Integer a = x.get_num(), b = x.get_den();
    RatFunc r = deform_function(x);
    CalibrationEntry e{a, b, r.num().derivative_at_one(1), r.den().derivative_at_one(1),
                       numerator_d1_closed(a, b, c).value, 0};
    if (Rat(e.exact_num_d1) != e.predicted_num) rep.numerator_mismatches.push_back(x);
    if (a != 0) {
      e.predicted_den = denominator_d1_closed(a, b, c).value;
      if (Rat(e.exact_den_d1) != e.predicted_den) rep.denominator_mismatches.push_back(x);
    }
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace qrat

#endif  // QRAT_CLOSEDFORMS_HPP
