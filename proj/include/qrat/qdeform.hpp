#ifndef QRAT_QDEFORM_HPP
#define QRAT_QDEFORM_HPP

#include <string>
#include <vector>

#include "exact.hpp"

namespace qrat {

enum class Parity { canonical, even, odd };

/// Simple continued fraction [a_0; a_1, ..., a_m]; a_i >= 1 for i >= 1.
struct CFrac {
  std::vector<Integer> terms;
  friend bool operator==(const CFrac&, const CFrac&) = default;
};

inline Rat cfrac_value(const CFrac& cf) {
  if (cf.terms.empty()) throw InvalidInput("empty continued fraction");
  Rat x(cf.terms.back());
  for (std::size_t i = cf.terms.size() - 1; i-- > 0;) x = Rat(cf.terms[i]) + 1 / x;
  return x;
}

/// Euclidean expansion. With a parity request the terminal term is rewritten
/// a_m <-> (a_m - 1, 1) so that the count of terms after a_0 has that parity.
inline CFrac to_cfrac(const Rat& x, Parity parity = Parity::canonical) {
  CFrac cf;
  Integer p = x.get_num(), q = x.get_den();
  while (true) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    cf.terms.push_back(a);
    Integer r = p - a * q;
    if (r == 0) break;
    p = q;
    q = r;
  }
  if (parity == Parity::canonical) return cf;
  bool odd = (cf.terms.size() - 1) % 2 == 1;
  if (odd == (parity == Parity::odd)) return cf;
  auto& t = cf.terms;
  if (t.size() >= 2 && t.back() == 1) {
    t.pop_back();
    t.back() += 1;
  } else {
    t.back() -= 1;
    t.push_back(1);
  }
  return cf;
}

/// [n]_q, or [n]_{1/q} when reciprocal is set. Negative n follows
/// [x+1]_q = q[x]_q + 1 backwards: [-k]_q = -[k]_q / q^k.
inline RatFunc q_integer(const Integer& n, bool reciprocal = false) {
  RatFunc r;
  if (n >= 0) {
    std::vector<Integer> c(n.get_ui(), 1);
    r = RatFunc(IntPoly(std::move(c)));
  } else {
    Integer k = -n;
    std::vector<Integer> c(k.get_ui(), 1);
    r = RatFunc(-IntPoly(std::move(c)), IntPoly::monomial(1, k.get_ui()));
  }
  return reciprocal ? r.subs_reciprocal() : r;
}

/// [x + n]_q = q^n [x]_q + [n]_q
inline RatFunc shift_by_integer(const RatFunc& r, const Integer& n) {
  return r.times_q_power(n.get_si()) + q_integer(n);
}

// Def. of depth: one less than the number of Farey sums. Integers sit at -1.
inline long depth_of(const Rat& x) {
  if (x.get_den() == 1) return -1;
  CFrac cf = to_cfrac(x);
  Integer s = 0;
  for (std::size_t i = 1; i < cf.terms.size(); ++i) s += cf.terms[i];
  return Integer(s - 2).get_si();
}

/// Branch word from the interval [floor x, floor x + 1]: u_1 L's, u_2 R's, ...
/// where x = [u_0; u_1, ..., u_n + 1]. The first letter is the sum that makes
/// the half-integer; each later L moves to the smaller child.
inline std::string path_of(const Rat& x) {
  std::string path;
  if (x.get_den() == 1) return path;
  CFrac cf = to_cfrac(x);
  for (std::size_t i = 1; i < cf.terms.size(); ++i) {
    Integer u = cf.terms[i];
    if (i + 1 == cf.terms.size()) u -= 1;
    path.append(u.get_ui(), i % 2 == 1 ? 'L' : 'R');
  }
  return path;
}

struct QRational {
  Rat value;
  RatFunc deform;
  long depth = -1;
  std::string path;
};

/// Alternating continued fraction evaluated innermost first:
/// [a_0]_q + q^{a_0} / ([a_1]_{1/q} + q^{-a_1} / ([a_2]_q + ...)).
inline RatFunc evaluate_qcfrac(const CFrac& cf) {
  const auto& t = cf.terms;
  if (t.empty()) throw InvalidInput("empty continued fraction");
  auto term = [&](std::size_t i) { return q_integer(t[i], i % 2 == 1); };
  std::size_t m = t.size() - 1;
  RatFunc y = term(m);
  for (std::size_t i = m; i-- > 0;) {
    long e = t[i].get_si();
    RatFunc pw = RatFunc(IntPoly{1}).times_q_power(i % 2 == 0 ? e : -e);
    y = term(i) + pw / y;
  }
  return y;
}

// The tower is built for the fractional part only; the integer part comes
// back through the shift rule.
inline RatFunc deform_function(const Rat& x) {
  Integer a0 = floor_of(x);
  Rat f = x - Rat(a0);
  if (f == 0) return q_integer(a0);
  return shift_by_integer(evaluate_qcfrac(to_cfrac(f)), a0);
}

inline QRational deform(const Rat& x) {
  return QRational{x, deform_function(x), depth_of(x), path_of(x)};
}

}  // namespace qrat

#endif  // QRAT_QDEFORM_HPP
