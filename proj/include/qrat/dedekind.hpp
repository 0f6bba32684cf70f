#ifndef QRAT_DEDEKIND_HPP
#define QRAT_DEDEKIND_HPP

#include <string>
#include <vector>

#include "exact.hpp"

namespace qrat {

inline constexpr unsigned kBernoulliBound = 12;

/// B_i with B_1 = -1/2.
inline Rat bernoulli_number(unsigned i) {
  if (i > kBernoulliBound)
    throw InvalidInput("Bernoulli index above bound " + std::to_string(kBernoulliBound));
  static const std::vector<Rat> table = [] {
    std::vector<Rat> b{Rat(1)};
    for (unsigned n = 1; n <= kBernoulliBound; ++n) {
      // sum_{k=0}^{n} C(n+1, k) B_k = 0
      Rat s = 0;
      for (unsigned k = 0; k < n; ++k) s += Rat(binomial(n + 1, k)) * b[k];
      b.push_back(-s / Rat(n + 1));
    }
    return b;
  }();
  return table[i];
}

inline Rat bernoulli_poly(unsigned i, const Rat& x) {
  Rat s = 0, xp = 1;
  for (unsigned k = 0; k <= i; ++k) {  // k = power of x
    s += Rat(binomial(i, k)) * bernoulli_number(i - k) * xp;
    xp *= x;
  }
  return s;
}

/// B_i({x}); at integers this is B_i(0), so B_1 gives -1/2 there.
inline Rat periodic_bernoulli(unsigned i, const Rat& x) { return bernoulli_poly(i, frac_part(x)); }

namespace detail {
// Sawtooth variant used inside complete residue sums: B_1 at integers is 0.
inline Rat sawtooth_bernoulli(unsigned i, const Rat& x) {
  Rat f = frac_part(x);
  if (i == 1 && f == 0) return 0;
  return bernoulli_poly(i, f);
}
}  // namespace detail

/// s_{i,j}(a,b) = sum_{n=1}^{b-1} B_i(n/b) B_j(an/b), periodic Bernoulli.
inline Rat s_sum(unsigned i, unsigned j, const Integer& a, const Integer& b) {
  if (b < 1) throw InvalidInput("b must be positive");
  Rat s = 0;
  for (Integer n = 1; n < b; ++n)
    s += periodic_bernoulli(i, rat_reduce(n, b)) * periodic_bernoulli(j, rat_reduce(a * n, b));
  return s;
}

/// Sum over the complete residue system n = 0..b-1 with B_1(0) read as 0.
/// This is the sum the normalisation h_{i,j} and the reciprocity law use.
inline Rat s_complete(unsigned i, unsigned j, const Integer& a, const Integer& b) {
  if (b < 1) throw InvalidInput("b must be positive");
  Rat s = 0;
  for (Integer n = 0; n < b; ++n)
    s += detail::sawtooth_bernoulli(i, rat_reduce(n, b)) *
         detail::sawtooth_bernoulli(j, rat_reduce(a * n, b));
  return s;
}

/// (-1)^{i+j}/(i! j!) (s_{i,j}(a,b) - d_{i,j} B_i B_j), d_{i,j} = [i = 1 or j = 1].
inline Rat h_val(unsigned i, unsigned j, const Integer& a, const Integer& b) {
  Rat corr = (i == 1 || j == 1) ? bernoulli_number(i) * bernoulli_number(j) : Rat(0);
  Rat v = (s_complete(i, j, a, b) - corr) / Rat(factorial(i) * factorial(j));
  return (i + j) % 2 == 0 ? v : Rat(-v);
}

/// t_{i,j}(a,b) = a^i s_{i,j}(a,b)
inline Rat t_val(unsigned i, unsigned j, const Integer& a, const Integer& b) {
  Integer ai;
  mpz_pow_ui(ai.get_mpz_t(), a.get_mpz_t(), i);
  return Rat(ai) * s_complete(i, j, a, b);
}

/// Left minus right side of the reciprocity law
///   -q^{i-1} sum_{u=0}^{j} C(i-1+u, i-1) h_{i-1+u, j-u}(p,q) (-p)^u
///   + p^{j-1} sum_{v=0}^{i} C(j-1+v, j-1) h_{j-1+v, i-v}(q,p) (-q)^v
///   = B_{i-1} B_j/((i-1)! j!) q (-1)^{j-1} + B_i B_{j-1}/(i! (j-1)!) p (-1)^{j-1}.
/// The second index of the first sum is read as j-u.
inline Rat reciprocity_residual(unsigned i, unsigned j, const Integer& p, const Integer& q) {
  if (i < 1 || j < 1) throw InvalidInput("reciprocity needs i, j >= 1");
  if (p < 1 || q < 1) throw InvalidInput("reciprocity needs p, q >= 1");
  if (gcd(p, q) != 1) throw InvalidInput("p and q must be coprime");
  auto pow = [](const Rat& x, long e) {
    Rat r = 1;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) r *= x;
    return e < 0 ? Rat(1 / r) : r;
  };
  const Rat P(p), Q(q);
  Rat lhs1 = 0, lhs2 = 0;
  for (unsigned u = 0; u <= j; ++u)
    lhs1 += Rat(binomial(i - 1 + u, i - 1)) * h_val(i - 1 + u, j - u, p, q) * pow(-P, u);
  for (unsigned v = 0; v <= i; ++v)
    lhs2 += Rat(binomial(j - 1 + v, j - 1)) * h_val(j - 1 + v, i - v, q, p) * pow(-Q, v);
  Rat lhs = -pow(Q, i - 1) * lhs1 + pow(P, j - 1) * lhs2;
  Rat sign = (j - 1) % 2 == 0 ? 1 : -1;
  Rat rhs = bernoulli_number(i - 1) * bernoulli_number(j) /
                Rat(factorial(i - 1) * factorial(j)) * Q * sign +
            bernoulli_number(i) * bernoulli_number(j - 1) /
                Rat(factorial(i) * factorial(j - 1)) * P * sign;
  return lhs - rhs;
}

struct IdentityCheck {
  std::string identity;
  unsigned i, j;
  Integer p, q;
  Rat residual;
  bool pass() const { return residual == 0; }
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass()) return false;
    return true;
  }
  std::vector<IdentityCheck> failures() const {
    std::vector<IdentityCheck> out;
    for (const auto& c : checks)
      if (!c.pass()) out.push_back(c);
    return out;
  }
};

/// Identity battery on h_{i,j} for all i + j <= bound, and the doubling laws
/// on t_{i,j} for i + j = 4:
///   h_even_closed    h_{i,0} = h_{0,i} = B_i/i! q^{1-i}, i even
///   h_parity         h_{i,j}(-p,q) = (-1)^j h_{i,j}(p,q), minus 2 B_1^2 when i = j = 1
///   h_periodic       h_{i,j}(p+q,q) = h_{i,j}(p,q)
///   t_doubling       t_{i,j}(2p,q) = 2^i t_{i,j}(p,q), q odd
///   t_halving        t_{i,j}(p,q/2) = 2^i t_{i,j}(p,q), q even
inline IdentityReport check_identities(const Integer& p, const Integer& q, unsigned bound = 4) {
  if (q < 1) throw InvalidInput("q must be positive");
  if (gcd(p, q) != 1) throw InvalidInput("p and q must be coprime");
  if (bound > kBernoulliBound) throw InvalidInput("bound above Bernoulli bound");
  IdentityReport rep;
  auto add = [&](const char* name, unsigned i, unsigned j, const Rat& r) {
    rep.checks.push_back({name, i, j, p, q, r});
  };
  for (unsigned i = 0; i <= bound; i += 2) {
    Rat qp = 1;
    for (unsigned k = 1; k < i; ++k) qp /= Rat(q);
    Rat closed = bernoulli_number(i) / Rat(factorial(i)) * (i == 0 ? Rat(q) : qp);
    add("h_even_closed", i, 0, h_val(i, 0, p, q) - closed);
    add("h_even_closed", 0, i, h_val(0, i, p, q) - closed);
  }
  for (unsigned i = 0; i <= bound; ++i)
    for (unsigned j = 0; i + j <= bound; ++j) {
      Rat expect = (j % 2 == 0 ? 1 : -1) * h_val(i, j, p, q);
      if (i == 1 && j == 1) expect -= 2 * bernoulli_number(1) * bernoulli_number(1);
      add("h_parity", i, j, h_val(i, j, -p, q) - expect);
      add("h_periodic", i, j, h_val(i, j, p + q, q) - h_val(i, j, p, q));
    }
  if (bound >= 4)
    for (unsigned i = 0; i <= 4; ++i) {
      unsigned j = 4 - i;
      Rat two_i = Rat(Integer(1) << i);
      if (q % 2 != 0)
        add("t_doubling", i, j, t_val(i, j, 2 * p, q) - two_i * t_val(i, j, p, q));
      else
        add("t_halving", i, j, t_val(i, j, p, q / 2) - two_i * t_val(i, j, p, q));
    }
  return rep;
}

}  // namespace qrat

#endif  // QRAT_DEDEKIND_HPP
