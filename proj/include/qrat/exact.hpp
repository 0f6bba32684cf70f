#ifndef QRAT_EXACT_HPP
#define QRAT_EXACT_HPP

// Exact scalars, integer polynomials in q, rational functions, derivatives
// at q=1 and exact linear solving. GMP supplies the big integers.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace qrat {

using Integer = mpz_class;
using Rat = mpq_class;

inline Rat rat_reduce(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// "p/q", or "p" when q = 1.
inline std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Integer parse_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw InvalidInput("malformed integer '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw InvalidInput("malformed integer '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

// Accepts "a/b" or an integer. Decimals are rejected on purpose.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_integer(s));
  return rat_reduce(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
}

inline Integer floor_of(const Rat& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

inline Rat frac_part(const Rat& x) { return x - Rat(floor_of(x)); }

/// Dense polynomial over Z; coeffs()[i] multiplies q^i. The zero polynomial
/// has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> c) : c_(std::move(c)) { trim(); }
  IntPoly(std::initializer_list<long> c) {
    for (long v : c) c_.emplace_back(v);
    trim();
  }

  static IntPoly constant(const Integer& v) { return IntPoly(std::vector<Integer>{v}); }
  static IntPoly monomial(const Integer& v, std::size_t k) {
    std::vector<Integer> c(k + 1, 0);
    c[k] = v;
    return IntPoly(std::move(c));
  }

  const std::vector<Integer>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const Integer& leading() const { return c_.back(); }

  // Smallest exponent with a nonzero coefficient (0 for the zero polynomial).
  std::size_t valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return i;
    return 0;
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(c));
  }
  IntPoly operator-() const {
    std::vector<Integer> c(c_);
    for (auto& v : c) v = -v;
    return IntPoly(std::move(c));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(c));
  }
  friend IntPoly operator*(const Integer& s, const IntPoly& p) {
    std::vector<Integer> c(p.c_);
    for (auto& v : c) v *= s;
    return IntPoly(std::move(c));
  }

  // p * q^k
  IntPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Integer> c(k, 0);
    c.insert(c.end(), c_.begin(), c_.end());
    return IntPoly(std::move(c));
  }

  // q^deg * p(1/q)
  IntPoly reversed() const { return IntPoly(std::vector<Integer>(c_.rbegin(), c_.rend())); }

  Rat eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rat(*it);
    return r;
  }
  Integer eval_at_one() const {
    Integer s = 0;
    for (const auto& v : c_) s += v;
    return s;
  }
  IntPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Integer> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(c));
  }
  // p^{(k)}(1) = sum_i c_i i!/(i-k)!
  Integer derivative_at_one(unsigned k) const { return factorial(k) * taylor_at_one(k); }

  // Coefficient of h^j in p(1+h).
  Integer taylor_at_one(unsigned j) const {
    Integer s = 0;
    for (std::size_t i = j; i < c_.size(); ++i) s += c_[i] * binomial(i, j);
    return s;
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
  }

  // Divides every coefficient by s; s must divide all of them.
  IntPoly divided_by(const Integer& s) const {
    std::vector<Integer> c(c_);
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
    return IntPoly(std::move(c));
  }

  // Primitive part with positive leading coefficient.
  IntPoly primitive() const {
    if (is_zero()) return {};
    IntPoly p = divided_by(content());
    return p.leading() < 0 ? -p : p;
  }

  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

inline std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Integer a = abs(c_[i]);
    if (s.empty())
      s += c_[i] < 0 ? "-" : "";
    else
      s += c_[i] < 0 ? " - " : " + ";
    if (i == 0 || a != 1) s += a.get_str();
    if (i >= 1) s += (i == 0 || a != 1) ? "*q" : "q";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

namespace detail {

// Pseudo-remainder of a by b, kept primitive along the way.
inline IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const Integer& lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Integer la = a.leading();
    std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
    a = lb * a - (la * b).shifted(shift);
    if (!a.is_zero()) a = a.divided_by(a.content());
  }
  return a;
}

}  // namespace detail

// Primitive gcd (positive leading coefficient); integer contents are ignored.
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  a = a.primitive();
  b = b.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = detail::pseudo_rem(a, b);
    a = std::move(b);
    b = r.primitive();
  }
  return a.primitive();
}

// Exact quotient a/b over Z; throws if b does not divide a.
inline IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidInput("division by zero polynomial");
  std::vector<Integer> rem(a.coeffs());
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw InvalidInput("polynomial division is not exact");
  }
  std::vector<Integer> quo(a.degree() - b.degree() + 1, 0);
  const Integer& lb = b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    Integer& top = rem[k + b.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      throw InvalidInput("polynomial division is not exact");
    quo[k] = top / lb;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) rem[k + j] -= quo[k] * b.coeffs()[j];
  }
  for (const auto& v : rem)
    if (v != 0) throw InvalidInput("polynomial division is not exact");
  return IntPoly(std::move(quo));
}

/// num/den in lowest terms: no common polynomial factor, no common integer
/// content, den(1) > 0 (leading coefficient > 0 if den(1) = 0).
class RatFunc {
 public:
  RatFunc() : num_(), den_{1} {}
  RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }
  explicit RatFunc(IntPoly p) : RatFunc(std::move(p), IntPoly{1}) {}

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  RatFunc operator-() const { return {-num_, den_}; }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num_.is_zero()) throw InvalidInput("division by zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }

  // r * q^k for any integer k; negative powers are cleared into the denominator.
  RatFunc times_q_power(long k) const {
    if (k >= 0) return {num_.shifted(static_cast<std::size_t>(k)), den_};
    return {num_, den_.shifted(static_cast<std::size_t>(-k))};
  }

  // r(1/q), Laurent powers cleared.
  RatFunc subs_reciprocal() const {
    if (num_.is_zero()) return *this;
    int dn = num_.degree(), dd = den_.degree(), lo = std::min(dn, dd);
    return {num_.reversed().shifted(static_cast<std::size_t>(dd - lo)),
            den_.reversed().shifted(static_cast<std::size_t>(dn - lo))};
  }

  Rat eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw InvalidInput("pole at evaluation point");
    return num_.eval(x) / d;
  }

  Rat value_at_one() const {
    Integer d = den_.eval_at_one();
    if (d == 0) throw PoleAtOne();
    return rat_reduce(num_.eval_at_one(), d);
  }

  std::string to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

 private:
  void canonicalize() {
    if (den_.is_zero()) throw InvalidInput("zero denominator polynomial");
    if (num_.is_zero()) {
      den_ = IntPoly{1};
      return;
    }
    IntPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
    Integer c = gcd(num_.content(), den_.content());
    if (c > 1) {
      num_ = num_.divided_by(c);
      den_ = den_.divided_by(c);
    }
    Integer s = den_.eval_at_one();
    if (s < 0 || (s == 0 && den_.leading() < 0)) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  IntPoly num_;
  IntPoly den_;
};

/// k-th derivative of rf at q=1 via the series in h = q-1.
inline Rat derivative_at_one(const RatFunc& rf, unsigned k) {
  const Integer d0 = rf.den().taylor_at_one(0);
  if (d0 == 0) throw PoleAtOne();
  std::vector<Rat> t(k + 1);
  for (unsigned j = 0; j <= k; ++j) {
    Rat s(rf.num().taylor_at_one(j));
    for (unsigned l = 1; l <= j; ++l) s -= Rat(rf.den().taylor_at_one(l)) * t[j - l];
    t[j] = s / Rat(d0);
  }
  Rat r = t[k] * Rat(factorial(k));
  r.canonicalize();
  return r;
}

/// Same quantity by repeated quotient rule on the unreduced pair.
inline Rat derivative_at_one_quotient_rule(const RatFunc& rf, unsigned k) {
  if (rf.den().eval_at_one() == 0) throw PoleAtOne();
  IntPoly n = rf.num(), dk = rf.den();
  for (unsigned i = 0; i < k; ++i) {
    n = n.derivative() * dk - n * dk.derivative();
    dk = dk * dk;
  }
  return rat_reduce(n.eval_at_one(), dk.eval_at_one());
}

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

namespace detail {

struct Reduced {
  RatMatrix a;
  RatVector y;
  std::vector<std::size_t> col_of;
  std::size_t rank = 0;
};

// Gauss-Jordan with full pivoting: the pivot is the first nonzero entry of the
// remaining block in row-major order.
inline Reduced gauss_jordan(RatMatrix a, RatVector y) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (const auto& r : a)
    if (r.size() != cols) throw InvalidInput("ragged matrix");
  if (y.size() != rows) throw InvalidInput("right-hand side length mismatch");
  Reduced out;
  out.col_of.resize(cols);
  std::iota(out.col_of.begin(), out.col_of.end(), std::size_t{0});
  std::size_t k = 0;
  for (; k < std::min(rows, cols); ++k) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = k; r < rows && pr == rows; ++r)
      for (std::size_t c = k; c < cols; ++c)
        if (a[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == rows) break;
    std::swap(a[k], a[pr]);
    std::swap(y[k], y[pr]);
    if (pc != k) {
      for (auto& row : a) std::swap(row[k], row[pc]);
      std::swap(out.col_of[k], out.col_of[pc]);
    }
    const Rat pivot = a[k][k];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == k || a[r][k] == 0) continue;
      const Rat f = a[r][k] / pivot;
      for (std::size_t c = k; c < cols; ++c) a[r][c] -= f * a[k][c];
      y[r] -= f * y[k];
    }
  }
  out.rank = k;
  out.a = std::move(a);
  out.y = std::move(y);
  return out;
}

inline RatVector back_substitute(const Reduced& g) {
  RatVector x(g.col_of.size());
  for (std::size_t k = 0; k < g.rank; ++k) x[g.col_of[k]] = g.y[k] / g.a[k][k];
  return x;
}

}  // namespace detail

inline std::size_t matrix_rank(const RatMatrix& a) {
  return detail::gauss_jordan(a, RatVector(a.size())).rank;
}

/// Unique solution of the square system A x = y.
inline RatVector solve_linear_exact(const RatMatrix& a, const RatVector& y) {
  if (!a.empty() && a[0].size() != a.size()) throw InvalidInput("matrix is not square");
  auto g = detail::gauss_jordan(a, y);
  if (g.rank < a.size()) throw SingularMatrix(g.rank);
  return detail::back_substitute(g);
}

/// Solution of a consistent system with full column rank (rows >= columns).
inline RatVector solve_consistent(const RatMatrix& a, const RatVector& y,
                                  const std::string& hint = {}) {
  auto g = detail::gauss_jordan(a, y);
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  if (g.rank < cols) throw SingularMatrix(g.rank, hint);
  for (std::size_t r = g.rank; r < g.y.size(); ++r)
    if (g.y[r] != 0) throw InconsistentSystem();
  return detail::back_substitute(g);
}

inline RatVector mat_vec(const RatMatrix& a, const RatVector& x) {
  RatVector r(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
  return r;
}

}  // namespace qrat

#endif  // QRAT_EXACT_HPP
