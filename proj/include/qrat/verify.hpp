#ifndef QRAT_VERIFY_HPP
#define QRAT_VERIFY_HPP

// Exhaustive verification sweeps shared by the CLI and the acceptance suite.

#include <functional>
#include <string>

#include "closedforms.hpp"
#include "dedekind.hpp"
#include "exact.hpp"
#include "qdeform.hpp"
#include "sbtree.hpp"

namespace qrat {

struct SweepResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  bool pass() const { return checked > 0 && failed == 0; }

  void record(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = describe();
  }

  std::string summary() const {
    std::string s = name + ": " + std::to_string(checked - failed) + "/" +
                    std::to_string(checked) + " hold";
    if (failed) s += "; first counterexample " + first_failure;
    return s;
  }
};

inline std::vector<std::pair<Integer, Integer>> coprime_pairs(long max_p, long max_q) {
  std::vector<std::pair<Integer, Integer>> out;
  for (long q = 1; q <= max_q; ++q)
    for (long p = 1; p <= max_p; ++p)
      if (gcd(Integer(p), Integer(q)) == 1) out.emplace_back(p, q);
  return out;
}

inline SweepResult sweep_first_derivative(long max_b) {
  SweepResult r{"first derivative closed form", 0, 0, {}};
  for (const Rat& x : sweep_fractions(max_b)) {
    Rat exact = derivative_at_one(deform_function(x), 1), closed = d1_closed(x);
    r.record(exact == closed, [&] {
      return to_string(x) + " (exact " + to_string(exact) + ", closed " + to_string(closed) + ")";
    });
  }
  return r;
}

inline SweepResult sweep_second_derivative(long max_b) {
  SweepResult r{"second derivative closed form", 0, 0, {}};
  for (const Rat& x : sweep_fractions(max_b)) {
    Rat exact = derivative_at_one(deform_function(x), 2), closed = d2_closed(x.get_num(), x.get_den());
    r.record(exact == closed, [&] {
      return to_string(x) + " (exact " + to_string(exact) + ", closed " + to_string(closed) + ")";
    });
  }
  return r;
}

/// Weighted-Farey tree against the continued-fraction construction.
inline SweepResult sweep_tree_equivalence(const Integer& start, long depth) {
  SweepResult r{"tree/continued-fraction equivalence", 0, 0, {}};
  for (const auto& n : build_qtree(start, depth)) {
    RatFunc cf = deform_function(n.value);
    r.record(cf == n.deform, [&] {
      return to_string(n.value) + " (tree " + n.deform.to_string() + ", cf " + cf.to_string() + ")";
    });
  }
  return r;
}

inline SweepResult sweep_reciprocity(long max_pq, unsigned i = 4, unsigned j = 1) {
  SweepResult r{"reciprocity (" + std::to_string(i) + "," + std::to_string(j) + ")", 0, 0, {}};
  for (const auto& [p, q] : coprime_pairs(max_pq, max_pq)) {
    Rat res = reciprocity_residual(i, j, p, q);
    r.record(res == 0, [&] {
      return "p=" + p.get_str() + " q=" + q.get_str() + " residual " + to_string(res);
    });
  }
  return r;
}

/// sum <n/a>_b H(n/b) = -s_{1,3}(a,b), a in [1, b].
inline SweepResult sweep_substitution(long max_b) {
  SweepResult r{"bracket/Dedekind substitution", 0, 0, {}};
  for (const auto& [a, b] : coprime_pairs(max_b, max_b)) {
    if (a > b) continue;
    Rat lhs = bracket_h_sum(a, b), rhs = -s_sum(1, 3, a, b);
    r.record(lhs == rhs, [&] { return a.get_str() + "/" + b.get_str(); });
  }
  return r;
}

/// s_{3,1}(a^{-1}, b) = s_{1,3}(a, b)
inline SweepResult sweep_symmetry(long max_b) {
  SweepResult r{"inverse symmetry s31/s13", 0, 0, {}};
  for (const auto& [a, b] : coprime_pairs(max_b, max_b)) {
    if (a > b) continue;
    r.record(s_sum(3, 1, mod_inverse(a, b), b) == s_sum(1, 3, a, b),
             [&] { return a.get_str() + "/" + b.get_str(); });
  }
  return r;
}

/// sum <n/a>_b (n/b)(1 - n/b) = 0
inline SweepResult sweep_zero_sum(long max_b) {
  SweepResult r{"bracket zero sum", 0, 0, {}};
  for (const auto& [a, b] : coprime_pairs(max_b, max_b)) {
    if (a > b) continue;
    Rat s = 0;
    for (Integer n = 1; n < b; ++n) {
      Rat x = rat_reduce(n, b);
      s += bracket(n, a, b) * x * (1 - x);
    }
    r.record(s == 0, [&] { return a.get_str() + "/" + b.get_str(); });
  }
  return r;
}

/// One result per identity family of check_identities over 1 <= p, q <= max_pq.
inline std::vector<SweepResult> sweep_identity_battery(long max_pq, unsigned bound = 4) {
  std::vector<SweepResult> out;
  auto slot = [&](const std::string& name) -> SweepResult& {
    for (auto& s : out)
      if (s.name == name) return s;
    out.push_back({name, 0, 0, {}});
    return out.back();
  };
  for (const auto& [p, q] : coprime_pairs(max_pq, max_pq))
    for (const auto& c : check_identities(p, q, bound).checks)
      slot(c.identity).record(c.pass(), [&] {
        return "(i,j)=(" + std::to_string(c.i) + "," + std::to_string(c.j) + ") p=" +
               p.get_str() + " q=" + q.get_str() + " residual " + to_string(c.residual);
      });
  return out;
}

/// Linear dependence of Delta_{m-3} along every non-vanishing lineage of the
/// given order rooted at tree nodes of [0,1] to the given depth.
inline SweepResult sweep_dependence(long depth, int order, DeltaForm form) {
  SweepResult r{"delta dependence, order " + std::to_string(order) +
                    (form == DeltaForm::published ? " (published delta)" : " (top-order delta)"),
                0, 0, {}};
  for (const auto& n : build_qtree(0, depth)) {
    if (n.depth < order - 2) continue;
    Lineage lin = lineage_extract(n.value, order);
    if (lin.vanishing) continue;
    DependenceCheck c = weight_dependence(lin, form);
    r.record(c.holds(), [&] {
      return to_string(n.value) + " (lhs " + to_string(c.lhs) + ", rhs " + to_string(c.rhs) + ")";
    });
  }
  return r;
}

inline SweepResult sweep_quotient_rule(long max_b) {
  SweepResult r{"quotient-rule consistency", 0, 0, {}};
  for (const Rat& x : sweep_fractions(max_b))
    r.record(quotient_rule_consistent(x.get_num(), x.get_den()), [&] { return to_string(x); });
  return r;
}

/// b^3 d2(a/b) is an integer.
inline SweepResult sweep_denominator_bound(long max_b) {
  SweepResult r{"b^3 * second derivative is integral", 0, 0, {}};
  for (const Rat& x : sweep_fractions(max_b)) {
    const Integer& b = x.get_den();
    Rat v = d2_closed(x.get_num(), b) * Rat(b * b * b);
    r.record(v.get_den() == 1, [&] { return to_string(x) + " gives " + to_string(v); });
  }
  return r;
}

}  // namespace qrat

#endif  // QRAT_VERIFY_HPP
