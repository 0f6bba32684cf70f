// qrat: command-line front end for the qrat library.
//
// Exit status: 0 success, 1 a requested verification failed, 2 usage error.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qrat/qrat.hpp"

using namespace qrat;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// QRAT_SWEEP_DEPTH supplies the default for every --depth flag.
long default_depth(long fallback) {
  if (const char* s = std::getenv("QRAT_SWEEP_DEPTH")) {
    try {
      return std::stol(s);
    } catch (...) {
      throw InvalidInput(std::string("QRAT_SWEEP_DEPTH is not an integer: ") + s);
    }
  }
  return fallback;
}

std::string bracket_list(const IntPoly& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? "," : "") + p.coeffs()[i].get_str();
  return s + "]";
}

int report(const std::vector<SweepResult>& results) {
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.pass() ? "PASS " : "FAIL ") << r.summary() << "\n";
    ok = ok && r.pass();
  }
  std::cout << (ok ? "all checks passed" : "verification failed") << "\n";
  return ok ? kOk : kFailed;
}

std::vector<Rat> parse_list(const std::string& s) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_rat(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-deformed rationals: derivatives at q=1, the q-deformed Stern-Brocot "
               "tree, lineages, generalized Dedekind sums and coefficient fitting"};
  app.require_subcommand(1);
  std::function<int()> action;

  // deform
  std::string x_str;
  bool as_json = false;
  auto* c_deform = app.add_subcommand("deform", "print the q-deformation of a/b");
  c_deform->add_option("x", x_str, "rational a/b or integer")->required();
  c_deform->add_flag("--json", as_json, "emit a JSON record");
  c_deform->callback([&] {
    action = [&] {
      QRational q = deform(parse_rat(x_str));
      if (as_json) {
        std::cout << to_json(q).dump(2) << "\n";
      } else {
        std::cout << "value " << to_string(q.value) << "\n"
                  << "num " << bracket_list(q.deform.num()) << "\n"
                  << "den " << bracket_list(q.deform.den()) << "\n"
                  << "depth " << q.depth << "\n"
                  << "path " << q.path << "\n";
      }
      return kOk;
    };
  });

  // derive
  int order = 1;
  auto* c_derive = app.add_subcommand("derive", "exact and closed-form derivative at q=1");
  c_derive->add_option("x", x_str, "rational a/b or integer")->required();
  c_derive->add_option("--order", order, "derivative order (1 or 2)")->check(CLI::Range(1, 2));
  c_derive->callback([&] {
    action = [&] {
      Rat x = parse_rat(x_str);
      Rat exact = derivative_at_one(deform_function(x), static_cast<unsigned>(order));
      Rat closed = order == 1 ? d1_closed(x) : d2_closed(x.get_num(), x.get_den());
      std::cout << "exact " << to_string(exact) << "\n"
                << "closed " << to_string(closed) << "\n"
                << (exact == closed ? "match" : "mismatch") << "\n";
      return exact == closed ? kOk : kFailed;
    };
  });

  // tree
  long start = 0;
  std::optional<long> depth;
  auto* c_tree = app.add_subcommand("tree", "q-deformed Stern-Brocot tree on [m, m+1]");
  c_tree->add_option("--start", start, "left endpoint m");
  c_tree->add_option("--depth", depth, "deepest layer (default 3)");
  c_tree->add_flag("--json", as_json, "emit JSON records");
  c_tree->callback([&] {
    action = [&] {
      auto nodes = build_qtree(start, depth.value_or(default_depth(3)));
      if (as_json) {
        std::cout << to_json(nodes).dump(2) << "\n";
      } else {
        for (const auto& n : nodes)
          std::cout << to_string(n.value) << "\t" << n.depth << "\t" << n.path << "\t"
                    << n.deform.to_string() << "\n";
      }
      return kOk;
    };
  });

  // lineage
  int lin_order = 4;
  auto* c_lineage = app.add_subcommand("lineage", "lineage of a/b with weights and coefficients");
  c_lineage->add_option("x", x_str, "target a/b")->required();
  c_lineage->add_option("--order", lin_order, "lineage order m >= 2");
  c_lineage->add_flag("--json", as_json, "emit JSON");
  c_lineage->callback([&] {
    action = [&] {
      Lineage lin = lineage_extract(parse_rat(x_str), lin_order);
      if (as_json) {
        std::cout << to_json(lin).dump(2) << "\n";
        return kOk;
      }
      std::cout << "n\tmember\tf\tg\tzeta\txi\n";
      for (std::size_t n = 0; n < lin.order(); ++n) {
        std::cout << n + 1 << "\t" << to_string(lin.members[n].value) << "\t" << lin.f[n] << "\t"
                  << lin.g[n];
        if (n >= 2) std::cout << "\t" << lin.zeta[n] << "\t" << lin.xi[n];
        std::cout << "\n";
      }
      std::cout << "vanishing " << (lin.vanishing ? "yes" : "no") << "\n";
      if (!lin.vanishing) {
        auto c = lagrange_coefficients(lin);
        std::cout << "coefficients";
        for (std::size_t i = 0; i < c.size(); ++i)
          std::cout << " C" << i + 1 << "=" << to_string(c[i]);
        std::cout << "\n";
      }
      return kOk;
    };
  });

  // check
  std::string what;
  std::optional<long> max_b;
  std::string form_str = "published";
  auto* c_check = app.add_subcommand("check", "run a verification sweep");
  c_check->add_option("what", what, "thm1|thm2|appendixA|dedekind|delta|lemma|bound")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "appendixA", "dedekind", "delta", "lemma", "bound"}));
  c_check->add_option("--max-denominator", max_b, "largest denominator swept");
  c_check->add_option("--depth", depth, "tree depth swept");
  c_check->add_option("--start", start, "left endpoint of the tree (appendixA)");
  c_check->add_option("--form", form_str, "delta form for the delta check")
      ->check(CLI::IsMember({"published", "top-order"}));
  c_check->callback([&] {
    action = [&] {
      if (what == "thm1") return report({sweep_first_derivative(max_b.value_or(40))});
      if (what == "thm2") return report({sweep_second_derivative(max_b.value_or(40))});
      if (what == "bound") return report({sweep_denominator_bound(max_b.value_or(40))});
      if (what == "appendixA")
        return report({sweep_tree_equivalence(start, depth.value_or(default_depth(12)))});
      if (what == "delta") {
        DeltaForm f = form_str == "published" ? DeltaForm::published : DeltaForm::top_order;
        long d = depth.value_or(default_depth(10));
        return report({sweep_dependence(d, 4, f), sweep_dependence(d, 5, f)});
      }
      if (what == "dedekind") {
        long b = max_b.value_or(30);
        std::vector<SweepResult> rs{sweep_reciprocity(b), sweep_substitution(b), sweep_symmetry(b),
                                    sweep_zero_sum(b)};
        for (auto& s : sweep_identity_battery(b)) rs.push_back(s);
        return report(rs);
      }
      // lemma: calibration is informational; quotient-rule consistency is the gate
      long b = max_b.value_or(20);
      for (auto conv : {DepthConvention::definition, DepthConvention::farey_sums}) {
        auto rep = lemma_calibration(b, conv);
        std::cout << "convention " << to_string(conv) << ": numerator mismatches "
                  << rep.numerator_mismatches.size() << "/" << rep.entries.size()
                  << ", denominator mismatches " << rep.denominator_mismatches.size() << "\n";
      }
      return report({sweep_quotient_rule(b)});
    };
  });

  // dedekind
  std::vector<std::string> dargs;
  unsigned bound = 4;
  auto* c_ded = app.add_subcommand("dedekind", "generalized Dedekind sums");
  c_ded->add_option("args", dargs,
                    "s|complete|h|t i j a b, reciprocity i j p q, or battery p q")
      ->required();
  c_ded->add_option("--bound", bound, "largest i+j for the battery");
  c_ded->callback([&] {
    action = [&] {
      const std::string kind = dargs[0];
      auto num = [&](std::size_t k) -> Integer {
        if (k >= dargs.size()) throw InvalidInput("missing argument for " + kind);
        return parse_integer(dargs[k]);
      };
      auto idx = [&](std::size_t k) -> unsigned {
        Integer v = num(k);
        if (v < 0 || v > kBernoulliBound) throw InvalidInput("index out of range");
        return static_cast<unsigned>(v.get_ui());
      };
      if (kind == "battery") {
        if (dargs.size() != 3) throw InvalidInput("battery takes p q");
        IdentityReport rep = check_identities(num(1), num(2), bound);
        write_identity_csv(std::cout, rep);
        return rep.all_pass() ? kOk : kFailed;
      }
      if (dargs.size() != 5) throw InvalidInput(kind + " takes four arguments");
      unsigned i = idx(1), j = idx(2);
      Integer a = num(3), b = num(4);
      Rat v;
      if (kind == "s")
        v = s_sum(i, j, a, b);
      else if (kind == "complete")
        v = s_complete(i, j, a, b);
      else if (kind == "h")
        v = h_val(i, j, a, b);
      else if (kind == "t")
        v = t_val(i, j, a, b);
      else if (kind == "reciprocity")
        v = reciprocity_residual(i, j, a, b);
      else
        throw InvalidInput("unknown kind '" + kind + "'");
      std::cout << to_string(v) << "\n";
      return kOk;
    };
  });

  // fit
  std::string which, samples_str;
  auto* c_fit = app.add_subcommand("fit", "recover closed-form coefficients by exact solving");
  c_fit->add_option("which", which, "d1|d2")->required()->check(CLI::IsMember({"d1", "d2"}));
  c_fit->add_option("--samples", samples_str, "comma-separated fractions");
  c_fit->add_option("--depth", depth, "tree depth for automatic samples (default 6)");
  c_fit->callback([&] {
    action = [&] {
      Ansatz an = which == "d1" ? Ansatz::first_derivative : Ansatz::second_derivative;
      std::vector<Rat> samples = samples_str.empty()
                                     ? default_fit_samples(an, depth.value_or(default_depth(6)))
                                     : parse_list(samples_str);
      RatVector c = solve_fit(assemble(an, samples));
      std::cout << fit_to_json(an, c, samples).dump(2) << "\n";
      return kOk;
    };
  });

  // plot
  int plot_order = 1;
  auto* c_plot = app.add_subcommand("plot", "CSV of exact derivatives over tree nodes");
  c_plot->add_option("--depth", depth, "deepest layer (default 6)");
  c_plot->add_option("--order", plot_order, "derivative order")->check(CLI::Range(1, 2));
  c_plot->add_option("--start", start, "left endpoint m");
  c_plot->callback([&] {
    action = [&] {
      write_plot_csv(std::cout, emit_plot_data(depth.value_or(default_depth(6)),
                                               static_cast<unsigned>(plot_order), start));
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
