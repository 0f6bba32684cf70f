#ifndef QRAT_IO_HPP
#define QRAT_IO_HPP

// JSON and CSV encodings. Rationals are "p/q" strings; polynomials are arrays
// of decimal strings, lowest degree first.

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "closedforms.hpp"
#include "dedekind.hpp"
#include "exact.hpp"
#include "fit.hpp"
#include "qdeform.hpp"
#include "sbtree.hpp"

namespace qrat {

using nlohmann::json;

inline json to_json(const Rat& r) { return to_string(r); }

inline json to_json(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

inline IntPoly poly_from_json(const json& j) {
  std::vector<Integer> c;
  for (const auto& v : j) c.push_back(parse_integer(v.get<std::string>()));
  return IntPoly(std::move(c));
}

inline json to_json(const QRational& x) {
  return json{{"a", x.value.get_num().get_str()},
              {"b", x.value.get_den().get_str()},
              {"depth", x.depth},
              {"path", x.path},
              {"num", to_json(x.deform.num())},
              {"den", to_json(x.deform.den())}};
}

inline QRational qrational_from_json(const json& j) {
  Rat v = rat_reduce(parse_integer(j.at("a").get<std::string>()),
                     parse_integer(j.at("b").get<std::string>()));
  return {v, RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den"))),
          j.at("depth").get<long>(), j.at("path").get<std::string>()};
}

inline json to_json(const std::vector<QRational>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

inline json to_json(const Lineage& lin) {
  json members = json::array();
  for (std::size_t n = 0; n < lin.order(); ++n) {
    json m = to_json(lin.members[n]);
    m["index"] = n + 1;
    m["f"] = lin.f[n].get_str();
    m["g"] = lin.g[n].get_str();
    m["F"] = to_json(lin.Fpoly[n]);
    m["G"] = to_json(lin.Gpoly[n]);
    if (n >= 2) {
      m["zeta"] = lin.zeta[n];
      m["xi"] = lin.xi[n];
    }
    members.push_back(m);
  }
  json out{{"order", lin.order()}, {"vanishing", lin.vanishing}, {"members", members}};
  if (!lin.vanishing) {
    try {
      json c = json::array();
      for (const auto& v : lagrange_coefficients(lin)) c.push_back(to_string(v));
      out["coefficients"] = c;
    } catch (const DegenerateWeights&) {
      out["coefficients"] = nullptr;
    }
  }
  return out;
}

inline json fit_to_json(Ansatz an, const RatVector& coeffs, const std::vector<Rat>& samples) {
  json c = json::object();
  auto names = feature_names(an);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[names[i]] = to_string(coeffs[i]);
  json s = json::array();
  for (const auto& x : samples) s.push_back(to_string(x));
  return json{{"ansatz", an == Ansatz::first_derivative ? "d1" : "d2"},
              {"samples", s},
              {"coefficients", c}};
}

inline void write_theorem_csv(std::ostream& os, const std::vector<TheoremRow>& rows) {
  os << "a,b,exact_d1,closed_d1,exact_d2,closed_d2,d1_match,d2_match\n";
  for (const auto& r : rows)
    os << r.a << ',' << r.b << ',' << to_string(r.exact_d1) << ',' << to_string(r.closed_d1) << ','
       << to_string(r.exact_d2) << ',' << to_string(r.closed_d2) << ',' << r.d1_match() << ','
       << r.d2_match() << '\n';
}

inline void write_identity_csv(std::ostream& os, const IdentityReport& rep, bool header = true) {
  if (header) os << "identity,i,j,p,q,residual,pass\n";
  for (const auto& c : rep.checks)
    os << c.identity << ',' << c.i << ',' << c.j << ',' << c.p << ',' << c.q << ','
       << to_string(c.residual) << ',' << c.pass() << '\n';
}

inline void write_calibration_csv(std::ostream& os, const CalibrationReport& rep) {
  os << "convention,a,b,exact_num_d1,predicted_num_d1,num_match,exact_den_d1,predicted_den_d1,"
        "den_match\n";
  for (const auto& e : rep.entries) {
    bool den_defined = e.a != 0;
    os << to_string(rep.convention) << ',' << e.a << ',' << e.b << ',' << e.exact_num_d1 << ','
       << to_string(e.predicted_num) << ',' << (Rat(e.exact_num_d1) == e.predicted_num) << ','
       << e.exact_den_d1 << ',' << (den_defined ? to_string(e.predicted_den) : "") << ','
       << (den_defined ? std::to_string(Rat(e.exact_den_d1) == e.predicted_den) : "") << '\n';
  }
}

inline void write_plot_csv(std::ostream& os, const std::vector<PlotRow>& rows) {
  os << "x,value,b,depth\n";
  for (const auto& r : rows)
    os << to_decimal(r.x) << ',' << to_decimal(r.value) << ',' << r.b << ',' << r.depth << '\n';
}

}  // namespace qrat

#endif  // QRAT_IO_HPP
