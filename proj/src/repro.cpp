#include "symcirc/repro.hpp"

#include "symcirc/walk.hpp"

#include <cstdio>
#include <ostream>

namespace symcirc {

namespace {

struct Reference {
  SymmetryClass cls;
  Rational v_q2;
  std::vector<long> large_q;  // coefficients of q^0, q^-1, ... as tabulated
};

const std::vector<Reference>& references() {
  static const std::vector<Reference> refs = {
      {SymmetryClass::Unitary, frac(3, 5), {1, 0, -2, 0, 2, 0, -2}},
      {SymmetryClass::COE, frac(153, 305), {1, 0, -2, 0, -2, 0, 14}},
      {SymmetryClass::CSE, frac(11, 41), {1, 0, -2, 0, -2, 0, -2}},
      {SymmetryClass::Orthogonal, frac(23, 39), {1, 0, -2, 0, 0, 6, -4}},
      {SymmetryClass::Symplectic, frac(7, 15), {1, 0, -2, 0, 0, -2, 0, 4}},
  };
  return refs;
}

nlohmann::json rat(const Rational& r) { return {{"exact", to_string(r)}, {"decimal", to_double(r)}}; }

} // namespace

nlohmann::json repro_table() {
  nlohmann::json classes = nlohmann::json::array();
  nlohmann::json flags = nlohmann::json::array();
  for (const auto& ref : references()) {
    const std::string cname(name(ref.cls));
    nlohmann::json entry{{"class", cname}, {"reference_q2", to_string(ref.v_q2)}};
    nlohmann::json by_q = nlohmann::json::array();
    for (int q = 2; q <= 6; ++q) {
      const ClassTheory th = class_theory(ref.cls, q);
      nlohmann::json row{{"q", q}, {"v_B", rat(th.v_closed)}};
      if (th.walk) {
        row["walk_v_B"] = rat(th.walk->v_B);
        row["walk_D"] = rat(th.walk->D);
        if (th.walk->v_B != th.v_closed)
          flags.push_back(cname + " q=" + std::to_string(q) + ": endpoint chain gives " + to_string(th.walk->v_B) +
                          ", closed form " + to_string(th.v_closed));
      }
      if (th.exact) row["exact_D"] = rat(th.exact->D);
      if (th.alternative) {
        row["alternative_derivation"] = rat(th.alternative->v_B);
        if (q == 2)
          flags.push_back(cname + " q=2: alternative derivation (identity weight 1/q^2) gives " +
                          to_string(th.alternative->v_B));
      }
      if (q == 2 && th.v_closed != ref.v_q2)
        flags.push_back(cname + " q=2: closed form " + to_string(th.v_closed) + " differs from reference " +
                        to_string(ref.v_q2));
      by_q.push_back(row);
    }
    entry["by_q"] = by_q;

    const auto series = series_vb(ref.cls, 8);
    nlohmann::json coeffs = nlohmann::json::array();
    bool match = true;
    for (std::size_t k = 0; k < series.size(); ++k) {
      coeffs.push_back(to_string(series[k]));
      if (k < ref.large_q.size() && series[k] != Rational(ref.large_q[k])) match = false;
    }
    if (!match) flags.push_back(cname + ": large-q coefficients differ from reference");
    entry["large_q"] = coeffs;
    entry["large_q_matches_reference"] = match;
    entry["v_B_q100"] = to_double(closed_form_vb(ref.cls, 100));
    classes.push_back(entry);
  }
  return {{"classes", classes}, {"flags", flags}};
}

void print_repro_table(const nlohmann::json& table, std::ostream& out) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-11s %-10s %-9s %-9s %-9s %-9s %-9s %-10s %s\n", "class", "q=2", "decimal", "q=3",
                "q=4", "q=5", "q=6", "q=100", "large-q");
  out << buf;
  for (const auto& c : table["classes"]) {
    const auto& rows = c["by_q"];
    std::string series;
    const auto& co = c["large_q"];
    for (std::size_t k = 0; k < co.size(); ++k) {
      const std::string s = co[k].get<std::string>();
      if (s == "0") continue;
      if (!series.empty()) series += s[0] == '-' ? " - " : " + ";
      else if (s[0] == '-') series += "-";
      const std::string mag = s[0] == '-' ? s.substr(1) : s;
      series += k == 0 ? mag : mag + "/q^" + std::to_string(k);
    }
    std::snprintf(buf, sizeof buf, "%-11s %-10s %-9.6f %-9.6f %-9.6f %-9.6f %-9.6f %-10.6f %s\n",
                  c["class"].get<std::string>().c_str(), rows[0]["v_B"]["exact"].get<std::string>().c_str(),
                  rows[0]["v_B"]["decimal"].get<double>(), rows[1]["v_B"]["decimal"].get<double>(),
                  rows[2]["v_B"]["decimal"].get<double>(), rows[3]["v_B"]["decimal"].get<double>(),
                  rows[4]["v_B"]["decimal"].get<double>(), c["v_B_q100"].get<double>(), series.c_str());
    out << buf;
  }
  if (!table["flags"].empty()) {
    out << "\nflags:\n";
    for (const auto& f : table["flags"]) out << "  " << f.get<std::string>() << "\n";
  }
}

} // namespace symcirc
