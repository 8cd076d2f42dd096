#include "liecoh/regrade.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "liecoh/field.hpp"

namespace liecoh {

namespace {

std::vector<int64_t> norm(std::vector<int64_t> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

bool poly_eq(const PPoly& a, const PPoly& b) { return norm(a.c) == norm(b.c); }

PPoly poly_sub_const(PPoly a, int64_t k) {
  if (a.c.empty()) a.c.push_back(0);
  a.c[0] -= k;
  return a;
}

// Expands (sum of terms) * prod_z (1 + s^z) * sum_n s^{P n} over [lo, hi].
std::map<int64_t, int64_t> expand(const std::vector<std::pair<int64_t, int64_t>>& terms,
                                  const std::vector<int64_t>& zeta_tops, int64_t P,
                                  int64_t lo, int64_t hi) {
  std::map<int64_t, int64_t> base;
  for (const auto& [deg, coeff] : terms) base[deg] += coeff;
  for (int64_t z : zeta_tops) {
    std::map<int64_t, int64_t> next;
    for (const auto& [deg, coeff] : base) {
      next[deg] += coeff;
      next[deg + z] += coeff;
    }
    base = std::move(next);
  }
  std::map<int64_t, int64_t> out;
  for (const auto& [deg, coeff] : base) {
    // smallest n with deg + P n >= lo
    int64_t n0 = (lo - deg >= 0) ? (lo - deg + P - 1) / P : -((deg - lo) / P);
    for (int64_t n = n0; deg + P * n <= hi; ++n)
      if (deg + P * n >= lo) out[deg + P * n] += coeff;
  }
  return out;
}

}  // namespace

RegradeFixture RegradeFixture::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("regrade fixture: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("regrade fixture: " + path + ": " + e.what());
  }
  RegradeFixture fx;
  try {
    fx.schema_version = j.at("schema_version").get<int>();
    if (fx.schema_version != 1)
      throw std::runtime_error("regrade fixture: unsupported schema_version");
    fx.id = j.at("id").get<std::string>();
    fx.description = j.value("description", "");
    fx.min_p = j.at("min_p").get<uint64_t>();
    fx.chart_path = j.at("chart").get<std::string>();
    fx.period_default = PPoly::parse(j.at("period_default").get<std::string>());
    fx.period_paper = PPoly::parse(j.at("period_paper").get<std::string>());
    for (const nlohmann::json& rj : j.at("rows")) {
      TopRow r;
      r.name = rj.at("name").get<std::string>();
      r.role = rj.at("role").get<std::string>();
      if (r.role != "module" && r.role != "exterior" && r.role != "periodicity")
        throw std::runtime_error("regrade fixture: unknown role '" + r.role + "'");
      r.s = rj.at("s").get<int>();
      r.lift = PPoly::parse(rj.at("lift").get<std::string>());
      r.top = PPoly::parse(rj.at("top").get<std::string>());
      fx.rows.push_back(std::move(r));
    }
    for (const nlohmann::json& tj : j.at("display"))
      fx.display.push_back({tj.at("coeff").get<int64_t>(),
                            PPoly::parse(tj.at("exp").get<std::string>())});
    for (const nlohmann::json& tj : j.at("known_missing"))
      fx.known_missing.push_back({tj.at("coeff").get<int64_t>(),
                                  PPoly::parse(tj.at("exp").get<std::string>())});
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("regrade fixture: " + path + ": " + e.what());
  }
  return fx;
}

const TopRow* RegradeFixture::row(const std::string& name) const {
  for (const TopRow& r : rows)
    if (r.name == name) return &r;
  return nullptr;
}

size_t RegradeReport::failures() const {
  size_t n = 0;
  for (const RegradeCheck& c : checks)
    if (!c.pass) ++n;
  return n;
}

std::string RegradeReport::str() const {
  std::ostringstream out;
  out << "regrade " << id << " @ p=" << p << " window [" << window_lo << ", " << window_hi
      << "]: " << (pass ? "PASS" : "FAIL") << " (" << (checks.size() - failures()) << "/"
      << checks.size() << " checks, " << discrepancies.size() << " discrepancies)\n";
  for (const RegradeCheck& c : checks)
    if (!c.pass) out << "  FAIL " << c.name << ": " << c.detail << "\n";
  for (const std::string& d : discrepancies) out << "  DISCREPANCY " << d << "\n";
  return out.str();
}

RegradeReport verify_regrade(const RegradeFixture& fx, uint64_t p, int64_t window_lo,
                             int64_t window_hi) {
  if (!is_prime_u64(p) || p < fx.min_p)
    throw std::invalid_argument("verify_regrade: fixture " + fx.id + " requires a prime >= " +
                                std::to_string(fx.min_p));
  if (window_lo > window_hi) throw std::invalid_argument("verify_regrade: empty degree window");

  ChartFixture chart = ChartFixture::load(fx.chart_path);

  RegradeReport rep;
  rep.id = fx.id;
  rep.p = p;
  rep.window_lo = window_lo;
  rep.window_hi = window_hi;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    rep.checks.push_back({name, ok, ok ? "" : detail});
  };

  // Table consistency: top = lift - s, and chart-backed rows must agree with
  // the chart fixture's filtration and integer lift.
  const TopRow* periodicity = nullptr;
  std::set<std::string> chart_named;
  for (const TopRow& r : fx.rows) {
    std::ostringstream why;
    bool ok = true;
    if (!poly_eq(r.top, poly_sub_const(r.lift, r.s))) {
      ok = false;
      why << "top " << r.top.str() << " != lift - s = " << poly_sub_const(r.lift, r.s).str();
    }
    if (r.role == "periodicity") {
      if (periodicity) {
        ok = false;
        why << "; second periodicity row";
      }
      periodicity = &r;
    } else {
      if (!chart_named.insert(r.name).second) {
        ok = false;
        why << "; duplicate row";
      }
      const ChartRow* cr = nullptr;
      for (const ChartRow& c : chart.rows)
        if (c.name == r.name) cr = &c;
      if (!cr) {
        ok = false;
        why << "; no chart row named '" << r.name << "'";
      } else {
        if (cr->s != r.s) {
          ok = false;
          why << "; filtration " << r.s << " != chart " << cr->s;
        }
        if (!cr->lift || !poly_eq(*cr->lift, r.lift)) {
          ok = false;
          why << "; lift " << r.lift.str() << " disagrees with chart";
        }
      }
    }
    add("table/" + r.name, ok, why.str());
  }
  add("table/coverage",
      periodicity != nullptr && chart_named.size() == chart.rows.size(),
      "rows must reference every chart row once plus one periodicity row");
  if (!periodicity) {
    rep.pass = false;
    return rep;
  }
  add("period/default", poly_eq(fx.period_default, periodicity->top),
      "stated default period " + fx.period_default.str() + " != periodicity degree " +
          periodicity->top.str());

  // Series expansion on the window, under both repeat degrees.
  int64_t P_default = fx.period_default.eval(p);
  int64_t P_paper = fx.period_paper.eval(p);
  if (P_default <= 0 || P_paper <= 0)
    throw std::invalid_argument("verify_regrade: repeat degree must be positive");

  std::vector<int64_t> zeta_tops;
  std::vector<std::pair<int64_t, int64_t>> module_terms, display_terms, missing_terms;
  for (const TopRow& r : fx.rows) {
    if (r.role == "module") module_terms.push_back({r.top.eval(p), 1});
    if (r.role == "exterior") zeta_tops.push_back(r.top.eval(p));
  }
  for (const SeriesTerm& t : fx.display) display_terms.push_back({t.exp.eval(p), t.coeff});
  for (const SeriesTerm& t : fx.known_missing) missing_terms.push_back({t.exp.eval(p), t.coeff});

  rep.computed_default = expand(module_terms, zeta_tops, P_default, window_lo, window_hi);
  rep.computed_paper = expand(module_terms, zeta_tops, P_paper, window_lo, window_hi);
  rep.display_paper = expand(display_terms, zeta_tops, P_paper, window_lo, window_hi);
  std::map<int64_t, int64_t> missing =
      expand(missing_terms, zeta_tops, P_paper, window_lo, window_hi);

  // Reconciliation: the stated series plus the recorded missing terms must
  // reproduce the computed expansion exactly on the window.
  {
    std::map<int64_t, int64_t> sum = rep.display_paper;
    for (const auto& [d, c] : missing) sum[d] += c;
    bool ok = true;
    std::ostringstream why;
    std::set<int64_t> degrees;
    for (const auto& [d, c] : sum) degrees.insert(d);
    for (const auto& [d, c] : rep.computed_paper) degrees.insert(d);
    for (int64_t d : degrees) {
      int64_t a = sum.count(d) ? sum.at(d) : 0;
      int64_t b = rep.computed_paper.count(d) ? rep.computed_paper.at(d) : 0;
      if (a != b) {
        if (!ok) why << "; ";
        ok = false;
        why << "degree " << d << ": stated+missing " << a << " != computed " << b;
      }
    }
    add("series/reconcile", ok, why.str());
  }

  // Discrepancies are reported, never corrected.
  if (!poly_eq(fx.period_paper, fx.period_default)) {
    std::ostringstream d;
    d << "period: stated repeat " << fx.period_paper.str() << " (= " << P_paper << " at p=" << p
      << ") differs from periodicity degree " << fx.period_default.str() << " (= " << P_default
      << ")";
    rep.discrepancies.push_back(d.str());
  }
  {
    std::set<int64_t> degrees;
    for (const auto& [d, c] : rep.computed_paper) degrees.insert(d);
    for (const auto& [d, c] : rep.display_paper) degrees.insert(d);
    for (int64_t d : degrees) {
      int64_t a = rep.computed_paper.count(d) ? rep.computed_paper.at(d) : 0;
      int64_t b = rep.display_paper.count(d) ? rep.display_paper.at(d) : 0;
      if (a != b) {
        std::ostringstream s;
        s << "degree " << d << ": computed coefficient " << a << ", stated " << b;
        rep.discrepancies.push_back(s.str());
      }
    }
  }

  rep.pass = rep.failures() == 0;
  return rep;
}

}  // namespace liecoh
