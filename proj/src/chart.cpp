#include "liecoh/chart.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace liecoh {

namespace {

using nlohmann::json;

LieFamily family_from_string(const std::string& s) {
  if (s == "plain") return LieFamily::Plain;
  if (s == "formal-module") return LieFamily::FormalModule;
  throw std::runtime_error("chart fixture: unknown family '" + s + "'");
}

PPoly parse_poly(const json& j, const char* key) {
  if (!j.is_string()) throw std::runtime_error(std::string("chart fixture: '") + key + "' must be a string polynomial");
  return PPoly::parse(j.get<std::string>());
}

int64_t mod_period(int64_t v, int64_t period) {
  int64_t r = v % period;
  return r < 0 ? r + period : r;
}

}  // namespace

ChartFixture ChartFixture::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("chart fixture: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("chart fixture: " + path + ": " + e.what());
  }

  ChartFixture fx;
  try {
    fx.schema_version = j.at("schema_version").get<int>();
    if (fx.schema_version != 1)
      throw std::runtime_error("chart fixture: unsupported schema_version");
    fx.id = j.at("id").get<std::string>();
    fx.description = j.value("description", "");
    fx.min_p = j.at("min_p").get<uint64_t>();
    const json& pj = j.at("params");
    fx.params.family = family_from_string(pj.at("family").get<std::string>());
    fx.params.n = pj.at("n").get<uint32_t>();
    fx.params.m = pj.at("m").get<uint32_t>();
    fx.params.e = pj.at("e").get<uint32_t>();
    fx.params.f = pj.at("f").get<uint32_t>();
    fx.params.omega_exp = pj.at("omega_exp").get<uint64_t>();
    fx.poincare = j.at("poincare").get<std::vector<int64_t>>();
    fx.a_factor = j.at("a_factor").get<std::vector<std::string>>();
    fx.exterior = j.at("exterior").get<std::vector<std::string>>();
    fx.duality_class = j.at("duality_class").get<std::string>();
    for (const json& rj : j.at("rows")) {
      ChartRow r;
      r.name = rj.at("name").get<std::string>();
      r.expr = rj.at("expr").get<std::string>();
      r.s = rj.at("s").get<int>();
      r.internal = parse_poly(rj.at("internal"), "internal");
      r.ravenel = parse_poly(rj.at("ravenel"), "ravenel");
      r.sigma = rj.at("sigma").get<std::string>();
      if (rj.contains("lift")) r.lift = parse_poly(rj.at("lift"), "lift");
      fx.rows.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw std::runtime_error("chart fixture: " + path + ": " + e.what());
  }

  std::set<std::string> names;
  for (const ChartRow& r : fx.rows)
    if (!names.insert(r.name).second)
      throw std::runtime_error("chart fixture: duplicate row name '" + r.name + "'");
  auto require_row = [&](const std::string& n, const char* where) {
    if (!names.count(n))
      throw std::runtime_error(std::string("chart fixture: ") + where + " references unknown row '" + n + "'");
  };
  for (const std::string& n : fx.a_factor) require_row(n, "a_factor");
  for (const std::string& n : fx.exterior) require_row(n, "exterior");
  require_row(fx.duality_class, "duality_class");
  return fx;
}

const ChartRow& ChartFixture::row(const std::string& name) const {
  for (const ChartRow& r : rows)
    if (r.name == name) return r;
  throw std::runtime_error("chart fixture: no row named '" + name + "'");
}

size_t ChartReport::failures() const {
  size_t n = 0;
  for (const ChartCheck& c : checks)
    if (!c.pass) ++n;
  return n;
}

std::string ChartReport::str() const {
  std::ostringstream out;
  out << "chart " << id << " @ p=" << p << ": " << (pass ? "PASS" : "FAIL")
      << " (" << (checks.size() - failures()) << "/" << checks.size() << " checks)\n";
  for (const ChartCheck& c : checks)
    if (!c.pass) out << "  FAIL " << c.name << ": " << c.detail << "\n";
  return out.str();
}

ChartReport verify_chart(const ChartFixture& fx, uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("verify_chart: p must be prime");
  if (p < fx.min_p)
    throw std::invalid_argument("verify_chart: chart " + fx.id + " requires p >= " + std::to_string(fx.min_p));

  LieParams lp = fx.params;
  lp.p = p;
  Dga K(DgaParams{lp});
  Complex C(K);
  const Field& F = K.field();
  const int64_t period = K.internal_period();

  ChartReport rep;
  rep.id = fx.id;
  rep.p = p;

  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    rep.checks.push_back({name, ok, ok ? "" : detail});
  };
  // Per-row checks.  Bidegrees are recorded as we go for the global checks.
  std::map<std::string, Dga::Elt> elt;
  std::map<std::string, std::pair<int, int64_t>> bidegree;
  for (const ChartRow& r : fx.rows) {
    Dga::Elt x;
    try {
      x = K.parse(r.expr);
    } catch (const std::exception& e) {
      add("parse/" + r.name, false, e.what());
      continue;
    }
    elt[r.name] = x;

    bool is_cocycle = K.d(x).empty();
    add("cocycle/" + r.name, is_cocycle, "d(expr) is nonzero");
    if (!is_cocycle) continue;  // the remaining row checks presuppose a class

    int s = 0;
    int64_t t = 0;
    bool homog = K.is_homogeneous(x, &s, &t);
    int64_t want_t = mod_period(r.internal.eval(p), period);
    bool bidegree_ok = homog && s == r.s && t == want_t;
    std::ostringstream bd;
    if (!homog)
      bd << "expression is not homogeneous";
    else
      bd << "got (s,t)=(" << s << "," << t << "), want (" << r.s << "," << want_t << ")";
    add("bidegree/" + r.name, bidegree_ok, bd.str());
    if (!bidegree_ok) continue;
    bidegree[r.name] = {s, t};

    int64_t filt = C.class_filtration(x, s, t);
    int64_t want_filt = r.ravenel.eval(p);
    add("filtration/" + r.name, filt == want_filt,
        "got " + std::to_string(filt) + ", want " + std::to_string(want_filt));

    // The shift image is compared in cohomology (the shift scales internal
    // degrees by p, so it lands in its own bucket): the difference between
    // the shifted row and the stated image must be a coboundary.
    std::string shift_detail;
    bool shift_ok = false;
    try {
      Dga::Elt diff = K.sub(K.sigma(x), K.parse(r.sigma));
      if (diff.empty()) {
        shift_ok = true;
      } else {
        int s2 = 0;
        int64_t t2 = 0;
        if (!K.is_homogeneous(diff, &s2, &t2)) {
          shift_detail = "shift of row and stated image have different bidegrees";
        } else {
          Complex::ReduceResult rr = C.reduce_to_basis(diff, s2, t2);
          if (!rr.ok) {
            shift_detail = "difference of shift and stated image: " + rr.error;
          } else {
            shift_ok = true;
            for (const Field::Elem& c : rr.coords)
              if (!F.is_zero(c)) { shift_ok = false; break; }
            if (!shift_ok) shift_detail = "shift of row and stated image are different classes";
          }
        }
      }
    } catch (const std::exception& e) {
      shift_detail = e.what();
    }
    add("shift/" + r.name, shift_ok, shift_detail);

    if (r.lift) {
      int64_t lift = r.lift->eval(p);
      add("lift/" + r.name, mod_period(lift, period) == t,
          "lift " + std::to_string(lift) + " is not congruent to internal degree " + std::to_string(t));
    }
  }

  // Basis check: products (self-dual factor) x (exterior subsets) must fill
  // every bucket of the cohomology exactly.
  {
    bool ok = true;
    std::ostringstream detail;
    std::map<std::pair<int, int64_t>, std::vector<std::vector<Field::Elem>>> spans;
    size_t products = 0;
    for (const std::string& an : fx.a_factor) {
      if (!elt.count(an)) { ok = false; detail << "row " << an << " unavailable; "; continue; }
      for (uint32_t mask = 0; mask < (1u << fx.exterior.size()); ++mask) {
        Dga::Elt w = elt[an];
        for (size_t k = 0; k < fx.exterior.size(); ++k)
          if (mask & (1u << k)) w = K.wedge(w, elt.at(fx.exterior[k]));
        int s = 0;
        int64_t t = 0;
        if (!K.is_homogeneous(w, &s, &t) || w.empty()) {
          ok = false;
          detail << "product " << an << "*mask" << mask << " is zero or inhomogeneous; ";
          continue;
        }
        Complex::ReduceResult rr = C.reduce_to_basis(w, s, t);
        if (!rr.ok) {
          ok = false;
          detail << "product " << an << "*mask" << mask << ": " << rr.error << "; ";
          continue;
        }
        spans[{s, t}].push_back(rr.coords);
        ++products;
      }
    }
    int64_t total_dim = 0;
    for (auto& [st, vecs] : spans) {
      const Complex::Space& H = C.cohomology(st.first, st.second);
      total_dim += H.dim;
      DenseMat M = DenseMat::zeros(F, H.reps.empty() ? 1 : static_cast<size_t>(H.dim), vecs.size());
      for (size_t c = 0; c < vecs.size(); ++c)
        for (size_t r = 0; r < vecs[c].size(); ++r) M.at(r, c) = vecs[c][r];
      if (static_cast<int64_t>(vecs.size()) != H.dim || rank(M) != vecs.size()) {
        ok = false;
        detail << "bucket (" << st.first << "," << st.second << "): " << vecs.size()
               << " products, rank " << rank(M) << ", dim " << H.dim << "; ";
      }
    }
    int64_t engine_total = 0;
    for (int64_t c : C.poincare()) engine_total += c;
    if (static_cast<int64_t>(products) != engine_total || total_dim != engine_total) {
      ok = false;
      detail << "covered " << products << " products over dim " << total_dim
             << ", engine total " << engine_total << "; ";
    }
    add("basis", ok, detail.str());
  }

  // Duality check: the pairing of the self-dual factor into the top class is
  // supported exactly on mirror pairs (i, N-1-i) and every such entry is a
  // unit, so the pairing matrix is invertible.
  {
    bool ok = true;
    std::ostringstream detail;
    const size_t N = fx.a_factor.size();
    if (!elt.count(fx.duality_class) || !bidegree.count(fx.duality_class)) {
      ok = false;
      detail << "duality class unavailable; ";
    } else {
      auto [s_top, t_top] = bidegree.at(fx.duality_class);
      const Complex::Space& top = C.cohomology(s_top, t_top);
      if (top.dim != 1) {
        ok = false;
        detail << "top bucket (" << s_top << "," << t_top << ") has dim " << top.dim << " != 1; ";
      } else {
        DenseMat M = DenseMat::zeros(F, N, N);
        for (size_t i = 0; i < N; ++i) {
          for (size_t j = 0; j < N; ++j) {
            const std::string &ni = fx.a_factor[i], &nj = fx.a_factor[j];
            if (!bidegree.count(ni) || !bidegree.count(nj)) {
              ok = false;
              detail << "row " << (bidegree.count(ni) ? nj : ni) << " unavailable; ";
              continue;
            }
            auto [si, ti] = bidegree.at(ni);
            auto [sj, tj] = bidegree.at(nj);
            if (si + sj != s_top || mod_period(ti + tj - t_top, period) != 0) continue;
            Complex::ReduceResult rr = C.reduce_to_basis(K.wedge(elt.at(ni), elt.at(nj)), s_top, t_top);
            if (!rr.ok) {
              ok = false;
              detail << "pairing (" << ni << ", " << nj << "): " << rr.error << "; ";
              continue;
            }
            M.at(i, j) = rr.coords[0];
          }
        }
        for (size_t i = 0; i < N && ok; ++i)
          for (size_t j = 0; j < N && ok; ++j) {
            bool nonzero = !F.is_zero(M.at_c(i, j));
            if (j == N - 1 - i && !nonzero) {
              ok = false;
              detail << "mirror pair (" << fx.a_factor[i] << ", " << fx.a_factor[j] << ") pairs to zero; ";
            } else if (j != N - 1 - i && nonzero) {
              ok = false;
              detail << "off-mirror pair (" << fx.a_factor[i] << ", " << fx.a_factor[j] << ") pairs nonzero; ";
            }
          }
        if (ok && rank(M) != N) {
          ok = false;
          detail << "pairing matrix is singular; ";
        }
      }
    }
    add("duality", ok, detail.str());
  }

  // The Poincare series must match the engine and the row inventory.
  {
    std::vector<int64_t> engine = C.poincare();
    std::vector<int64_t> want = fx.poincare;
    if (want.size() < engine.size()) want.resize(engine.size(), 0);
    std::ostringstream detail;
    bool ok = engine.size() <= want.size();
    for (size_t i = 0; ok && i < want.size(); ++i)
      ok = want[i] == (i < engine.size() ? engine[i] : 0);
    if (!ok) {
      detail << "engine [";
      for (size_t i = 0; i < engine.size(); ++i) detail << (i ? "," : "") << engine[i];
      detail << "] != stated";
    }
    add("series/engine", ok, detail.str());

    std::vector<int64_t> rows_poly(want.size(), 0);
    bool rows_ok = true;
    for (const std::string& an : fx.a_factor) {
      const ChartRow& r = fx.row(an);
      for (uint32_t mask = 0; mask < (1u << fx.exterior.size()); ++mask) {
        size_t s = static_cast<size_t>(r.s) + static_cast<size_t>(__builtin_popcount(mask));
        if (s >= rows_poly.size()) { rows_ok = false; break; }
        ++rows_poly[s];
      }
    }
    rows_ok = rows_ok && rows_poly == want;
    add("series/rows", rows_ok, "row inventory disagrees with stated series");
  }

  rep.pass = rep.failures() == 0;
  return rep;
}

}  // namespace liecoh
