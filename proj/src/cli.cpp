#include "liecoh/cli.hpp"

#include <fmt/format.h>

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "liecoh/chart.hpp"
#include "liecoh/cobar.hpp"
#include "liecoh/cohomology.hpp"
#include "liecoh/dga.hpp"
#include "liecoh/lie.hpp"
#include "liecoh/regrade.hpp"

namespace liecoh {

namespace {

enum class Format { Text, Json, Csv };

Format format_of(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + s + "' (expected text, json, or csv)");
}

LieFamily family_of(const std::string& s) {
  if (s == "plain") return LieFamily::Plain;
  if (s == "formal-module") return LieFamily::FormalModule;
  throw std::invalid_argument("unknown family '" + s + "' (expected plain or formal-module)");
}

struct LieFlags {
  uint64_t p = 7;
  uint32_t n = 2, m = 2, e = 1, f = 1;
  uint64_t omega_exp = 0;
  std::string family = "plain";

  LieParams params() const { return {p, n, m, e, f, omega_exp, family_of(family)}; }
};

void add_lie_flags(CLI::App* cmd, LieFlags& lf) {
  cmd->add_option("--p", lf.p, "prime");
  cmd->add_option("--n", lf.n, "height");
  cmd->add_option("--m", lf.m, "truncation range");
  cmd->add_option("--e", lf.e, "ramification index (formal-module family)");
  cmd->add_option("--f", lf.f, "residue degree (formal-module family)");
  cmd->add_option("--omega-exp", lf.omega_exp, "twist exponent (formal-module family)");
  cmd->add_option("--family", lf.family, "plain or formal-module");
}

std::string param_label(const LieParams& P) {
  if (P.family == LieFamily::Plain)
    return fmt::format("plain p={} n={} m={}", P.p, P.n, P.m);
  std::string s = fmt::format("formal-module(e={},f={}) p={} n={} m={}", P.e, P.f, P.p, P.n, P.m);
  if (P.omega_exp) s += fmt::format(" omega^{}", P.omega_exp);
  return s;
}

nlohmann::json param_json(const LieParams& P) {
  return {{"p", P.p},
          {"n", P.n},
          {"m", P.m},
          {"e", P.e},
          {"f", P.f},
          {"omega_exp", P.omega_exp},
          {"family", P.family == LieFamily::Plain ? "plain" : "formal-module"}};
}

std::pair<int64_t, int64_t> parse_window(const std::string& s) {
  size_t pos = s.find(':');
  if (pos == std::string::npos)
    throw std::invalid_argument("window must look like LO:HI, got '" + s + "'");
  try {
    return {std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("window must look like LO:HI, got '" + s + "'");
  }
}

// ---- structural check battery ---------------------------------------------

struct CheckLine {
  std::string name;
  std::string status;  // "PASS", "FAIL", or "SKIP"
  std::string detail;
};

std::vector<CheckLine> lie_axiom_checks(const LiePresentation& L) {
  std::vector<CheckLine> out;
  const Field& F = L.field();
  const auto basis = L.basis();
  auto add = [&](const std::string& name, bool ok, const std::string& why) {
    out.push_back({name, ok ? "PASS" : "FAIL", ok ? "" : why});
  };

  bool anti = true;
  for (auto a : basis)
    for (auto b : basis)
      if (!L.add(L.bracket_basis(a, b), L.bracket_basis(b, a)).empty()) anti = false;
  add("lie/antisymmetry", anti, "[a,b] + [b,a] != 0 for some basis pair");

  bool jac = true;
  for (auto a : basis)
    for (auto b : basis)
      for (auto c : basis) {
        auto ea = L.single(a, F.one()), eb = L.single(b, F.one()), ec = L.single(c, F.one());
        auto sum = L.add(L.add(L.bracket(L.bracket(ea, eb), ec), L.bracket(L.bracket(eb, ec), ea)),
                         L.bracket(L.bracket(ec, ea), eb));
        if (!sum.empty()) jac = false;
      }
  add("lie/jacobi", jac, "Jacobi sum nonzero for some basis triple");

  bool deg_br = true;
  for (auto a : basis)
    for (auto b : basis) {
      int64_t want = (L.internal_degree(a) + L.internal_degree(b)) % L.internal_period();
      for (const auto& [k, c] : L.bracket_basis(a, b))
        if (L.internal_degree(k) != want) deg_br = false;
    }
  add("lie/degree-bracket", deg_br, "bracket does not add internal degrees");

  bool deg_xi = true;
  for (auto a : basis) {
    int64_t want =
        (L.internal_degree(a) * static_cast<int64_t>(L.params().p)) % L.internal_period();
    for (const auto& [k, c] : L.restriction_basis(a))
      if (L.internal_degree(k) != want) deg_xi = false;
  }
  add("lie/degree-restriction", deg_xi, "restriction does not scale internal degrees by p");

  // The p-th power is adjoint to the p-fold bracket only once the truncation
  // range reaches the restricted part: m (p - 1) >= p * dn.
  const LieParams& P = L.params();
  if (static_cast<uint64_t>(P.m) * (P.p - 1) >= P.p * P.dn()) {
    bool adj = true;
    for (auto a : basis) {
      auto xi_a = L.restriction_basis(a);
      for (auto b : basis) {
        auto lhs = L.bracket(xi_a, L.single(b, F.one()));
        auto rhs = L.single(b, F.one());
        for (uint64_t k = 0; k < P.p; ++k) rhs = L.ad(a, rhs);
        if (lhs != rhs) adj = false;
      }
    }
    add("lie/adjoint", adj, "[xi(a), b] != ad_a^p(b) for some basis pair");
  } else {
    out.push_back({"lie/adjoint", "SKIP", "truncation range below the restricted part"});
  }
  return out;
}

std::vector<CheckLine> dga_structure_checks(const Dga& K) {
  std::vector<CheckLine> out;
  bool dd = true, hom = true;
  for (size_t g = 0; g < K.num_gens(); ++g) {
    Dga::Elt dx = K.d(K.gen(g));
    if (!K.d(dx).empty()) dd = false;
    if (!dx.empty()) {
      int s = 0;
      int64_t t = 0;
      if (!K.is_homogeneous(dx, &s, &t) || s != 2 ||
          t != K.internal_degree(Dga::Mono{1} << g))
        hom = false;
    }
  }
  out.push_back({"dga/d-squared", dd ? "PASS" : "FAIL", dd ? "" : "d(d(h)) != 0 for a generator"});
  out.push_back(
      {"dga/degree", hom ? "PASS" : "FAIL", hom ? "" : "d does not preserve the internal degree"});
  return out;
}

CheckLine euler_check(const Dga& K, size_t max_gens) {
  if (K.num_gens() > max_gens)
    return {"coh/euler", "SKIP", fmt::format("{} generators exceeds the check bound", K.num_gens())};
  Complex C(K);
  bool ok = C.euler_ok();
  return {"coh/euler", ok ? "PASS" : "FAIL",
          ok ? "" : "alternating sums of bucket and cohomology dimensions differ"};
}

// At truncation range m <= 2 the formal-module complex with trivial twist and
// residue degree one coincides with the plain complex of the same height.
CheckLine agreement_check(const LieParams& formal) {
  LieParams plain{formal.p, formal.n, formal.m, 1, 1, 0, LieFamily::Plain};
  Dga Kf(DgaParams{formal}), Kp(DgaParams{plain});
  bool ok = Kf.num_gens() == Kp.num_gens();
  if (ok)
    for (size_t g = 0; g < Kf.num_gens(); ++g)
      if (Kf.d(Kf.gen(g)) != Kp.d(Kp.gen(g))) ok = false;
  if (ok) {
    Complex Cf(Kf), Cp(Kp);
    ok = Cf.poincare() == Cp.poincare();
  }
  return {"dga/plain-agreement", ok ? "PASS" : "FAIL",
          ok ? "" : "formal-module and plain complexes diverge at m <= 2"};
}

std::vector<CheckLine> iota_checks(uint64_t p, uint32_t m, uint64_t omega_exp) {
  LieParams P{p, 2, m, 2, 1, omega_exp, LieFamily::FormalModule};
  LiePresentation A(P);
  LiePresentation T = iota_target(A);
  bool br = true, xi = true;
  for (auto a : A.basis()) {
    for (auto b : A.basis())
      if (iota_elem(A, A.bracket_basis(a, b)) != T.bracket(iota(A, a), iota(A, b))) br = false;
    if (iota_elem(A, A.restriction_basis(a)) != T.restriction(iota(A, a))) xi = false;
  }
  // The twisted structure constants must satisfy the Lie axioms on their own.
  std::vector<CheckLine> out = lie_axiom_checks(A);
  out.push_back({"iota/bracket", br ? "PASS" : "FAIL",
                 br ? "" : "embedding does not commute with the bracket"});
  out.push_back({"iota/restriction", xi ? "PASS" : "FAIL",
                 xi ? "" : "embedding does not commute with the restriction"});
  return out;
}

nlohmann::json checks_json(const std::vector<CheckLine>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j = {{"name", c.name}, {"status", c.status}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

void print_checks(std::ostream& out, const std::vector<CheckLine>& checks) {
  for (const auto& c : checks) {
    out << c.status << " " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
}

size_t count_failed(const std::vector<CheckLine>& checks) {
  size_t n = 0;
  for (const auto& c : checks)
    if (c.status == "FAIL") ++n;
  return n;
}

// ---- subcommand handlers ---------------------------------------------------

int cmd_ravenel(uint64_t p, uint32_t n, int64_t from, int64_t to, Format fmt_kind,
                std::ostream& out) {
  if (!is_prime_u64(p)) throw std::invalid_argument("--p must be prime");
  if (from > to) throw std::invalid_argument("--from must not exceed --to");
  if (fmt_kind == Format::Json) {
    nlohmann::json values = nlohmann::json::array();
    for (int64_t i = from; i <= to; ++i)
      values.push_back({i, ravenel_number(p, n, i)});
    nlohmann::json j = {{"schema_version", 1},
                        {"command", "ravenel"},
                        {"p", p},
                        {"n", n},
                        {"values", values}};
    out << j.dump(2) << "\n";
    return 0;
  }
  const char* sep = fmt_kind == Format::Csv ? "," : " ";
  out << "i" << sep << "w\n";
  for (int64_t i = from; i <= to; ++i)
    out << i << sep << ravenel_number(p, n, i) << "\n";
  return 0;
}

int cmd_lie_check(const LieParams& P, Format fmt_kind, std::ostream& out) {
  LiePresentation L(P);
  std::vector<CheckLine> checks = lie_axiom_checks(L);
  Dga K(DgaParams{P});
  for (auto& c : dga_structure_checks(K)) checks.push_back(c);
  checks.push_back(euler_check(K, 12));
  size_t failed = count_failed(checks);
  bool pass = failed == 0;
  if (fmt_kind == Format::Json) {
    nlohmann::json j = {{"schema_version", 1},
                        {"command", "lie-check"},
                        {"params", param_json(P)},
                        {"checks", checks_json(checks)},
                        {"pass", pass}};
    out << j.dump(2) << "\n";
  } else {
    print_checks(out, checks);
    out << fmt::format("lie-check {}: {} ({} checks, {} failed)\n", param_label(P),
                       pass ? "PASS" : "FAIL", checks.size(), failed);
  }
  return pass ? 0 : 1;
}

int cmd_cohomology(const LieParams& P, std::optional<int> s, std::optional<int64_t> t,
                   Format fmt_kind, std::ostream& out) {
  Dga K(DgaParams{P});
  Complex C(K);
  if (s.has_value() != t.has_value())
    throw std::invalid_argument("--s and --t must be given together");
  if (s) {
    const Complex::Space& H = C.cohomology(*s, *t);
    if (fmt_kind == Format::Json) {
      nlohmann::json reps = nlohmann::json::array();
      for (const auto& r : H.reps) reps.push_back(K.str(r));
      nlohmann::json j = {{"schema_version", 1}, {"command", "cohomology"},
                          {"params", param_json(P)}, {"s", *s},
                          {"t", *t},               {"dim", H.dim},
                          {"reps", reps}};
      out << j.dump(2) << "\n";
      return 0;
    }
    const char* sep = fmt_kind == Format::Csv ? "," : " ";
    out << "dim" << sep << H.dim << "\n";
    for (const auto& r : H.reps) out << "rep" << sep << K.str(r) << "\n";
    return 0;
  }
  int64_t total = 0;
  std::vector<std::tuple<int, int64_t, int64_t>> rows;
  for (auto [ss, tt] : C.bidegrees()) {
    int64_t dim = C.cohomology(ss, tt).dim;
    if (dim) rows.push_back({ss, tt, dim});
    total += dim;
  }
  if (fmt_kind == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto [ss, tt, dim] : rows) arr.push_back({ss, tt, dim});
    nlohmann::json j = {{"schema_version", 1},
                        {"command", "cohomology"},
                        {"params", param_json(P)},
                        {"buckets", arr},
                        {"total", total}};
    out << j.dump(2) << "\n";
    return 0;
  }
  const char* sep = fmt_kind == Format::Csv ? "," : " ";
  out << "s" << sep << "t" << sep << "dim\n";
  for (auto [ss, tt, dim] : rows) out << ss << sep << tt << sep << dim << "\n";
  out << "total" << sep << total << "\n";
  return 0;
}

int cmd_poincare(const LieParams& P, bool whole, Format fmt_kind, std::ostream& out) {
  Dga K(DgaParams{P});
  Complex C(K);
  std::vector<int64_t> series = C.poincare();
  int64_t total = 0;
  for (int64_t c : series) total += c;
  std::vector<int64_t> ungraded;
  if (whole) ungraded = C.whole_dims();
  if (fmt_kind == Format::Json) {
    nlohmann::json j = {{"schema_version", 1},
                        {"command", "poincare"},
                        {"params", param_json(P)},
                        {"poincare", series},
                        {"total", total}};
    if (whole) {
      j["whole"] = ungraded;
      j["match"] = ungraded == series;
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  if (fmt_kind == Format::Csv) {
    out << "s,dim\n";
    for (size_t i = 0; i < series.size(); ++i) out << i << "," << series[i] << "\n";
    return 0;
  }
  out << "poincare";
  for (int64_t c : series) out << " " << c;
  out << "\ntotal " << total << "\n";
  if (whole) {
    out << "whole";
    for (int64_t c : ungraded) out << " " << c;
    out << "\nmatch " << (ungraded == series ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_verify_chart(const std::string& path, uint64_t p, Format fmt_kind, std::ostream& out) {
  ChartFixture fx = ChartFixture::load(path);
  ChartReport rep = verify_chart(fx, p);
  if (fmt_kind == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : rep.checks) {
      nlohmann::json cj = {{"name", c.name}, {"pass", c.pass}};
      if (!c.detail.empty()) cj["detail"] = c.detail;
      arr.push_back(std::move(cj));
    }
    nlohmann::json j = {{"schema_version", 1}, {"command", "verify-chart"},
                        {"id", rep.id},        {"p", rep.p},
                        {"pass", rep.pass},    {"checks", arr}};
    out << j.dump(2) << "\n";
  } else {
    out << rep.str();
  }
  return rep.pass ? 0 : 1;
}

int cmd_verify_cocycle(const std::string& path, uint64_t p, Format fmt_kind, std::ostream& out) {
  CobarFixture fx = CobarFixture::load(path);
  CobarReport rep = verify_cobar(fx, p);
  if (fmt_kind == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : rep.checks) {
      nlohmann::json cj = {{"name", c.name}, {"pass", c.pass}};
      if (!c.detail.empty()) cj["detail"] = c.detail;
      arr.push_back(std::move(cj));
    }
    nlohmann::json j = {{"schema_version", 1}, {"command", "verify-cocycle"},
                        {"id", rep.id},        {"p", rep.p},
                        {"pass", rep.pass},    {"checks", arr}};
    out << j.dump(2) << "\n";
  } else {
    out << rep.str();
  }
  return rep.pass ? 0 : 1;
}

int cmd_regrade(const std::string& path, uint64_t p, const std::string& window,
                const std::string& period, Format fmt_kind, std::ostream& out) {
  if (period != "default" && period != "paper" && period != "both")
    throw std::invalid_argument("--period must be default, paper, or both");
  auto [lo, hi] = parse_window(window);
  RegradeFixture fx = RegradeFixture::load(path);
  RegradeReport rep = verify_regrade(fx, p, lo, hi);

  auto series_json = [](const std::map<int64_t, int64_t>& m) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [d, c] : m) arr.push_back({d, c});
    return arr;
  };
  if (fmt_kind == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : rep.checks) {
      nlohmann::json cj = {{"name", c.name}, {"pass", c.pass}};
      if (!c.detail.empty()) cj["detail"] = c.detail;
      arr.push_back(std::move(cj));
    }
    nlohmann::json j = {{"schema_version", 1},
                        {"command", "regrade"},
                        {"id", rep.id},
                        {"p", rep.p},
                        {"window", {rep.window_lo, rep.window_hi}},
                        {"pass", rep.pass},
                        {"checks", arr},
                        {"discrepancies", rep.discrepancies}};
    if (period != "paper") j["computed_default"] = series_json(rep.computed_default);
    if (period != "default") {
      j["computed_paper"] = series_json(rep.computed_paper);
      j["display_paper"] = series_json(rep.display_paper);
    }
    out << j.dump(2) << "\n";
    return rep.pass ? 0 : 1;
  }
  const char* sep = fmt_kind == Format::Csv ? "," : " ";
  auto print_series = [&](const char* label, const std::map<int64_t, int64_t>& m) {
    if (fmt_kind == Format::Csv) {
      for (const auto& [d, c] : m) out << label << sep << d << sep << c << "\n";
    } else {
      out << label << "\n";
      for (const auto& [d, c] : m) out << d << sep << c << "\n";
    }
  };
  if (fmt_kind == Format::Csv)
    out << "series,degree,coeff\n";
  else
    out << rep.str();
  if (period != "paper") print_series("expansion-default", rep.computed_default);
  if (period != "default") {
    print_series("expansion-paper", rep.computed_paper);
    print_series("stated-paper", rep.display_paper);
  }
  return rep.pass ? 0 : 1;
}

int cmd_sweep(uint32_t max_m, Format fmt_kind, std::ostream& out) {
  struct Combo {
    std::string label;
    std::vector<CheckLine> checks;
  };
  std::vector<Combo> combos;

  const uint64_t primes[] = {5, 7, 11};
  for (uint64_t p : primes) {
    for (uint32_t n = 1; n <= 3; ++n)
      for (uint32_t m = 1; m <= max_m; ++m) {
        LieParams P{p, n, m, 1, 1, 0, LieFamily::Plain};
        LiePresentation L(P);
        Combo c{param_label(P), lie_axiom_checks(L)};
        Dga K(DgaParams{P});
        for (auto& chk : dga_structure_checks(K)) c.checks.push_back(chk);
        c.checks.push_back(euler_check(K, 12));
        combos.push_back(std::move(c));
      }
    const std::tuple<uint32_t, uint32_t, uint32_t> efn[] = {{2, 1, 2}, {1, 2, 1}, {2, 1, 1}};
    for (auto [e, f, n] : efn)
      for (uint32_t m = 1; m <= max_m; ++m) {
        LieParams P{p, n, m, e, f, 0, LieFamily::FormalModule};
        LiePresentation L(P);
        Combo c{param_label(P), lie_axiom_checks(L)};
        Dga K(DgaParams{P});
        for (auto& chk : dga_structure_checks(K)) c.checks.push_back(chk);
        c.checks.push_back(euler_check(K, 12));
        if (m <= 2 && f == 1) c.checks.push_back(agreement_check(P));
        combos.push_back(std::move(c));
      }
    for (uint32_t m = 1; m <= max_m; ++m)
      for (uint64_t w : {uint64_t(0), uint64_t(1)}) {
        LieParams P{p, 2, m, 2, 1, w, LieFamily::FormalModule};
        combos.push_back({param_label(P) + " iota", iota_checks(p, m, w)});
      }
    combos.push_back({fmt::format("hopf p={}", p), [&] {
                        CobarAlgebra A({p, 2, 4});
                        std::vector<CheckLine> lines;
                        for (const auto& c : hopf_invariants(A))
                          lines.push_back({c.name, c.pass ? "PASS" : "FAIL", c.detail});
                        return lines;
                      }()});
  }

  size_t total_checks = 0, total_failed = 0;
  for (const auto& c : combos) {
    total_checks += c.checks.size();
    total_failed += count_failed(c.checks);
  }
  bool pass = total_failed == 0;

  if (fmt_kind == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : combos)
      arr.push_back({{"label", c.label},
                     {"pass", count_failed(c.checks) == 0},
                     {"checks", checks_json(c.checks)}});
    nlohmann::json j = {{"schema_version", 1},
                        {"command", "sweep"},
                        {"combos", arr},
                        {"total_checks", total_checks},
                        {"pass", pass}};
    out << j.dump(2) << "\n";
    return pass ? 0 : 1;
  }
  for (const auto& c : combos) {
    size_t failed = count_failed(c.checks);
    out << (failed ? "FAIL " : "PASS ") << c.label << fmt::format(" ({} checks)\n", c.checks.size());
    for (const auto& chk : c.checks)
      if (chk.status == "FAIL") out << "  FAIL " << chk.name << ": " << chk.detail << "\n";
  }
  out << fmt::format("sweep: {} ({} combos, {} checks, {} failed)\n", pass ? "PASS" : "FAIL",
                     combos.size(), total_checks, total_failed);
  return pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact cochain-algebra verifier"};
  app.require_subcommand(1);

  std::string format = "text";

  // ravenel
  auto* ravenel = app.add_subcommand("ravenel", "filtration distance function");
  uint64_t rv_p = 7;
  uint32_t rv_n = 2;
  int64_t rv_from = 1, rv_to = 20;
  ravenel->add_option("--p", rv_p, "prime");
  ravenel->add_option("--n", rv_n, "height");
  ravenel->add_option("--from", rv_from, "first index");
  ravenel->add_option("--to", rv_to, "last index");
  ravenel->add_option("--format", format, "text, json, or csv");

  // lie-check
  auto* lie_check = app.add_subcommand("lie-check", "structural axioms at one parameter set");
  LieFlags lc_flags;
  add_lie_flags(lie_check, lc_flags);
  lie_check->add_option("--format", format, "text or json");

  // cohomology
  auto* cohomology = app.add_subcommand("cohomology", "bigraded cohomology dimensions");
  LieFlags coh_flags;
  add_lie_flags(cohomology, coh_flags);
  int coh_s = 0;
  int64_t coh_t = 0;
  auto* opt_s = cohomology->add_option("--s", coh_s, "exterior degree");
  auto* opt_t = cohomology->add_option("--t", coh_t, "internal degree");
  cohomology->add_option("--format", format, "text, json, or csv");

  // poincare
  auto* poincare = app.add_subcommand("poincare", "Poincare series by exterior degree");
  LieFlags po_flags;
  bool po_whole = false;
  add_lie_flags(poincare, po_flags);
  poincare->add_flag("--whole", po_whole, "also compute with the internal grading forgotten");
  poincare->add_option("--format", format, "text, json, or csv");

  // verify-chart
  auto* vchart = app.add_subcommand("verify-chart", "verify a cohomology chart fixture");
  std::string vc_path;
  uint64_t vc_p = 7;
  vchart->add_option("--chart", vc_path, "fixture path")->required();
  vchart->add_option("--p", vc_p, "prime")->required();
  vchart->add_option("--format", format, "text or json");

  // verify-cocycle
  auto* vcocycle = app.add_subcommand("verify-cocycle", "verify recorded cobar cochains");
  std::string vy_path;
  uint64_t vy_p = 7;
  vcocycle->add_option("--fixture", vy_path, "fixture path")->required();
  vcocycle->add_option("--p", vy_p, "prime")->required();
  vcocycle->add_option("--format", format, "text or json");

  // regrade
  auto* regrade = app.add_subcommand("regrade", "verify the top-degree table and series");
  std::string rg_path, rg_window = "-30:30", rg_period = "both";
  uint64_t rg_p = 7;
  regrade->add_option("--fixture", rg_path, "fixture path")->required();
  regrade->add_option("--p", rg_p, "prime")->required();
  regrade->add_option("--window", rg_window, "degree window LO:HI");
  regrade->add_option("--period", rg_period, "default, paper, or both");
  regrade->add_option("--format", format, "text, json, or csv");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "structural checks across the parameter grid");
  uint32_t sw_max_m = 5;
  sweep->add_option("--max-m", sw_max_m, "largest truncation range");
  sweep->add_option("--format", format, "text or json");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Format fmt_kind = format_of(format);
    bool csv_ok = ravenel->parsed() || cohomology->parsed() || poincare->parsed() ||
                  regrade->parsed();
    if (fmt_kind == Format::Csv && !csv_ok)
      throw std::invalid_argument("csv output is not available for this command");

    if (ravenel->parsed()) return cmd_ravenel(rv_p, rv_n, rv_from, rv_to, fmt_kind, out);
    if (lie_check->parsed()) return cmd_lie_check(lc_flags.params(), fmt_kind, out);
    if (cohomology->parsed()) {
      std::optional<int> s;
      std::optional<int64_t> t;
      if (opt_s->count()) s = coh_s;
      if (opt_t->count()) t = coh_t;
      return cmd_cohomology(coh_flags.params(), s, t, fmt_kind, out);
    }
    if (poincare->parsed()) return cmd_poincare(po_flags.params(), po_whole, fmt_kind, out);
    if (vchart->parsed()) return cmd_verify_chart(vc_path, vc_p, fmt_kind, out);
    if (vcocycle->parsed()) return cmd_verify_cocycle(vy_path, vy_p, fmt_kind, out);
    if (regrade->parsed())
      return cmd_regrade(rg_path, rg_p, rg_window, rg_period, fmt_kind, out);
    if (sweep->parsed()) return cmd_sweep(sw_max_m, fmt_kind, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace liecoh
