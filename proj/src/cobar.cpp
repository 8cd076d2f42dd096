#include "liecoh/cobar.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "liecoh/ppoly.hpp"

namespace liecoh {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

CobarAlgebra::CobarAlgebra(const HopfSpec& spec) : S_(spec), F_(spec.p, 1) {
  if (spec.p <= 3) throw std::invalid_argument("cobar: p must exceed 3 (coefficients invert 2 and 3)");
  if (spec.fn == 0 || spec.fn > 3) throw std::invalid_argument("cobar: fn must be 1, 2, or 3");
  if (spec.max_i == 0 || spec.max_i > kMaxGens)
    throw std::invalid_argument("cobar: max_i must be between 1 and 4");
  __uint128_t per = 1;
  for (uint32_t k = 0; k < spec.fn; ++k) per *= spec.p;
  if (per - 1 > UINT64_MAX) throw std::invalid_argument("cobar: p^fn does not fit in 64 bits");
  period_ = static_cast<uint64_t>(per - 1);

  for (uint32_t i = 1; i <= S_.max_i; ++i) {
    Tensor D;
    for (uint32_t k = 0; k <= i; ++k) {
      Mono left = unit_mono(), right = unit_mono();
      if (k > 0) left[k - 1] = 1;
      if (k < i) {
        // exponent p^k, reduced into the canonical window without overflow
        uint64_t e = (powmod_u64(S_.p, k, period_) + period_ - 1) % period_ + 1;
        right[i - k - 1] = e;
      }
      add_term(D, {left, right}, F_.one());
    }
    delta_gen_.push_back(std::move(D));
  }
}

uint64_t CobarAlgebra::canon_exp(uint64_t e) const {
  return e == 0 ? 0 : (e - 1) % period_ + 1;
}

CobarAlgebra::Mono CobarAlgebra::gen_mono(uint32_t i, uint64_t exp) const {
  if (i == 0 || i > S_.max_i) throw std::invalid_argument("cobar: generator index out of range");
  Mono m{};
  m[i - 1] = canon_exp(exp);
  return m;
}

CobarAlgebra::Mono CobarAlgebra::mono_mul(const Mono& a, const Mono& b) const {
  Mono r{};
  for (size_t i = 0; i < kMaxGens; ++i) r[i] = canon_exp(a[i] + b[i]);
  return r;
}

bool CobarAlgebra::is_unit(const Mono& m) const { return m == Mono{}; }

void CobarAlgebra::add_term(Tensor& dst, const std::vector<Mono>& key, const Field::Elem& c) const {
  if (F_.is_zero(c)) return;
  auto it = dst.find(key);
  if (it == dst.end()) {
    dst.emplace(key, c);
    return;
  }
  it->second = F_.add(it->second, c);
  if (F_.is_zero(it->second)) dst.erase(it);
}

CobarAlgebra::Tensor CobarAlgebra::from_mono(const Mono& m) const {
  Tensor t;
  add_term(t, {m}, F_.one());
  return t;
}

CobarAlgebra::Tensor CobarAlgebra::add(Tensor a, const Tensor& b) const {
  for (const auto& [k, c] : b) add_term(a, k, c);
  return a;
}

CobarAlgebra::Tensor CobarAlgebra::scale(Tensor a, const Field::Elem& c) const {
  if (F_.is_zero(c)) return {};
  Tensor r;
  for (const auto& [k, v] : a) add_term(r, k, F_.mul(v, c));
  return r;
}

CobarAlgebra::Tensor CobarAlgebra::mul(const Tensor& a, const Tensor& b) const {
  Tensor r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      if (ka.size() != kb.size()) throw std::invalid_argument("cobar: arity mismatch in product");
      std::vector<Mono> k(ka.size());
      for (size_t i = 0; i < ka.size(); ++i) k[i] = mono_mul(ka[i], kb[i]);
      add_term(r, k, F_.mul(ca, cb));
    }
  return r;
}

CobarAlgebra::Tensor CobarAlgebra::pow(const Tensor& a, uint64_t e) const {
  if (a.empty()) return e == 0 ? from_mono(unit_mono()) : zero();
  size_t arity = a.begin()->first.size();
  Tensor r;
  add_term(r, std::vector<Mono>(arity, unit_mono()), F_.one());
  Tensor base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

CobarAlgebra::Tensor CobarAlgebra::tensor(const Tensor& a, const Tensor& b) const {
  Tensor r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::vector<Mono> k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      add_term(r, k, F_.mul(ca, cb));
    }
  return r;
}

CobarAlgebra::Tensor CobarAlgebra::delta_gen(uint32_t i) const {
  if (i == 0 || i > S_.max_i) throw std::invalid_argument("cobar: generator index out of range");
  return delta_gen_[i - 1];
}

CobarAlgebra::Tensor CobarAlgebra::delta(const Tensor& x) const {
  Tensor r;
  for (const auto& [k, c] : x) {
    if (k.size() != 1) throw std::invalid_argument("cobar: delta expects arity-1 input");
    Tensor term;
    add_term(term, {unit_mono(), unit_mono()}, c);
    for (uint32_t i = 0; i < kMaxGens; ++i)
      if (k[0][i]) term = mul(term, pow(delta_gen_[i], k[0][i]));
    r = add(std::move(r), term);
  }
  return r;
}

CobarAlgebra::Tensor CobarAlgebra::delta_bar(const Tensor& x) const {
  Tensor r = delta(x);
  Tensor unit = from_mono(unit_mono());
  r = add(std::move(r), scale(tensor(x, unit), F_.neg(F_.one())));
  r = add(std::move(r), scale(tensor(unit, x), F_.neg(F_.one())));
  return r;
}

CobarAlgebra::Tensor CobarAlgebra::d1(const Tensor& x) const {
  for (const auto& [k, c] : x) {
    (void)c;
    if (k.size() != 1) throw std::invalid_argument("cobar: d1 expects arity-1 input");
    if (is_unit(k[0])) throw std::invalid_argument("cobar: d1 input must lie in the augmentation ideal");
  }
  return delta_bar(x);
}

CobarAlgebra::Tensor CobarAlgebra::d2(const Tensor& x) const {
  Tensor r;
  for (const auto& [k, c] : x) {
    if (k.size() != 2) throw std::invalid_argument("cobar: d2 expects arity-2 input");
    if (is_unit(k[0]) || is_unit(k[1]))
      throw std::invalid_argument("cobar: d2 input must lie in the augmentation ideal");
    Tensor a = from_mono(k[0]), b = from_mono(k[1]);
    Tensor term = tensor(delta_bar(a), b);
    term = add(std::move(term), scale(tensor(a, delta_bar(b)), F_.neg(F_.one())));
    r = add(std::move(r), scale(std::move(term), c));
  }
  return r;
}

CobarAlgebra::Tensor CobarAlgebra::parse(const std::string& s, int arity) const {
  size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto read_int = [&]() -> uint64_t {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("cobar: expected digits in '" + s + "'");
    uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      v = v * 10 + static_cast<uint64_t>(s[pos++] - '0');
    return v;
  };

  Tensor total;
  skip();
  if (pos >= s.size()) throw std::invalid_argument("cobar: empty cochain");
  bool first = true;
  while (true) {
    skip();
    if (pos >= s.size()) break;
    int64_t sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw std::invalid_argument("cobar: expected '+' or '-' in '" + s + "'");
    }
    first = false;

    Field::Elem coeff = F_.from_int(sign);
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      uint64_t num = read_int();
      coeff = F_.mul(coeff, F_.from_int(static_cast<int64_t>(num)));
      skip();
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        skip();
        uint64_t den = read_int();
        if (den % S_.p == 0)
          throw std::invalid_argument("cobar: denominator divisible by p in '" + s + "'");
        coeff = F_.mul(coeff, F_.inv(F_.from_int(static_cast<int64_t>(den))));
      }
    }

    std::vector<Mono> slots;
    Mono cur = unit_mono();
    bool factor_seen = false;
    while (pos < s.size()) {
      skip();
      if (pos >= s.size() || s[pos] == '+' || s[pos] == '-') break;
      if (s[pos] == '|') {
        ++pos;
        if (!factor_seen) throw std::invalid_argument("cobar: empty tensor slot in '" + s + "'");
        slots.push_back(cur);
        cur = unit_mono();
        factor_seen = false;
        continue;
      }
      if (s[pos] != 't') throw std::invalid_argument("cobar: expected 't' in '" + s + "'");
      ++pos;
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw std::invalid_argument("cobar: expected generator index in '" + s + "'");
      uint32_t i = static_cast<uint32_t>(s[pos++] - '0');
      uint64_t exp = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (pos < s.size() && s[pos] == '{') {
          size_t close = s.find('}', ++pos);
          if (close == std::string::npos)
            throw std::invalid_argument("cobar: unterminated exponent in '" + s + "'");
          int64_t v = PPoly::parse(s.substr(pos, close - pos)).eval(S_.p);
          if (v <= 0) throw std::invalid_argument("cobar: nonpositive exponent in '" + s + "'");
          exp = static_cast<uint64_t>(v);
          pos = close + 1;
        } else if (pos < s.size() && s[pos] == 'p') {
          ++pos;
          exp = S_.p;
        } else {
          exp = read_int();
          if (exp == 0) throw std::invalid_argument("cobar: zero exponent in '" + s + "'");
        }
      }
      cur = mono_mul(cur, gen_mono(i, exp));
      factor_seen = true;
    }
    if (!factor_seen) throw std::invalid_argument("cobar: term without factors in '" + s + "'");
    slots.push_back(cur);
    if (static_cast<int>(slots.size()) != arity)
      throw std::invalid_argument("cobar: term arity " + std::to_string(slots.size()) +
                                  " does not match expected " + std::to_string(arity));
    for (const Mono& m : slots)
      if (is_unit(m)) throw std::invalid_argument("cobar: unit tensor slot in '" + s + "'");
    add_term(total, slots, coeff);
  }
  return total;
}

std::string CobarAlgebra::str(const Tensor& x) const {
  if (x.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : x) {
    if (!first) out << " + ";
    first = false;
    out << F_.str(c) << " ";
    for (size_t slot = 0; slot < k.size(); ++slot) {
      if (slot) out << "|";
      if (is_unit(k[slot])) {
        out << "1";
        continue;
      }
      for (uint32_t i = 0; i < kMaxGens; ++i) {
        if (!k[slot][i]) continue;
        out << "t" << (i + 1);
        if (k[slot][i] != 1) out << "^" << k[slot][i];
      }
    }
  }
  return out.str();
}

CobarFixture CobarFixture::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cobar fixture: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("cobar fixture: " + path + ": " + e.what());
  }
  CobarFixture fx;
  try {
    fx.schema_version = j.at("schema_version").get<int>();
    if (fx.schema_version != 1) throw std::runtime_error("cobar fixture: unsupported schema_version");
    fx.id = j.at("id").get<std::string>();
    fx.description = j.value("description", "");
    fx.min_p = j.at("min_p").get<uint64_t>();
    fx.fn = j.at("fn").get<uint32_t>();
    fx.max_i = j.at("max_i").get<uint32_t>();
    for (const nlohmann::json& cj : j.at("cases")) {
      CobarCase c;
      c.name = cj.at("name").get<std::string>();
      c.degree = cj.at("degree").get<int>();
      if (c.degree != 1 && c.degree != 2)
        throw std::runtime_error("cobar fixture: case degree must be 1 or 2");
      c.cochain = cj.at("cochain").get<std::string>();
      std::string expect = cj.at("expect").get<std::string>();
      if (expect == "cocycle")
        c.expect_cocycle = true;
      else if (expect == "non-cocycle")
        c.expect_cocycle = false;
      else
        throw std::runtime_error("cobar fixture: unknown expect value '" + expect + "'");
      c.d = cj.value("d", "");
      fx.cases.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("cobar fixture: " + path + ": " + e.what());
  }
  return fx;
}

size_t CobarReport::failures() const {
  size_t n = 0;
  for (const CobarCheck& c : checks)
    if (!c.pass) ++n;
  return n;
}

std::string CobarReport::str() const {
  std::ostringstream out;
  out << "cobar " << id << " @ p=" << p << ": " << (pass ? "PASS" : "FAIL") << " ("
      << (checks.size() - failures()) << "/" << checks.size() << " checks)\n";
  for (const CobarCheck& c : checks)
    if (!c.pass) out << "  FAIL " << c.name << ": " << c.detail << "\n";
  return out.str();
}

std::vector<CobarCheck> hopf_invariants(const CobarAlgebra& A) {
  std::vector<CobarCheck> out;
  const Field& F = A.field();
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    out.push_back({name, ok, ok ? "" : detail});
  };

  for (uint32_t i = 1; i <= A.spec().max_i; ++i) {
    CobarAlgebra::Tensor D = A.delta_gen(i);

    // Coassociativity: expanding the left slot equals expanding the right.
    CobarAlgebra::Tensor left = A.zero(), right = A.zero();
    for (const auto& [k, c] : D) {
      left = A.add(std::move(left), A.scale(A.tensor(A.delta(A.from_mono(k[0])), A.from_mono(k[1])), c));
      right = A.add(std::move(right), A.scale(A.tensor(A.from_mono(k[0]), A.delta(A.from_mono(k[1]))), c));
    }
    CobarAlgebra::Tensor diff = A.add(left, A.scale(right, F.neg(F.one())));
    add("coassoc/t" + std::to_string(i), diff.empty(), "difference " + A.str(diff));

    // Counit law: striking the unit slot from the coproduct returns t_i.
    CobarAlgebra::Tensor eps_l = A.zero(), eps_r = A.zero();
    for (const auto& [k, c] : D) {
      if (A.is_unit(k[0])) eps_l = A.add(std::move(eps_l), A.scale(A.from_mono(k[1]), c));
      if (A.is_unit(k[1])) eps_r = A.add(std::move(eps_r), A.scale(A.from_mono(k[0]), c));
    }
    CobarAlgebra::Tensor ti = A.from_mono(A.gen_mono(i));
    bool counit_ok = eps_l == ti && eps_r == ti;
    add("counit/t" + std::to_string(i), counit_ok,
        "left " + A.str(eps_l) + ", right " + A.str(eps_r));

    CobarAlgebra::Tensor dd = A.d2(A.d1(ti));
    add("square/t" + std::to_string(i), dd.empty(), "d(d(t_i)) = " + A.str(dd));
  }

  // Squared differential on sample products exercising the multiplication.
  for (const std::string& sample : {std::string("t1t2"), std::string("t1^{p+1}")}) {
    CobarAlgebra::Tensor x = A.parse(sample, 1);
    CobarAlgebra::Tensor dd = A.d2(A.d1(x));
    add("square/" + sample, dd.empty(), "d(d(x)) = " + A.str(dd));
  }

  // Exponent canonicalization: p^fn reduces to 1, p^{fn+1} to p.
  add("period/truncation", A.canon_exp(A.exponent_period() + 1) == 1, "t^{p^fn} != t");
  bool frob_ok = A.gen_mono(1, A.exponent_period() + A.spec().p) == A.gen_mono(1, A.spec().p);
  add("period/frobenius", frob_ok, "exponent classes disagree");

  return out;
}

CobarReport verify_cobar(const CobarFixture& fx, uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("verify_cobar: p must be prime");
  if (p < fx.min_p || p <= 3)
    throw std::invalid_argument("verify_cobar: fixture " + fx.id + " requires p >= " +
                                std::to_string(fx.min_p < 5 ? 5 : fx.min_p));

  CobarAlgebra A({p, fx.fn, fx.max_i});
  CobarReport rep;
  rep.id = fx.id;
  rep.p = p;
  rep.checks = hopf_invariants(A);

  for (const CobarCase& c : fx.cases) {
    CobarCheck chk;
    chk.name = "case/" + c.name;
    try {
      CobarAlgebra::Tensor x = A.parse(c.cochain, c.degree);
      CobarAlgebra::Tensor d = c.degree == 1 ? A.d1(x) : A.d2(x);
      if (c.expect_cocycle) {
        chk.pass = d.empty();
        if (!chk.pass) chk.detail = "expected a cocycle but d = " + A.str(d);
      } else if (!c.d.empty()) {
        CobarAlgebra::Tensor want = A.parse(c.d, c.degree + 1);
        chk.pass = d == want;
        if (!chk.pass) chk.detail = "d = " + A.str(d) + ", want " + A.str(want);
      } else {
        chk.pass = !d.empty();
        if (!chk.pass) chk.detail = "expected a non-cocycle but d vanished";
      }
    } catch (const std::exception& e) {
      chk.pass = false;
      chk.detail = e.what();
    }
    rep.checks.push_back(std::move(chk));
  }

  rep.pass = rep.failures() == 0;
  return rep;
}

}  // namespace liecoh
