#include "liecoh/lie.hpp"

#include <numeric>
#include <stdexcept>

namespace liecoh {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return m <= 1 ? 0 : uint64_t((__uint128_t(a % m) * (b % m)) % m);
}

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
  if (m <= 1) return 0;
  uint64_t acc = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) acc = mulmod(acc, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return acc;
}

// p^k with a hard failure instead of silent wraparound.
uint64_t checked_pow(uint64_t p, uint32_t k, uint64_t limit, const char* what) {
  uint64_t v = 1;
  for (uint32_t t = 0; t < k; ++t) {
    if (v > limit / p) throw std::invalid_argument(std::string(what) + " exceeds the 64-bit range");
    v *= p;
  }
  return v;
}

}  // namespace

int64_t ravenel_number(uint64_t p, uint32_t n, int64_t i) {
  if (n == 0) throw std::invalid_argument("height must be positive");
  if (i <= 0) return 0;
  int64_t t0 = i % int64_t(n);
  if (t0 == 0) t0 = int64_t(n);
  int64_t d = 0;
  for (int64_t t = t0; t <= i; t += int64_t(n)) {
    if (d > int64_t(0x7fffffffffffffffLL) / int64_t(p))
      throw std::overflow_error("filtration weight exceeds the 64-bit range");
    d = std::max(t, int64_t(p) * d);
  }
  return d;
}

void LiePresentation::validate() const {
  if (!is_prime_u64(P_.p) || P_.p >= (1ull << 31))
    throw std::invalid_argument("presentation: p must be a prime below 2^31");
  if (P_.n == 0) throw std::invalid_argument("presentation: height must be positive");
  if (P_.m == 0) throw std::invalid_argument("presentation: truncation bound must be positive");
  if (P_.e == 0 || P_.f == 0)
    throw std::invalid_argument("presentation: module parameters must be positive");
  if (P_.family == LieFamily::Plain && (P_.e != 1 || P_.f != 1 || P_.omega_exp != 0))
    throw std::invalid_argument("presentation: plain family takes no module parameters");
}

LiePresentation::LiePresentation(const LieParams& params)
    : LiePresentation(params, nullptr) {}

LiePresentation::LiePresentation(const LieParams& params, std::shared_ptr<const Field> field)
    : P_(params) {
  validate();
  // Internal-degree period 2(p^{fn} - 1) must be exactly representable.
  uint64_t q_fn = checked_pow(P_.p, P_.fn(), uint64_t(1) << 62, "degree period");
  period_ = 2 * (int64_t(q_fn) - 1);

  // Twist root of unity: order of omega = g^{omega_exp} inside the cyclic
  // group of order M = (q^{en} - 1)/(q^n - 1), q = p^f.
  omega_order_ = 1;
  uint64_t omega_eff = 0;
  if (P_.family == LieFamily::FormalModule && P_.e > 1 && P_.omega_exp > 0) {
    uint64_t qn = checked_pow(P_.p, P_.f * P_.n, ~uint64_t(0), "twist group order");
    uint64_t qen = checked_pow(P_.p, P_.f * P_.e * P_.n, ~uint64_t(0), "twist group order");
    uint64_t M = (qen - 1) / (qn - 1);
    uint64_t g = std::gcd(M, P_.omega_exp);
    omega_order_ = M / g;
    omega_eff = (P_.omega_exp / g) % omega_order_;
  }
  omega_exp_eff_ = omega_eff;

  if (field) {
    if (field->p() != P_.p) throw std::invalid_argument("presentation: shared field has wrong characteristic");
    if (omega_order_ > 1 && (field->size() - 1) % omega_order_ != 0)
      throw std::invalid_argument("presentation: shared field lacks the twist roots of unity");
    F_ = std::move(field);
  } else {
    uint32_t r = 1;
    if (omega_order_ > 1) {
      uint64_t pr = 1;
      for (r = 1;; ++r) {
        if (pr > (~uint64_t(0)) / P_.p)
          throw std::invalid_argument("presentation: no 64-bit field contains the twist roots");
        pr *= P_.p;
        if ((pr - 1) % omega_order_ == 0) break;
      }
    }
    F_ = std::make_shared<const Field>(P_.p, r);
  }
}

std::vector<LieKey> LiePresentation::basis() const {
  std::vector<LieKey> out;
  for (uint32_t i = P_.f; i <= P_.m; i += P_.f)
    for (uint32_t j = 0; j < P_.fn(); ++j) out.push_back({i, j});
  return out;
}

bool LiePresentation::in_basis(LieKey k) const {
  return k.i >= 1 && k.i <= P_.m && k.i % P_.f == 0 && k.j < P_.fn();
}

void LiePresentation::add_term(LieElem& dst, LieKey k, const Field::Elem& c) const {
  if (F_->is_zero(c)) return;
  if (k.i > P_.m) return;  // truncation: indices beyond the bound are cut
  auto it = dst.find(k);
  if (it == dst.end()) {
    dst.emplace(k, c);
  } else {
    it->second = F_->add(it->second, c);
    if (F_->is_zero(it->second)) dst.erase(it);
  }
}

LieElem LiePresentation::single(LieKey k, Field::Elem c) const {
  LieElem out;
  if (!F_->is_zero(c)) out.emplace(k, std::move(c));
  return out;
}

LieElem LiePresentation::add(const LieElem& a, const LieElem& b) const {
  LieElem out = a;
  for (const auto& [k, c] : b) add_term(out, k, c);
  return out;
}

LieElem LiePresentation::scale(const LieElem& a, const Field::Elem& c) const {
  LieElem out;
  if (F_->is_zero(c)) return out;
  for (const auto& [k, v] : a) {
    auto w = F_->mul(v, c);
    if (!F_->is_zero(w)) out.emplace(k, std::move(w));
  }
  return out;
}

Field::Elem LiePresentation::wrap_twist(uint32_t i, uint64_t j, uint64_t t, bool inverse) const {
  if (omega_order_ <= 1 || t == 0) return F_->one();
  uint64_t ord = omega_order_;
  uint64_t qn = powmod(P_.p, P_.fn(), ord);
  uint64_t geom = 0, qpow = 1 % ord;
  for (uint64_t s = 0; s < t; ++s) {
    geom = (geom + qpow) % ord;
    qpow = mulmod(qpow, qn, ord);
  }
  uint64_t qi = (powmod(P_.p, uint64_t(P_.f) * i, ord) + ord - 1) % ord;
  uint64_t expo = mulmod(mulmod(powmod(P_.p, j, ord), qi, ord), geom, ord);
  if (inverse) expo = (ord - expo) % ord;
  return omega_power(expo);
}

LieElem LiePresentation::bracket_basis(LieKey a, LieKey b) const {
  if (!in_basis(a) || !in_basis(b)) throw std::invalid_argument("bracket: key outside the basis");
  LieElem out;
  uint64_t depth = uint64_t(a.i) + b.i;
  // Depth cutoff: brackets reach only as far as the filtration allows.
  if (depth * (P_.p - 1) > P_.p * uint64_t(P_.dn())) return out;
  uint32_t fn = P_.fn();
  // Each delta condition matches second indices up to wraps past f*n; every
  // wrap of the partner's index contributes one twist factor.
  if ((a.i + a.j) % fn == b.j % fn) {
    uint64_t t = (uint64_t(a.i) + a.j - b.j) / fn;
    add_term(out, {a.i + b.i, a.j}, wrap_twist(b.i, b.j, t, false));
  }
  if ((b.i + b.j) % fn == a.j % fn) {
    uint64_t t = (uint64_t(b.i) + b.j - a.j) / fn;
    add_term(out, {a.i + b.i, b.j}, F_->neg(wrap_twist(a.i, a.j, t, false)));
  }
  return out;
}

LieElem LiePresentation::bracket(const LieElem& x, const LieElem& y) const {
  LieElem out;
  for (const auto& [ka, ca] : x)
    for (const auto& [kb, cb] : y) {
      auto coef = F_->mul(ca, cb);
      if (F_->is_zero(coef)) continue;
      for (const auto& [k, c] : bracket_basis(ka, kb)) add_term(out, k, F_->mul(c, coef));
    }
  return out;
}

LieElem LiePresentation::ad(LieKey a, const LieElem& x) const {
  LieElem out;
  for (const auto& [kb, cb] : x)
    for (const auto& [k, c] : bracket_basis(a, kb)) add_term(out, k, F_->mul(c, cb));
  return out;
}

LieElem LiePresentation::restriction_basis(LieKey k) const {
  if (!in_basis(k)) throw std::invalid_argument("restriction: key outside the basis");
  LieElem out;
  uint64_t lhs = uint64_t(k.i) * (P_.p - 1);
  uint64_t rhs = P_.dn();
  uint32_t fn = P_.fn();
  if (lhs >= rhs) {
    // The shifted second index k.j + 1 may wrap past f*n; the basis-side wrap
    // direction is inverse to the cochain-side one.
    uint32_t jn = (k.j + 1) % fn;
    add_term(out, {k.i + P_.dn(), jn},
             wrap_twist(k.i + P_.dn(), jn, (uint64_t(k.j) + 1) / fn, true));
  }
  if (lhs <= rhs && k.i % fn == 0) {
    uint64_t pi = P_.p * uint64_t(k.i);
    if (pi <= P_.m) add_term(out, {uint32_t(pi), k.j}, F_->one());
  }
  return out;
}

LieElem LiePresentation::restriction(const LieElem& x) const {
  if (x.empty()) return {};
  auto it = x.begin();
  LieKey k0 = it->first;
  Field::Elem c0 = it->second;
  LieElem rest(std::next(it), x.end());

  // Leading term: the operation is p-semilinear in scalars.
  LieElem out = scale(restriction_basis(k0), F_->pow(c0, P_.p));
  if (rest.empty()) return out;
  out = add(out, restriction(rest));

  // Correction terms s_i, read off from ad_{ta+b}^{p-1}(a) = sum_i i s_i t^{i-1}
  // as polynomials in the formal variable t.
  LieElem a = single(k0, c0);
  std::vector<LieElem> w(1, a);  // w[k] is the coefficient of t^k
  bool all_zero = false;
  for (uint64_t step = 0; step + 1 < P_.p && !all_zero; ++step) {
    std::vector<LieElem> next(w.size() + 1);
    for (size_t t = 0; t < w.size(); ++t) {
      if (w[t].empty()) continue;
      next[t + 1] = add(next[t + 1], bracket(a, w[t]));
      next[t] = add(next[t], bracket(rest, w[t]));
    }
    while (!next.empty() && next.back().empty()) next.pop_back();
    w = std::move(next);
    all_zero = w.empty();
  }
  for (size_t t = 0; t < w.size(); ++t) {
    if (w[t].empty()) continue;
    if (t + 1 >= P_.p) throw std::logic_error("restriction: stray top-degree correction");
    // s_{t+1} = w[t] / (t+1)
    out = add(out, scale(w[t], F_->inv(F_->from_int(int64_t(t) + 1))));
  }
  return out;
}

int64_t LiePresentation::internal_degree(LieKey k) const {
  uint64_t Q = uint64_t(period_ / 2);  // p^{fn} - 1
  uint64_t inner = mulmod(powmod(P_.p, k.j, Q), (powmod(P_.p, k.i, Q) + Q - 1) % Q, Q);
  return int64_t(2 * inner);
}

int64_t LiePresentation::ravenel_degree(LieKey k) const {
  return ravenel_number(P_.p, P_.n, int64_t(k.i));
}

int64_t LiePresentation::ravenel_degree(const LieElem& x) const {
  int64_t best = 0;
  for (const auto& [k, c] : x) best = std::max(best, ravenel_degree(k));
  return best;
}

std::string LiePresentation::str(const LieElem& x) const {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : x) {
    if (!s.empty()) s += " + ";
    if (!F_->eq(c, F_->one())) s += F_->str(c) + "*";
    s += "x[" + std::to_string(k.i) + "," + std::to_string(k.j) + "]";
  }
  return s;
}

Field::Elem LiePresentation::omega_power(uint64_t exponent) const {
  if (omega_order_ == 1) return F_->one();
  uint64_t e = mulmod(omega_exp_eff_, exponent % omega_order_, omega_order_);
  return F_->unity_root(omega_order_, e);
}

LiePresentation iota_target(const LiePresentation& formal) {
  if (formal.params().family != LieFamily::FormalModule)
    throw std::invalid_argument("iota: source must be a formal-module presentation");
  LieParams plain;
  plain.p = formal.params().p;
  plain.n = formal.params().dn();
  plain.m = formal.params().m;
  plain.family = LieFamily::Plain;
  return LiePresentation(plain, formal.field_ptr());
}

LieElem iota(const LiePresentation& formal, LieKey k) {
  const LieParams& P = formal.params();
  if (P.family != LieFamily::FormalModule)
    throw std::invalid_argument("iota: source must be a formal-module presentation");
  uint64_t ord = formal.omega_order();
  uint32_t fn = P.fn();
  LieElem out;
  // omega^{p^j (q^i - 1)(1 + q^n + ... + q^{(l-1)n})} on sheet l.
  uint64_t qi = powmod(P.p, uint64_t(P.f) * k.i, ord);
  uint64_t pj = powmod(P.p, k.j, ord);
  uint64_t qn = powmod(P.p, uint64_t(P.f) * P.n, ord);
  uint64_t geom = 0, qpow = 1 % ord;
  for (uint32_t l = 0; l < P.e; ++l) {
    uint64_t expo = mulmod(mulmod(pj, (qi + ord - 1) % ord, ord), geom, ord);
    auto coef = formal.omega_power(expo);
    out[LieKey{k.i, k.j + l * fn}] = coef;
    geom = (geom + qpow) % ord;
    qpow = mulmod(qpow, qn, ord);
  }
  return out;
}

LieElem iota_elem(const LiePresentation& formal, const LieElem& x) {
  const Field& F = formal.field();
  LieElem out;
  for (const auto& [k, c] : x)
    for (const auto& [tk, tc] : iota(formal, k)) {
      auto v = F.mul(tc, c);
      auto it = out.find(tk);
      if (it == out.end()) {
        if (!F.is_zero(v)) out.emplace(tk, v);
      } else {
        it->second = F.add(it->second, v);
        if (F.is_zero(it->second)) out.erase(it);
      }
    }
  return out;
}

}  // namespace liecoh
