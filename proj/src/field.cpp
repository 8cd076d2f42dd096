#include "liecoh/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace liecoh {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return uint64_t((__uint128_t(a) * b) % m);
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t acc = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) acc = mulmod_u64(acc, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return acc;
}

bool miller_rabin(uint64_t n, uint64_t a) {
  if (a % n == 0) return true;
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

uint64_t pollard_rho(uint64_t n) {
  if ((n & 1) == 0) return 2;
  for (uint64_t c = 1;; ++c) {
    auto f = [&](uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
    uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic witness set for n < 3.3 * 10^24 (covers all 64-bit n).
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

std::vector<uint64_t> distinct_prime_factors(uint64_t n) {
  std::vector<uint64_t> fs;
  factor_into(n, fs);
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

Field::Field(uint64_t p, uint32_t r) : p_(p), r_(r) {
  if (r == 0) throw std::invalid_argument("field: extension degree must be positive");
  if (p >= (1ull << 31)) throw std::invalid_argument("field: characteristic must be below 2^31");
  if (!is_prime_u64(p)) throw std::invalid_argument("field: characteristic must be prime");
  // p^r - 1 must fit in 64 bits for unit-group computations.
  uint64_t size = 1;
  for (uint32_t i = 0; i < r; ++i) {
    if (size > (~0ull) / p) throw std::invalid_argument("field: p^r exceeds 64 bits");
    size *= p;
  }
  size_ = size;
  find_modulus();
}

void Field::poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Field::Poly Field::poly_mul(const Poly& a, const Poly& b) const {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      c[i + j] = uint32_t((c[i + j] + uint64_t(a[i]) * b[j]) % p_);
    }
  }
  poly_trim(c);
  return c;
}

Field::Poly Field::poly_mod(Poly a, const Poly& m) const {
  // m is monic.
  poly_trim(a);
  size_t dm = m.size() - 1;
  while (a.size() > dm) {
    uint32_t lead = a.back();
    size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (size_t i = 0; i < dm; ++i) {
        uint64_t sub = uint64_t(lead) * m[i] % p_;
        a[shift + i] = uint32_t((a[shift + i] + p_ - sub) % p_);
      }
    }
    a.pop_back();
    poly_trim(a);
    if (a.size() <= dm) break;
  }
  return a;
}

Field::Poly Field::poly_gcd(Poly a, Poly b) const {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // Reduce a mod b (b need not be monic: scale).
    uint32_t lead_inv = uint32_t(pinv(b.back()));
    Poly bm = b;
    for (auto& c : bm) c = uint32_t(uint64_t(c) * lead_inv % p_);
    a = poly_mod(std::move(a), bm);
    std::swap(a, b);
  }
  return a;
}

Field::Poly Field::poly_powmod(Poly b, uint64_t e, const Poly& m) const {
  Poly acc{1};
  b = poly_mod(std::move(b), m);
  while (e) {
    if (e & 1) acc = poly_mod(poly_mul(acc, b), m);
    b = poly_mod(poly_mul(b, b), m);
    e >>= 1;
  }
  return acc;
}

bool Field::poly_irreducible(const Poly& f) const {
  // Rabin's test: f of degree r is irreducible over F_p iff
  // x^{p^r} == x (mod f) and gcd(x^{p^{r/s}} - x, f) = 1 for each prime s | r.
  uint32_t deg = uint32_t(f.size() - 1);
  Poly x{0, 1};
  // x^{p^deg} via repeated Frobenius powering.
  Poly t = x;
  for (uint32_t i = 0; i < deg; ++i) t = poly_powmod(std::move(t), p_, f);
  Poly diff = t;
  // diff -= x
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = uint32_t((diff[1] + p_ - 1) % p_);
  poly_trim(diff);
  if (!diff.empty()) return false;
  for (uint64_t s : distinct_prime_factors(deg)) {
    uint32_t sub = deg / uint32_t(s);
    Poly u = x;
    for (uint32_t i = 0; i < sub; ++i) u = poly_powmod(std::move(u), p_, f);
    Poly d = u;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = uint32_t((d[1] + p_ - 1) % p_);
    poly_trim(d);
    if (d.empty()) return false;  // x^{p^{r/s}} == x: f has a small-degree factor
    Poly g = poly_gcd(f, d);
    if (g.size() != 1) return false;
  }
  return true;
}

void Field::find_modulus() {
  if (r_ == 1) {
    modulus_ = {0, 1};
    return;
  }
  // Lower digits (a_{r-1}, ..., a_0) enumerated as base-p integers, smallest
  // first; a_{r-1} is the most significant digit.
  for (uint64_t k = 0;; ++k) {
    if (k >= size_) throw std::logic_error("field: no irreducible modulus found");
    Poly f(r_ + 1, 0);
    f[r_] = 1;
    uint64_t rem = k;
    for (uint32_t d = 0; d < r_; ++d) {  // d = 0 is the least significant digit a_0
      f[d] = uint32_t(rem % p_);
      rem /= p_;
    }
    if (poly_irreducible(f)) {
      modulus_ = f;
      return;
    }
  }
}

uint64_t Field::pinv(uint64_t a) const {
  if (a == 0) throw std::domain_error("field: division by zero");
  // Extended Euclid in Z.
  int64_t t = 0, nt = 1;
  int64_t rr = int64_t(p_), nr = int64_t(a % p_);
  while (nr != 0) {
    int64_t q = rr / nr;
    std::swap(t -= q * nt, nt);
    std::swap(rr -= q * nr, nr);
  }
  if (t < 0) t += int64_t(p_);
  return uint64_t(t);
}

Field::Elem Field::zero() const { return Elem(r_, 0); }

Field::Elem Field::one() const {
  Elem e(r_, 0);
  e[0] = 1;
  return e;
}

Field::Elem Field::from_int(int64_t v) const {
  Elem e(r_, 0);
  int64_t m = v % int64_t(p_);
  if (m < 0) m += int64_t(p_);
  e[0] = uint32_t(m);
  return e;
}

Field::Elem Field::reduce_len(Poly a) const {
  if (a.size() > r_) a = poly_mod(std::move(a), modulus_);
  a.resize(r_, 0);
  return a;
}

Field::Elem Field::from_coeffs(std::vector<uint32_t> c) const {
  for (auto& v : c) v = uint32_t(v % p_);
  return reduce_len(std::move(c));
}

bool Field::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](uint32_t v) { return v == 0; });
}

bool Field::eq(const Elem& a, const Elem& b) const { return a == b; }

Field::Elem Field::add(const Elem& a, const Elem& b) const {
  Elem c(r_);
  for (uint32_t i = 0; i < r_; ++i) c[i] = uint32_t((uint64_t(a[i]) + b[i]) % p_);
  return c;
}

Field::Elem Field::sub(const Elem& a, const Elem& b) const {
  Elem c(r_);
  for (uint32_t i = 0; i < r_; ++i) c[i] = uint32_t((uint64_t(a[i]) + p_ - b[i]) % p_);
  return c;
}

Field::Elem Field::neg(const Elem& a) const { return sub(zero(), a); }

Field::Elem Field::mul(const Elem& a, const Elem& b) const {
  if (r_ == 1) return Elem{uint32_t(uint64_t(a[0]) * b[0] % p_)};
  return reduce_len(poly_mul(a, b));
}

Field::Elem Field::mul_int(const Elem& a, int64_t k) const {
  int64_t m = k % int64_t(p_);
  if (m < 0) m += int64_t(p_);
  Elem c(r_);
  for (uint32_t i = 0; i < r_; ++i) c[i] = uint32_t(uint64_t(a[i]) * uint64_t(m) % p_);
  return c;
}

Field::Elem Field::pow(const Elem& a, uint64_t e) const {
  Elem acc = one(), b = a;
  while (e) {
    if (e & 1) acc = mul(acc, b);
    b = mul(b, b);
    e >>= 1;
  }
  return acc;
}

Field::Elem Field::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("field: division by zero");
  if (r_ == 1) return Elem{uint32_t(pinv(a[0]))};
  // Extended Euclid in F_p[x] against the modulus.
  Poly r0 = modulus_, r1 = a;
  poly_trim(r1);
  Poly t0{}, t1{1};
  while (!r1.empty()) {
    // Divide r0 by r1.
    Poly q;
    Poly rem = r0;
    poly_trim(rem);
    uint32_t lead_inv = uint32_t(pinv(r1.back()));
    while (rem.size() >= r1.size() && !rem.empty()) {
      size_t shift = rem.size() - r1.size();
      uint32_t coef = uint32_t(uint64_t(rem.back()) * lead_inv % p_);
      if (q.size() < shift + 1) q.resize(shift + 1, 0);
      q[shift] = uint32_t((q[shift] + coef) % p_);
      for (size_t i = 0; i < r1.size(); ++i) {
        uint64_t s = uint64_t(coef) * r1[i] % p_;
        rem[shift + i] = uint32_t((rem[shift + i] + p_ - s) % p_);
      }
      poly_trim(rem);
    }
    r0 = r1;
    r1 = rem;
    // t_{k+1} = t_{k-1} - q * t_k
    Poly qt = poly_mul(q, t1);
    Poly nt = t0;
    if (nt.size() < qt.size()) nt.resize(qt.size(), 0);
    for (size_t i = 0; i < qt.size(); ++i) nt[i] = uint32_t((nt[i] + p_ - qt[i]) % p_);
    poly_trim(nt);
    t0 = t1;
    t1 = nt;
  }
  // r0 is now the gcd: a nonzero constant (modulus is irreducible).
  uint32_t scale = uint32_t(pinv(r0[0]));
  for (auto& c : t0) c = uint32_t(uint64_t(c) * scale % p_);
  return reduce_len(std::move(t0));
}

Field::Elem Field::frobenius(const Elem& a) const { return pow(a, p_); }

Field::Elem Field::unity_root(uint64_t order, uint64_t exp) const {
  if (order == 0 || (size_ - 1) % order != 0)
    throw std::invalid_argument("field: order does not divide p^r - 1");
  uint64_t group = size_ - 1;
  auto factors = distinct_prime_factors(group);
  // First element in enumeration order generating the whole unit group.
  for (uint64_t k = 1; k < size_; ++k) {
    Elem g(r_, 0);
    uint64_t rem = k;
    for (uint32_t d = 0; d < r_; ++d) {
      g[d] = uint32_t(rem % p_);
      rem /= p_;
    }
    bool primitive = true;
    for (uint64_t q : factors) {
      if (eq(pow(g, group / q), one())) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      Elem mu = pow(g, group / order);
      return pow(mu, exp % order);
    }
  }
  throw std::logic_error("field: no primitive element found");
}

std::string Field::str(const Elem& a) const {
  if (r_ == 1) return std::to_string(a[0]);
  std::string s = "(";
  for (uint32_t i = 0; i < r_; ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  s += ")";
  return s;
}

}  // namespace liecoh
