#include "liecoh/dga.hpp"

#include <bit>
#include <cctype>
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

}  // namespace

Dga::Dga(const DgaParams& params) : D_(params), L_(params.lie) {
  gens_.clear();
  for (auto k : L_.basis()) gens_.push_back({k.i, k.j});
  if (gens_.size() > 31) throw std::invalid_argument("cochain algebra: too many generators");
  for (size_t g = 0; g < gens_.size(); ++g) gen_of_[gens_[g]] = g;
  height_ = D_.ravenel_height ? D_.ravenel_height : D_.lie.n;

  const LieParams& P = D_.lie;
  dtable_.resize(gens_.size());
  sigma_table_.resize(gens_.size());
  for (size_t g = 0; g < gens_.size(); ++g) {
    auto [i, j] = gens_[g];
    Elt dv;
    if (uint64_t(i) * (P.p - 1) <= P.p * uint64_t(P.dn())) {
      for (uint32_t k = 1; k < i; ++k) {
        if (k % P.f != 0 || (i - k) % P.f != 0) continue;
        dv = add(dv, wedge(h(k, j), h(i - k, uint64_t(j) + k)));
      }
    }
    dtable_[g] = std::move(dv);
    sigma_table_[g] = h(i, uint64_t(j) + 1);
  }
}

Dga::Elt Dga::one() const {
  Elt e;
  e.emplace(Mono(0), field().one());
  return e;
}

Dga::Elt Dga::gen(size_t g) const {
  Elt e;
  e.emplace(Mono(1) << g, field().one());
  return e;
}

Dga::Elt Dga::h(uint32_t i, uint64_t j_raw) const {
  const LieParams& P = D_.lie;
  uint32_t fn = P.fn();
  uint64_t ord = L_.omega_order();
  auto factor = field().one();
  // q^i - 1 mod ord, q = p^f
  uint64_t qi = (powmod(P.p, uint64_t(P.f) * i, ord) + ord - 1) % (ord ? ord : 1);
  while (j_raw >= fn) {
    j_raw -= fn;
    factor = field().mul(factor, L_.omega_power(mulmod(powmod(P.p, j_raw, ord), qi, ord)));
  }
  auto it = gen_of_.find({i, uint32_t(j_raw)});
  if (it == gen_of_.end())
    throw std::invalid_argument("cochain algebra: no generator h[" + std::to_string(i) + "," +
                                std::to_string(j_raw) + "]");
  Elt e;
  e.emplace(Mono(1) << it->second, factor);
  return e;
}

void Dga::add_term(Elt& dst, Mono m, const Field::Elem& c) const {
  if (field().is_zero(c)) return;
  auto it = dst.find(m);
  if (it == dst.end()) {
    dst.emplace(m, c);
  } else {
    it->second = field().add(it->second, c);
    if (field().is_zero(it->second)) dst.erase(it);
  }
}

Dga::Elt Dga::add(const Elt& a, const Elt& b) const {
  Elt out = a;
  for (const auto& [m, c] : b) add_term(out, m, c);
  return out;
}

Dga::Elt Dga::sub(const Elt& a, const Elt& b) const {
  Elt out = a;
  for (const auto& [m, c] : b) add_term(out, m, field().neg(c));
  return out;
}

Dga::Elt Dga::scale(const Elt& a, const Field::Elem& c) const {
  Elt out;
  for (const auto& [m, v] : a) {
    auto w = field().mul(v, c);
    if (!field().is_zero(w)) out.emplace(m, std::move(w));
  }
  return out;
}

Dga::Elt Dga::scale_int(const Elt& a, int64_t k) const { return scale(a, field().from_int(k)); }

Dga::Elt Dga::wedge_mono(Mono a, const Field::Elem& ca, Mono b, const Field::Elem& cb) const {
  Elt out;
  if (a & b) return out;
  int inversions = 0;
  Mono tmp = b;
  while (tmp) {
    int y = std::countr_zero(tmp);
    inversions += std::popcount(a >> (y + 1));
    tmp &= tmp - 1;
  }
  auto c = field().mul(ca, cb);
  if (inversions & 1) c = field().neg(c);
  if (!field().is_zero(c)) out.emplace(a | b, std::move(c));
  return out;
}

Dga::Elt Dga::wedge(const Elt& a, const Elt& b) const {
  Elt out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b)
      for (const auto& [m, c] : wedge_mono(ma, ca, mb, cb)) add_term(out, m, c);
  return out;
}

Dga::Elt Dga::d(const Elt& x) const {
  Elt out;
  const Field& F = field();
  for (const auto& [m, c] : x) {
    Mono rest_of = m;
    while (rest_of) {
      int g = std::countr_zero(rest_of);
      rest_of &= rest_of - 1;
      Mono rest = m ^ (Mono(1) << g);
      int below = std::popcount(m & ((Mono(1) << g) - 1));
      auto coef = (below & 1) ? F.neg(c) : c;
      for (const auto& [tm, tc] : dtable_[size_t(g)])
        for (const auto& [wm, wc] : wedge_mono(tm, tc, rest, F.one()))
          add_term(out, wm, F.mul(wc, coef));
    }
  }
  return out;
}

Dga::Elt Dga::sigma(const Elt& x) const {
  // Frobenius-semilinear: the wrap rule h[i, j+fn] = omega^{p^j(q^i-1)} h[i,j]
  // shifts consistently only if coefficients are twisted by c -> c^p.
  Elt out;
  for (const auto& [m, c] : x) {
    Elt acc;
    acc.emplace(Mono(0), field().frobenius(c));
    Mono tmp = m;
    while (tmp) {
      int g = std::countr_zero(tmp);
      tmp &= tmp - 1;
      acc = wedge(acc, sigma_table_[size_t(g)]);
    }
    out = add(out, acc);
  }
  return out;
}

int Dga::coh_degree(Mono m) const { return std::popcount(m); }

int64_t Dga::internal_degree(Mono m) const {
  int64_t deg = 0;
  Mono tmp = m;
  while (tmp) {
    int g = std::countr_zero(tmp);
    tmp &= tmp - 1;
    deg = (deg + L_.internal_degree({gens_[size_t(g)].first, gens_[size_t(g)].second})) %
          internal_period();
  }
  return deg;
}

int64_t Dga::ravenel_degree(Mono m) const {
  int64_t deg = 0;
  Mono tmp = m;
  while (tmp) {
    int g = std::countr_zero(tmp);
    tmp &= tmp - 1;
    deg += ravenel_number(D_.lie.p, height_, int64_t(gens_[size_t(g)].first));
  }
  return deg;
}

int64_t Dga::ravenel_degree(const Elt& x) const {
  int64_t best = 0;
  for (const auto& [m, c] : x) best = std::max(best, ravenel_degree(m));
  return best;
}

bool Dga::is_homogeneous(const Elt& x, int* s, int64_t* t) const {
  bool first = true;
  int s0 = 0;
  int64_t t0 = 0;
  for (const auto& [m, c] : x) {
    int ms = coh_degree(m);
    int64_t mt = internal_degree(m);
    if (first) {
      s0 = ms;
      t0 = mt;
      first = false;
    } else if (ms != s0 || mt != t0) {
      return false;
    }
  }
  if (s) *s = s0;
  if (t) *t = t0;
  return true;
}

Dga::Elt Dga::parse(const std::string& expr) const {
  size_t pos = 0;
  auto skip = [&] {
    while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos]))) ++pos;
  };
  auto parse_digit = [&]() -> uint32_t {
    if (pos >= expr.size() || !std::isdigit(static_cast<unsigned char>(expr[pos])))
      throw std::invalid_argument("expression: expected a digit in '" + expr + "'");
    return uint32_t(expr[pos++] - '0');
  };

  Elt total;
  skip();
  if (pos >= expr.size()) throw std::invalid_argument("expression: empty input");
  bool first_term = true;
  while (true) {
    skip();
    if (pos >= expr.size()) break;
    int64_t sign = 1;
    if (expr[pos] == '+' || expr[pos] == '-') {
      sign = expr[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first_term) {
      throw std::invalid_argument("expression: expected '+' or '-' in '" + expr + "'");
    }
    first_term = false;
    int64_t coeff = 1;
    bool saw_coeff = false;
    if (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) {
      saw_coeff = true;
      coeff = 0;
      while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos])))
        coeff = coeff * 10 + (expr[pos++] - '0');
    }
    Elt term = scale_int(one(), sign * coeff);
    bool any_factor = false;
    while (pos < expr.size()) {
      skip();
      if (pos >= expr.size() || expr[pos] == '+' || expr[pos] == '-') break;
      if (expr[pos] == 'h') {
        ++pos;
        uint32_t i = parse_digit();
        uint32_t j = parse_digit();
        term = wedge(term, h(i, j));
      } else if (expr.compare(pos, 4, "zeta") == 0) {
        pos += 4;
        uint32_t i = parse_digit();
        term = wedge(term, add(h(i, 0), h(i, 1)));
      } else if (expr.compare(pos, 3, "eta") == 0) {
        pos += 3;
        uint32_t i = parse_digit();
        term = wedge(term, sub(h(i, 0), h(i, 1)));
      } else if (expr.compare(pos, 3, "e40") == 0) {
        pos += 3;
        term = wedge(term, sub(wedge(h(1, 0), h(3, 1)), wedge(h(1, 1), h(3, 0))));
      } else {
        throw std::invalid_argument("expression: unknown factor in '" + expr + "'");
      }
      any_factor = true;
    }
    if (!any_factor && !saw_coeff)
      throw std::invalid_argument("expression: term without factors in '" + expr + "'");
    total = add(total, term);
  }
  return total;
}

std::string Dga::str(const Elt& x) const {
  if (x.empty()) return "0";
  const Field& F = field();
  std::string out;
  for (const auto& [m, c] : x) {
    if (!out.empty()) out += " + ";
    std::string mono;
    Mono tmp = m;
    while (tmp) {
      int g = std::countr_zero(tmp);
      tmp &= tmp - 1;
      mono += "h" + std::to_string(gens_[size_t(g)].first) + std::to_string(gens_[size_t(g)].second);
    }
    if (mono.empty()) mono = "1";
    if (!F.eq(c, F.one()) || mono == "1")
      out += F.str(c) + (mono == "1" ? "" : "*") + (mono == "1" ? "" : mono);
    else
      out += mono;
  }
  return out;
}

}  // namespace liecoh
