#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liecoh/field.hpp"

namespace liecoh {

// The truncated bicommutative Hopf algebra F_p[t_1..t_max_i]/(t_i^{p^fn}-t_i)
// with coproduct Delta(t_i) = sum_{k=0}^{i} t_k (x) t_{i-k}^{p^k} (t_0 = 1).
struct HopfSpec {
  uint64_t p = 7;
  uint32_t fn = 2;     // truncation exponent: t^{p^fn} = t
  uint32_t max_i = 4;  // generators t_1 .. t_max_i
};

// Exact reduced-cobar arithmetic over the Hopf algebra above.  Monomial
// exponents are canonical: zero, or a representative in [1, p^fn - 1] of the
// exponent class modulo p^fn - 1.  Tensors of arity 1, 2, 3 share one sorted
// map representation, so all outputs are deterministic.
class CobarAlgebra {
 public:
  static constexpr uint32_t kMaxGens = 4;
  using Mono = std::array<uint64_t, kMaxGens>;   // exponents of t_1..t_4
  using Tensor = std::map<std::vector<Mono>, Field::Elem>;

  // Requires p prime and p > 3 (the fixture coefficients invert 2 and 3).
  explicit CobarAlgebra(const HopfSpec& spec);

  const HopfSpec& spec() const { return S_; }
  const Field& field() const { return F_; }
  uint64_t exponent_period() const { return period_; }

  uint64_t canon_exp(uint64_t e) const;  // 0, or ((e-1) mod period) + 1
  Mono unit_mono() const { return Mono{}; }
  Mono gen_mono(uint32_t i, uint64_t exp = 1) const;
  Mono mono_mul(const Mono& a, const Mono& b) const;
  bool is_unit(const Mono& m) const;

  Tensor zero() const { return {}; }
  Tensor from_mono(const Mono& m) const;
  Tensor add(Tensor a, const Tensor& b) const;
  Tensor scale(Tensor a, const Field::Elem& c) const;
  // Slot-wise tensor product; both sides must have equal arity monomials.
  Tensor mul(const Tensor& a, const Tensor& b) const;
  Tensor pow(const Tensor& a, uint64_t e) const;
  // Concatenates slots: (a_1|..|a_r) (x) (b_1|..|b_s).
  Tensor tensor(const Tensor& a, const Tensor& b) const;

  Tensor delta_gen(uint32_t i) const;    // arity-2 coproduct of t_i
  Tensor delta(const Tensor& x) const;   // algebra map on arity-1 tensors
  Tensor delta_bar(const Tensor& x) const;  // Delta(x) - x(x)1 - 1(x)x

  // Reduced cobar differentials; inputs must take values in the
  // augmentation ideal in every slot.
  Tensor d1(const Tensor& x) const;      // arity 1 -> 2
  Tensor d2(const Tensor& x) const;      // arity 2 -> 3

  // Grammar: signed sum of terms; a term is an optional rational coefficient
  // (integer or integer/integer) followed by tensor slots separated by '|';
  // a slot is a juxtaposed product of factors t<i>, t<i>^<digits>,
  // t<i>^p, or t<i>^{<polynomial in p>}.  Exponent polynomials are
  // evaluated at this algebra's prime.  The arity of every term must match.
  Tensor parse(const std::string& s, int arity) const;
  std::string str(const Tensor& x) const;

 private:
  HopfSpec S_;
  Field F_;
  uint64_t period_;
  std::vector<Tensor> delta_gen_;  // cached coproducts of t_1..t_max_i

  void add_term(Tensor& dst, const std::vector<Mono>& key, const Field::Elem& c) const;
};

// One recorded cochain with its expected behaviour under the differential.
struct CobarCase {
  std::string name;
  int degree = 1;                  // 1 or 2
  std::string cochain;
  bool expect_cocycle = true;
  std::string d;                   // optional: the exact differential
};

struct CobarFixture {
  int schema_version = 0;
  std::string id;
  std::string description;
  uint64_t min_p = 0;
  uint32_t fn = 2;
  uint32_t max_i = 4;
  std::vector<CobarCase> cases;

  static CobarFixture load(const std::string& path);
};

struct CobarCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CobarReport {
  std::string id;
  uint64_t p = 0;
  bool pass = false;
  std::vector<CobarCheck> checks;

  size_t failures() const;
  std::string str() const;
};

// Structural checks of the Hopf algebra itself: coassociativity and counit
// law for every generator, squared differential vanishing on generators and
// on sample products, and exponent-canonicalization consistency.
std::vector<CobarCheck> hopf_invariants(const CobarAlgebra& A);

// Verifies every recorded case at the given prime, plus the Hopf structural
// invariants.  Throws std::invalid_argument when p is not a prime >= the
// fixture minimum (and > 3, which the coefficient field requires).
CobarReport verify_cobar(const CobarFixture& fx, uint64_t p);

}  // namespace liecoh
