#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "liecoh/field.hpp"

namespace liecoh {

enum class LieFamily { Plain, FormalModule };

// Presentation parameters.
//
// Plain family: the height-n truncated presentation L(n, m) with basis
// x[i,j], 1 <= i <= m, j in Z/n.
//
// FormalModule family: the variant L^A(n, m) attached to a degree-d = e*f
// extension with ramification index e and residue degree f; basis x[i,j]
// with f | i, 1 <= i <= m, j in Z/(f*n).  The twist parameter omega is the
// omega_exp-th power of the canonical generator of the group of roots of
// unity of order (q^{en}-1)/(q^n-1), q = p^f; it enters only through the
// embedding into the plain presentation of height d*n (see iota below).
struct LieParams {
  uint64_t p = 7;
  uint32_t n = 1;
  uint32_t m = 1;
  uint32_t e = 1, f = 1;
  uint64_t omega_exp = 0;
  LieFamily family = LieFamily::Plain;

  uint32_t d() const { return e * f; }
  uint32_t fn() const { return family == LieFamily::Plain ? n : f * n; }
  uint32_t dn() const { return family == LieFamily::Plain ? n : e * f * n; }
};

// Distance function of the filtration: 0 for i <= 0, else
// max{i, p * value(i - n)}.
int64_t ravenel_number(uint64_t p, uint32_t n, int64_t i);

struct LieKey {
  uint32_t i = 0, j = 0;
  auto operator<=>(const LieKey&) const = default;
};

// Sparse element: basis key -> nonzero coefficient.
using LieElem = std::map<LieKey, Field::Elem>;

class LiePresentation {
 public:
  explicit LiePresentation(const LieParams& params);
  // Shares an already-constructed scalar field (used by iota_target so the
  // embedded image lives over the same coefficients as the source).
  LiePresentation(const LieParams& params, std::shared_ptr<const Field> field);

  const LieParams& params() const { return P_; }
  const Field& field() const { return *F_; }
  std::shared_ptr<const Field> field_ptr() const { return F_; }
  // Order of the twist root of unity (1 for the plain family / e = 1).
  uint64_t omega_order() const { return omega_order_; }
  // omega^exponent as a field element (exponent taken mod the twist order).
  Field::Elem omega_power(uint64_t exponent) const;

  std::vector<LieKey> basis() const;
  bool in_basis(LieKey k) const;

  LieElem single(LieKey k, Field::Elem c) const;
  LieElem add(const LieElem& a, const LieElem& b) const;
  LieElem scale(const LieElem& a, const Field::Elem& c) const;

  LieElem bracket_basis(LieKey a, LieKey b) const;
  LieElem bracket(const LieElem& a, const LieElem& b) const;
  LieElem ad(LieKey a, const LieElem& x) const;

  // p-th power operation on a basis vector.
  LieElem restriction_basis(LieKey k) const;
  // Extension to sums via the first-order correction terms s_i read off from
  // ad_{ta+b}^{p-1}(a), and to scalars c by c -> c^p.
  LieElem restriction(const LieElem& x) const;

  int64_t internal_period() const { return period_; }
  int64_t internal_degree(LieKey k) const;  // canonical residue in [0, period)
  int64_t ravenel_degree(LieKey k) const;   // recurrence at the module height n
  // Largest filtration weight of a term (0 for the zero element).
  int64_t ravenel_degree(const LieElem& x) const;

  std::string str(const LieElem& x) const;

 private:
  LieParams P_;
  std::shared_ptr<const Field> F_;
  int64_t period_;
  uint64_t omega_order_;
  uint64_t omega_exp_eff_ = 0;

  void add_term(LieElem& dst, LieKey k, const Field::Elem& c) const;
  // Twist factor omega^{+- p^j (q^i - 1)(1 + q^n + ... + q^{n(t-1)})} picked up
  // when the second index of x_{i,.} is read t wraps past f*n (q = p^f, j the
  // reduced index). Inverse=false matches the cochain-side wrap direction.
  Field::Elem wrap_twist(uint32_t i, uint64_t j, uint64_t t, bool inverse) const;
  void validate() const;
};

// Embedding of the FormalModule presentation into the plain presentation of
// height d*n over the same scalar field:
//   x[i,j] |-> sum_{l=0}^{e-1} omega^{p^j (q^i - 1)(q^{ln} - 1)/(q^n - 1)} x[i, j + l*f*n].
LiePresentation iota_target(const LiePresentation& formal);
LieElem iota(const LiePresentation& formal, LieKey k);
LieElem iota_elem(const LiePresentation& formal, const LieElem& x);

}  // namespace liecoh
