#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace liecoh {

// Arithmetic context for the finite field F_{p^r}, p an odd prime (p = 2, 3
// are accepted too so callers can probe small-characteristic behaviour).
//
// Elements are coefficient vectors of length r over F_p in the power basis
// 1, x, ..., x^{r-1}, reduced modulo a deterministic irreducible monic
// modulus: among all monic irreducible polynomials of degree r the one whose
// digit string (a_{r-1}, ..., a_1, a_0) is smallest read as a base-p integer.
// No lookup tables: the modulus is found by an irreducibility search at
// construction time.  p^r - 1 is required to fit in 64 bits so that unit
// group computations (root-of-unity generators) stay exact.
class Field {
 public:
  using Elem = std::vector<uint32_t>;

  explicit Field(uint64_t p, uint32_t r = 1);

  uint64_t p() const { return p_; }
  uint32_t r() const { return r_; }
  // Number of elements p^r (guaranteed to fit: see constructor guard).
  uint64_t size() const { return size_; }
  // Modulus coefficients, little-endian, length r+1, top coefficient 1.
  // For r = 1 this is {0, 1}, i.e. the polynomial x.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  Elem zero() const;
  Elem one() const;
  Elem from_int(int64_t v) const;
  // Little-endian coefficients; shorter vectors are zero-padded, longer ones
  // are reduced modulo the modulus.
  Elem from_coeffs(std::vector<uint32_t> c) const;

  bool is_zero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem mul_int(const Elem& a, int64_t k) const;
  Elem inv(const Elem& a) const;  // throws std::domain_error on zero
  Elem pow(const Elem& a, uint64_t e) const;
  Elem frobenius(const Elem& a) const;  // a |-> a^p

  // The exp-th power of the canonical generator of the order-M subgroup of
  // the unit group.  The generator is size-independent of exp: it is
  // g^{(p^r-1)/M} where g is the first element in enumeration order (index
  // k |-> coefficients (k mod p, (k/p) mod p, ...)) generating the full unit
  // group.  Throws if M does not divide p^r - 1.
  Elem unity_root(uint64_t order, uint64_t exp) const;

  std::string str(const Elem& a) const;

 private:
  uint64_t p_;
  uint32_t r_;
  uint64_t size_;
  std::vector<uint32_t> modulus_;

  uint64_t padd(uint64_t a, uint64_t b) const { return (a + b) % p_; }
  uint64_t pmul(uint64_t a, uint64_t b) const { return (a * b) % p_; }
  uint64_t pinv(uint64_t a) const;

  using Poly = std::vector<uint32_t>;  // little-endian over F_p
  Poly poly_mul(const Poly& a, const Poly& b) const;
  Poly poly_mod(Poly a, const Poly& m) const;
  Poly poly_gcd(Poly a, Poly b) const;
  Poly poly_powmod(Poly b, uint64_t e, const Poly& m) const;
  static void poly_trim(Poly& a);
  bool poly_irreducible(const Poly& f) const;
  void find_modulus();

  Elem reduce_len(Poly a) const;  // pad/reduce to length r
};

// True if n < 2^63 is prime (deterministic Miller-Rabin).
bool is_prime_u64(uint64_t n);
// Prime factorization (with multiplicity collapsed: distinct primes only).
std::vector<uint64_t> distinct_prime_factors(uint64_t n);

}  // namespace liecoh
