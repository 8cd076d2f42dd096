#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/lie.hpp"

namespace liecoh {

// Exterior-algebra cochain complex dual to a LiePresentation: one degree-one
// generator h[i,j] per basis vector x[i,j], with differential dual to the
// bracket,
//   d h[i,j] = [i(p-1) <= p*d*n] * sum_{0<k<i} h[k,j] h[i-k,j+k],
// second indices read cyclically: h[i, j+fn] = omega^{p^j (q^i - 1)} h[i,j].
struct DgaParams {
  LieParams lie;
  // Height used by the filtration degree; 0 means the presentation height n.
  uint32_t ravenel_height = 0;
};

class Dga {
 public:
  using Mono = uint32_t;                     // bitmask over generators
  using Elt = std::map<Mono, Field::Elem>;   // monomial -> coefficient

  explicit Dga(const DgaParams& params);

  const DgaParams& params() const { return D_; }
  const LiePresentation& lie() const { return L_; }
  const Field& field() const { return L_.field(); }

  size_t num_gens() const { return gens_.size(); }
  std::pair<uint32_t, uint32_t> gen_index(size_t g) const { return gens_[g]; }

  Elt zero() const { return {}; }
  Elt one() const;
  Elt gen(size_t g) const;
  // h[i, j_raw] with the second index normalized into [0, fn), accumulating
  // one twist factor per wrap.  Throws if (i, j mod fn) is not a generator.
  Elt h(uint32_t i, uint64_t j_raw) const;

  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt scale(const Elt& a, const Field::Elem& c) const;
  Elt scale_int(const Elt& a, int64_t k) const;
  Elt wedge(const Elt& a, const Elt& b) const;

  Elt d(const Elt& x) const;
  // The degree-preserving cyclic shift h[i,j] |-> h[i,j+1], extended as an
  // algebra map.
  Elt sigma(const Elt& x) const;

  int coh_degree(Mono m) const;
  int64_t internal_degree(Mono m) const;  // canonical residue mod the period
  int64_t internal_period() const { return L_.internal_period(); }
  int64_t ravenel_degree(Mono m) const;       // sum of generator weights
  int64_t ravenel_degree(const Elt& x) const;  // max over monomials
  // True iff every monomial shares one (exterior, internal) bidegree; the
  // out-parameters receive it (may be null).
  bool is_homogeneous(const Elt& x, int* s, int64_t* t) const;

  // Grammar: signed sum of terms; a term is an optional integer coefficient
  // followed by factors h<i><j>, zeta<i>, eta<i>, e40 multiplied by
  // juxtaposition.  zeta/eta abbreviate h[i,0] +/- h[i,1] (second index
  // ranging over Z/2 only).
  Elt parse(const std::string& expr) const;
  std::string str(const Elt& x) const;

 private:
  DgaParams D_;
  LiePresentation L_;
  std::vector<std::pair<uint32_t, uint32_t>> gens_;
  std::map<std::pair<uint32_t, uint32_t>, size_t> gen_of_;
  std::vector<Elt> dtable_;
  std::vector<Elt> sigma_table_;
  uint32_t height_;

  void add_term(Elt& dst, Mono m, const Field::Elem& c) const;
  Elt wedge_mono(Mono a, const Field::Elem& ca, Mono b, const Field::Elem& cb) const;
};

}  // namespace liecoh
