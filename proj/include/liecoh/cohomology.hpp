#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/dga.hpp"
#include "liecoh/linalg.hpp"

namespace liecoh {

// Bigraded cohomology of a Dga.  Monomials are bucketed by (exterior degree
// s, internal degree t); each bucket's kernel/image data is computed exactly
// and cached.  All answers are deterministic: representative choices come
// from Gaussian elimination in a fixed column order.
class Complex {
 public:
  struct Space {
    int64_t dim = 0;
    std::vector<Dga::Elt> reps;  // deterministic cocycle representatives
  };
  struct ReduceResult {
    bool ok = false;
    std::string error;  // "NOT_A_COCYCLE" | "WRONG_BIDEGREE" | "NOT_IN_SPAN"
    std::vector<Field::Elem> coords;
  };

  explicit Complex(const Dga& dga);

  const Dga& dga() const { return *K_; }
  // Sorted list of (s, t) with a nonempty monomial bucket.
  std::vector<std::pair<int, int64_t>> bidegrees() const;
  const Space& cohomology(int s, int64_t t);

  // Coefficient c_s = sum over t of dim H^{s,t}; length num_gens()+1.
  std::vector<int64_t> poincare();
  // Same totals computed with the internal grading forgotten entirely.
  std::vector<int64_t> whole_dims();
  // Alternating sums of bucket sizes match those of cohomology, per t.
  bool euler_ok();

  // Coordinates of a cocycle against the representative basis of its bucket,
  // modulo boundaries.  Misses are structured, never exceptions.
  ReduceResult reduce_to_basis(const Dga::Elt& x, int s, int64_t t);

  // Least filtration weight r such that the class of z admits a
  // representative supported on monomials of weight <= r (0 for boundaries).
  int64_t class_filtration(const Dga::Elt& z, int s, int64_t t);
  // r -> dim image(H(F_r) -> H) for each distinct monomial weight r in the
  // bucket, F_r the subcomplex spanned by monomials of weight <= r.
  std::map<int64_t, int64_t> filtration_image_dims(int s, int64_t t);

 private:
  const Dga* K_;
  std::map<std::pair<int, int64_t>, std::vector<Dga::Mono>> buckets_;
  std::map<std::pair<int, int64_t>, Space> cache_;
  std::map<std::pair<int, int64_t>, DenseMat> dmat_cache_;

  const std::vector<Dga::Mono>& bucket(int s, int64_t t) const;
  const DenseMat& d_matrix(int s, int64_t t);
  std::vector<Field::Elem> to_coords(const std::vector<Dga::Mono>& basis, const Dga::Elt& x) const;
  Dga::Elt from_coords(const std::vector<Dga::Mono>& basis, const std::vector<Field::Elem>& v) const;
};

}  // namespace liecoh
