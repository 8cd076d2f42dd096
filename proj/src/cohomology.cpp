#include "liecoh/cohomology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace liecoh {

namespace {

// Incremental column eliminator used to pick deterministic representatives.
class Eliminator {
 public:
  explicit Eliminator(const Field& F) : F_(&F) {}

  // Reduces v against the stored pivots; if a nonzero remainder survives it
  // becomes a new pivot and the call returns true.
  bool insert(std::vector<Field::Elem> v) {
    for (const auto& [prow, pvec] : pivots_) {
      if (F_->is_zero(v[prow])) continue;
      auto factor = v[prow];
      for (size_t i = 0; i < v.size(); ++i)
        v[i] = F_->sub(v[i], F_->mul(factor, pvec[i]));
    }
    size_t prow = v.size();
    for (size_t i = 0; i < v.size(); ++i)
      if (!F_->is_zero(v[i])) {
        prow = i;
        break;
      }
    if (prow == v.size()) return false;
    auto inv = F_->inv(v[prow]);
    for (auto& c : v) c = F_->mul(c, inv);
    pivots_.emplace_back(prow, std::move(v));
    return true;
  }

 private:
  const Field* F_;
  std::vector<std::pair<size_t, std::vector<Field::Elem>>> pivots_;
};

}  // namespace

Complex::Complex(const Dga& dga) : K_(&dga) {
  uint32_t G = uint32_t(K_->num_gens());
  for (uint64_t m = 0; m < (uint64_t(1) << G); ++m) {
    auto mono = Dga::Mono(m);
    buckets_[{K_->coh_degree(mono), K_->internal_degree(mono)}].push_back(mono);
  }
}

const std::vector<Dga::Mono>& Complex::bucket(int s, int64_t t) const {
  static const std::vector<Dga::Mono> empty;
  auto it = buckets_.find({s, t});
  return it == buckets_.end() ? empty : it->second;
}

std::vector<std::pair<int, int64_t>> Complex::bidegrees() const {
  std::vector<std::pair<int, int64_t>> out;
  for (const auto& [key, v] : buckets_) out.push_back(key);
  return out;
}

std::vector<Field::Elem> Complex::to_coords(const std::vector<Dga::Mono>& basis,
                                            const Dga::Elt& x) const {
  const Field& F = K_->field();
  std::vector<Field::Elem> v(basis.size(), F.zero());
  for (const auto& [m, c] : x) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || *it != m)
      throw std::invalid_argument("cohomology: element leaves its bidegree bucket");
    v[size_t(it - basis.begin())] = c;
  }
  return v;
}

Dga::Elt Complex::from_coords(const std::vector<Dga::Mono>& basis,
                              const std::vector<Field::Elem>& v) const {
  Dga::Elt out;
  for (size_t i = 0; i < basis.size(); ++i)
    if (!K_->field().is_zero(v[i])) out.emplace(basis[i], v[i]);
  return out;
}

const DenseMat& Complex::d_matrix(int s, int64_t t) {
  auto key = std::make_pair(s, t);
  auto it = dmat_cache_.find(key);
  if (it != dmat_cache_.end()) return it->second;
  const auto& src = bucket(s, t);
  const auto& dst = bucket(s + 1, t);
  DenseMat M = DenseMat::zeros(K_->field(), dst.size(), src.size());
  for (size_t j = 0; j < src.size(); ++j) {
    Dga::Elt e;
    e.emplace(src[j], K_->field().one());
    auto col = to_coords(dst, K_->d(e));
    for (size_t i = 0; i < dst.size(); ++i) M.at(i, j) = col[i];
  }
  return dmat_cache_.emplace(key, std::move(M)).first->second;
}

const Complex::Space& Complex::cohomology(int s, int64_t t) {
  auto key = std::make_pair(s, t);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  Space sp;
  const auto& basis = bucket(s, t);
  if (!basis.empty()) {
    const DenseMat& D = d_matrix(s, t);
    DenseMat Z = kernel_basis(D);
    Eliminator elim(K_->field());
    if (s > 0) {
      const DenseMat& P = d_matrix(s - 1, t);
      for (size_t j = 0; j < P.cols; ++j) {
        std::vector<Field::Elem> col;
        for (size_t i = 0; i < P.rows; ++i) col.push_back(P.at_c(i, j));
        elim.insert(std::move(col));
      }
    }
    for (size_t j = 0; j < Z.cols; ++j) {
      std::vector<Field::Elem> col;
      for (size_t i = 0; i < Z.rows; ++i) col.push_back(Z.at_c(i, j));
      auto raw = col;
      if (elim.insert(std::move(col))) {
        sp.reps.push_back(from_coords(basis, raw));
        ++sp.dim;
      }
    }
  }
  return cache_.emplace(key, std::move(sp)).first->second;
}

std::vector<int64_t> Complex::poincare() {
  std::vector<int64_t> out(K_->num_gens() + 1, 0);
  for (const auto& [key, v] : buckets_) out[size_t(key.first)] += cohomology(key.first, key.second).dim;
  return out;
}

std::vector<int64_t> Complex::whole_dims() {
  // Recompute with the internal grading forgotten: one bucket per s.
  const Field& F = K_->field();
  uint32_t G = uint32_t(K_->num_gens());
  std::vector<std::vector<Dga::Mono>> by_s(G + 1);
  for (uint64_t m = 0; m < (uint64_t(1) << G); ++m)
    by_s[size_t(K_->coh_degree(Dga::Mono(m)))].push_back(Dga::Mono(m));

  auto make_d = [&](int s) {
    const auto& src = by_s[size_t(s)];
    const auto& dst = by_s[size_t(s) + 1];
    DenseMat M = DenseMat::zeros(F, dst.size(), src.size());
    for (size_t j = 0; j < src.size(); ++j) {
      Dga::Elt e;
      e.emplace(src[j], F.one());
      auto dx = K_->d(e);
      for (const auto& [mono, c] : dx) {
        auto it = std::lower_bound(dst.begin(), dst.end(), mono);
        M.at(size_t(it - dst.begin()), j) = c;
      }
    }
    return M;
  };

  std::vector<int64_t> out(G + 1, 0);
  size_t prev_rank = 0;
  for (uint32_t s = 0; s <= G; ++s) {
    size_t z = 0;
    size_t r = 0;
    if (s < G) {
      DenseMat D = make_d(int(s));
      r = rank(D);
      z = by_s[s].size() - r;
    } else {
      z = by_s[s].size();
    }
    out[s] = int64_t(z - prev_rank);
    prev_rank = r;
  }
  return out;
}

bool Complex::euler_ok() {
  std::map<int64_t, int64_t> chain_sum, coh_sum;
  for (const auto& [key, v] : buckets_) {
    int sgn = (key.first % 2 == 0) ? 1 : -1;
    chain_sum[key.second] += sgn * int64_t(v.size());
    coh_sum[key.second] += sgn * cohomology(key.first, key.second).dim;
  }
  for (const auto& [t, val] : chain_sum)
    if (val != coh_sum[t]) return false;
  for (const auto& [t, val] : coh_sum)
    if (val != chain_sum[t]) return false;
  return true;
}

Complex::ReduceResult Complex::reduce_to_basis(const Dga::Elt& x, int s, int64_t t) {
  ReduceResult res;
  for (const auto& [m, c] : x) {
    if (K_->coh_degree(m) != s || K_->internal_degree(m) != t) {
      res.error = "WRONG_BIDEGREE";
      return res;
    }
  }
  if (!(K_->d(x) == Dga::Elt{})) {
    res.error = "NOT_A_COCYCLE";
    return res;
  }
  const auto& basis = bucket(s, t);
  const auto& H = cohomology(s, t);
  const Field& F = K_->field();

  DenseMat span = DenseMat::zeros(F, basis.size(), H.reps.size());
  for (size_t j = 0; j < H.reps.size(); ++j) {
    auto col = to_coords(basis, H.reps[j]);
    for (size_t i = 0; i < basis.size(); ++i) span.at(i, j) = col[i];
  }
  const DenseMat* mod = s > 0 ? &d_matrix(s - 1, t) : nullptr;
  auto coords = coordinates_in_span(span, to_coords(basis, x), mod);
  if (!coords) {
    res.error = "NOT_IN_SPAN";
    return res;
  }
  res.ok = true;
  res.coords = std::move(*coords);
  return res;
}

int64_t Complex::class_filtration(const Dga::Elt& z, int s, int64_t t) {
  for (const auto& [m, c] : z)
    if (K_->coh_degree(m) != s || K_->internal_degree(m) != t)
      throw std::invalid_argument("filtration: element not in the stated bidegree");
  if (!(K_->d(z) == Dga::Elt{}))
    throw std::invalid_argument("filtration: element is not a cocycle");
  if (z.empty()) return 0;

  const auto& basis = bucket(s, t);
  const Field& F = K_->field();
  auto target = to_coords(basis, z);
  const DenseMat* mod = s > 0 ? &d_matrix(s - 1, t) : nullptr;

  // Boundaries are assigned weight zero.
  DenseMat none = DenseMat::zeros(F, basis.size(), 0);
  if (coordinates_in_span(none, target, mod)) return 0;

  std::set<int64_t> weights;
  for (auto m : basis) weights.insert(K_->ravenel_degree(m));
  for (int64_t r : weights) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < basis.size(); ++i)
      if (K_->ravenel_degree(basis[i]) <= r) idx.push_back(i);
    DenseMat sub = DenseMat::zeros(F, basis.size(), idx.size());
    for (size_t j = 0; j < idx.size(); ++j) sub.at(idx[j], j) = F.one();
    if (coordinates_in_span(sub, target, mod)) return r;
  }
  throw std::logic_error("filtration: cocycle not representable");  // unreachable
}

std::map<int64_t, int64_t> Complex::filtration_image_dims(int s, int64_t t) {
  const auto& basis = bucket(s, t);
  const Field& F = K_->field();
  const DenseMat& D = d_matrix(s, t);
  size_t prev_rank = 0, prev_cols = 0;
  const DenseMat* P = nullptr;
  if (s > 0) {
    P = &d_matrix(s - 1, t);
    prev_rank = rank(*P);
    prev_cols = P->cols;
  }

  std::set<int64_t> weights;
  for (auto m : basis) weights.insert(K_->ravenel_degree(m));
  std::map<int64_t, int64_t> out;
  for (int64_t r : weights) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < basis.size(); ++i)
      if (K_->ravenel_degree(basis[i]) <= r) idx.push_back(i);
    // dim (cocycles inside F_r) = |F_r| - rank(d restricted to F_r)
    DenseMat Dr = DenseMat::zeros(F, D.rows, idx.size());
    for (size_t j = 0; j < idx.size(); ++j)
      for (size_t i = 0; i < D.rows; ++i) Dr.at(i, j) = D.at_c(i, idx[j]);
    int64_t z_dim = int64_t(idx.size()) - int64_t(rank(Dr));
    // dim (boundaries inside F_r) = rank(P) + |F_r| - rank([P | e_{F_r}])
    int64_t b_dim = 0;
    if (P) {
      DenseMat cat = DenseMat::zeros(F, basis.size(), prev_cols + idx.size());
      for (size_t j = 0; j < prev_cols; ++j)
        for (size_t i = 0; i < basis.size(); ++i) cat.at(i, j) = P->at_c(i, j);
      for (size_t j = 0; j < idx.size(); ++j) cat.at(idx[j], prev_cols + j) = F.one();
      b_dim = int64_t(prev_rank) + int64_t(idx.size()) - int64_t(rank(cat));
    }
    out[r] = z_dim - b_dim;
  }
  return out;
}

}  // namespace liecoh
