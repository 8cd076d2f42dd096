#include "liecoh/linalg.hpp"

#include <map>
#include <stdexcept>

namespace liecoh {

DenseMat DenseMat::zeros(const Field& F, size_t r, size_t c) {
  DenseMat M;
  M.F = &F;
  M.rows = r;
  M.cols = c;
  M.data.assign(r * c, F.zero());
  return M;
}

std::vector<size_t> rref(DenseMat& M) {
  const Field& F = *M.F;
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < M.cols && row < M.rows; ++col) {
    size_t sel = row;
    while (sel < M.rows && F.is_zero(M.at(sel, col))) ++sel;
    if (sel == M.rows) continue;
    if (sel != row)
      for (size_t j = 0; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(row, j));
    auto inv = F.inv(M.at(row, col));
    for (size_t j = col; j < M.cols; ++j) M.at(row, j) = F.mul(M.at(row, j), inv);
    for (size_t i = 0; i < M.rows; ++i) {
      if (i == row || F.is_zero(M.at(i, col))) continue;
      auto factor = M.at(i, col);
      for (size_t j = col; j < M.cols; ++j)
        M.at(i, j) = F.sub(M.at(i, j), F.mul(factor, M.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t rank(DenseMat M) { return rref(M).size(); }

DenseMat kernel_basis(const DenseMat& M) {
  const Field& F = *M.F;
  DenseMat R = M;
  auto pivots = rref(R);
  std::vector<bool> is_pivot(M.cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < M.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  DenseMat K = DenseMat::zeros(F, M.cols, free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    size_t fc = free_cols[k];
    K.at(fc, k) = F.one();
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      K.at(pivots[pr], k) = F.neg(R.at(pr, fc));
  }
  return K;
}

DenseMat kernel_basis(const SparseMat& M) {
  const Field& F = *M.F;
  using Col = std::map<size_t, Field::Elem>;  // row index -> value

  // Assemble columns, accumulating duplicates.
  std::vector<Col> cols(M.cols);
  for (const auto& e : M.entries) {
    if (e.r >= M.rows || e.c >= M.cols) throw std::out_of_range("sparse entry out of range");
    auto it = cols[e.c].find(e.r);
    if (it == cols[e.c].end()) {
      if (!F.is_zero(e.v)) cols[e.c].emplace(e.r, e.v);
    } else {
      it->second = F.add(it->second, e.v);
      if (F.is_zero(it->second)) cols[e.c].erase(it);
    }
  }

  // Left-to-right column reduction carrying a shadow copy of the identity:
  // when a column cancels to zero its shadow is a kernel vector.
  struct Pivot {
    size_t row;
    Col col;     // normalized column, leading entry 1 at `row`
    Col shadow;  // combination of original columns producing `col`
  };
  std::vector<Pivot> pivots;
  std::vector<Col> kernel_cols;

  auto axpy = [&](Col& dst, const Field::Elem& c, const Col& src) {
    for (const auto& [r, v] : src) {
      auto it = dst.find(r);
      auto add = F.mul(c, v);
      if (it == dst.end()) {
        if (!F.is_zero(add)) dst.emplace(r, add);
      } else {
        it->second = F.add(it->second, add);
        if (F.is_zero(it->second)) dst.erase(it);
      }
    }
  };

  for (size_t j = 0; j < M.cols; ++j) {
    Col cur = std::move(cols[j]);
    Col shadow;
    shadow.emplace(j, F.one());
    for (const auto& pv : pivots) {
      auto it = cur.find(pv.row);
      if (it == cur.end()) continue;
      auto factor = F.neg(it->second);
      axpy(cur, factor, pv.col);
      axpy(shadow, factor, pv.shadow);
    }
    if (cur.empty()) {
      kernel_cols.push_back(std::move(shadow));
      continue;
    }
    size_t prow = cur.begin()->first;
    auto inv = F.inv(cur.begin()->second);
    Col ncol, nshadow;
    for (auto& [r, v] : cur) ncol.emplace(r, F.mul(v, inv));
    for (auto& [r, v] : shadow) nshadow.emplace(r, F.mul(v, inv));
    pivots.push_back({prow, std::move(ncol), std::move(nshadow)});
  }

  DenseMat K = DenseMat::zeros(F, M.cols, kernel_cols.size());
  for (size_t k = 0; k < kernel_cols.size(); ++k)
    for (const auto& [r, v] : kernel_cols[k]) K.at(r, k) = v;
  return K;
}

std::optional<std::vector<Field::Elem>> coordinates_in_span(
    const DenseMat& span, const std::vector<Field::Elem>& target,
    const DenseMat* mod) {
  const Field& F = *span.F;
  size_t mc = mod ? mod->cols : 0;
  if (target.size() != span.rows) throw std::invalid_argument("target length mismatch");
  if (mod && mod->rows != span.rows) throw std::invalid_argument("quotient row mismatch");

  DenseMat A = DenseMat::zeros(F, span.rows, mc + span.cols + 1);
  for (size_t i = 0; i < span.rows; ++i) {
    for (size_t j = 0; j < mc; ++j) A.at(i, j) = mod->at_c(i, j);
    for (size_t j = 0; j < span.cols; ++j) A.at(i, mc + j) = span.at_c(i, j);
    A.at(i, mc + span.cols) = target[i];
  }
  auto pivots = rref(A);
  size_t last = mc + span.cols;
  for (size_t c : pivots)
    if (c == last) return std::nullopt;

  std::vector<Field::Elem> x(mc + span.cols, F.zero());
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = A.at(k, last);
  return std::vector<Field::Elem>(x.begin() + long(mc), x.end());
}

}  // namespace liecoh
