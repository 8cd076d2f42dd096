#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liecoh/field.hpp"

namespace liecoh {

// Dense row-major matrix over a Field.  All algorithms are exact Gaussian
// elimination; pivoting is deterministic (first nonzero entry scanning rows
// top to bottom), so every result is byte-stable across runs.
struct DenseMat {
  const Field* F = nullptr;
  size_t rows = 0, cols = 0;
  std::vector<Field::Elem> data;

  static DenseMat zeros(const Field& F, size_t r, size_t c);
  Field::Elem& at(size_t r, size_t c) { return data[r * cols + c]; }
  const Field::Elem& at_c(size_t r, size_t c) const { return data[r * cols + c]; }
};

// In-place reduced row echelon form; returns the pivot column indices in
// increasing order.
std::vector<size_t> rref(DenseMat& M);

size_t rank(DenseMat M);

// Columns form a basis of the right kernel {v : M v = 0}, ordered by the
// index of the free column that seeds each vector.
DenseMat kernel_basis(const DenseMat& M);

// Coordinate-list sparse matrix with the same kernel interface as DenseMat.
// Duplicate (row, col) entries accumulate additively.
struct SparseMat {
  const Field* F;
  size_t rows, cols;
  struct Entry {
    size_t r, c;
    Field::Elem v;
  };
  std::vector<Entry> entries;

  SparseMat(const Field& field, size_t r, size_t c) : F(&field), rows(r), cols(c) {}
  void add(size_t r, size_t c, Field::Elem v) { entries.push_back({r, c, std::move(v)}); }
};

// Sparse column-reduction kernel; agrees with the dense kernel up to basis.
DenseMat kernel_basis(const SparseMat& M);

// Coordinates of `target` in the span of the columns of `span`, computed in
// the quotient by the column span of `mod` (pass nullptr for no quotient).
// Missing the span is a structured result, not an exception: nullopt.
// When the spanning columns are dependent the answer is pinned by setting
// the free coordinates to zero, so it is deterministic.
std::optional<std::vector<Field::Elem>> coordinates_in_span(
    const DenseMat& span, const std::vector<Field::Elem>& target,
    const DenseMat* mod = nullptr);

}  // namespace liecoh
