#pragma once

// Dense exact linear algebra over GF(2) and GF(3).
//
// Vectors are bit-sliced: one plane holds the positions equal to 1 and, for
// p = 3, a second plane holds the positions equal to 2. GF(2) arithmetic is
// plain XOR; GF(3) addition is a handful of word operations per 64 entries.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "moufang/error.hpp"

namespace moufang {

class FpVector {
 public:
  FpVector() = default;
  FpVector(int p, int len);

  int prime() const noexcept { return p_; }
  int size() const noexcept { return len_; }

  int get(int i) const noexcept {
    const auto w = static_cast<std::size_t>(i) >> 6;
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (ones_[w] & bit) return 1;
    if (p_ == 3 && (twos_[w] & bit)) return 2;
    return 0;
  }
  void set(int i, int value);
  // this[i] += value (mod p)
  void add_at(int i, int value);

  bool is_zero() const noexcept;
  int first_nonzero() const noexcept;  // -1 for the zero vector
  int weight() const noexcept;

  // this += c * other
  void add_scaled(const FpVector& other, int c);
  FpVector& operator+=(const FpVector& other);
  FpVector& operator-=(const FpVector& other);
  FpVector scaled(int c) const;
  friend FpVector operator+(FpVector a, const FpVector& b) { return a += b; }
  friend FpVector operator-(FpVector a, const FpVector& b) { return a -= b; }

  friend bool operator==(const FpVector& a, const FpVector& b) {
    return a.p_ == b.p_ && a.len_ == b.len_ && a.ones_ == b.ones_ && a.twos_ == b.twos_;
  }
  // Lexicographic by entries.
  friend std::strong_ordering operator<=>(const FpVector& a, const FpVector& b);

  std::vector<int> entries() const;
  static FpVector from_entries(int p, std::span<const int> values);

  // Raw planes, for bulk scans.
  std::span<const std::uint64_t> ones() const noexcept { return ones_; }
  std::span<const std::uint64_t> twos() const noexcept { return twos_; }

 private:
  int p_ = 2;
  int len_ = 0;
  std::vector<std::uint64_t> ones_;
  std::vector<std::uint64_t> twos_;
};

int dot(const FpVector& a, const FpVector& b);

class FpMatrix {
 public:
  FpMatrix(int p, int rows, int cols);
  static FpMatrix from_rows(int p, const std::vector<std::vector<int>>& rows);
  static FpMatrix identity(int p, int size);

  int prime() const noexcept { return p_; }
  int rows() const noexcept { return static_cast<int>(rows_.size()); }
  int cols() const noexcept { return cols_; }
  const FpVector& row(int r) const { return rows_[r]; }
  FpVector& row(int r) { return rows_[r]; }
  int get(int r, int c) const { return rows_[r].get(c); }
  void set(int r, int c, int v) { rows_[r].set(c, v); }
  FpVector apply(const FpVector& v) const;

 private:
  int p_;
  int cols_;
  std::vector<FpVector> rows_;
};

// A subspace of GF(p)^ambient, stored as a basis in reduced row-echelon
// form with strictly increasing pivots.
class Subspace {
 public:
  Subspace(int p, int ambient);
  // Span of arbitrary vectors.
  static Subspace span(int p, int ambient, std::span<const FpVector> vectors);

  int prime() const noexcept { return p_; }
  int ambient_dim() const noexcept { return ambient_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<FpVector>& basis() const noexcept { return basis_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  FpVector reduce(FpVector v) const;
  bool contains(const FpVector& v) const { return reduce(v).is_zero(); }
  bool contains(const Subspace& other) const;
  // Coordinates of v with respect to the echelon basis; nullopt if v is not
  // in the subspace.
  std::optional<std::vector<int>> coordinates(const FpVector& v) const;
  FpVector combination(std::span<const int> coords) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.p_ == b.p_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  friend class RowReducer;
  int p_;
  int ambient_;
  std::vector<FpVector> basis_;
  std::vector<int> pivots_;
};

// Incremental Gauss-Jordan elimination. Rows are fed one at a time; the
// stored rows stay in reduced echelon form, so reducing a sparse incoming
// row costs one row operation per nonzero pivot entry.
class RowReducer {
 public:
  RowReducer(int p, int cols);

  int prime() const noexcept { return p_; }
  int cols() const noexcept { return cols_; }
  int rank() const noexcept { return static_cast<int>(rows_.size()); }

  // Returns true if v was independent of the rows already present.
  bool add_row(FpVector v);
  FpVector reduce(FpVector v) const;
  bool is_pivot(int col) const { return pivot_row_[col] >= 0; }
  // Stored row whose pivot is col; col must be a pivot.
  const FpVector& pivot_row(int col) const { return rows_[pivot_row_[col]]; }

  Subspace row_space() const;
  // Solutions of row . x = 0 for every stored row.
  Subspace null_space() const;

 private:
  int p_;
  int cols_;
  std::vector<FpVector> rows_;
  std::vector<int> pivot_row_;
  std::vector<int> pivot_col_;
  std::vector<std::uint64_t> pivot_mask_;
};

// Streaming builder for an inhomogeneous system A x = b.
class LinearSystem {
 public:
  LinearSystem(int p, int unknowns);
  void add_equation(std::span<const std::pair<int, int>> terms, int rhs);
  int unknowns() const noexcept { return unknowns_; }
  bool consistent() const noexcept { return consistent_; }
  // Particular solution with every free variable set to 0.
  std::optional<FpVector> solve() const;

 private:
  int unknowns_;
  bool consistent_ = true;
  RowReducer reducer_;
};

Subspace nullspace(const FpMatrix& m);
int rank(const FpMatrix& m);

// A subspace C with sub (+) C == whole, obtained by greedily extending the
// echelon basis of sub with the basis vectors of whole. Throws NotSubspace
// if sub is not contained in whole.
Subspace complement(const Subspace& sub, const Subspace& whole);

// Splits vectors of A (+) B into their components. The constructor throws
// InvalidArgument if A and B intersect nontrivially.
class DirectSumDecomposer {
 public:
  DirectSumDecomposer(const Subspace& a, const Subspace& b);

  // Coefficients (a-part then b-part) with respect to the echelon bases of
  // A and B; throws NotInSum.
  std::vector<int> coordinates(const FpVector& v) const;
  std::pair<FpVector, FpVector> split(const FpVector& v) const;

 private:
  Subspace a_;
  Subspace b_;
  RowReducer reducer_;
};

std::pair<FpVector, FpVector> decompose(const FpVector& v, const Subspace& a, const Subspace& b);

}  // namespace moufang
