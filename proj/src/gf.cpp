#include "moufang/gf.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace moufang {

namespace {

int words_for(int len) { return (len + 63) / 64; }

int normalize(int value, int p) { return ((value % p) + p) % p; }

void check_prime(int p) {
  if (p != 2 && p != 3) throw Error(ErrorKind::InvalidArgument, "only GF(2) and GF(3) are supported");
}

}  // namespace

FpVector::FpVector(int p, int len) : p_(p), len_(len) {
  check_prime(p);
  if (len < 0) throw Error(ErrorKind::InvalidArgument, "negative vector length");
  ones_.assign(words_for(len), 0);
  if (p == 3) twos_.assign(words_for(len), 0);
}

void FpVector::set(int i, int value) {
  value = normalize(value, p_);
  const auto w = static_cast<std::size_t>(i) >> 6;
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  ones_[w] &= ~bit;
  if (p_ == 3) twos_[w] &= ~bit;
  if (value == 1) ones_[w] |= bit;
  if (value == 2) twos_[w] |= bit;
}

void FpVector::add_at(int i, int value) { set(i, get(i) + value); }

bool FpVector::is_zero() const noexcept {
  for (std::size_t w = 0; w < ones_.size(); ++w) {
    if (ones_[w] != 0 || (p_ == 3 && twos_[w] != 0)) return false;
  }
  return true;
}

int FpVector::first_nonzero() const noexcept {
  for (std::size_t w = 0; w < ones_.size(); ++w) {
    const std::uint64_t bits = ones_[w] | (p_ == 3 ? twos_[w] : 0);
    if (bits != 0) return static_cast<int>(w * 64 + std::countr_zero(bits));
  }
  return -1;
}

int FpVector::weight() const noexcept {
  int total = 0;
  for (std::size_t w = 0; w < ones_.size(); ++w) {
    total += std::popcount(ones_[w] | (p_ == 3 ? twos_[w] : 0));
  }
  return total;
}

void FpVector::add_scaled(const FpVector& other, int c) {
  if (other.p_ != p_ || other.len_ != len_) throw Error(ErrorKind::InvalidArgument, "vector shape mismatch");
  c = normalize(c, p_);
  if (c == 0) return;
  if (p_ == 2) {
    for (std::size_t w = 0; w < ones_.size(); ++w) ones_[w] ^= other.ones_[w];
    return;
  }
  const auto& b1s = c == 1 ? other.ones_ : other.twos_;
  const auto& b2s = c == 1 ? other.twos_ : other.ones_;
  for (std::size_t w = 0; w < ones_.size(); ++w) {
    const std::uint64_t a1 = ones_[w];
    const std::uint64_t a2 = twos_[w];
    const std::uint64_t b1 = b1s[w];
    const std::uint64_t b2 = b2s[w];
    const std::uint64_t a0 = ~(a1 | a2);
    const std::uint64_t b0 = ~(b1 | b2);
    ones_[w] = (a0 & b1) | (a1 & b0) | (a2 & b2);
    twos_[w] = (a0 & b2) | (a2 & b0) | (a1 & b1);
  }
}

FpVector& FpVector::operator+=(const FpVector& other) {
  add_scaled(other, 1);
  return *this;
}

FpVector& FpVector::operator-=(const FpVector& other) {
  add_scaled(other, p_ - 1);
  return *this;
}

FpVector FpVector::scaled(int c) const {
  c = normalize(c, p_);
  if (c == 0) return FpVector(p_, len_);
  FpVector out = *this;
  if (c == 2) std::swap(out.ones_, out.twos_);
  return out;
}

std::strong_ordering operator<=>(const FpVector& a, const FpVector& b) {
  if (auto cmp = a.p_ <=> b.p_; cmp != 0) return cmp;
  if (auto cmp = a.len_ <=> b.len_; cmp != 0) return cmp;
  for (std::size_t w = 0; w < a.ones_.size(); ++w) {
    std::uint64_t diff = a.ones_[w] ^ b.ones_[w];
    if (a.p_ == 3) diff |= a.twos_[w] ^ b.twos_[w];
    if (diff != 0) {
      const int i = static_cast<int>(w * 64 + std::countr_zero(diff));
      return a.get(i) <=> b.get(i);
    }
  }
  return std::strong_ordering::equal;
}

std::vector<int> FpVector::entries() const {
  std::vector<int> out(len_);
  for (int i = 0; i < len_; ++i) out[i] = get(i);
  return out;
}

FpVector FpVector::from_entries(int p, std::span<const int> values) {
  FpVector v(p, static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v.set(static_cast<int>(i), values[i]);
  return v;
}

int dot(const FpVector& a, const FpVector& b) {
  const auto a1 = a.ones();
  const auto b1 = b.ones();
  if (a.prime() == 2) {
    int parity = 0;
    for (std::size_t w = 0; w < a1.size(); ++w) parity ^= std::popcount(a1[w] & b1[w]) & 1;
    return parity;
  }
  const auto a2 = a.twos();
  const auto b2 = b.twos();
  int total = 0;
  for (std::size_t w = 0; w < a1.size(); ++w) {
    total += std::popcount(a1[w] & b1[w]) + std::popcount(a2[w] & b2[w]);
    total += 2 * (std::popcount(a1[w] & b2[w]) + std::popcount(a2[w] & b1[w]));
  }
  return total % 3;
}

FpMatrix::FpMatrix(int p, int rows, int cols) : p_(p), cols_(cols), rows_(rows, FpVector(p, cols)) {}

FpMatrix FpMatrix::from_rows(int p, const std::vector<std::vector<int>>& rows) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  FpMatrix m(p, static_cast<int>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw Error(ErrorKind::InvalidArgument, "ragged matrix");
    m.rows_[r] = FpVector::from_entries(p, rows[r]);
  }
  return m;
}

FpMatrix FpMatrix::identity(int p, int size) {
  FpMatrix m(p, size, size);
  for (int i = 0; i < size; ++i) m.set(i, i, 1);
  return m;
}

FpVector FpMatrix::apply(const FpVector& v) const {
  if (v.size() != cols_ || v.prime() != p_) throw Error(ErrorKind::InvalidArgument, "matrix/vector mismatch");
  FpVector out(p_, rows());
  for (int r = 0; r < rows(); ++r) out.set(r, dot(rows_[r], v));
  return out;
}

Subspace::Subspace(int p, int ambient) : p_(p), ambient_(ambient) { check_prime(p); }

Subspace Subspace::span(int p, int ambient, std::span<const FpVector> vectors) {
  RowReducer reducer(p, ambient);
  for (const FpVector& v : vectors) reducer.add_row(v);
  return reducer.row_space();
}

FpVector Subspace::reduce(FpVector v) const {
  if (v.prime() != p_ || v.size() != ambient_) throw Error(ErrorKind::InvalidArgument, "vector shape mismatch");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const int k = v.get(pivots_[i]);
    if (k != 0) v.add_scaled(basis_[i], p_ - k);
  }
  return v;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const FpVector& b) { return contains(b); });
}

std::optional<std::vector<int>> Subspace::coordinates(const FpVector& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<int> coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) coords[i] = v.get(pivots_[i]);
  return coords;
}

FpVector Subspace::combination(std::span<const int> coords) const {
  FpVector out(p_, ambient_);
  for (std::size_t i = 0; i < basis_.size() && i < coords.size(); ++i) out.add_scaled(basis_[i], coords[i]);
  return out;
}

RowReducer::RowReducer(int p, int cols)
    : p_(p), cols_(cols), pivot_row_(cols, -1), pivot_mask_(words_for(cols), 0) {
  check_prime(p);
}

FpVector RowReducer::reduce(FpVector v) const {
  if (v.prime() != p_ || v.size() != cols_) throw Error(ErrorKind::InvalidArgument, "row shape mismatch");
  // Stored rows vanish on each other's pivots, so the pivot entries of v
  // seen in this scan are not disturbed by the row operations.
  for (std::size_t w = 0; w < pivot_mask_.size(); ++w) {
    std::uint64_t bits = v.ones()[w];
    if (p_ == 3) bits |= v.twos()[w];
    bits &= pivot_mask_[w];
    while (bits != 0) {
      const int c = static_cast<int>(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
      v.add_scaled(rows_[pivot_row_[c]], p_ - v.get(c));
    }
  }
  return v;
}

bool RowReducer::add_row(FpVector v) {
  v = reduce(std::move(v));
  const int c = v.first_nonzero();
  if (c < 0) return false;
  if (v.get(c) == 2) v = v.scaled(2);
  for (FpVector& row : rows_) {
    const int k = row.get(c);
    if (k != 0) row.add_scaled(v, p_ - k);
  }
  pivot_row_[c] = static_cast<int>(rows_.size());
  pivot_col_.push_back(c);
  pivot_mask_[c >> 6] |= std::uint64_t{1} << (c & 63);
  rows_.push_back(std::move(v));
  return true;
}

Subspace RowReducer::row_space() const {
  Subspace out(p_, cols_);
  std::vector<int> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pivot_col_[a] < pivot_col_[b]; });
  for (int idx : order) {
    out.basis_.push_back(rows_[idx]);
    out.pivots_.push_back(pivot_col_[idx]);
  }
  return out;
}

Subspace RowReducer::null_space() const {
  std::vector<FpVector> vectors;
  for (int f = 0; f < cols_; ++f) {
    if (pivot_row_[f] >= 0) continue;
    FpVector v(p_, cols_);
    v.set(f, 1);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int k = rows_[r].get(f);
      if (k != 0) v.set(pivot_col_[r], p_ - k);
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(p_, cols_, vectors);
}

LinearSystem::LinearSystem(int p, int unknowns) : unknowns_(unknowns), reducer_(p, unknowns + 1) {}

void LinearSystem::add_equation(std::span<const std::pair<int, int>> terms, int rhs) {
  FpVector row(reducer_.prime(), unknowns_ + 1);
  for (const auto& [col, coef] : terms) row.add_at(col, coef);
  row.set(unknowns_, rhs);
  reducer_.add_row(std::move(row));
  if (reducer_.is_pivot(unknowns_)) consistent_ = false;
}

std::optional<FpVector> LinearSystem::solve() const {
  if (!consistent_) return std::nullopt;
  FpVector x(reducer_.prime(), unknowns_);
  for (int c = 0; c < unknowns_; ++c) {
    if (reducer_.is_pivot(c)) x.set(c, reducer_.pivot_row(c).get(unknowns_));
  }
  return x;
}

Subspace nullspace(const FpMatrix& m) {
  RowReducer reducer(m.prime(), m.cols());
  for (int r = 0; r < m.rows(); ++r) reducer.add_row(m.row(r));
  return reducer.null_space();
}

int rank(const FpMatrix& m) {
  RowReducer reducer(m.prime(), m.cols());
  for (int r = 0; r < m.rows(); ++r) reducer.add_row(m.row(r));
  return reducer.rank();
}

Subspace complement(const Subspace& sub, const Subspace& whole) {
  if (sub.prime() != whole.prime() || sub.ambient_dim() != whole.ambient_dim()) {
    throw Error(ErrorKind::InvalidArgument, "subspaces live in different spaces");
  }
  if (!whole.contains(sub)) throw Error(ErrorKind::NotSubspace, "sub is not contained in whole");
  RowReducer reducer(sub.prime(), sub.ambient_dim());
  for (const FpVector& b : sub.basis()) reducer.add_row(b);
  std::vector<FpVector> chosen;
  for (const FpVector& w : whole.basis()) {
    if (reducer.add_row(w)) chosen.push_back(w);
  }
  return Subspace::span(sub.prime(), sub.ambient_dim(), chosen);
}

DirectSumDecomposer::DirectSumDecomposer(const Subspace& a, const Subspace& b)
    : a_(a), b_(b), reducer_(a.prime(), a.ambient_dim() + a.dim() + b.dim()) {
  if (a.prime() != b.prime() || a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::InvalidArgument, "subspaces live in different spaces");
  }
  const int n = a.ambient_dim();
  const int p = a.prime();
  int index = 0;
  auto feed = [&](const FpVector& v) {
    FpVector row(p, reducer_.cols());
    for (int i = 0; i < n; ++i) row.set(i, v.get(i));
    row.set(n + index, 1);
    ++index;
    reducer_.add_row(std::move(row));
  };
  for (const FpVector& v : a.basis()) feed(v);
  for (const FpVector& v : b.basis()) feed(v);
  for (int c = n; c < reducer_.cols(); ++c) {
    if (reducer_.is_pivot(c)) throw Error(ErrorKind::InvalidArgument, "subspaces intersect nontrivially");
  }
}

std::vector<int> DirectSumDecomposer::coordinates(const FpVector& v) const {
  const int n = a_.ambient_dim();
  const int p = a_.prime();
  if (v.size() != n || v.prime() != p) throw Error(ErrorKind::InvalidArgument, "vector shape mismatch");
  FpVector row(p, reducer_.cols());
  for (int i = 0; i < n; ++i) row.set(i, v.get(i));
  row = reducer_.reduce(std::move(row));
  for (int i = 0; i < n; ++i) {
    if (row.get(i) != 0) throw Error(ErrorKind::NotInSum, "vector lies outside A (+) B");
  }
  std::vector<int> coords(a_.dim() + b_.dim());
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = normalize(-row.get(n + static_cast<int>(i)), p);
  return coords;
}

std::pair<FpVector, FpVector> DirectSumDecomposer::split(const FpVector& v) const {
  const std::vector<int> coords = coordinates(v);
  const auto ra = static_cast<std::size_t>(a_.dim());
  FpVector a = a_.combination(std::span<const int>(coords).first(ra));
  FpVector b = b_.combination(std::span<const int>(coords).subspan(ra));
  return {std::move(a), std::move(b)};
}

std::pair<FpVector, FpVector> decompose(const FpVector& v, const Subspace& a, const Subspace& b) {
  return DirectSumDecomposer(a, b).split(v);
}

}  // namespace moufang
