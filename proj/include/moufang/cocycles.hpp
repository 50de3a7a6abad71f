#pragma once

// Cocycles K x K -> GF(p) as vectors of GF(p)^(|K|^2), and the subspaces
// of Moufang cocycles, coboundaries and a complement of the latter.

#include <span>
#include <vector>

#include "moufang/gf.hpp"
#include "moufang/loop.hpp"

namespace moufang {

// Fixed bijection K x K -> 0..n^2-1, (x, y) -> x*n + y.
struct PairIndexer {
  int n = 1;
  int operator()(int x, int y) const noexcept { return x * n + y; }
  int size() const noexcept { return n * n; }
};

class Cocycle {
 public:
  Cocycle(int p, int base_order);
  Cocycle(int base_order, FpVector values);

  int prime() const noexcept { return values_.prime(); }
  int base_order() const noexcept { return index_.n; }
  int operator()(int x, int y) const { return values_.get(index_(x, y)); }
  void set(int x, int y, int v) { values_.set(index_(x, y), v); }
  const FpVector& vector() const noexcept { return values_; }
  // f(1, x) == f(x, 1) == 0 for all x.
  bool is_normalized() const;

  Cocycle& operator+=(const Cocycle& o);
  Cocycle& operator-=(const Cocycle& o);
  friend Cocycle operator+(Cocycle a, const Cocycle& b) { return a += b; }
  friend Cocycle operator-(Cocycle a, const Cocycle& b) { return a -= b; }
  friend bool operator==(const Cocycle& a, const Cocycle& b) { return a.values_ == b.values_; }

 private:
  PairIndexer index_;
  FpVector values_;
};

struct CocycleSpaces {
  Subspace mcoc;
  Subspace cob;
  Subspace comp;
};

// delta tau (x, y) = tau(xy) - tau(x) - tau(y); tau[0] must be 0.
Cocycle coboundary_of(const LoopTable& k, int p, std::span<const int> tau);
Subspace coboundary_space(const LoopTable& k, int p);

struct McocOptions {
  int block_rows = 4096;
};
// Solutions of the normalization equations together with the linearized
// Moufang cocycle identity
//   f(xy, zx) + f(x, y) + f(z, x) - f(x, (yz)x) - f(yz, x) - f(y, z) = 0.
Subspace moufang_cocycle_space(const LoopTable& k, int p, McocOptions options = {});
// Normalized f with f(xy, z) + f(x, y) = f(x, yz) + f(y, z).
Subspace group_cocycle_space(const LoopTable& k, int p);

// Throws CoboundaryNotInMcoc if some coboundary fails the Moufang system.
CocycleSpaces build_spaces(const LoopTable& k, int p);

bool is_moufang_cocycle(const LoopTable& k, const Cocycle& f);
bool is_group_cocycle(const LoopTable& k, const Cocycle& f);

struct ExtractedExtension {
  LoopTable base;
  Cocycle cocycle;
  std::vector<Element> coset_of;  // element of Q -> element of base
  Element fiber_generator;        // z with z^a <-> a in GF(p)
};

// Recovers K = Q/Z and a cocycle f with E(K, GF(p), f) isomorphic to Q,
// using the least element of each coset as section and the least
// nonidentity element of Z as the generator identified with 1 in GF(p).
ExtractedExtension cocycle_from_extension(const LoopTable& q, const SubloopSet& z);

}  // namespace moufang
