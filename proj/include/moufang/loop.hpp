#pragma once

// Finite loops stored as Cayley tables.
//
// Internally elements are 0-based and element 0 is the neutral element; the
// text formats and the CLI use the conventional 1-based numbering with 1
// neutral. Orders are limited to 256 so a table cell fits in one byte.

#include <bitset>
#include <cstdint>
#include <span>
#include <vector>

#include "moufang/error.hpp"

namespace moufang {

using Element = std::uint8_t;
inline constexpr int kMaxOrder = 256;
using ElementSet = std::bitset<kMaxOrder>;

class LoopTable {
 public:
  // The trivial loop.
  LoopTable();
  // Validates: cells is an n*n row-major table over 0..n-1 with 0 neutral.
  LoopTable(int n, std::vector<Element> cells);

  int order() const noexcept { return n_; }
  Element mul(Element x, Element y) const noexcept { return cells_[x * n_ + y]; }
  // The unique x with a*x == b.
  Element ldiv(Element a, Element b) const noexcept { return ldiv_[a * n_ + b]; }
  // The unique y with y*a == b.
  Element rdiv(Element b, Element a) const noexcept { return rdiv_[a * n_ + b]; }
  std::span<const Element> cells() const noexcept { return cells_; }

  friend bool operator==(const LoopTable& a, const LoopTable& b) { return a.cells_ == b.cells_; }

 private:
  int n_ = 1;
  std::vector<Element> cells_;
  std::vector<Element> ldiv_;
  std::vector<Element> rdiv_;
};

// A subset of a loop's elements; SubloopSet values returned by the
// operations below always contain 0 and are closed under the product.
struct SubloopSet {
  int n = 1;
  ElementSet members;

  int size() const { return static_cast<int>(members.count()); }
  bool contains(Element x) const { return members.test(x); }
  std::vector<Element> elements() const;
  friend bool operator==(const SubloopSet&, const SubloopSet&) = default;
};

struct Quotient {
  LoopTable loop;
  std::vector<Element> coset_of;  // element of Q -> coset index in Q/S
};

// Builds a LoopTable from a 1-based table, reporting NotSquare,
// NotQuasigroup or NoNeutral.
LoopTable validate_loop(const std::vector<std::vector<int>>& one_based);
std::vector<std::vector<int>> to_one_based(const LoopTable& q);

bool is_moufang(const LoopTable& q);
bool is_associative(const LoopTable& q);
bool is_commutative(const LoopTable& q);

SubloopSet center(const LoopTable& q);
SubloopSet subloop_closure(const LoopTable& q, std::span<const Element> seed);
// Closure of an existing subloop together with extra elements.
SubloopSet subloop_closure(const LoopTable& q, const SubloopSet& base, std::span<const Element> extra);

// Size of a smallest generating set. With limit >= 0 the search stops early
// and returns limit + 1 once it is known that more than limit generators are
// needed.
int min_generators(const LoopTable& q, int limit = -1);

bool is_normal(const LoopTable& q, const SubloopSet& s);
Quotient quotient_loop(const LoopTable& q, const SubloopSet& s);

// Order of x; throws NotPowerAssociative if left and right powers disagree.
int element_order(const LoopTable& q, Element x);
std::vector<int> element_orders(const LoopTable& q);

// Standard constructions.
LoopTable cyclic_group(int n);
LoopTable elementary_abelian(int p, int k);
LoopTable direct_product(const LoopTable& a, const LoopTable& b);
// Relabels q by perm: the result has perm[x]*perm[y] == perm[x*y];
// perm must fix 0.
LoopTable relabel(const LoopTable& q, std::span<const Element> perm);
// Exponent k with p^k == n, or -1.
int prime_power_exponent(int n, int p);

}  // namespace moufang
