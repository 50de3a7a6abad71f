#pragma once

// Code loops over V = GF(2)^d through their squaring, commutator and
// associator forms. Vectors of V are bit masks: bit i is the coordinate of
// the basis vector e_(i+1).

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "moufang/loop.hpp"

namespace moufang {

using Vec = std::uint32_t;

// A map GF(2)^d -> GF(2) with alpha(0) = 0, stored as a table of 2^d values.
class BooleanMap {
 public:
  explicit BooleanMap(int d);
  static BooleanMap from_table(int d, std::vector<std::uint8_t> values);

  int dim() const noexcept { return d_; }
  int operator()(Vec x) const { return values_[x]; }
  void set(Vec x, int value);
  const std::vector<std::uint8_t>& values() const noexcept { return values_; }
  friend bool operator==(const BooleanMap&, const BooleanMap&) = default;

 private:
  int d_;
  std::vector<std::uint8_t> values_;
};

// alpha_n(args) with n = args.size() >= 1, by the recurrence
//   alpha_n(u, v, w..) = alpha_(n-1)(u + v, w..) - alpha_(n-1)(u, w..) - alpha_(n-1)(v, w..).
int derived_form(const BooleanMap& alpha, std::span<const Vec> args);

// Largest n with alpha_n != 0; 0 for the zero map. Over GF(2) this is the
// degree of the algebraic normal form of alpha.
int combinatorial_degree(const BooleanMap& alpha);

// P(e_i), C(e_i, e_j) for i < j and A(e_i, e_j, e_k) for i < j < k, packed
// in that order (pairs and triples lexicographic) from bit 0 upwards.
struct PolarTriple {
  int d = 0;
  std::uint64_t bits = 0;

  static int size(int d) { return d + d * (d - 1) / 2 + d * (d - 1) * (d - 2) / 6; }
  static int p_index(int d, int i);
  static int c_index(int d, int i, int j);
  static int a_index(int d, int i, int j, int k);

  // Symmetric accessors; C and A vanish on repeated indices.
  int P(int i) const;
  int C(int i, int j) const;
  int A(int i, int j, int k) const;
  void set_P(int i, int v);
  void set_C(int i, int j, int v);
  void set_A(int i, int j, int k, int v);
  bool associator_zero() const;

  friend auto operator<=>(const PolarTriple&, const PolarTriple&) = default;
};

int eval_A(const PolarTriple& t, Vec x, Vec y, Vec z);
int eval_C(const PolarTriple& t, Vec x, Vec y);
int eval_P(const PolarTriple& t, Vec x);

// The full map P on V determined by the triple.
BooleanMap polar_map(const PolarTriple& t);
// The triple of a map of combinatorial degree at most 3 (InvalidArgument
// otherwise).
PolarTriple triple_of_map(const BooleanMap& p);

// Square matrix over GF(2); rows[i] is the image of e_i, so a vector x maps
// to the sum of rows[i] over the set bits of x.
struct Gf2Matrix {
  int d = 0;
  std::vector<Vec> rows;

  static Gf2Matrix identity(int d);
  Vec apply(Vec x) const;
  bool invertible() const;
  // Throws SingularMatrix.
  Gf2Matrix inverse() const;
  // (a * b).apply(x) == b.apply(a.apply(x))
  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;
};

// Generators of GL(d, 2): the transvection e_1 -> e_1 + e_2 and the cyclic
// shift e_i -> e_(i+1). Empty for d < 2.
std::vector<Gf2Matrix> gl_generators(int d);

// (P^M, C^M, A^M) with P^M(e_i) = P(M e_i) and likewise for C and A.
// Throws SingularMatrix.
PolarTriple transform_triple(const PolarTriple& t, const Gf2Matrix& m);

// One representative per GL(d, 2)-orbit of triples with A != 0, each the
// least triple (by packed value) of its orbit, in increasing order.
std::vector<PolarTriple> triple_orbit_representatives(int d);

// E(V, GF(2), f) for a cocycle f with the prescribed squares, commutators
// and associators, found by solving the corresponding linear system.
// Elements are numbered x*2 + a, so {0, 1} is the central fiber. Throws
// Unrealizable.
LoopTable realize_code_loop(const PolarTriple& t);

// The triple of Q with respect to the central subloop Z of order 2, using
// the least-first greedy basis of Q/Z. Throws NotCodeLoop.
PolarTriple triple_of_loop(const LoopTable& q, const SubloopSet& z);

// True iff Q has a central subloop of order 2 whose quotient is not an
// elementary abelian group, that is, Q also arises as a central extension
// of a non-elementary-abelian loop.
bool has_non_elementary_central_quotient(const LoopTable& q);

// "d=<d> P=<bits> C=<bits> A=<bits>", bits in packing order.
std::string format_triple(const PolarTriple& t);
// Throws ParseError.
PolarTriple parse_triple(const std::string& line);

}  // namespace moufang
