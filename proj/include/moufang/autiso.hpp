#pragma once

// Isomorphism invariants, isomorphism and isotopy tests, automorphism
// groups, and the reduction of Moufang cocycles modulo coboundaries and
// automorphisms.
//
// Isomorphisms are searched for by mapping a generating sequence of the
// source loop. Every element of the source is expressed as a product of
// earlier elements (a "program"), so the images of the generators determine
// the whole map; after each generator the partial map is checked to be an
// injective homomorphism on the subloop generated so far. Candidate images
// are restricted to elements carrying the same refined color.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "moufang/cocycles.hpp"
#include "moufang/loop.hpp"

namespace moufang {

using Permutation = std::vector<Element>;

struct Fingerprint {
  int order = 1;
  std::vector<int> element_orders;  // sorted; left-power orders, 0 if none
  int center_size = 1;
  bool commutative = true;
  bool associative = true;
  std::vector<int> cyclic_sizes;  // sorted |<x>|
  long long noncommuting_pairs = 0;
  long long nonassociative_triples = 0;
  std::vector<std::uint64_t> colors;  // sorted refined element colors

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const LoopTable& q);

// Isomorphism-invariant element labels obtained by iterated refinement of
// local invariants through the multiplication table.
std::vector<std::uint64_t> element_colors(const LoopTable& q);

struct SearchPlan {
  struct Step {
    Element element;
    Element left;
    Element right;
  };
  std::vector<Element> generators;
  // steps[i] defines the elements that become available once generator i is
  // mapped, each as a product of elements defined before it.
  std::vector<std::vector<Step>> steps;
  // Elements generated by generators[0..i], in definition order.
  std::vector<std::vector<Element>> prefix;
};

// Cached invariants of one loop, reused across many isomorphism tests.
class LoopProfile {
 public:
  explicit LoopProfile(LoopTable q);

  const LoopTable& loop() const noexcept { return loop_; }
  const Fingerprint& fingerprint() const noexcept { return fingerprint_; }
  const std::vector<std::uint64_t>& colors() const noexcept { return colors_; }
  const SearchPlan& plan() const noexcept { return plan_; }
  // Elements grouped by color, each group ascending.
  const std::vector<Element>& color_class(std::uint64_t color) const;

 private:
  LoopTable loop_;
  std::vector<std::uint64_t> colors_;
  Fingerprint fingerprint_;
  SearchPlan plan_;
  std::vector<std::pair<std::uint64_t, std::vector<Element>>> classes_;
};

// phi with phi(x)phi(y) == phi(xy), or nullopt.
std::optional<Permutation> are_isomorphic(const LoopProfile& a, const LoopProfile& b);
std::optional<Permutation> are_isomorphic(const LoopTable& a, const LoopTable& b);
bool is_isomorphism(const LoopTable& a, const LoopTable& b, const Permutation& phi);

class AutGroup {
 public:
  int degree() const noexcept { return n_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::uint64_t order() const noexcept { return order_; }
  // Base points of the stabilizer chain (a generating sequence of the loop).
  const std::vector<Element>& base() const noexcept { return base_; }
  // Visits every automorphism exactly once, as a product of transversal
  // elements; intended for small groups.
  void for_each(const std::function<void(const Permutation&)>& visit) const;

 private:
  friend AutGroup automorphism_group(const LoopProfile& q);
  int n_ = 1;
  std::vector<Element> base_;
  std::vector<Permutation> generators_;
  std::vector<std::vector<Permutation>> transversals_;
  std::uint64_t order_ = 1;
};

AutGroup automorphism_group(const LoopProfile& q);
AutGroup automorphism_group(const LoopTable& q);

// f^alpha (x, y) = f(alpha(x), alpha(y)).
Cocycle act_on_cocycle(const Cocycle& f, const Permutation& alpha);

// Representatives of the Aut(K)-orbits on Comp(K), where Aut(K) acts on
// Mcoc/Cob and Comp(K) is identified with that quotient by projecting along
// Cob. Comp is swept in increasing order of the coordinate index
// sum_j c_j p^j (coordinates in the echelon basis of Comp); the first
// unvisited vector of each orbit is its representative, so the zero cocycle
// always comes first. Throws ExplodedBudget if p^dim(Comp) > budget.
std::vector<Cocycle> representative_cocycles(const LoopTable& k, const CocycleSpaces& spaces, const AutGroup& aut,
                                             std::uint64_t budget = std::uint64_t{1} << 20);

// The principal isotope x o y = (x / b)(a \ y), relabeled by swapping its
// neutral element ab with 0.
LoopTable principal_isotope(const LoopTable& q, Element a, Element b);
bool are_isotopic(const LoopTable& a, const LoopTable& b);

}  // namespace moufang
