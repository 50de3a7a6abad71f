#pragma once

#include "moufang/cocycles.hpp"
#include "moufang/loop.hpp"

namespace moufang {

struct ExtensionSpec {
  const LoopTable& base;
  const Cocycle& cocycle;
};

// E(K, GF(p), f): pairs (x, a) numbered x*p + a, so (1, 0) is the neutral
// element and {(1, a)} = {0, .., p-1} is the central fiber. The product is
// (x, a)(y, b) = (xy, a + b + f(x, y)).
LoopTable central_extension(const LoopTable& base, const Cocycle& f);
inline LoopTable central_extension(const ExtensionSpec& spec) { return central_extension(spec.base, spec.cocycle); }

// The fiber {(1, a)} of an extension of a base of the given order.
SubloopSet extension_fiber(int base_order, int p);

// True iff g - f is a coboundary; in that case the extensions are isomorphic.
bool equivalent_extension_check(const Subspace& cob, const Cocycle& f, const Cocycle& g);
bool equivalent_extension_check(const LoopTable& base, const Cocycle& f, const Cocycle& g);

// At most two-generated bases only have associative central extensions.
bool is_prunable_base(const LoopTable& base);

}  // namespace moufang
