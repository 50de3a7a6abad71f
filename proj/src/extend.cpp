#include "moufang/extend.hpp"

namespace moufang {

LoopTable central_extension(const LoopTable& base, const Cocycle& f) {
  const int n = base.order();
  const int p = f.prime();
  if (f.base_order() != n) throw Error(ErrorKind::InvalidArgument, "cocycle does not match the base loop");
  if (!f.is_normalized()) throw Error(ErrorKind::CocycleNotNormalized, "f(1,x) and f(x,1) must vanish");
  const int order = n * p;
  if (order > kMaxOrder) throw Error(ErrorKind::InvalidArgument, "extension order exceeds 256");
  std::vector<Element> cells(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int xy = base.mul(x, y);
      const int twist = f(x, y);
      for (int a = 0; a < p; ++a) {
        for (int b = 0; b < p; ++b) {
          cells[(x * p + a) * order + y * p + b] = static_cast<Element>(xy * p + (a + b + twist) % p);
        }
      }
    }
  }
  return LoopTable(order, std::move(cells));
}

SubloopSet extension_fiber(int base_order, int p) {
  SubloopSet fiber{base_order * p, {}};
  for (int a = 0; a < p; ++a) fiber.members.set(a);
  return fiber;
}

bool equivalent_extension_check(const Subspace& cob, const Cocycle& f, const Cocycle& g) {
  return cob.contains((g - f).vector());
}

bool equivalent_extension_check(const LoopTable& base, const Cocycle& f, const Cocycle& g) {
  return equivalent_extension_check(coboundary_space(base, f.prime()), f, g);
}

bool is_prunable_base(const LoopTable& base) { return min_generators(base, 2) <= 2; }

}  // namespace moufang
