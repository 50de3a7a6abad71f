#include <doctest.h>

#include "moufang/cocycles.hpp"
#include "moufang/extend.hpp"
#include "support/fixtures.hpp"

using namespace moufang;

TEST_CASE("cocycle vectors") {
  Cocycle f(3, 4);
  f.set(2, 3, 2);
  CHECK(f(2, 3) == 2);
  CHECK(f.vector().get(PairIndexer{4}(2, 3)) == 2);
  CHECK(f.is_normalized());
  f.set(0, 1, 1);
  CHECK_FALSE(f.is_normalized());
  CHECK_THROWS_AS(Cocycle(4, FpVector(2, 15)), Error);
}

TEST_CASE("coboundaries") {
  const LoopTable z4 = cyclic_group(4);
  const std::vector<int> tau{0, 1, 0, 0};
  const Cocycle d = coboundary_of(z4, 2, tau);
  CHECK(d(1, 1) == 0);  // tau(2) - 2 tau(1)
  CHECK(d(1, 2) == 1);  // tau(3) - tau(1) - tau(2)
  CHECK(d(0, 3) == 0);
  const std::vector<int> bad{1, 0, 0, 0};
  CHECK_THROWS_WITH_AS(coboundary_of(z4, 2, bad), doctest::Contains("TauNotNormalized"), Error);
}

TEST_CASE("known dimensions") {
  const CocycleSpaces ea27 = build_spaces(elementary_abelian(3, 3), 3);
  CHECK(ea27.cob.dim() == 23);
  CHECK(ea27.mcoc.dim() == 30);
  CHECK(ea27.comp.dim() == 7);

  const LoopTable ea32 = elementary_abelian(2, 5);
  const CocycleSpaces s = build_spaces(ea32, 2);
  CHECK(s.mcoc.dim() == 51);
  CHECK(s.cob.dim() == 26);
  CHECK(s.comp.dim() == 25);
  const Subspace group = group_cocycle_space(ea32, 2);
  CHECK(group.dim() == 41);
  CHECK(group.contains(s.cob));
  CHECK(s.mcoc.contains(group));
}

TEST_CASE("Mcoc matches the dense system on small loops") {
  for (const LoopDatabase& db : fixtures::two_loops()) {
    if (db[0].table.order() > 8) continue;
    for (const LoopEntry& e : db.entries()) CHECK(moufang_cocycle_space(e.table, 2).dim() == fixtures::dense_mcoc_dim(e.table, 2));
  }
  const LoopTable ea9 = elementary_abelian(3, 2);
  CHECK(moufang_cocycle_space(ea9, 3).dim() == fixtures::dense_mcoc_dim(ea9, 3));
  const LoopTable five = fixtures::loop_of_order_5();
  CHECK(moufang_cocycle_space(five, 2).dim() == fixtures::dense_mcoc_dim(five, 2));
  McocOptions tiny;
  tiny.block_rows = 3;
  CHECK(moufang_cocycle_space(fixtures::octonion_loop(), 2, tiny) == moufang_cocycle_space(fixtures::octonion_loop(), 2));
}

TEST_CASE("coboundaries are Moufang cocycles for every base up to order 16") {
  for (const auto* levels : {&fixtures::two_loops(), &fixtures::three_loops()}) {
    for (const LoopDatabase& db : *levels) {
      if (db[0].table.order() > 16) continue;
      for (const LoopEntry& e : db.entries()) {
        const int p = db[0].table.order() % 2 == 0 ? 2 : 3;
        const Subspace mcoc = moufang_cocycle_space(e.table, p);
        CHECK(mcoc.contains(coboundary_space(e.table, p)));
      }
    }
  }
}

TEST_CASE("dim Cob = p^k - 1 - d") {
  for (const auto* levels : {&fixtures::two_loops(), &fixtures::three_loops()}) {
    for (const LoopDatabase& db : *levels) {
      const int n = db[0].table.order();
      const int p = n % 2 == 0 ? 2 : 3;
      for (const LoopEntry& e : db.entries()) {
        CHECK(coboundary_space(e.table, p).dim() == n - 1 - min_generators(e.table));
      }
    }
  }
}

TEST_CASE("identity checks") {
  const LoopTable o = fixtures::octonion_loop();
  const CocycleSpaces s = build_spaces(o, 2);
  for (const FpVector& v : s.mcoc.basis()) CHECK(is_moufang_cocycle(o, Cocycle(16, v)));
  const LoopTable d8 = fixtures::dihedral(4);
  const Subspace cob = coboundary_space(d8, 2);
  for (const FpVector& v : cob.basis()) CHECK(is_group_cocycle(d8, Cocycle(8, v)));
  Cocycle f(2, 16);
  f.set(3, 5, 1);
  CHECK_FALSE(is_moufang_cocycle(o, f));
}

TEST_CASE("cocycle extraction inverts central extension") {
  for (const LoopDatabase& db : fixtures::two_loops()) {
    const int n = db[0].table.order();
    if (n < 4 || n > 16) continue;
    for (const LoopEntry& e : db.entries()) {
      const CocycleSpaces s = build_spaces(e.table, 2);
      for (std::size_t i = 0; i < s.mcoc.basis().size() && i < 4; ++i) {
        const Cocycle f(n, s.mcoc.basis()[i]);
        const LoopTable q = central_extension(e.table, f);
        const ExtractedExtension ex = cocycle_from_extension(q, extension_fiber(n, 2));
        CHECK(ex.base == e.table);
        // The section is the least element of each fiber, so the cocycle
        // comes back unchanged.
        CHECK(ex.cocycle == f);
        CHECK(are_isomorphic(central_extension(ex.base, ex.cocycle), q).has_value());
      }
    }
  }
  const LoopTable ea27 = elementary_abelian(3, 3);
  const CocycleSpaces s = build_spaces(ea27, 3);
  const Cocycle f(27, s.comp.basis().back() + s.comp.basis().front().scaled(2));
  const LoopTable q = central_extension(ea27, f);
  const ExtractedExtension ex = cocycle_from_extension(q, extension_fiber(27, 3));
  CHECK(ex.cocycle == f);
  CHECK(ex.fiber_generator == 1);
}

TEST_CASE("cocycle extraction errors") {
  const LoopTable z8 = cyclic_group(8);
  SubloopSet four{8, {}};
  for (int x : {0, 2, 4, 6}) four.members.set(x);
  CHECK_THROWS_WITH_AS(cocycle_from_extension(z8, four), doctest::Contains("WrongOrder"), Error);
  const LoopTable d8 = fixtures::dihedral(4);
  SubloopSet flip{8, {}};
  flip.members.set(0);
  flip.members.set(1);
  CHECK_THROWS_WITH_AS(cocycle_from_extension(d8, flip), doctest::Contains("NotCentral"), Error);
}
