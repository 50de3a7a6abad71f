#include <doctest.h>

#include <random>
#include <set>

#include "moufang/codeloops.hpp"
#include "support/fixtures.hpp"

using namespace moufang;

namespace {

BooleanMap random_map(std::mt19937& rng, int d) {
  BooleanMap a(d);
  std::uniform_int_distribution<int> bit(0, 1);
  for (Vec x = 1; x < (Vec{1} << d); ++x) a.set(x, bit(rng));
  return a;
}

PolarTriple random_triple(std::mt19937& rng, int d) {
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << PolarTriple::size(d)) - 1);
  return PolarTriple{d, bits(rng)};
}

Gf2Matrix random_invertible(std::mt19937& rng, int d) {
  std::uniform_int_distribution<Vec> row(0, (Vec{1} << d) - 1);
  for (;;) {
    Gf2Matrix m{d, std::vector<Vec>(d)};
    for (Vec& r : m.rows) r = row(rng);
    if (m.invertible()) return m;
  }
}

BooleanMap monomial(int d, Vec vars) {
  BooleanMap a(d);
  for (Vec x = 1; x < (Vec{1} << d); ++x) a.set(x, (x & vars) == vars ? 1 : 0);
  return a;
}

}  // namespace

TEST_CASE("boolean maps") {
  CHECK_THROWS_AS(BooleanMap(2).set(0, 1), Error);
  CHECK_THROWS_AS(BooleanMap::from_table(2, {1, 0, 0, 0}), Error);
  CHECK_THROWS_AS(BooleanMap::from_table(2, {0, 0, 0}), Error);
  CHECK(BooleanMap::from_table(2, {0, 1, 1, 0})(3) == 0);
}

TEST_CASE("derived forms on monomials") {
  const BooleanMap x1x2 = monomial(2, 0b11);
  CHECK(derived_form(x1x2, std::vector<Vec>{1, 2}) == 1);
  for (Vec u = 0; u < 4; ++u)
    for (Vec v = 0; v < 4; ++v)
      for (Vec w = 0; w < 4; ++w) CHECK(derived_form(x1x2, std::vector<Vec>{u, v, w}) == 0);

  const BooleanMap cubic = monomial(3, 0b111);
  CHECK(derived_form(cubic, std::vector<Vec>{1, 2, 4}) == 1);
  for (Vec a = 0; a < 8; ++a)
    for (Vec b = 0; b < 8; ++b)
      for (Vec c = 0; c < 8; ++c)
        for (Vec d = 0; d < 8; ++d) CHECK(fixtures::subset_sum_form(cubic, {a, b, c, d}) == 0);

  const BooleanMap zero(3);
  for (Vec a = 0; a < 8; ++a) CHECK(derived_form(zero, std::vector<Vec>{a, 7 - a}) == 0);
}

TEST_CASE("recurrence agrees with the subset sum on random maps") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 1 + trial % 4;
    const BooleanMap a = random_map(rng, d);
    std::uniform_int_distribution<Vec> vec(0, (Vec{1} << d) - 1);
    const int n = 1 + trial % 5;
    std::vector<Vec> args(n);
    for (Vec& v : args) v = vec(rng);
    const int value = derived_form(a, args);
    CHECK(value == fixtures::subset_sum_form(a, args));
    // Symmetric, and zero with a zero argument.
    std::vector<Vec> rotated(args.begin() + 1, args.end());
    rotated.push_back(args[0]);
    CHECK(derived_form(a, rotated) == value);
    args[n - 1] = 0;
    if (n > 1) CHECK(derived_form(a, args) == 0);
  }
}

TEST_CASE("combinatorial degree") {
  std::mt19937 rng(8);
  CHECK(combinatorial_degree(BooleanMap(3)) == 0);
  CHECK(combinatorial_degree(monomial(3, 0b010)) == 1);
  CHECK(combinatorial_degree(monomial(3, 0b111)) == 3);
  // Against the definition: the largest n such that some alpha_n value is nonzero.
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 1 + trial % 3;
    const BooleanMap a = random_map(rng, d);
    const Vec size = Vec{1} << d;
    int degree = 0;
    for (int n = 1; n <= d + 1; ++n) {
      std::vector<Vec> args(n, 0);
      bool nonzero = false;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (d * n)) && !nonzero; ++code) {
        for (int i = 0; i < n; ++i) args[i] = static_cast<Vec>((code >> (d * i)) & (size - 1));
        nonzero = fixtures::subset_sum_form(a, args) != 0;
      }
      if (nonzero) degree = n;
    }
    CHECK(combinatorial_degree(a) == degree);
  }
}

TEST_CASE("triple packing") {
  PolarTriple t{5, 0};
  CHECK(PolarTriple::size(5) == 25);
  CHECK(PolarTriple::c_index(5, 0, 1) == 5);
  CHECK(PolarTriple::c_index(5, 3, 4) == 14);
  CHECK(PolarTriple::a_index(5, 0, 1, 2) == 15);
  CHECK(PolarTriple::a_index(5, 2, 3, 4) == 24);
  std::set<int> indices;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k) indices.insert(PolarTriple::a_index(5, i, j, k));
  CHECK(indices.size() == 10);
  CHECK(*indices.begin() == 15);
  t.set_A(4, 0, 2, 1);
  CHECK(t.A(0, 2, 4) == 1);
  CHECK(t.A(2, 4, 0) == 1);
  CHECK(t.A(2, 2, 0) == 0);
  t.set_C(3, 1, 1);
  CHECK(t.C(1, 3) == 1);
  CHECK_FALSE(t.associator_zero());
  CHECK_THROWS_AS(t.set_C(2, 2, 1), Error);
}

TEST_CASE("evaluation formulas") {
  std::mt19937 rng(99);
  const PolarTriple zero{4, 0};
  for (Vec x = 0; x < 16; ++x) CHECK(eval_P(zero, x) == 0);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + trial % 4;
    const PolarTriple t = random_triple(rng, d);
    const std::vector<int> p = fixtures::rebuild_p_table(t);
    BooleanMap pm(d);
    for (Vec x = 1; x < (Vec{1} << d); ++x) pm.set(x, p[x]);
    std::uniform_int_distribution<Vec> vec(0, (Vec{1} << d) - 1);
    const Vec x = vec(rng), y = vec(rng), z = vec(rng);
    CHECK(eval_P(t, x) == p[x]);
    CHECK(eval_C(t, x, y) == fixtures::subset_sum_form(pm, {x, y}));
    CHECK(eval_A(t, x, y, z) == fixtures::subset_sum_form(pm, {x, y, z}));
    CHECK(eval_P(t, 0b11) == (t.P(0) ^ t.P(1) ^ t.C(0, 1)));
    CHECK(eval_A(t, x, x, z) == 0);
    CHECK(eval_C(t, x, y) == (eval_P(t, x ^ y) ^ eval_P(t, x) ^ eval_P(t, y)));
    CHECK(polar_map(t) == pm);
    CHECK(triple_of_map(pm) == t);
  }
  CHECK_THROWS_AS(triple_of_map(monomial(4, 0b1111)), Error);
}

TEST_CASE("GL(d, 2) matrices") {
  std::mt19937 rng(4);
  for (int d = 1; d <= 5; ++d) {
    const Gf2Matrix m = random_invertible(rng, d);
    CHECK((m * m.inverse()) == Gf2Matrix::identity(d));
    const Gf2Matrix n = random_invertible(rng, d);
    for (Vec x = 0; x < (Vec{1} << d); ++x) CHECK((m * n).apply(x) == n.apply(m.apply(x)));
  }
  const Gf2Matrix singular{3, {1, 2, 3}};
  CHECK_FALSE(singular.invertible());
  CHECK_THROWS_WITH_AS(singular.inverse(), doctest::Contains("SingularMatrix"), Error);
  CHECK(fixtures::all_invertible(3).size() == 168);
}

TEST_CASE("the two generators generate GL(d, 2)") {
  const std::uint64_t expected[] = {1, 1, 6, 168, 20160, 9999360};
  for (int d = 2; d <= 5; ++d) {
    const auto gens = gl_generators(d);
    auto encode = [d](const Gf2Matrix& m) {
      std::uint64_t c = 0;
      for (int i = 0; i < d; ++i) c |= std::uint64_t{m.rows[i]} << (d * i);
      return c;
    };
    std::vector<bool> seen(std::size_t{1} << (d * d), false);
    std::vector<Gf2Matrix> queue{Gf2Matrix::identity(d)};
    seen[encode(queue[0])] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const Gf2Matrix& g : gens) {
        const Gf2Matrix next = queue[i] * g;
        if (!seen[encode(next)]) {
          seen[encode(next)] = true;
          queue.push_back(next);
        }
      }
    }
    CHECK(queue.size() == expected[d]);
  }
  CHECK(gl_generators(1).empty());
}

TEST_CASE("transforming triples") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 4;
    const PolarTriple t = random_triple(rng, d);
    CHECK(transform_triple(t, Gf2Matrix::identity(d)) == t);
    const Gf2Matrix m = random_invertible(rng, d);
    const PolarTriple moved = transform_triple(t, m);
    CHECK(transform_triple(moved, m.inverse()) == t);
    CHECK(moved == fixtures::transform_by_tables(t, m));
    CHECK(moved.associator_zero() == t.associator_zero());
  }
  CHECK_THROWS_AS(transform_triple(PolarTriple{3, 0}, Gf2Matrix{3, {1, 1, 4}}), Error);
}

TEST_CASE("orbit representatives for d <= 4 partition the triples") {
  CHECK(triple_orbit_representatives(2).empty());
  for (int d = 3; d <= 4; ++d) {
    const auto reps = triple_orbit_representatives(d);
    const auto group = fixtures::all_invertible(d);
    // Orbits of distinct representatives are disjoint, and their sizes
    // |GL| / |stabilizer| add up to the number of triples with A != 0.
    std::uint64_t covered = 0;
    std::set<std::uint64_t> rep_bits;
    for (const PolarTriple& r : reps) rep_bits.insert(r.bits);
    for (const PolarTriple& r : reps) {
      std::set<std::uint64_t> orbit;
      std::size_t stabilizer = 0;
      for (const Gf2Matrix& m : group) {
        const PolarTriple image = transform_triple(r, m);
        orbit.insert(image.bits);
        stabilizer += image == r;
        if (image != r) CHECK(rep_bits.count(image.bits) == 0);
      }
      CHECK(*orbit.begin() == r.bits);
      CHECK(orbit.size() * stabilizer == group.size());
      covered += orbit.size();
    }
    const std::uint64_t all = std::uint64_t{1} << PolarTriple::size(d);
    const std::uint64_t assoc = std::uint64_t{1} << (d + d * (d - 1) / 2);
    CHECK(covered == all - assoc);
    CHECK(reps.size() == (d == 3 ? 5u : 16u));
  }
}

TEST_CASE("realizing triples") {
  std::mt19937 rng(12);
  const LoopTable zero = realize_code_loop(PolarTriple{3, 0});
  CHECK(zero == elementary_abelian(2, 4));
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + trial % 5;
    const PolarTriple t = random_triple(rng, d);
    const LoopTable q = realize_code_loop(t);
    CHECK(q.order() == 2 << d);
    CHECK(is_moufang(q));
    CHECK(is_associative(q) == t.associator_zero());
    SubloopSet fiber{q.order(), {}};
    fiber.members.set(0);
    fiber.members.set(1);
    CHECK(triple_of_loop(q, fiber) == t);
    // Squares, commutators and associators are P, C = P_2 and A = P_3.
    const BooleanMap p = polar_map(t);
    for (int x = 0; x < q.order(); ++x) {
      CHECK(q.mul(x, x) == p(static_cast<Vec>(x / 2)));
      for (int y = 0; y < q.order(); ++y) {
        const Element c = q.ldiv(q.mul(y, x), q.mul(x, y));
        CHECK(c == fixtures::subset_sum_form(p, {static_cast<Vec>(x / 2), static_cast<Vec>(y / 2)}));
      }
    }
  }
}

TEST_CASE("code loops of order 32: isomorphic iff equivalent") {
  std::mt19937 rng(5);
  const auto reps = triple_orbit_representatives(4);
  std::vector<LoopProfile> loops;
  for (const PolarTriple& t : reps) loops.emplace_back(realize_code_loop(t));
  for (std::size_t i = 0; i < loops.size(); ++i) {
    for (std::size_t j = 0; j < loops.size(); ++j) CHECK(are_isomorphic(loops[i], loops[j]).has_value() == (i == j));
    const PolarTriple moved = transform_triple(reps[i], random_invertible(rng, 4));
    CHECK(are_isomorphic(LoopProfile(realize_code_loop(moved)), loops[i]).has_value());
  }
  // Every nonassociative order-32 loop with an elementary abelian central
  // quotient of order 16 is one of these.
  std::size_t code_loops = 0;
  for (const LoopEntry& e : fixtures::two_loops()[4].entries()) {
    if (e.fingerprint.associative) continue;
    bool is_code = false;
    const SubloopSet z = center(e.table);
    for (int x = 1; x < 32 && !is_code; ++x) {
      if (!z.contains(static_cast<Element>(x)) || e.table.mul(x, x) != 0) continue;
      SubloopSet s{32, {}};
      s.members.set(0);
      s.members.set(x);
      try {
        triple_of_loop(e.table, s);
        is_code = true;
      } catch (const Error&) {
      }
    }
    if (!is_code) continue;
    ++code_loops;
    bool found = false;
    for (const LoopProfile& l : loops) found = found || are_isomorphic(LoopProfile(e.table), l).has_value();
    CHECK(found);
  }
  CHECK(code_loops == loops.size());
}

TEST_CASE("triple_of_loop errors") {
  const LoopTable z8 = cyclic_group(8);
  SubloopSet two{8, {}};
  two.members.set(0);
  two.members.set(4);
  CHECK_THROWS_WITH_AS(triple_of_loop(z8, two), doctest::Contains("NotCodeLoop"), Error);
  const LoopTable ea = elementary_abelian(2, 4);
  SubloopSet z{16, {}};
  z.members.set(0);
  z.members.set(5);
  CHECK(triple_of_loop(ea, z) == PolarTriple{3, 0});
}

TEST_CASE("triple text format") {
  const PolarTriple t{5, 0b1000000000000000000000101};
  const std::string line = format_triple(t);
  CHECK(line == "d=5 P=10100 C=0000000000 A=0000000001");
  CHECK(parse_triple(line) == t);
  CHECK_THROWS_WITH_AS(parse_triple("d=5 P=101 C=0000000000 A=0000000001"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_AS(parse_triple("d=3 P=000 C=000"), Error);
  CHECK_THROWS_AS(parse_triple("d=3 P=000 C=000 A=2"), Error);
  CHECK_THROWS_AS(parse_triple("dim=3 P=000 C=000 A=1"), Error);
}
