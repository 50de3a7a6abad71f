#pragma once

// Small loops and brute-force oracles shared by the test programs.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "moufang/autiso.hpp"
#include "moufang/codeloops.hpp"
#include "moufang/loop.hpp"
#include "moufang/pipeline.hpp"

namespace fixtures {

using namespace moufang;

inline LoopTable from_rows(const std::vector<std::vector<int>>& rows) { return validate_loop(rows); }

// Smallest kind of nonassociative loop; not Moufang since every Moufang
// loop of order 5 is a group.
inline LoopTable loop_of_order_5() {
  return from_rows({{1, 2, 3, 4, 5}, {2, 1, 4, 5, 3}, {3, 5, 1, 2, 4}, {4, 3, 5, 1, 2}, {5, 4, 2, 3, 1}});
}

inline LoopTable dihedral(int m) {
  // r^i s^j -> 2i + j
  const int n = 2 * m;
  std::vector<Element> cells(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int i = a / 2, j = a % 2, k = b / 2, l = b % 2;
      const int rot = j ? (i - k + m) % m : (i + k) % m;
      cells[a * n + b] = static_cast<Element>(2 * rot + (j ^ l));
    }
  }
  return LoopTable(n, cells);
}

// Units +-e_0 .. +-e_7 of the octonions: sign s and unit i -> 2i + s.
inline LoopTable octonion_loop() {
  static const int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
  int unit[8][8];
  int sign[8][8];
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      sign[i][j] = 0;
      if (i == 0 || j == 0) {
        unit[i][j] = i + j;
      } else if (i == j) {
        unit[i][j] = 0;
        sign[i][j] = 1;
      }
    }
  }
  for (const auto& l : lines) {
    for (int r = 0; r < 3; ++r) {
      const int a = l[r], b = l[(r + 1) % 3], c = l[(r + 2) % 3];
      unit[a][b] = c;
      unit[b][a] = c;
      sign[b][a] = 1;
    }
  }
  std::vector<Element> cells(256);
  for (int x = 0; x < 16; ++x) {
    for (int y = 0; y < 16; ++y) {
      const int i = x / 2, j = y / 2;
      cells[x * 16 + y] = static_cast<Element>(2 * unit[i][j] + ((x % 2) ^ (y % 2) ^ sign[i][j]));
    }
  }
  return LoopTable(16, cells);
}

inline LoopTable random_relabel(const LoopTable& q, std::mt19937& rng) {
  std::vector<Element> perm(q.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  return relabel(q, perm);
}

// Every automorphism by trying all permutations fixing 0; n <= 9.
inline std::vector<Permutation> brute_force_automorphisms(const LoopTable& q) {
  std::vector<Element> perm(q.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Permutation> out;
  do {
    if (is_isomorphism(q, q, perm)) out.push_back(perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

inline bool brute_force_isomorphic(const LoopTable& a, const LoopTable& b) {
  if (a.order() != b.order()) return false;
  std::vector<Element> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (is_isomorphism(a, b, perm)) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

// Rank of a dense matrix over GF(p) by textbook elimination.
inline int dense_rank(std::vector<std::vector<int>> m, int p) {
  int rank = 0;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r) {
      if (m[r][c] % p != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const int inv = (m[rank][c] % p == 1) ? 1 : p - 1;  // p in {2, 3}
    for (int& v : m[rank]) v = (v * inv) % p;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || m[r][c] % p == 0) continue;
      const int f = m[r][c] % p;
      for (int k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// dim Mcoc from the full dense system, for small loops.
inline int dense_mcoc_dim(const LoopTable& k, int p) {
  const int n = k.order();
  auto b = [n](int x, int y) { return x * n + y; };
  std::vector<std::vector<int>> rows;
  for (int x = 0; x < n; ++x) {
    std::vector<int> r(n * n, 0), c(n * n, 0);
    r[b(0, x)] = 1;
    c[b(x, 0)] = 1;
    rows.push_back(r);
    rows.push_back(c);
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        std::vector<int> r(n * n, 0);
        const int xy = k.mul(x, y), zx = k.mul(z, x), yz = k.mul(y, z);
        r[b(xy, zx)] += 1;
        r[b(x, y)] += 1;
        r[b(z, x)] += 1;
        r[b(x, k.mul(yz, x))] += p - 1;
        r[b(yz, x)] += p - 1;
        r[b(y, z)] += p - 1;
        for (int& v : r) v %= p;
        rows.push_back(r);
      }
    }
  }
  return n * n - dense_rank(rows, p);
}

// alpha_n by the alternating subset sum over GF(2).
inline int subset_sum_form(const BooleanMap& alpha, const std::vector<Vec>& args) {
  const int n = static_cast<int>(args.size());
  int sum = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Vec v = 0;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) v ^= args[i];
    }
    sum ^= alpha(v);
  }
  return sum;
}

// P on all of V rebuilt from basis values, adding one basis vector at a
// time: P(x + e) = P(x) + P(e) + C(x, e), where C(x, e) is expanded the
// same way using the trilinearity of A.
inline std::vector<int> rebuild_p_table(const PolarTriple& t) {
  const int d = t.d;
  const Vec size = Vec{1} << d;
  auto a_of = [&](Vec x, Vec y, Vec z) {
    int s = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          if ((x >> i & 1) && (y >> j & 1) && (z >> k & 1)) s ^= t.A(i, j, k);
    return s;
  };
  // C(x, e_i) for x built bit by bit.
  std::vector<std::vector<int>> c(size, std::vector<int>(d, 0));
  for (Vec x = 1; x < size; ++x) {
    const int low = std::countr_zero(x);
    const Vec rest = x & (x - 1);
    for (int i = 0; i < d; ++i) c[x][i] = c[rest][i] ^ t.C(low, i) ^ a_of(rest, Vec{1} << low, Vec{1} << i);
  }
  std::vector<int> p(size, 0);
  for (Vec x = 1; x < size; ++x) {
    const int low = std::countr_zero(x);
    const Vec rest = x & (x - 1);
    p[x] = p[rest] ^ t.P(low) ^ c[rest][low];
  }
  return p;
}

// Triple of M applied to t, through the rebuilt P table and subset sums.
inline PolarTriple transform_by_tables(const PolarTriple& t, const Gf2Matrix& m) {
  const std::vector<int> p = rebuild_p_table(t);
  BooleanMap moved(t.d);
  for (Vec x = 1; x < (Vec{1} << t.d); ++x) moved.set(x, p[m.apply(x)]);
  PolarTriple out{t.d, 0};
  for (int i = 0; i < t.d; ++i) {
    out.set_P(i, moved(Vec{1} << i));
    for (int j = i + 1; j < t.d; ++j) {
      out.set_C(i, j, subset_sum_form(moved, {Vec{1} << i, Vec{1} << j}));
      for (int k = j + 1; k < t.d; ++k) out.set_A(i, j, k, subset_sum_form(moved, {Vec{1} << i, Vec{1} << j, Vec{1} << k}));
    }
  }
  return out;
}

inline std::vector<Gf2Matrix> all_invertible(int d) {
  std::vector<Gf2Matrix> out;
  const std::uint64_t total = std::uint64_t{1} << (d * d);
  for (std::uint64_t code = 0; code < total; ++code) {
    Gf2Matrix m{d, std::vector<Vec>(d)};
    for (int i = 0; i < d; ++i) m.rows[i] = static_cast<Vec>((code >> (d * i)) & ((1u << d) - 1));
    if (m.invertible()) out.push_back(m);
  }
  return out;
}

// The representative loop as literally described: pick f from Y, push it
// to X, and strike the Comp-part of f^alpha for every automorphism alpha.
inline std::size_t verbatim_representative_count(const LoopTable& k, const CocycleSpaces& spaces, const AutGroup& aut) {
  const int p = spaces.comp.prime();
  const int dim = spaces.comp.dim();
  std::uint64_t total = 1;
  for (int i = 0; i < dim; ++i) total *= p;
  std::vector<std::vector<int>> coords_of(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    std::uint64_t v = i;
    for (int j = 0; j < dim; ++j) {
      coords_of[i].push_back(static_cast<int>(v % p));
      v /= p;
    }
  }
  auto index_of = [&](const std::vector<int>& c) {
    std::uint64_t idx = 0;
    for (int j = dim; j-- > 0;) idx = idx * p + c[j];
    return idx;
  };
  const DirectSumDecomposer split(spaces.cob, spaces.comp);
  std::vector<bool> in_y(total, true);
  std::size_t x_size = 0;
  for (std::uint64_t f = 0; f < total; ++f) {
    if (!in_y[f]) continue;
    ++x_size;
    in_y[f] = false;
    const Cocycle cf(k.order(), spaces.comp.combination(coords_of[f]));
    aut.for_each([&](const Permutation& alpha) {
      const std::vector<int> c = split.coordinates(act_on_cocycle(cf, alpha).vector());
      in_y[index_of(std::vector<int>(c.begin() + spaces.cob.dim(), c.end()))] = false;
    });
  }
  return x_size;
}

// Bootstrapped databases are cheap; cache them per process.
inline const std::vector<LoopDatabase>& two_loops() {
  static const std::vector<LoopDatabase> levels = [] {
    RunConfig cfg;
    cfg.prime = 2;
    cfg.target_exponent = 5;
    return bootstrap(cfg);
  }();
  return levels;
}

inline const std::vector<LoopDatabase>& three_loops() {
  static const std::vector<LoopDatabase> levels = [] {
    RunConfig cfg;
    cfg.prime = 3;
    cfg.target_exponent = 3;
    return bootstrap(cfg);
  }();
  return levels;
}

}  // namespace fixtures
