#include "moufang/loop.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace moufang {

namespace {

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return std::hash<ElementSet>{}(s); }
};

}  // namespace

LoopTable::LoopTable() : n_(1), cells_{0}, ldiv_{0}, rdiv_{0} {}

LoopTable::LoopTable(int n, std::vector<Element> cells) : n_(n), cells_(std::move(cells)) {
  if (n < 1 || n > kMaxOrder) {
    throw Error(ErrorKind::InvalidArgument, "loop order " + std::to_string(n) + " out of range");
  }
  if (cells_.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorKind::NotSquare, "table has " + std::to_string(cells_.size()) + " cells, expected " +
                                          std::to_string(n * n));
  }
  const auto un = static_cast<std::size_t>(n);
  ldiv_.assign(un * un, 0);
  rdiv_.assign(un * un, 0);
  std::vector<int> seen(un);
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int y = 0; y < n; ++y) {
      const int v = cells_[x * n + y];
      if (v >= n || seen[v] >= 0) {
        throw Error(ErrorKind::NotQuasigroup, "row " + std::to_string(x + 1) + " is not a permutation");
      }
      seen[v] = y;
      ldiv_[x * n + v] = static_cast<Element>(y);
    }
  }
  for (int y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int x = 0; x < n; ++x) {
      const int v = cells_[x * n + y];
      if (seen[v] >= 0) {
        throw Error(ErrorKind::NotQuasigroup, "column " + std::to_string(y + 1) + " is not a permutation");
      }
      seen[v] = x;
      rdiv_[y * n + v] = static_cast<Element>(x);
    }
  }
  for (int x = 0; x < n; ++x) {
    if (cells_[x] != x || cells_[x * n] != x) {
      throw Error(ErrorKind::NoNeutral, "element 1 is not neutral");
    }
  }
}

std::vector<Element> SubloopSet::elements() const {
  std::vector<Element> out;
  for (int x = 0; x < n; ++x) {
    if (members.test(x)) out.push_back(static_cast<Element>(x));
  }
  return out;
}

LoopTable validate_loop(const std::vector<std::vector<int>>& one_based) {
  const int n = static_cast<int>(one_based.size());
  if (n == 0) throw Error(ErrorKind::NotSquare, "empty table");
  if (n > kMaxOrder) throw Error(ErrorKind::InvalidArgument, "order exceeds 256");
  std::vector<Element> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : one_based) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorKind::NotSquare, "row length " + std::to_string(row.size()) + " differs from " +
                                            std::to_string(n));
    }
    for (int v : row) {
      if (v < 1 || v > n) throw Error(ErrorKind::NotQuasigroup, "entry " + std::to_string(v) + " out of range");
      cells.push_back(static_cast<Element>(v - 1));
    }
  }
  return LoopTable(n, std::move(cells));
}

std::vector<std::vector<int>> to_one_based(const LoopTable& q) {
  const int n = q.order();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) rows[x][y] = q.mul(x, y) + 1;
  }
  return rows;
}

bool is_moufang(const LoopTable& q) {
  const int n = q.order();
  // (xy)(zx) == x((yz)x)
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Element xy = q.mul(x, y);
      for (int z = 0; z < n; ++z) {
        if (q.mul(xy, q.mul(z, x)) != q.mul(x, q.mul(q.mul(y, z), x))) return false;
      }
    }
  }
  return true;
}

bool is_associative(const LoopTable& q) {
  const int n = q.order();
  for (int x = 1; x < n; ++x) {
    for (int y = 1; y < n; ++y) {
      const Element xy = q.mul(x, y);
      for (int z = 1; z < n; ++z) {
        if (q.mul(xy, z) != q.mul(x, q.mul(y, z))) return false;
      }
    }
  }
  return true;
}

bool is_commutative(const LoopTable& q) {
  const int n = q.order();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (q.mul(x, y) != q.mul(y, x)) return false;
    }
  }
  return true;
}

SubloopSet center(const LoopTable& q) {
  const int n = q.order();
  SubloopSet out{n, {}};
  for (int z = 0; z < n; ++z) {
    bool central = true;
    for (int x = 0; x < n && central; ++x) {
      if (q.mul(z, x) != q.mul(x, z)) central = false;
      for (int y = 0; y < n && central; ++y) {
        const Element xy = q.mul(x, y);
        central = q.mul(z, xy) == q.mul(q.mul(z, x), y) && q.mul(x, q.mul(z, y)) == q.mul(q.mul(x, z), y) &&
                  q.mul(x, q.mul(y, z)) == q.mul(xy, z);
      }
    }
    if (central) out.members.set(z);
  }
  return out;
}

namespace {

// Closes `list` (whose first `closed` entries already form a closed set)
// under multiplication. A finite subset closed under the product is a
// subloop, since translations restricted to it are injective.
void close_list(const LoopTable& q, std::vector<Element>& list, ElementSet& in, std::size_t closed) {
  for (std::size_t i = closed; i < list.size(); ++i) {
    const Element a = list[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Element b = list[j];
      const Element ab = q.mul(a, b);
      if (!in.test(ab)) {
        in.set(ab);
        list.push_back(ab);
      }
      const Element ba = q.mul(b, a);
      if (!in.test(ba)) {
        in.set(ba);
        list.push_back(ba);
      }
    }
  }
}

}  // namespace

SubloopSet subloop_closure(const LoopTable& q, std::span<const Element> seed) {
  SubloopSet base{q.order(), {}};
  base.members.set(0);
  return subloop_closure(q, base, seed);
}

SubloopSet subloop_closure(const LoopTable& q, const SubloopSet& base, std::span<const Element> extra) {
  std::vector<Element> list = base.elements();
  ElementSet in = base.members;
  if (!in.test(0)) {
    in.set(0);
    list.insert(list.begin(), 0);
  }
  const std::size_t closed = base.members.test(0) ? list.size() : 0;
  for (Element x : extra) {
    if (x >= q.order()) throw Error(ErrorKind::InvalidArgument, "seed element out of range");
    if (!in.test(x)) {
      in.set(x);
      list.push_back(x);
    }
  }
  close_list(q, list, in, closed);
  return SubloopSet{q.order(), in};
}

int min_generators(const LoopTable& q, int limit) {
  const int n = q.order();
  if (n == 1) return 0;
  ElementSet full;
  for (int x = 0; x < n; ++x) full.set(x);

  // Breadth-first over subloops reachable with k generators. From a subloop
  // C, an element already inside the closure produced by a previous choice x
  // is dominated by x and skipped.
  std::vector<SubloopSet> level{subloop_closure(q, std::span<const Element>{})};
  for (int k = 1;; ++k) {
    if (limit >= 0 && k > limit) return limit + 1;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<SubloopSet> next;
    for (const SubloopSet& c : level) {
      ElementSet covered = c.members;
      for (int x = 0; x < n; ++x) {
        if (covered.test(x)) continue;
        const Element e = static_cast<Element>(x);
        SubloopSet grown = subloop_closure(q, c, std::span<const Element>(&e, 1));
        if (grown.members == full) return k;
        covered |= grown.members;
        if (seen.insert(grown.members).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
}

bool is_normal(const LoopTable& q, const SubloopSet& s) {
  const int n = q.order();
  const std::vector<Element> members = s.elements();
  for (int x = 0; x < n; ++x) {
    for (Element m : members) {
      // L_x^{-1} R_x
      if (!s.contains(q.ldiv(x, q.mul(m, x)))) return false;
    }
    for (int y = 0; y < n; ++y) {
      const Element xy = q.mul(x, y);
      const Element yx = q.mul(y, x);
      for (Element m : members) {
        // R_{xy}^{-1} R_y R_x
        if (!s.contains(q.rdiv(q.mul(q.mul(m, x), y), xy))) return false;
        // L_{yx}^{-1} L_y L_x
        if (!s.contains(q.ldiv(yx, q.mul(y, q.mul(x, m))))) return false;
      }
    }
  }
  return true;
}

Quotient quotient_loop(const LoopTable& q, const SubloopSet& s) {
  if (!s.contains(0) || subloop_closure(q, s, {}).members != s.members) {
    throw Error(ErrorKind::InvalidArgument, "not a subloop");
  }
  if (!is_normal(q, s)) throw Error(ErrorKind::NotNormal, "subloop is not normal");
  const int n = q.order();
  const std::vector<Element> members = s.elements();
  std::vector<int> coset(n, -1);
  std::vector<Element> reps;
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    const int idx = static_cast<int>(reps.size());
    reps.push_back(static_cast<Element>(x));
    for (Element m : members) coset[q.mul(x, m)] = idx;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<Element> cells(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) cells[a * m + b] = static_cast<Element>(coset[q.mul(reps[a], reps[b])]);
  }
  Quotient out{LoopTable(m, std::move(cells)), {}};
  out.coset_of.reserve(n);
  for (int x = 0; x < n; ++x) out.coset_of.push_back(static_cast<Element>(coset[x]));
  return out;
}

int element_order(const LoopTable& q, Element x) {
  Element left = x;
  Element right = x;
  for (int k = 1; k <= q.order(); ++k) {
    if (left != right) {
      throw Error(ErrorKind::NotPowerAssociative, "powers of element " + std::to_string(x + 1) + " disagree");
    }
    if (left == 0) return k;
    left = q.mul(left, x);
    right = q.mul(x, right);
  }
  throw Error(ErrorKind::NotPowerAssociative, "element " + std::to_string(x + 1) + " has no finite order");
}

std::vector<int> element_orders(const LoopTable& q) {
  std::vector<int> out(q.order());
  for (int x = 0; x < q.order(); ++x) out[x] = element_order(q, static_cast<Element>(x));
  return out;
}

LoopTable cyclic_group(int n) {
  std::vector<Element> cells(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) cells[x * n + y] = static_cast<Element>((x + y) % n);
  }
  return LoopTable(n, std::move(cells));
}

LoopTable elementary_abelian(int p, int k) {
  LoopTable out;
  const LoopTable zp = cyclic_group(p);
  for (int i = 0; i < k; ++i) out = direct_product(out, zp);
  return out;
}

LoopTable direct_product(const LoopTable& a, const LoopTable& b) {
  // (x, u) -> x * |b| + u
  const int na = a.order();
  const int nb = b.order();
  const int n = na * nb;
  if (n > kMaxOrder) throw Error(ErrorKind::InvalidArgument, "product order exceeds 256");
  std::vector<Element> cells(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < na; ++x) {
    for (int u = 0; u < nb; ++u) {
      for (int y = 0; y < na; ++y) {
        for (int v = 0; v < nb; ++v) {
          cells[(x * nb + u) * n + y * nb + v] = static_cast<Element>(a.mul(x, y) * nb + b.mul(u, v));
        }
      }
    }
  }
  return LoopTable(n, std::move(cells));
}

LoopTable relabel(const LoopTable& q, std::span<const Element> perm) {
  const int n = q.order();
  if (static_cast<int>(perm.size()) != n || perm[0] != 0) {
    throw Error(ErrorKind::InvalidArgument, "relabeling must be a permutation fixing the neutral element");
  }
  std::vector<Element> cells(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) cells[perm[x] * n + perm[y]] = perm[q.mul(x, y)];
  }
  return LoopTable(n, std::move(cells));
}

int prime_power_exponent(int n, int p) {
  int k = 0;
  while (n > 1 && n % p == 0) {
    n /= p;
    ++k;
  }
  return n == 1 ? k : -1;
}

}  // namespace moufang
