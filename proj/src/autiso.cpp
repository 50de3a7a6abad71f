#include "moufang/autiso.hpp"

#include <algorithm>
#include <string>

#include "moufang/gf.hpp"

namespace moufang {

namespace {

std::uint64_t finalize(std::uint64_t h) {
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  return finalize(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

int left_power_order(const LoopTable& q, Element x) {
  Element power = x;
  for (int k = 1; k <= q.order(); ++k) {
    if (power == 0) return k;
    power = q.mul(power, x);
  }
  return 0;
}

struct LocalStats {
  std::vector<int> orders;
  std::vector<int> commuting;
  std::vector<int> assoc_first;
  std::vector<int> assoc_middle;
  std::vector<int> assoc_last;
  std::vector<int> square_roots;
  std::vector<int> cyclic;
};

LocalStats local_stats(const LoopTable& q) {
  const int n = q.order();
  LocalStats s;
  s.orders.resize(n);
  s.commuting.assign(n, 0);
  s.assoc_first.assign(n, 0);
  s.assoc_middle.assign(n, 0);
  s.assoc_last.assign(n, 0);
  s.square_roots.assign(n, 0);
  s.cyclic.resize(n);
  for (int x = 0; x < n; ++x) {
    s.orders[x] = left_power_order(q, static_cast<Element>(x));
    ++s.square_roots[q.mul(x, x)];
    const Element e = static_cast<Element>(x);
    s.cyclic[x] = subloop_closure(q, std::span<const Element>(&e, 1)).size();
    for (int y = 0; y < n; ++y) {
      if (q.mul(x, y) == q.mul(y, x)) ++s.commuting[x];
    }
  }
  for (int x = 1; x < n; ++x) {
    for (int y = 1; y < n; ++y) {
      const Element xy = q.mul(x, y);
      for (int z = 1; z < n; ++z) {
        if (q.mul(xy, z) != q.mul(x, q.mul(y, z))) {
          ++s.assoc_first[x];
          ++s.assoc_middle[y];
          ++s.assoc_last[z];
        }
      }
    }
  }
  return s;
}

std::vector<std::uint64_t> refine_colors(const LoopTable& q, const LocalStats& s) {
  const int n = q.order();
  std::vector<std::uint64_t> cur(n);
  for (int x = 0; x < n; ++x) {
    std::uint64_t h = 0x1234567u;
    for (int v : {s.orders[x], s.commuting[x], s.assoc_first[x], s.assoc_middle[x], s.assoc_last[x],
                  s.square_roots[x], s.cyclic[x]}) {
      h = mix(h, static_cast<std::uint64_t>(v));
    }
    cur[x] = h;
  }
  auto distinct = [](std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
  };
  int classes = distinct(cur);
  std::vector<std::uint64_t> next(n);
  std::vector<std::uint64_t> row(n);
  for (int round = 0; round < n; ++round) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        row[y] = mix(mix(cur[y], cur[q.mul(x, y)]), cur[q.mul(y, x)]);
      }
      std::sort(row.begin(), row.end());
      std::uint64_t h = mix(cur[x], cur[q.mul(x, x)]);
      for (std::uint64_t v : row) h = mix(h, v);
      next[x] = h;
    }
    cur.swap(next);
    const int now = distinct(cur);
    if (now == classes) break;
    classes = now;
  }
  return cur;
}

Fingerprint make_fingerprint(const LoopTable& q, const LocalStats& s, const std::vector<std::uint64_t>& colors) {
  const int n = q.order();
  Fingerprint fp;
  fp.order = n;
  fp.element_orders = s.orders;
  std::sort(fp.element_orders.begin(), fp.element_orders.end());
  fp.cyclic_sizes = s.cyclic;
  std::sort(fp.cyclic_sizes.begin(), fp.cyclic_sizes.end());
  fp.center_size = 0;
  for (int x = 0; x < n; ++x) {
    fp.noncommuting_pairs += n - s.commuting[x];
    fp.nonassociative_triples += s.assoc_first[x];
    if (s.commuting[x] == n && s.assoc_first[x] == 0 && s.assoc_middle[x] == 0 && s.assoc_last[x] == 0) {
      ++fp.center_size;
    }
  }
  fp.commutative = fp.noncommuting_pairs == 0;
  fp.associative = fp.nonassociative_triples == 0;
  fp.colors = colors;
  std::sort(fp.colors.begin(), fp.colors.end());
  return fp;
}

SearchPlan make_plan(const LoopTable& q, const std::vector<std::uint64_t>& colors) {
  const int n = q.order();
  std::vector<std::uint64_t> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  auto class_size = [&](std::uint64_t c) {
    return std::upper_bound(sorted.begin(), sorted.end(), c) - std::lower_bound(sorted.begin(), sorted.end(), c);
  };

  SearchPlan plan;
  ElementSet defined;
  defined.set(0);
  std::vector<Element> list{0};
  while (static_cast<int>(list.size()) < n) {
    int best = -1;
    long best_size = 0;
    for (int x = 1; x < n; ++x) {
      if (defined.test(x)) continue;
      const long size = static_cast<long>(class_size(colors[x]));
      if (best < 0 || size < best_size) {
        best = x;
        best_size = size;
      }
    }
    const Element g = static_cast<Element>(best);
    plan.generators.push_back(g);
    std::vector<SearchPlan::Step> steps;
    const std::size_t closed = list.size();
    defined.set(g);
    list.push_back(g);
    for (std::size_t i = closed; i < list.size(); ++i) {
      const Element a = list[i];
      for (std::size_t j = 0; j <= i; ++j) {
        const Element b = list[j];
        const Element ab = q.mul(a, b);
        if (!defined.test(ab)) {
          defined.set(ab);
          list.push_back(ab);
          steps.push_back({ab, a, b});
        }
        const Element ba = q.mul(b, a);
        if (!defined.test(ba)) {
          defined.set(ba);
          list.push_back(ba);
          steps.push_back({ba, b, a});
        }
      }
    }
    plan.steps.push_back(std::move(steps));
    plan.prefix.push_back(list);
  }
  return plan;
}

// Depth-first search for maps src -> dst that are injective homomorphisms,
// one level per generator of the source plan.
class MapSearch {
 public:
  MapSearch(const LoopProfile& src, const LoopProfile& dst)
      : src_(src), dst_(dst), phi_(src.loop().order(), -1), used_(dst.loop().order(), 0),
        newly_(src.plan().generators.size()) {
    phi_[0] = 0;
    used_[0] = 1;
  }

  // fixed[i] >= 0 pins the image of generator i.
  std::optional<Permutation> find(const std::vector<int>& fixed) {
    fixed_ = &fixed;
    if (!dfs(0)) return std::nullopt;
    Permutation out(phi_.size());
    for (std::size_t x = 0; x < phi_.size(); ++x) out[x] = static_cast<Element>(phi_[x]);
    for (std::size_t level = newly_.size(); level-- > 0;) undo(level);
    return out;
  }

 private:
  bool assign(std::size_t level, Element image) {
    const SearchPlan& plan = src_.plan();
    const LoopTable& a = src_.loop();
    const LoopTable& b = dst_.loop();
    const auto& ca = src_.colors();
    const auto& cb = dst_.colors();
    std::vector<Element>& newly = newly_[level];
    newly.clear();
    const Element g = plan.generators[level];
    if (used_[image] || cb[image] != ca[g]) return false;
    phi_[g] = image;
    used_[image] = 1;
    newly.push_back(g);
    for (const SearchPlan::Step& s : plan.steps[level]) {
      const Element v = b.mul(static_cast<Element>(phi_[s.left]), static_cast<Element>(phi_[s.right]));
      if (used_[v] || cb[v] != ca[s.element]) return false;
      phi_[s.element] = v;
      used_[v] = 1;
      newly.push_back(s.element);
    }
    for (Element e : newly) {
      const Element pe = static_cast<Element>(phi_[e]);
      for (Element y : plan.prefix[level]) {
        const Element py = static_cast<Element>(phi_[y]);
        if (b.mul(pe, py) != phi_[a.mul(e, y)] || b.mul(py, pe) != phi_[a.mul(y, e)]) return false;
      }
    }
    return true;
  }

  void undo(std::size_t level) {
    for (Element e : newly_[level]) {
      used_[phi_[e]] = 0;
      phi_[e] = -1;
    }
    newly_[level].clear();
  }

  bool dfs(std::size_t level) {
    const SearchPlan& plan = src_.plan();
    if (level == plan.generators.size()) return true;
    const int pinned = (*fixed_)[level];
    if (pinned >= 0) {
      if (assign(level, static_cast<Element>(pinned)) && dfs(level + 1)) return true;
      undo(level);
      return false;
    }
    const auto& candidates = dst_.color_class(src_.colors()[plan.generators[level]]);
    for (Element c : candidates) {
      if (used_[c]) continue;
      if (assign(level, c) && dfs(level + 1)) return true;
      undo(level);
    }
    return false;
  }

  const LoopProfile& src_;
  const LoopProfile& dst_;
  std::vector<int> phi_;
  std::vector<char> used_;
  std::vector<std::vector<Element>> newly_;
  const std::vector<int>* fixed_ = nullptr;
};

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

Permutation identity_permutation(int n) {
  Permutation id(n);
  for (int x = 0; x < n; ++x) id[x] = static_cast<Element>(x);
  return id;
}

}  // namespace

std::vector<std::uint64_t> element_colors(const LoopTable& q) { return refine_colors(q, local_stats(q)); }

Fingerprint fingerprint(const LoopTable& q) {
  const LocalStats s = local_stats(q);
  return make_fingerprint(q, s, refine_colors(q, s));
}

LoopProfile::LoopProfile(LoopTable q) : loop_(std::move(q)) {
  const LocalStats s = local_stats(loop_);
  colors_ = refine_colors(loop_, s);
  fingerprint_ = make_fingerprint(loop_, s, colors_);
  plan_ = make_plan(loop_, colors_);
  for (int x = 0; x < loop_.order(); ++x) {
    auto it = std::find_if(classes_.begin(), classes_.end(), [&](const auto& c) { return c.first == colors_[x]; });
    if (it == classes_.end()) {
      classes_.push_back({colors_[x], {}});
      it = classes_.end() - 1;
    }
    it->second.push_back(static_cast<Element>(x));
  }
  std::sort(classes_.begin(), classes_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

const std::vector<Element>& LoopProfile::color_class(std::uint64_t color) const {
  static const std::vector<Element> kEmpty;
  auto it = std::lower_bound(classes_.begin(), classes_.end(), color,
                             [](const auto& c, std::uint64_t v) { return c.first < v; });
  return it != classes_.end() && it->first == color ? it->second : kEmpty;
}

bool is_isomorphism(const LoopTable& a, const LoopTable& b, const Permutation& phi) {
  const int n = a.order();
  if (b.order() != n || static_cast<int>(phi.size()) != n) return false;
  ElementSet seen;
  for (Element v : phi) {
    if (v >= n || seen.test(v)) return false;
    seen.set(v);
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (b.mul(phi[x], phi[y]) != phi[a.mul(x, y)]) return false;
    }
  }
  return true;
}

std::optional<Permutation> are_isomorphic(const LoopProfile& a, const LoopProfile& b) {
  if (a.fingerprint() != b.fingerprint()) return std::nullopt;
  MapSearch search(a, b);
  std::vector<int> free(a.plan().generators.size(), -1);
  auto phi = search.find(free);
  if (phi && !is_isomorphism(a.loop(), b.loop(), *phi)) {
    throw Error(ErrorKind::InvalidArgument, "internal error: isomorphism search returned a non-isomorphism");
  }
  return phi;
}

std::optional<Permutation> are_isomorphic(const LoopTable& a, const LoopTable& b) {
  if (a.order() != b.order()) return std::nullopt;
  return are_isomorphic(LoopProfile(a), LoopProfile(b));
}

void AutGroup::for_each(const std::function<void(const Permutation&)>& visit) const {
  std::function<void(std::size_t, const Permutation&)> walk = [&](std::size_t level, const Permutation& acc) {
    if (level == transversals_.size()) {
      visit(acc);
      return;
    }
    for (const Permutation& t : transversals_[level]) walk(level + 1, compose(acc, t));
  };
  walk(0, identity_permutation(n_));
}

AutGroup automorphism_group(const LoopProfile& q) {
  const int n = q.loop().order();
  const SearchPlan& plan = q.plan();
  const std::size_t levels = plan.generators.size();
  std::vector<Permutation> gens;
  std::vector<std::size_t> gen_level;

  // Orbit of a point under the generators that fix base[0..level-1].
  auto orbit_of = [&](Element point, std::size_t level) {
    ElementSet in;
    std::vector<Element> orbit{point};
    in.set(point);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gen_level[g] < level) continue;
        const Element img = gens[g][orbit[i]];
        if (!in.test(img)) {
          in.set(img);
          orbit.push_back(img);
        }
      }
    }
    return in;
  };

  MapSearch search(q, q);
  std::vector<std::uint64_t> orbit_sizes(levels, 1);
  for (std::size_t level = levels; level-- > 0;) {
    const Element point = plan.generators[level];
    ElementSet orbit = orbit_of(point, level);
    ElementSet failed;
    std::vector<int> fixed(levels, -1);
    for (std::size_t j = 0; j < level; ++j) fixed[j] = plan.generators[j];
    for (Element c : q.color_class(q.colors()[point])) {
      if (orbit.test(c) || failed.test(c)) continue;
      fixed[level] = c;
      if (auto phi = search.find(fixed)) {
        gens.push_back(std::move(*phi));
        gen_level.push_back(level);
        orbit = orbit_of(point, level);
      } else {
        failed |= orbit_of(c, level);
      }
    }
    orbit_sizes[level] = orbit.count();
  }

  AutGroup out;
  out.n_ = n;
  out.base_ = plan.generators;
  out.order_ = 1;
  for (std::uint64_t s : orbit_sizes) out.order_ *= s;
  for (std::size_t level = 0; level < levels; ++level) {
    std::vector<Permutation> transversal{identity_permutation(n)};
    std::vector<Element> points{plan.generators[level]};
    ElementSet in;
    in.set(plan.generators[level]);
    for (std::size_t i = 0; i < transversal.size(); ++i) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gen_level[g] < level) continue;
        const Element img = gens[g][points[i]];
        if (in.test(img)) continue;
        in.set(img);
        points.push_back(img);
        transversal.push_back(compose(gens[g], transversal[i]));
      }
    }
    out.transversals_.push_back(std::move(transversal));
  }
  out.generators_ = std::move(gens);
  return out;
}

AutGroup automorphism_group(const LoopTable& q) { return automorphism_group(LoopProfile(q)); }

Cocycle act_on_cocycle(const Cocycle& f, const Permutation& alpha) {
  const int n = f.base_order();
  if (static_cast<int>(alpha.size()) != n) throw Error(ErrorKind::InvalidArgument, "automorphism degree mismatch");
  Cocycle out(f.prime(), n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) out.set(x, y, f(alpha[x], alpha[y]));
  }
  return out;
}

std::vector<Cocycle> representative_cocycles(const LoopTable& k, const CocycleSpaces& spaces, const AutGroup& aut,
                                             std::uint64_t budget) {
  const int p = spaces.comp.prime();
  const int dim = spaces.comp.dim();
  std::uint64_t total = 1;
  for (int i = 0; i < dim; ++i) {
    if (total > budget / static_cast<std::uint64_t>(p)) {
      throw Error(ErrorKind::ExplodedBudget, "|Comp| = " + std::to_string(p) + "^" + std::to_string(dim) +
                                                 " exceeds the enumeration budget");
    }
    total *= static_cast<std::uint64_t>(p);
  }
  if (total > budget) throw Error(ErrorKind::ExplodedBudget, "|Comp| exceeds the enumeration budget");

  // Matrix of each generator's action on Comp coordinates: column j holds
  // the Comp-part of (c_j)^alpha.
  const DirectSumDecomposer decomposer(spaces.cob, spaces.comp);
  const int cob_dim = spaces.cob.dim();
  std::vector<std::vector<std::vector<int>>> actions;
  for (const Permutation& alpha : aut.generators()) {
    std::vector<std::vector<int>> columns;
    for (const FpVector& c : spaces.comp.basis()) {
      const Cocycle moved = act_on_cocycle(Cocycle(k.order(), c), alpha);
      const std::vector<int> coords = decomposer.coordinates(moved.vector());
      columns.emplace_back(coords.begin() + cob_dim, coords.end());
    }
    actions.push_back(std::move(columns));
  }

  auto decode = [&](std::uint64_t index) {
    std::vector<int> digits(dim);
    for (int j = 0; j < dim; ++j) {
      digits[j] = static_cast<int>(index % static_cast<std::uint64_t>(p));
      index /= static_cast<std::uint64_t>(p);
    }
    return digits;
  };
  auto apply = [&](const std::vector<std::vector<int>>& columns, std::uint64_t index) {
    std::vector<int> out(dim, 0);
    for (int j = 0; j < dim && index != 0; ++j) {
      const int c = static_cast<int>(index % static_cast<std::uint64_t>(p));
      index /= static_cast<std::uint64_t>(p);
      if (c == 0) continue;
      for (int i = 0; i < dim; ++i) out[i] += c * columns[j][i];
    }
    std::uint64_t result = 0;
    for (int i = dim; i-- > 0;) result = result * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(out[i] % p);
    return result;
  };

  std::vector<std::uint64_t> visited((total + 63) / 64, 0);
  auto mark = [&](std::uint64_t i) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (visited[i >> 6] & bit) return false;
    visited[i >> 6] |= bit;
    return true;
  };
  std::vector<Cocycle> reps;
  std::vector<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (!mark(start)) continue;
    reps.emplace_back(k.order(), spaces.comp.combination(decode(start)));
    queue.assign(1, start);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& columns : actions) {
        const std::uint64_t next = apply(columns, queue[i]);
        if (mark(next)) queue.push_back(next);
      }
    }
  }
  return reps;
}

LoopTable principal_isotope(const LoopTable& q, Element a, Element b) {
  const int n = q.order();
  const Element e = q.mul(a, b);
  Permutation swap = identity_permutation(n);
  std::swap(swap[0], swap[e]);
  std::vector<Element> cells(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    const Element xb = q.rdiv(static_cast<Element>(x), b);
    for (int y = 0; y < n; ++y) {
      cells[swap[x] * n + swap[y]] = swap[q.mul(xb, q.ldiv(a, static_cast<Element>(y)))];
    }
  }
  return LoopTable(n, std::move(cells));
}

namespace {

struct QuickSignature {
  std::vector<int> orders;
  long long noncommuting = 0;
  friend bool operator==(const QuickSignature&, const QuickSignature&) = default;
};

QuickSignature quick_signature(const LoopTable& q) {
  QuickSignature s;
  const int n = q.order();
  for (int x = 0; x < n; ++x) {
    s.orders.push_back(left_power_order(q, static_cast<Element>(x)));
    for (int y = 0; y < n; ++y) s.noncommuting += q.mul(x, y) != q.mul(y, x);
  }
  std::sort(s.orders.begin(), s.orders.end());
  return s;
}

}  // namespace

bool are_isotopic(const LoopTable& a, const LoopTable& b) {
  const int n = a.order();
  if (b.order() != n) return false;
  const LoopProfile target(b);
  const QuickSignature want = quick_signature(b);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      LoopTable iso = principal_isotope(a, static_cast<Element>(x), static_cast<Element>(y));
      if (quick_signature(iso) != want) continue;
      if (are_isomorphic(LoopProfile(std::move(iso)), target)) return true;
    }
  }
  return false;
}

}  // namespace moufang
