#include "moufang/cocycles.hpp"

#include <string>

namespace moufang {

Cocycle::Cocycle(int p, int base_order) : index_{base_order}, values_(p, base_order * base_order) {}

Cocycle::Cocycle(int base_order, FpVector values) : index_{base_order}, values_(std::move(values)) {
  if (values_.size() != base_order * base_order) {
    throw Error(ErrorKind::InvalidArgument, "cocycle vector has wrong length");
  }
}

bool Cocycle::is_normalized() const {
  for (int x = 0; x < index_.n; ++x) {
    if ((*this)(0, x) != 0 || (*this)(x, 0) != 0) return false;
  }
  return true;
}

Cocycle& Cocycle::operator+=(const Cocycle& o) {
  values_ += o.values_;
  return *this;
}

Cocycle& Cocycle::operator-=(const Cocycle& o) {
  values_ -= o.values_;
  return *this;
}

Cocycle coboundary_of(const LoopTable& k, int p, std::span<const int> tau) {
  const int n = k.order();
  if (static_cast<int>(tau.size()) != n) throw Error(ErrorKind::InvalidArgument, "tau has wrong length");
  if (tau[0] % p != 0) throw Error(ErrorKind::TauNotNormalized, "tau(1) must be 0");
  Cocycle f(p, n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) f.set(x, y, tau[k.mul(x, y)] - tau[x] - tau[y]);
  }
  return f;
}

Subspace coboundary_space(const LoopTable& k, int p) {
  const int n = k.order();
  RowReducer reducer(p, n * n);
  std::vector<int> tau(n, 0);
  for (int x = 1; x < n; ++x) {
    tau[x] = 1;
    reducer.add_row(coboundary_of(k, p, tau).vector());
    tau[x] = 0;
  }
  return reducer.row_space();
}

namespace {

void add_normalization_rows(RowReducer& reducer, const PairIndexer& b, int p) {
  for (int x = 0; x < b.n; ++x) {
    FpVector row(p, b.size());
    row.set(b(0, x), 1);
    reducer.add_row(row);
    if (x != 0) {
      FpVector col(p, b.size());
      col.set(b(x, 0), 1);
      reducer.add_row(std::move(col));
    }
  }
}

}  // namespace

Subspace moufang_cocycle_space(const LoopTable& k, int p, McocOptions options) {
  const int n = k.order();
  const PairIndexer b{n};
  RowReducer reducer(p, b.size());
  add_normalization_rows(reducer, b, p);

  const long long total = static_cast<long long>(n) * n * n;
  const int block = options.block_rows > 0 ? options.block_rows : 4096;
  std::vector<FpVector> pending;
  pending.reserve(block);
  for (long long t = 0; t < total; ++t) {
    const int x = static_cast<int>(t / (n * n));
    const int y = static_cast<int>((t / n) % n);
    const int z = static_cast<int>(t % n);
    const Element xy = k.mul(x, y);
    const Element zx = k.mul(z, x);
    const Element yz = k.mul(y, z);
    FpVector row(p, b.size());
    row.add_at(b(xy, zx), 1);
    row.add_at(b(x, y), 1);
    row.add_at(b(z, x), 1);
    row.add_at(b(x, k.mul(yz, x)), -1);
    row.add_at(b(yz, x), -1);
    row.add_at(b(y, z), -1);
    if (row.is_zero()) continue;
    pending.push_back(std::move(row));
    if (static_cast<int>(pending.size()) == block) {
      for (FpVector& r : pending) reducer.add_row(std::move(r));
      pending.clear();
    }
  }
  for (FpVector& r : pending) reducer.add_row(std::move(r));
  return reducer.null_space();
}

Subspace group_cocycle_space(const LoopTable& k, int p) {
  const int n = k.order();
  const PairIndexer b{n};
  RowReducer reducer(p, b.size());
  add_normalization_rows(reducer, b, p);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        FpVector row(p, b.size());
        row.add_at(b(k.mul(x, y), z), 1);
        row.add_at(b(x, y), 1);
        row.add_at(b(x, k.mul(y, z)), -1);
        row.add_at(b(y, z), -1);
        if (!row.is_zero()) reducer.add_row(std::move(row));
      }
    }
  }
  return reducer.null_space();
}

CocycleSpaces build_spaces(const LoopTable& k, int p) {
  Subspace mcoc = moufang_cocycle_space(k, p);
  Subspace cob = coboundary_space(k, p);
  if (!mcoc.contains(cob)) {
    throw Error(ErrorKind::CoboundaryNotInMcoc, "a coboundary violates the Moufang cocycle identity");
  }
  Subspace comp = complement(cob, mcoc);
  return CocycleSpaces{std::move(mcoc), std::move(cob), std::move(comp)};
}

bool is_moufang_cocycle(const LoopTable& k, const Cocycle& f) {
  if (!f.is_normalized()) return false;
  const int n = k.order();
  const int p = f.prime();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Element xy = k.mul(x, y);
      for (int z = 0; z < n; ++z) {
        const Element yz = k.mul(y, z);
        const int lhs = f(xy, k.mul(z, x)) + f(x, y) + f(z, x);
        const int rhs = f(x, k.mul(yz, x)) + f(yz, x) + f(y, z);
        if ((lhs - rhs) % p != 0) return false;
      }
    }
  }
  return true;
}

bool is_group_cocycle(const LoopTable& k, const Cocycle& f) {
  const int n = k.order();
  const int p = f.prime();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const int lhs = f(k.mul(x, y), z) + f(x, y);
        const int rhs = f(x, k.mul(y, z)) + f(y, z);
        if ((lhs - rhs) % p != 0) return false;
      }
    }
  }
  return true;
}

ExtractedExtension cocycle_from_extension(const LoopTable& q, const SubloopSet& z) {
  const int size = z.size();
  if (size < 2 || q.order() % size != 0) throw Error(ErrorKind::WrongOrder, "fiber must have prime order");
  for (int d = 2; d * d <= size; ++d) {
    if (size % d == 0) throw Error(ErrorKind::WrongOrder, "fiber order " + std::to_string(size) + " is not prime");
  }
  const int p = size;
  if (p != 2 && p != 3) throw Error(ErrorKind::WrongOrder, "fiber order must be 2 or 3");
  const SubloopSet zq = center(q);
  if ((z.members & ~zq.members).any() || !z.contains(0)) {
    throw Error(ErrorKind::NotCentral, "fiber is not contained in the center");
  }

  Element gen = 0;
  for (int x = 1; x < q.order(); ++x) {
    if (z.contains(x)) {
      gen = static_cast<Element>(x);
      break;
    }
  }
  // a -> gen^a
  std::vector<int> log(q.order(), -1);
  Element power = 0;
  for (int a = 0; a < p; ++a) {
    log[power] = a;
    power = q.mul(power, gen);
  }

  Quotient quotient = quotient_loop(q, z);
  const int m = quotient.loop.order();
  std::vector<Element> section(m, 0);
  std::vector<bool> assigned(m, false);
  for (int x = 0; x < q.order(); ++x) {
    const Element c = quotient.coset_of[x];
    if (!assigned[c]) {
      assigned[c] = true;
      section[c] = static_cast<Element>(x);
    }
  }
  Cocycle f(p, m);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      const Element prod = q.mul(section[x], section[y]);
      const Element fiber = q.ldiv(section[quotient.loop.mul(x, y)], prod);
      f.set(x, y, log[fiber]);
    }
  }
  return ExtractedExtension{std::move(quotient.loop), std::move(f), std::move(quotient.coset_of), gen};
}

}  // namespace moufang
