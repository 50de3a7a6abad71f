#include "moufang/codeloops.hpp"

#include <array>
#include <bit>
#include <sstream>

#include "moufang/gf.hpp"

namespace moufang {

BooleanMap::BooleanMap(int d) : d_(d) {
  if (d < 0 || d > 24) throw Error(ErrorKind::InvalidArgument, "dimension out of range");
  values_.assign(std::size_t{1} << d, 0);
}

BooleanMap BooleanMap::from_table(int d, std::vector<std::uint8_t> values) {
  BooleanMap out(d);
  if (values.size() != out.values_.size()) throw Error(ErrorKind::InvalidArgument, "table must have 2^d entries");
  for (std::uint8_t v : values) {
    if (v > 1) throw Error(ErrorKind::InvalidArgument, "values must be 0 or 1");
  }
  if (values[0] != 0) throw Error(ErrorKind::InvalidArgument, "alpha(0) must be 0");
  out.values_ = std::move(values);
  return out;
}

void BooleanMap::set(Vec x, int value) {
  if (x == 0 && value % 2 != 0) throw Error(ErrorKind::InvalidArgument, "alpha(0) must be 0");
  values_.at(x) = static_cast<std::uint8_t>(value & 1);
}

int derived_form(const BooleanMap& alpha, std::span<const Vec> args) {
  if (args.empty()) throw Error(ErrorKind::InvalidArgument, "derived form needs at least one argument");
  if (args.size() == 1) return alpha(args[0]);
  std::vector<Vec> rest(args.begin() + 1, args.end());
  const Vec u = args[0];
  const Vec v = args[1];
  rest[0] = u ^ v;
  int value = derived_form(alpha, rest);
  rest[0] = u;
  value ^= derived_form(alpha, rest);
  rest[0] = v;
  value ^= derived_form(alpha, rest);
  return value;
}

int combinatorial_degree(const BooleanMap& alpha) {
  std::vector<std::uint8_t> anf = alpha.values();
  const Vec size = static_cast<Vec>(anf.size());
  for (Vec bit = 1; bit < size; bit <<= 1) {
    for (Vec x = 0; x < size; ++x) {
      if (x & bit) anf[x] ^= anf[x ^ bit];
    }
  }
  int degree = 0;
  for (Vec x = 0; x < size; ++x) {
    if (anf[x]) degree = std::max(degree, std::popcount(x));
  }
  return degree;
}

int PolarTriple::p_index(int, int i) { return i; }

int PolarTriple::c_index(int d, int i, int j) { return d + i * (2 * d - i - 1) / 2 + (j - i - 1); }

int PolarTriple::a_index(int d, int i, int j, int k) {
  int index = d + d * (d - 1) / 2;
  for (int a = 0; a < i; ++a) index += (d - 1 - a) * (d - 2 - a) / 2;
  for (int b = i + 1; b < j; ++b) index += d - 1 - b;
  return index + (k - j - 1);
}

namespace {

void sort3(int& i, int& j, int& k) {
  if (i > j) std::swap(i, j);
  if (j > k) std::swap(j, k);
  if (i > j) std::swap(i, j);
}

}  // namespace

int PolarTriple::P(int i) const { return static_cast<int>((bits >> p_index(d, i)) & 1); }

int PolarTriple::C(int i, int j) const {
  if (i == j) return 0;
  if (i > j) std::swap(i, j);
  return static_cast<int>((bits >> c_index(d, i, j)) & 1);
}

int PolarTriple::A(int i, int j, int k) const {
  sort3(i, j, k);
  if (i == j || j == k) return 0;
  return static_cast<int>((bits >> a_index(d, i, j, k)) & 1);
}

namespace {

void put_bit(std::uint64_t& bits, int index, int v) {
  const std::uint64_t mask = std::uint64_t{1} << index;
  bits = (v & 1) ? (bits | mask) : (bits & ~mask);
}

}  // namespace

void PolarTriple::set_P(int i, int v) { put_bit(bits, p_index(d, i), v); }

void PolarTriple::set_C(int i, int j, int v) {
  if (i == j) throw Error(ErrorKind::InvalidArgument, "C(e_i, e_i) is always 0");
  if (i > j) std::swap(i, j);
  put_bit(bits, c_index(d, i, j), v);
}

void PolarTriple::set_A(int i, int j, int k, int v) {
  sort3(i, j, k);
  if (i == j || j == k) throw Error(ErrorKind::InvalidArgument, "A vanishes on repeated basis vectors");
  put_bit(bits, a_index(d, i, j, k), v);
}

bool PolarTriple::associator_zero() const { return (bits >> (d + d * (d - 1) / 2)) == 0; }

namespace {

int coord(Vec x, int i) { return static_cast<int>((x >> i) & 1); }

}  // namespace

int eval_A(const PolarTriple& t, Vec x, Vec y, Vec z) {
  int sum = 0;
  for (int i = 0; i < t.d; ++i) {
    if (!coord(x, i)) continue;
    for (int j = 0; j < t.d; ++j) {
      if (!coord(y, j)) continue;
      for (int k = 0; k < t.d; ++k) sum ^= coord(z, k) & t.A(i, j, k);
    }
  }
  return sum;
}

int eval_C(const PolarTriple& t, Vec x, Vec y) {
  const int d = t.d;
  int sum = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) sum ^= coord(x, i) & coord(y, j) & t.C(i, j);
  }
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) sum ^= coord(x, i) & coord(x, j) & coord(y, k) & t.A(i, j, k);
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) sum ^= coord(x, i) & coord(y, j) & coord(y, k) & t.A(i, j, k);
    }
  }
  return sum;
}

int eval_P(const PolarTriple& t, Vec x) {
  const int d = t.d;
  int sum = 0;
  for (int i = 0; i < d; ++i) {
    if (!coord(x, i)) continue;
    sum ^= t.P(i);
    for (int j = i + 1; j < d; ++j) {
      if (!coord(x, j)) continue;
      sum ^= t.C(i, j);
      for (int k = j + 1; k < d; ++k) sum ^= coord(x, k) & t.A(i, j, k);
    }
  }
  return sum;
}

BooleanMap polar_map(const PolarTriple& t) {
  BooleanMap out(t.d);
  for (Vec x = 1; x < (Vec{1} << t.d); ++x) out.set(x, eval_P(t, x));
  return out;
}

PolarTriple triple_of_map(const BooleanMap& p) {
  if (combinatorial_degree(p) > 3) throw Error(ErrorKind::InvalidArgument, "map has combinatorial degree above 3");
  const int d = p.dim();
  PolarTriple t{d, 0};
  for (int i = 0; i < d; ++i) {
    const Vec ei = Vec{1} << i;
    t.set_P(i, p(ei));
    for (int j = i + 1; j < d; ++j) {
      const Vec ej = Vec{1} << j;
      t.set_C(i, j, p(ei | ej) ^ p(ei) ^ p(ej));
      for (int k = j + 1; k < d; ++k) {
        const Vec ek = Vec{1} << k;
        t.set_A(i, j, k,
                p(ei | ej | ek) ^ p(ei | ej) ^ p(ei | ek) ^ p(ej | ek) ^ p(ei) ^ p(ej) ^ p(ek));
      }
    }
  }
  return t;
}

Gf2Matrix Gf2Matrix::identity(int d) {
  Gf2Matrix m{d, std::vector<Vec>(d)};
  for (int i = 0; i < d; ++i) m.rows[i] = Vec{1} << i;
  return m;
}

Vec Gf2Matrix::apply(Vec x) const {
  Vec out = 0;
  for (int i = 0; i < d; ++i) {
    if (coord(x, i)) out ^= rows[i];
  }
  return out;
}

bool Gf2Matrix::invertible() const {
  std::vector<Vec> work = rows;
  for (int col = 0; col < d; ++col) {
    const Vec bit = Vec{1} << col;
    int pivot = -1;
    for (int r = col; r < d; ++r) {
      if (work[r] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(work[col], work[pivot]);
    for (int r = col + 1; r < d; ++r) {
      if (work[r] & bit) work[r] ^= work[col];
    }
  }
  return true;
}

Gf2Matrix Gf2Matrix::inverse() const {
  std::vector<Vec> work = rows;
  Gf2Matrix inv = identity(d);
  for (int col = 0; col < d; ++col) {
    const Vec bit = Vec{1} << col;
    int pivot = -1;
    for (int r = col; r < d; ++r) {
      if (work[r] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
    std::swap(work[col], work[pivot]);
    std::swap(inv.rows[col], inv.rows[pivot]);
    for (int r = 0; r < d; ++r) {
      if (r != col && (work[r] & bit)) {
        work[r] ^= work[col];
        inv.rows[r] ^= inv.rows[col];
      }
    }
  }
  return inv;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
  Gf2Matrix out{a.d, std::vector<Vec>(a.d)};
  for (int i = 0; i < a.d; ++i) out.rows[i] = b.apply(a.rows[i]);
  return out;
}

std::vector<Gf2Matrix> gl_generators(int d) {
  if (d < 2) return {};
  Gf2Matrix transvection = Gf2Matrix::identity(d);
  transvection.rows[0] = 0b11;
  Gf2Matrix shift{d, std::vector<Vec>(d)};
  for (int i = 0; i < d; ++i) shift.rows[i] = Vec{1} << ((i + 1) % d);
  return {transvection, shift};
}

PolarTriple transform_triple(const PolarTriple& t, const Gf2Matrix& m) {
  if (m.d != t.d) throw Error(ErrorKind::InvalidArgument, "matrix and triple dimensions differ");
  if (!m.invertible()) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
  const int d = t.d;
  PolarTriple out{d, 0};
  for (int i = 0; i < d; ++i) {
    out.set_P(i, eval_P(t, m.rows[i]));
    for (int j = i + 1; j < d; ++j) {
      out.set_C(i, j, eval_C(t, m.rows[i], m.rows[j]));
      for (int k = j + 1; k < d; ++k) out.set_A(i, j, k, eval_A(t, m.rows[i], m.rows[j], m.rows[k]));
    }
  }
  return out;
}

namespace {

// For fixed M the action on packed triples is GF(2)-linear; it is applied
// byte by byte through precomputed tables.
class PackedAction {
 public:
  PackedAction(int d, const Gf2Matrix& m) : bytes_((PolarTriple::size(d) + 7) / 8), tables_(bytes_) {
    const int n = PolarTriple::size(d);
    std::vector<std::uint64_t> image(n);
    for (int b = 0; b < n; ++b) image[b] = transform_triple(PolarTriple{d, std::uint64_t{1} << b}, m).bits;
    for (int byte = 0; byte < bytes_; ++byte) {
      for (int v = 0; v < 256; ++v) {
        std::uint64_t sum = 0;
        for (int bit = 0; bit < 8; ++bit) {
          const int b = byte * 8 + bit;
          if (b < n && ((v >> bit) & 1)) sum ^= image[b];
        }
        tables_[byte][v] = sum;
      }
    }
  }

  std::uint64_t apply(std::uint64_t bits) const {
    std::uint64_t out = 0;
    for (int byte = 0; byte < bytes_; ++byte) out ^= tables_[byte][(bits >> (8 * byte)) & 0xff];
    return out;
  }

 private:
  int bytes_;
  std::vector<std::array<std::uint64_t, 256>> tables_;
};

}  // namespace

std::vector<PolarTriple> triple_orbit_representatives(int d) {
  if (d < 0 || d > 5) throw Error(ErrorKind::InvalidArgument, "triple orbit sweep supports d <= 5");
  std::vector<PolarTriple> reps;
  if (d < 3) return reps;
  std::vector<PackedAction> actions;
  for (const Gf2Matrix& g : gl_generators(d)) actions.emplace_back(d, g);

  const std::uint64_t total = std::uint64_t{1} << PolarTriple::size(d);
  // Triples below this value have A = 0; A = 0 is preserved by GL(V).
  const std::uint64_t first = std::uint64_t{1} << (d + d * (d - 1) / 2);
  std::vector<std::uint64_t> marked((total + 63) / 64, 0);
  auto mark = [&](std::uint64_t i) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (marked[i >> 6] & bit) return false;
    marked[i >> 6] |= bit;
    return true;
  };
  std::vector<std::uint32_t> queue;
  for (std::uint64_t start = first; start < total; ++start) {
    if (!mark(start)) continue;
    reps.push_back(PolarTriple{d, start});
    queue.assign(1, static_cast<std::uint32_t>(start));
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const PackedAction& a : actions) {
        const std::uint64_t next = a.apply(queue[i]);
        if (mark(next)) queue.push_back(static_cast<std::uint32_t>(next));
      }
    }
  }
  return reps;
}

LoopTable realize_code_loop(const PolarTriple& t) {
  const int d = t.d;
  if (d < 0 || d > 7) throw Error(ErrorKind::InvalidArgument, "code loop order exceeds 256");
  const int m = 1 << d;
  auto var = [m](Vec x, Vec y) { return static_cast<int>(x) * m + static_cast<int>(y); };
  LinearSystem system(2, m * m);
  std::vector<std::pair<int, int>> terms;
  auto equation = [&](std::initializer_list<int> vars, int rhs) {
    terms.clear();
    for (int v : vars) terms.emplace_back(v, 1);
    system.add_equation(terms, rhs);
  };
  for (Vec x = 0; x < static_cast<Vec>(m); ++x) {
    equation({var(0, x)}, 0);
    equation({var(x, 0)}, 0);
    equation({var(x, x)}, eval_P(t, x));
    for (Vec y = x + 1; y < static_cast<Vec>(m); ++y) equation({var(x, y), var(y, x)}, eval_C(t, x, y));
  }
  for (Vec x = 1; x < static_cast<Vec>(m); ++x) {
    for (Vec y = 1; y < static_cast<Vec>(m); ++y) {
      for (Vec z = 1; z < static_cast<Vec>(m); ++z) {
        equation({var(x, y), var(x ^ y, z), var(y, z), var(x, y ^ z)}, eval_A(t, x, y, z));
      }
    }
  }
  const auto f = system.solve();
  if (!f) throw Error(ErrorKind::Unrealizable, "no cocycle has the prescribed squares, commutators and associators");

  const int n = 2 * m;
  std::vector<Element> cells(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      const int twist = f->get(var(x, y));
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) cells[(2 * x + a) * n + 2 * y + b] = static_cast<Element>(2 * (x ^ y) + (a ^ b ^ twist));
      }
    }
  }
  LoopTable q(n, std::move(cells));
  SubloopSet fiber{n, {}};
  fiber.members.set(0);
  fiber.members.set(1);
  if (!is_moufang(q) || triple_of_loop(q, fiber) != t) {
    throw Error(ErrorKind::Unrealizable, "realized loop does not reproduce the triple");
  }
  return q;
}

namespace {

bool is_elementary_abelian_2group(const LoopTable& k) {
  for (int x = 0; x < k.order(); ++x) {
    if (k.mul(x, x) != 0) return false;
  }
  return is_commutative(k) && is_associative(k);
}

}  // namespace

PolarTriple triple_of_loop(const LoopTable& q, const SubloopSet& z) {
  if (z.size() != 2 || !z.contains(0)) throw Error(ErrorKind::NotCodeLoop, "Z must have order 2");
  const SubloopSet zq = center(q);
  if ((z.members & ~zq.members).any()) throw Error(ErrorKind::NotCodeLoop, "Z is not central");
  const Quotient quotient = quotient_loop(q, z);
  const LoopTable& v = quotient.loop;
  if (!is_elementary_abelian_2group(v)) throw Error(ErrorKind::NotCodeLoop, "Q/Z is not elementary abelian");

  std::vector<Element> section(v.order(), 0);
  std::vector<bool> assigned(v.order(), false);
  for (int x = 0; x < q.order(); ++x) {
    const Element c = quotient.coset_of[x];
    if (!assigned[c]) {
      assigned[c] = true;
      section[c] = static_cast<Element>(x);
    }
  }
  std::vector<Element> basis;
  ElementSet spanned;
  spanned.set(0);
  for (int x = 1; x < v.order(); ++x) {
    if (spanned.test(x)) continue;
    basis.push_back(section[x]);
    ElementSet next = spanned;
    for (int s = 0; s < v.order(); ++s) {
      if (spanned.test(s)) next.set(v.mul(s, x));
    }
    spanned = next;
  }

  auto value = [](Element e) { return e == 0 ? 0 : 1; };
  const int d = static_cast<int>(basis.size());
  PolarTriple t{d, 0};
  for (int i = 0; i < d; ++i) {
    const Element x = basis[i];
    t.set_P(i, value(q.mul(x, x)));
    for (int j = i + 1; j < d; ++j) {
      const Element y = basis[j];
      t.set_C(i, j, value(q.ldiv(q.mul(y, x), q.mul(x, y))));
      for (int k = j + 1; k < d; ++k) {
        const Element w = basis[k];
        t.set_A(i, j, k, value(q.ldiv(q.mul(x, q.mul(y, w)), q.mul(q.mul(x, y), w))));
      }
    }
  }
  return t;
}

bool has_non_elementary_central_quotient(const LoopTable& q) {
  const SubloopSet zq = center(q);
  for (int x = 1; x < q.order(); ++x) {
    if (!zq.contains(static_cast<Element>(x)) || q.mul(x, x) != 0) continue;
    SubloopSet z{q.order(), {}};
    z.members.set(0);
    z.members.set(x);
    if (!is_elementary_abelian_2group(quotient_loop(q, z).loop)) return true;
  }
  return false;
}

std::string format_triple(const PolarTriple& t) {
  const int d = t.d;
  const int c_start = d;
  const int a_start = d + d * (d - 1) / 2;
  const int end = PolarTriple::size(d);
  auto block = [&](int from, int to) {
    std::string s;
    for (int b = from; b < to; ++b) s += ((t.bits >> b) & 1) ? '1' : '0';
    return s;
  };
  std::ostringstream out;
  out << "d=" << d << " P=" << block(0, c_start) << " C=" << block(c_start, a_start) << " A=" << block(a_start, end);
  return out.str();
}

PolarTriple parse_triple(const std::string& line) {
  std::istringstream in(line);
  std::string fields[4];
  for (std::string& f : fields) {
    if (!(in >> f)) throw Error(ErrorKind::ParseError, "expected d=, P=, C= and A= fields");
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::ParseError, "unexpected trailing text '" + extra + "'");
  const char* keys[4] = {"d=", "P=", "C=", "A="};
  for (int i = 0; i < 4; ++i) {
    if (fields[i].rfind(keys[i], 0) != 0) throw Error(ErrorKind::ParseError, std::string("expected field ") + keys[i]);
    fields[i].erase(0, 2);
  }
  int d = 0;
  try {
    std::size_t used = 0;
    d = std::stoi(fields[0], &used);
    if (used != fields[0].size()) throw std::invalid_argument("d");
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad dimension '" + fields[0] + "'");
  }
  if (d < 0 || d > 7) throw Error(ErrorKind::ParseError, "dimension must be between 0 and 7");
  const std::size_t lengths[3] = {static_cast<std::size_t>(d), static_cast<std::size_t>(d * (d - 1) / 2),
                                  static_cast<std::size_t>(d * (d - 1) * (d - 2) / 6)};
  PolarTriple t{d, 0};
  int bit = 0;
  for (int i = 0; i < 3; ++i) {
    const std::string& s = fields[i + 1];
    if (s.size() != lengths[i]) {
      throw Error(ErrorKind::ParseError, std::string(keys[i + 1]) + " needs " + std::to_string(lengths[i]) + " bits");
    }
    for (char c : s) {
      if (c != '0' && c != '1') throw Error(ErrorKind::ParseError, "bits must be 0 or 1");
      if (c == '1') t.bits |= std::uint64_t{1} << bit;
      ++bit;
    }
  }
  return t;
}

}  // namespace moufang
