#include "moufang/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <ostream>
#include <thread>

#include "moufang/codeloops.hpp"
#include "moufang/extend.hpp"

namespace moufang {

std::optional<std::size_t> LoopDatabase::find(const LoopProfile& q) const {
  auto it = buckets_.find(q.fingerprint());
  if (it == buckets_.end()) return std::nullopt;
  for (std::size_t i : it->second) {
    if (are_isomorphic(q, profiles_[i])) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> LoopDatabase::find_name(const std::string& name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name == name) return i;
  }
  return std::nullopt;
}

LoopDatabase::Inserted LoopDatabase::insert(LoopTable q, std::string name, std::string provenance) {
  return insert(LoopProfile(std::move(q)), std::move(name), std::move(provenance));
}

LoopDatabase::Inserted LoopDatabase::insert(LoopProfile q, std::string name, std::string provenance) {
  if (auto found = find(q)) return {*found, false};
  const std::size_t index = entries_.size();
  entries_.push_back(LoopEntry{std::move(name), q.loop(), q.fingerprint(), std::move(provenance)});
  buckets_[q.fingerprint()].push_back(index);
  profiles_.push_back(std::move(q));
  return {index, true};
}

void LoopDatabase::append(LoopTable q, std::string name, std::string provenance) {
  LoopProfile profile(std::move(q));
  const std::size_t index = entries_.size();
  entries_.push_back(LoopEntry{std::move(name), profile.loop(), profile.fingerprint(), std::move(provenance)});
  buckets_[profile.fingerprint()].push_back(index);
  profiles_.push_back(std::move(profile));
}

void LoopDatabase::canonicalize() {
  std::vector<std::size_t> order(entries_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return entries_[a].fingerprint < entries_[b].fingerprint; });
  std::vector<LoopEntry> entries;
  std::vector<LoopProfile> profiles;
  buckets_.clear();
  for (std::size_t i = 0; i < order.size(); ++i) {
    entries.push_back(std::move(entries_[order[i]]));
    profiles.push_back(std::move(profiles_[order[i]]));
    entries.back().name = "M" + std::to_string(entries.back().table.order()) + "_" + std::to_string(i + 1);
    buckets_[entries.back().fingerprint].push_back(i);
  }
  entries_ = std::move(entries);
  profiles_ = std::move(profiles);
}

void RunConfig::validate() const {
  if (prime != 2 && prime != 3) throw Error(ErrorKind::InvalidArgument, "prime must be 2 or 3");
  if (budget < 1) throw Error(ErrorKind::InvalidArgument, "budget must be at least 1");
  if (jobs < 1) throw Error(ErrorKind::InvalidArgument, "jobs must be at least 1");
  if (target_exponent < 0) throw Error(ErrorKind::InvalidArgument, "exponent must be nonnegative");
}

namespace {

bool is_elementary_abelian(const LoopTable& k, int p) {
  if (prime_power_exponent(k.order(), p) < 0) return false;
  for (int x = 0; x < k.order(); ++x) {
    if (element_order(k, static_cast<Element>(x)) > p) return false;
  }
  return is_commutative(k) && is_associative(k);
}

struct BaseOutcome {
  BaseReport report;
  LoopDatabase loops;
};

BaseOutcome extend_base(const LoopEntry& base, const RunConfig& cfg) {
  BaseOutcome out;
  out.report.base = base.name;
  const LoopTable& k = base.table;
  const bool nonassoc_only = cfg.mode == Mode::NonassociativeOnly;
  if (nonassoc_only && is_prunable_base(k)) {
    out.report.pruned = true;
    return out;
  }
  if (k.order() * cfg.prime > kMaxOrder) throw Error(ErrorKind::InvalidArgument, "extension order exceeds 256");

  const CocycleSpaces spaces = build_spaces(k, cfg.prime);
  std::uint64_t size = 1;
  bool over = false;
  for (int i = 0; i < spaces.comp.dim() && !over; ++i) {
    if (size > cfg.budget / static_cast<std::uint64_t>(cfg.prime)) over = true;
    size *= static_cast<std::uint64_t>(cfg.prime);
  }
  over = over || size > cfg.budget;

  if (over) {
    const int d = prime_power_exponent(k.order(), 2);
    if (!(cfg.prime == 2 && nonassoc_only && d <= 5 && is_elementary_abelian(k, 2))) {
      throw Error(ErrorKind::BudgetExceeded, "complement of " + base.name + " exceeds the budget and no other route applies");
    }
    out.report.code_loop_route = true;
    const std::vector<PolarTriple> triples = triple_orbit_representatives(d);
    out.report.cocycles = triples.size();
    for (std::size_t i = 0; i < triples.size(); ++i) {
      out.loops.insert(realize_code_loop(triples[i]), {}, base.name + " t" + std::to_string(i + 1));
    }
  } else {
    const AutGroup aut = automorphism_group(LoopProfile(k));
    const std::vector<Cocycle> reps = representative_cocycles(k, spaces, aut, cfg.budget);
    out.report.cocycles = reps.size();
    for (std::size_t i = 0; i < reps.size(); ++i) {
      LoopTable q = central_extension(k, reps[i]);
      if (nonassoc_only && is_associative(q)) continue;
      out.loops.insert(std::move(q), {}, base.name + " f" + std::to_string(i + 1));
    }
  }
  out.report.distinct = out.loops.size();
  return out;
}

// Runs task(i) for i in [0, count) on up to jobs threads; exceptions are
// rethrown in index order.
template <typename Task>
void run_indexed(std::size_t count, int jobs, Task task) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

EnumerationResult enumerate_order(const LoopDatabase& bases, const RunConfig& cfg) {
  cfg.validate();
  std::vector<BaseOutcome> outcomes(bases.size());
  run_indexed(bases.size(), cfg.jobs, [&](std::size_t i) { outcomes[i] = extend_base(bases[i], cfg); });

  EnumerationResult result;
  std::vector<int> multiplicity;
  for (BaseOutcome& outcome : outcomes) {
    for (std::size_t j = 0; j < outcome.loops.size(); ++j) {
      const auto [index, added] =
          result.loops.insert(outcome.loops.profile(j), {}, outcome.loops[j].provenance);
      if (added) multiplicity.push_back(0);
      ++multiplicity[index];
    }
    result.stats.hits += outcome.loops.size();
    result.stats.bases.push_back(std::move(outcome.report));
  }
  for (int m : multiplicity) result.stats.max_multiplicity = std::max(result.stats.max_multiplicity, m);
  result.loops.canonicalize();
  return result;
}

std::vector<LoopDatabase> bootstrap(const RunConfig& cfg) {
  cfg.validate();
  RunConfig step = cfg;
  step.mode = Mode::AllLoops;
  std::vector<LoopDatabase> levels;
  LoopDatabase current;
  current.append(LoopTable(), "M1_1");
  for (int k = 1; k <= cfg.target_exponent; ++k) {
    current = enumerate_order(current, step).loops;
    levels.push_back(current);
  }
  return levels;
}

LoopDatabase three_generated(const LoopDatabase& loops) {
  LoopDatabase out;
  for (const LoopEntry& e : loops.entries()) {
    if (!is_prunable_base(e.table)) out.append(e.table, e.name, e.provenance);
  }
  return out;
}

std::vector<DimsRow> dims_report(const LoopDatabase& bases, int p, std::uint64_t budget, int jobs) {
  std::vector<DimsRow> rows(bases.size());
  run_indexed(bases.size(), jobs, [&](std::size_t i) {
    const LoopTable& k = bases[i].table;
    const CocycleSpaces spaces = build_spaces(k, p);
    DimsRow& row = rows[i];
    row.name = bases[i].name;
    row.dim_mcoc = spaces.mcoc.dim();
    row.dim_cob = spaces.cob.dim();
    row.dim_comp = spaces.comp.dim();
    try {
      row.x_size = representative_cocycles(k, spaces, automorphism_group(bases.profile(i)), budget).size();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ExplodedBudget) throw;
    }
  });
  return rows;
}

void write_dims_tsv(std::ostream& out, const std::vector<DimsRow>& rows) {
  out << "name\tdim_mcoc\tdim_cob\tdim_comp\tx_size\n";
  for (const DimsRow& r : rows) {
    out << r.name << '\t' << r.dim_mcoc << '\t' << r.dim_cob << '\t' << r.dim_comp << '\t';
    if (r.x_size) {
      out << *r.x_size;
    } else {
      out << '-';
    }
    out << '\n';
  }
}

std::string to_string(OrderVerdict v) {
  switch (v) {
    case OrderVerdict::AllAssociative:
      return "all-associative";
    case OrderVerdict::NonassociativeExists:
      return "nonassociative-exists";
    case OrderVerdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Every Moufang loop of order 2m, m > 1 odd, is associative iff the
// exponents of m are at most 2, p_j != 1 mod p_i, and p_j^2 != 1 mod p_i
// whenever p_j has exponent 2.
bool twice_odd_all_associative(std::uint64_t m) {
  const auto f = factorize(m);
  for (const auto& [q, e] : f) {
    if (e > 2) return false;
  }
  for (const auto& [pi, ei] : f) {
    for (const auto& [pj, ej] : f) {
      if (pj % pi == 1) return false;
      if (ej == 2 && (pj * pj) % pi == 1) return false;
    }
  }
  return true;
}

}  // namespace

OrderVerdict order_filter(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "order must be positive");
  int twos = 0;
  std::uint64_t m = n;
  while (m % 2 == 0) {
    m /= 2;
    ++twos;
  }
  if (m == 1) return twos > 3 ? OrderVerdict::NonassociativeExists : OrderVerdict::AllAssociative;
  if (twos == 1) {
    return twice_odd_all_associative(m) ? OrderVerdict::AllAssociative : OrderVerdict::NonassociativeExists;
  }
  // 2^a m with a >= 2 and m > 1 odd: the product of a dihedral group of order
  // 2m and a cyclic group of order 2^(a-2) is a nonabelian group of order n/2.
  if (twos >= 2) return OrderVerdict::NonassociativeExists;

  const auto f = factorize(n);
  const std::uint64_t p = f.front().first;
  const int alpha = f.front().second;
  bool rest_small = true;
  for (std::size_t i = 1; i < f.size(); ++i) rest_small = rest_small && f[i].second <= 2;
  if (rest_small && (alpha <= 3 || (p >= 5 && alpha <= 4))) return OrderVerdict::AllAssociative;

  // A nonassociative loop of order d | n times an abelian group of order n/d.
  if (n % 81 == 0) return OrderVerdict::NonassociativeExists;
  for (const auto& [q, e] : f) {
    if (e >= 5) return OrderVerdict::NonassociativeExists;
  }
  for (const auto& [pi, ei] : f) {
    for (const auto& [qj, ej] : f) {
      if (pi < qj && ej >= 3 && qj % pi == 1) return OrderVerdict::NonassociativeExists;
    }
  }
  if (f.size() == 2 && f[0].second == 1 && f[1].second == 3 && f[1].first % f[0].first != 1) {
    return OrderVerdict::AllAssociative;
  }
  return OrderVerdict::Unknown;
}

}  // namespace moufang
