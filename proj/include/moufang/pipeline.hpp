#pragma once

// Bottom-up enumeration of Moufang p-loops by central extensions, loop
// databases with isomorphism dedup, and the text formats used by the CLI.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moufang/autiso.hpp"
#include "moufang/cocycles.hpp"
#include "moufang/loop.hpp"

namespace moufang {

struct LoopEntry {
  std::string name;
  LoopTable table;
  Fingerprint fingerprint;
  std::string provenance;
};

// Pairwise nonisomorphic loops. Insertion buckets candidates by
// fingerprint and confirms with an isomorphism test inside the bucket.
class LoopDatabase {
 public:
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<LoopEntry>& entries() const noexcept { return entries_; }
  const LoopEntry& operator[](std::size_t i) const { return entries_[i]; }
  const LoopProfile& profile(std::size_t i) const { return profiles_[i]; }

  // Index of an entry isomorphic to q, if any.
  std::optional<std::size_t> find(const LoopProfile& q) const;
  std::optional<std::size_t> find(const LoopTable& q) const { return find(LoopProfile(q)); }
  std::optional<std::size_t> find_name(const std::string& name) const;

  struct Inserted {
    std::size_t index;
    bool added;
  };
  // Adds q unless an isomorphic entry exists.
  Inserted insert(LoopTable q, std::string name = {}, std::string provenance = {});
  Inserted insert(LoopProfile q, std::string name = {}, std::string provenance = {});
  // Adds q without an isomorphism check; used when reading files.
  void append(LoopTable q, std::string name, std::string provenance = {});

  // Stable sort by fingerprint, then names M<order>_<seq> with seq from 1.
  void canonicalize();

 private:
  std::vector<LoopEntry> entries_;
  std::vector<LoopProfile> profiles_;
  std::map<Fingerprint, std::vector<std::size_t>> buckets_;
};

enum class Mode { AllLoops, NonassociativeOnly };

struct RunConfig {
  int prime = 2;
  int target_exponent = 0;
  Mode mode = Mode::AllLoops;
  int jobs = 1;
  std::uint64_t budget = std::uint64_t{1} << 20;
  std::string input;
  std::string output;

  // Throws InvalidArgument.
  void validate() const;
};

struct BaseReport {
  std::string base;
  bool pruned = false;
  bool code_loop_route = false;
  std::size_t cocycles = 0;  // |X|, or the number of triples on the code loop route
  std::size_t distinct = 0;  // pairwise nonisomorphic kept extensions of this base
};

struct EnumerationStats {
  std::vector<BaseReport> bases;
  std::size_t hits = 0;  // sum of per-base distinct counts
  int max_multiplicity = 0;  // largest number of bases producing one loop
};

struct EnumerationResult {
  LoopDatabase loops;
  EnumerationStats stats;
};

// All central extensions of the bases by GF(p), up to isomorphism. In
// nonassociative-only mode at most two-generated bases are skipped and groups
// are discarded; an elementary abelian 2-group base whose complement exceeds
// the budget is handled through code loop triples. Other bases over budget
// raise BudgetExceeded. The result is canonicalized.
EnumerationResult enumerate_order(const LoopDatabase& bases, const RunConfig& cfg);

// All Moufang loops of orders p, p^2, .., p^target_exponent, starting from
// the trivial loop in all-loops mode.
std::vector<LoopDatabase> bootstrap(const RunConfig& cfg);

// Bases that are not two-generated.
LoopDatabase three_generated(const LoopDatabase& loops);

struct DimsRow {
  std::string name;
  int dim_mcoc = 0;
  int dim_cob = 0;
  int dim_comp = 0;
  std::optional<std::uint64_t> x_size;  // empty when p^dim_comp exceeds the budget
};

std::vector<DimsRow> dims_report(const LoopDatabase& bases, int p, std::uint64_t budget = std::uint64_t{1} << 20,
                                 int jobs = 1);
void write_dims_tsv(std::ostream& out, const std::vector<DimsRow>& rows);

enum class OrderVerdict { AllAssociative, NonassociativeExists, Unknown };
std::string to_string(OrderVerdict v);
OrderVerdict order_filter(std::uint64_t n);

// Text format: optional "# provenance: ..." line, then "loop <name> <n>"
// followed by n rows of n 1-based entries; loops separated by blank lines,
// other "#" lines are comments. Throws ParseError or InvalidTable.
LoopDatabase read_loops(std::istream& in);
LoopDatabase read_loops_file(const std::string& path);
void write_loops(std::ostream& out, const LoopDatabase& db);
void write_loops_file(const std::string& path, const LoopDatabase& db);

}  // namespace moufang
