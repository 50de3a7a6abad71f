// moufang: command line front end for the enumeration library.
//
// Exit status: 0 on success, 2 on parse or validation errors.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "moufang/autiso.hpp"
#include "moufang/codeloops.hpp"
#include "moufang/pipeline.hpp"

namespace {

using namespace moufang;

constexpr int kUsageError = 2;

// "FILE#NAME", or just "FILE" when the file holds a single loop.
LoopTable load_loop(const std::string& spec) {
  const auto hash = spec.rfind('#');
  const std::string path = hash == std::string::npos ? spec : spec.substr(0, hash);
  const LoopDatabase db = read_loops_file(path);
  if (hash == std::string::npos) {
    if (db.size() != 1) throw Error(ErrorKind::InvalidArgument, path + " holds " + std::to_string(db.size()) + " loops; use FILE#NAME");
    return db[0].table;
  }
  const std::string name = spec.substr(hash + 1);
  const auto index = db.find_name(name);
  if (!index) throw Error(ErrorKind::InvalidArgument, "no loop named " + name + " in " + path);
  return db[*index].table;
}

// Writes to the file if one is given, else to standard output.
template <typename Writer>
void emit(const std::string& path, Writer write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  write(out);
}

void summarize(std::ostream& out, const LoopDatabase& db) {
  std::size_t groups = 0;
  std::size_t commutative = 0;
  for (const LoopEntry& e : db.entries()) {
    groups += e.fingerprint.associative;
    commutative += e.fingerprint.commutative;
  }
  const int order = db.empty() ? 0 : db[0].table.order();
  out << "order " << order << ": " << db.size() << " loops, " << groups << " groups, " << db.size() - groups
      << " nonassociative, " << commutative << " commutative\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumeration of Moufang p-loops by central extensions"};
  app.require_subcommand(1);

  RunConfig cfg;
  bool nonassoc_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "Extend every loop of an input file by GF(p)");
  enumerate->add_option("--prime", cfg.prime, "2 or 3")->required();
  enumerate->add_option("--in", cfg.input, "Loops file with the bases")->required();
  enumerate->add_option("--out", cfg.output, "Output loops file (default: standard output)");
  enumerate->add_flag("--nonassociative-only", nonassoc_only, "Skip two-generated bases and drop groups");
  enumerate->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_option("--budget", cfg.budget, "Largest |Comp| enumerated directly")->check(CLI::PositiveNumber);

  int upto = 0;
  std::string out_dir;
  auto* boot = app.add_subcommand("bootstrap", "All Moufang loops of orders p, p^2, .., p^EXP");
  boot->add_option("--prime", cfg.prime, "2 or 3")->required();
  boot->add_option("--upto", upto, "Largest exponent")->required()->check(CLI::NonNegativeNumber);
  boot->add_option("--out-dir", out_dir, "Directory receiving one loops file per order");
  boot->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  boot->add_option("--budget", cfg.budget, "Largest |Comp| enumerated directly")->check(CLI::PositiveNumber);

  std::string dims_in;
  std::string dims_out;
  bool skip_two_generated = false;
  auto* dims = app.add_subcommand("dims", "Cocycle space dimensions and |X| per base loop (TSV)");
  dims->add_option("--in", dims_in, "Loops file")->required();
  dims->add_option("--prime", cfg.prime, "2 or 3");
  dims->add_option("--out", dims_out, "Output file (default: standard output)");
  dims->add_option("--budget", cfg.budget, "Largest |Comp| enumerated directly")->check(CLI::PositiveNumber);
  dims->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  dims->add_flag("--skip-two-generated", skip_two_generated, "Only report loops that are not two-generated");

  int dim = 5;
  std::string triples_out;
  std::string realized_out;
  auto* codeloops = app.add_subcommand("codeloops", "Inequivalent (P,C,A) triples with A != 0");
  codeloops->add_option("--dim", dim, "Dimension d <= 5")->required()->check(CLI::Range(0, 5));
  codeloops->add_option("--out", triples_out, "Triples file (default: standard output)");
  codeloops->add_option("--realize", realized_out, "Also write the realized code loops to this loops file");

  std::string loop_a;
  std::string loop_b;
  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("--a", loop_a, "FILE#NAME")->required();
  iso->add_option("--b", loop_b, "FILE#NAME")->required();
  auto* isotopy = app.add_subcommand("isotopy", "Isotopy test via principal isotopes");
  isotopy->add_option("--a", loop_a, "FILE#NAME")->required();
  isotopy->add_option("--b", loop_b, "FILE#NAME")->required();

  std::uint64_t order = 0;
  auto* filter = app.add_subcommand("order-filter", "Existence of nonassociative Moufang loops of order N");
  filter->add_option("N", order, "Order")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*enumerate) {
      cfg.mode = nonassoc_only ? Mode::NonassociativeOnly : Mode::AllLoops;
      const EnumerationResult result = enumerate_order(read_loops_file(cfg.input), cfg);
      emit(cfg.output, [&](std::ostream& out) { write_loops(out, result.loops); });
      std::ostream& log = cfg.output.empty() ? std::cerr : std::cout;
      summarize(log, result.loops);
      log << "hits " << result.stats.hits << ", max multiplicity " << result.stats.max_multiplicity << '\n';
    } else if (*boot) {
      cfg.target_exponent = upto;
      const std::vector<LoopDatabase> levels = bootstrap(cfg);
      if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
      for (const LoopDatabase& db : levels) {
        summarize(std::cout, db);
        if (!out_dir.empty()) {
          const auto path = std::filesystem::path(out_dir) / ("moufang" + std::to_string(db[0].table.order()) + ".txt");
          write_loops_file(path.string(), db);
        }
      }
    } else if (*dims) {
      LoopDatabase bases = read_loops_file(dims_in);
      if (skip_two_generated) bases = three_generated(bases);
      const auto rows = dims_report(bases, cfg.prime, cfg.budget, cfg.jobs);
      emit(dims_out, [&](std::ostream& out) { write_dims_tsv(out, rows); });
    } else if (*codeloops) {
      const std::vector<PolarTriple> reps = triple_orbit_representatives(dim);
      emit(triples_out, [&](std::ostream& out) {
        for (const PolarTriple& t : reps) out << format_triple(t) << '\n';
      });
      if (!realized_out.empty()) {
        LoopDatabase loops;
        for (std::size_t i = 0; i < reps.size(); ++i) {
          loops.append(realize_code_loop(reps[i]), "C" + std::to_string(2 << dim) + "_" + std::to_string(i + 1),
                       format_triple(reps[i]));
        }
        write_loops_file(realized_out, loops);
      }
    } else if (*iso) {
      const LoopTable a = load_loop(loop_a);
      const LoopTable b = load_loop(loop_b);
      if (const auto phi = are_isomorphic(a, b)) {
        std::cout << "isomorphic:";
        for (Element x : *phi) std::cout << ' ' << x + 1;
        std::cout << '\n';
      } else {
        std::cout << "not isomorphic\n";
      }
    } else if (*isotopy) {
      std::cout << (are_isotopic(load_loop(loop_a), load_loop(loop_b)) ? "isotopic" : "not isotopic") << '\n';
    } else if (*filter) {
      std::cout << to_string(order_filter(order)) << '\n';
    }
  } catch (const Error& e) {
    std::cerr << "moufang: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "moufang: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
