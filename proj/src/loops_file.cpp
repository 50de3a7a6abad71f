#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "moufang/pipeline.hpp"

namespace moufang {

namespace {

constexpr std::string_view kProvenance = "# provenance: ";

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

LoopDatabase read_loops(std::istream& in) {
  LoopDatabase db;
  std::string line;
  int number = 0;
  std::string provenance;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(kProvenance, 0) == 0) {
      provenance = line.substr(kProvenance.size());
      continue;
    }
    if (blank(line) || line[0] == '#') continue;

    std::istringstream header(line);
    std::string keyword, name, extra;
    int n = 0;
    if (!(header >> keyword) || keyword != "loop") fail(number, "expected 'loop <name> <n>'");
    if (!(header >> name >> n) || (header >> extra)) fail(number, "expected 'loop <name> <n>'");
    if (n < 1 || n > kMaxOrder) fail(number, "order must be between 1 and 256");
    const int header_line = number;

    std::vector<std::vector<int>> rows;
    while (static_cast<int>(rows.size()) < n) {
      if (!std::getline(in, line)) fail(number, "unexpected end of input in loop " + name);
      ++number;
      if (!line.empty() && line[0] == '#') continue;
      if (blank(line)) fail(number, "missing table rows for loop " + name);
      std::istringstream cells(line);
      std::vector<int> row;
      std::string token;
      while (cells >> token) {
        try {
          std::size_t used = 0;
          row.push_back(std::stoi(token, &used));
          if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
          fail(number, "bad entry '" + token + "'");
        }
      }
      if (static_cast<int>(row.size()) != n) {
        fail(number, "expected " + std::to_string(n) + " entries, got " + std::to_string(row.size()));
      }
      rows.push_back(std::move(row));
    }
    try {
      db.append(validate_loop(rows), name, provenance);
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidTable,
                  "loop " + name + " (line " + std::to_string(header_line) + "): " + e.what());
    }
    provenance.clear();
  }
  return db;
}

LoopDatabase read_loops_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  return read_loops(in);
}

void write_loops(std::ostream& out, const LoopDatabase& db) {
  bool first = true;
  for (const LoopEntry& e : db.entries()) {
    if (!first) out << '\n';
    first = false;
    if (!e.provenance.empty()) out << kProvenance << e.provenance << '\n';
    const int n = e.table.order();
    out << "loop " << e.name << ' ' << n << '\n';
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (y) out << ' ';
        out << e.table.mul(x, y) + 1;
      }
      out << '\n';
    }
  }
}

void write_loops_file(const std::string& path, const LoopDatabase& db) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  write_loops(out, db);
  if (!out) throw Error(ErrorKind::InvalidArgument, "failed writing " + path);
}

}  // namespace moufang
