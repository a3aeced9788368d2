#include "rankproj/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankproj/degrees.hpp"
#include "rankproj/errors.hpp"
#include "rankproj/patterns.hpp"
#include "rankproj/verify.hpp"

namespace rankproj {

namespace {

using Json = nlohmann::ordered_json;

struct PatternArgs {
  std::string file;
  std::string cells;
  bool cells_given = false;
  std::string rows;
  std::string cols;
  int corners = 0;
  int squares = 0;
};

struct CommonArgs {
  int n = 0;
  int r = 0;
  std::string format = "text";
  PatternArgs pattern;
};

void add_pattern_options(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--n", a.n, "matrix size")->required();
  cmd->add_option("--format", a.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--pattern", a.pattern.file, "grid file (X marks an entry)");
  cmd->add_option("--cells", a.pattern.cells, "cell list r,c;r,c;...")
      ->each([&](const std::string&) { a.pattern.cells_given = true; });
  cmd->add_option("--rows", a.pattern.rows, "row block lengths l1,l2,...");
  cmd->add_option("--cols", a.pattern.cols, "column block lengths m1,m2,...");
  cmd->add_option("--corners", a.pattern.corners, "number of corner blocks")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--squares", a.pattern.squares, "number of 2x2 blocks")
      ->check(CLI::NonNegativeNumber);
}

std::vector<int> parse_lengths(const std::string& text, const char* flag) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw PreconditionError(std::string(flag) + ": expected positive integers, got '" + item + "'");
    }
  }
  return out;
}

Pattern read_pattern(const PatternArgs& p) {
  const bool shorthand = !p.rows.empty() || !p.cols.empty() || p.corners > 0 || p.squares > 0;
  const int sources = static_cast<int>(!p.file.empty()) + static_cast<int>(p.cells_given) +
                      static_cast<int>(shorthand);
  if (sources != 1) {
    throw PreconditionError(
        "give exactly one pattern source: --pattern, --cells, or the block shorthands");
  }
  if (!p.file.empty()) {
    std::ifstream in(p.file);
    if (!in) throw PreconditionError("cannot read pattern file " + p.file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_grid(buf.str());
  }
  if (p.cells_given) return parse_cells(p.cells);
  std::vector<BlockShape> shapes;
  for (int l : parse_lengths(p.rows, "--rows")) shapes.push_back(BlockShape::row(l));
  for (int m : parse_lengths(p.cols, "--cols")) shapes.push_back(BlockShape::col(m));
  for (int i = 0; i < p.corners; ++i) shapes.push_back(BlockShape::corner());
  for (int i = 0; i < p.squares; ++i) shapes.push_back(BlockShape::square());
  return layout_blocks(shapes);
}

// Pattern checked against n, together with its block decomposition.
struct Input {
  Pattern pattern;
  std::vector<BlockShape> shapes;
};

Input load(const CommonArgs& a) {
  if (a.n < 1) throw PreconditionError("--n must be at least 1");
  Input in;
  in.pattern = read_pattern(a.pattern);
  in.pattern.validate_for(a.n);
  in.shapes = block_shapes(in.pattern);
  return in;
}

void check_rank(const CommonArgs& a) {
  if (a.r < 1 || a.r > a.n) {
    throw PreconditionError("--r " + std::to_string(a.r) + " must lie in [1, " +
                            std::to_string(a.n) + "]");
  }
}

Json pattern_json(const Pattern& p) {
  Json cells = Json::array();
  for (const auto& c : p.cells()) cells.push_back({c.row, c.col});
  return Json{{"cells", cells}};
}

Json degrees_json(int n, const Pattern& p, const std::vector<std::pair<int, BigInt>>& rows) {
  Json doc;
  doc["n"] = n;
  doc["pattern"] = pattern_json(p);
  doc["degrees"] = Json::array();
  for (const auto& [r, d] : rows) doc["degrees"].push_back(Json{{"r", r}, {"d", to_decimal(d)}});
  return doc;
}

void write_degrees(std::ostream& out, const CommonArgs& a, const Pattern& p,
                   const std::vector<std::pair<int, BigInt>>& rows, bool single) {
  if (a.format == "json") {
    out << degrees_json(a.n, p, rows).dump(2) << "\n";
  } else if (a.format == "csv") {
    out << "r,d\n";
    for (const auto& [r, d] : rows) out << r << "," << to_decimal(d) << "\n";
  } else if (single) {
    out << to_decimal(rows.front().second) << "\n";
  } else {
    std::size_t rw = 1, dw = 1;
    for (const auto& [r, d] : rows) {
      rw = std::max(rw, std::to_string(r).size());
      dw = std::max(dw, to_decimal(d).size());
    }
    for (const auto& [r, d] : rows) {
      std::string rs = std::to_string(r), ds = to_decimal(d);
      out << std::string(rw - rs.size(), ' ') << rs << "  " << std::string(dw - ds.size(), ' ')
          << ds << "\n";
    }
  }
}

int cmd_degree(const CommonArgs& a, std::ostream& out) {
  check_rank(a);
  const Input in = load(a);
  const BigInt d = degree_from_blocks(a.n, a.r, in.shapes);
  write_degrees(out, a, in.pattern, {{a.r, d}}, true);
  return kExitOk;
}

int cmd_table(const CommonArgs& a, std::ostream& out) {
  const Input in = load(a);
  const DegreeTable t = degree_table(a.n, in.shapes);
  std::vector<std::pair<int, BigInt>> rows;
  for (int r = 1; r <= a.n; ++r) rows.emplace_back(r, t.at(r));
  write_degrees(out, a, in.pattern, rows, false);
  return kExitOk;
}

int cmd_class(const CommonArgs& a, std::ostream& out) {
  check_rank(a);
  const Input in = load(a);
  const auto ctx = GrassmannContext::for_rank(a.n, a.r);
  const GrassmannClass cls = grassmann_class(ctx, in.shapes);
  if (a.format == "json") {
    Json doc;
    doc["n"] = a.n;
    doc["r"] = a.r;
    doc["pattern"] = pattern_json(in.pattern);
    doc["class"] = Json::array();
    for (const auto& [lambda, coeff] : cls.value.terms()) {
      doc["class"].push_back(Json{{"partition", lambda.parts()}, {"c", to_decimal(coeff)}});
    }
    doc["text"] = cls.value.to_string();
    out << doc.dump(2) << "\n";
  } else if (a.format == "csv") {
    out << "partition,c\n";
    for (const auto& [lambda, coeff] : cls.value.terms()) {
      out << "\"" << lambda.to_string() << "\"," << to_decimal(coeff) << "\n";
    }
  } else {
    out << cls.value.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_verify(int max_n, const std::string& format, std::ostream& out) {
  Report report = cross_check(max_n);
  report.checks.push_back(golden_check(max_n));
  for (auto& c : observed_checks()) report.checks.push_back(std::move(c));
  out << (format == "json" ? report.to_json() : report.to_text());
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degrees of projections of rank loci"};
  app.name("rankproj");
  app.require_subcommand(1);

  CommonArgs deg_args, table_args, class_args;
  auto* degree = app.add_subcommand("degree", "d_{n,r,S} for one rank");
  add_pattern_options(degree, deg_args);
  degree->add_option("--r", deg_args.r, "rank")->required();

  auto* table = app.add_subcommand("table", "d_{n,r,S} for r = 1..n");
  add_pattern_options(table, table_args);

  auto* cls = app.add_subcommand("class", "Grassmann class in the Schubert basis");
  add_pattern_options(cls, class_args);
  cls->add_option("--r", class_args.r, "rank")->required();

  int max_n = 5;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "engine/oracle cross-checks and published values");
  verify->add_option("--max-n", max_n, "largest matrix size for corpus checks")
      ->check(CLI::Range(1, 8));
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*degree) return cmd_degree(deg_args, out);
    if (*table) return cmd_table(table_args, out);
    if (*cls) return cmd_class(class_args, out);
    return cmd_verify(max_n, verify_format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace rankproj
