#include "chutes/cli.hpp"

#include "chutes/arith.hpp"
#include "chutes/bounds.hpp"
#include "chutes/error.hpp"
#include "chutes/json_io.hpp"
#include "chutes/modgraph.hpp"
#include "chutes/path.hpp"
#include "chutes/rows.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace chutes::cli {

namespace {

using nlohmann::json;

struct Common {
  std::uint64_t d = 5;
  unsigned e = 2;
  std::uint64_t r = 2;
  std::string format = "table";
  std::string output;

  ProblemParams params() const {
    ProblemParams p{d, e, r};
    p.validate();
    return p;
  }
};

void add_params(CLI::App& sub, Common& c, bool with_root = true) {
  sub.add_option("-d", c.d, "Additive shift d")->capture_default_str();
  sub.add_option("-e", c.e, "Exponent e")->capture_default_str();
  if (with_root) sub.add_option("-r", c.r, "Root r of the triangle")->capture_default_str();
}

void add_output(CLI::App& sub, Common& c, std::vector<std::string> formats) {
  const std::string default_format = formats.front();
  c.format = default_format;
  sub.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(std::move(formats)))
      ->default_str(default_format);
  sub.add_option("-o,--output", c.output,
                 std::string("Write to this file (relative paths resolve against $") +
                     kOutputDirEnv + " when set)");
}

json params_json(const ProblemParams& p) {
  return {{"d", std::to_string(p.d)}, {"e", std::to_string(p.e)}, {"r", std::to_string(p.r)}};
}

std::optional<BigInt> optional_bigint(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_bigint(text);
}

/// Comma-separated items, each a number or an inclusive range `a..b`. Ranges
/// keep only vertices of the graph: values >= 2 that are not multiples of d.
std::set<BigInt> parse_targets(const std::string& text, std::uint64_t d) {
  std::set<BigInt> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.insert(parse_bigint(item));
      continue;
    }
    const BigInt lo = parse_bigint(item.substr(0, dots));
    const BigInt hi = parse_bigint(item.substr(dots + 2));
    if (hi - lo > 10'000'000) throw std::invalid_argument("target range too large: " + item);
    for (BigInt v = lo; v <= hi; ++v) {
      if (v >= 2 && v % d != 0) out.insert(v);
    }
  }
  if (out.empty()) throw std::invalid_argument("no targets given");
  return out;
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::filesystem::path path(c.output);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / path;
    }
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + path.string());
  file << text;
}

// --- rows / triangle ---------------------------------------------------------

struct RowsOptions {
  Common common;
  std::uint64_t count = 1;
  std::string cutoff;
  rows::RowLimits limits;
};

void add_row_options(CLI::App& sub, RowsOptions& o) {
  add_params(sub, o.common);
  sub.add_option("-n,--rows", o.count, "Number of rows")->required()->check(CLI::PositiveNumber);
  sub.add_option("--cutoff", o.cutoff, "Discard up-steps above this value");
  sub.add_option("--row-limit", o.limits.uncapped_rows, "Most rows allowed without a cutoff")
      ->capture_default_str();
  sub.add_option("--max-entries", o.limits.max_entries, "Most entries allowed in one row")
      ->capture_default_str();
}

std::string run_rows(const RowsOptions& o) {
  const auto rs = rows::generate_rows(o.common.params(), o.count, optional_bigint(o.cutoff), o.limits);
  if (o.common.format == "json") {
    json j = json::array();
    for (const auto& row : rs) {
      json entries = json::array();
      for (const auto& v : row.entries) entries.push_back(v.str());
      j.push_back({{"index", std::to_string(row.index)}, {"entries", std::move(entries)}});
    }
    return j.dump(2) + "\n";
  }
  std::string out;
  for (const auto& row : rs) out += rows::format_row(row) + "\n";
  return out;
}

std::string run_triangle(const RowsOptions& o) {
  const auto terms = rows::emit_triangle(o.common.params(), o.count, optional_bigint(o.cutoff), o.limits);
  std::string out;
  if (o.common.format == "json") {
    json j = json::array();
    for (const auto& v : terms) j.push_back(v.str());
    return j.dump() + "\n";
  }
  if (o.common.format == "bfile") {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      out += std::to_string(i + 1) + " " + terms[i].str() + "\n";
    }
    return out;
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += ", ";
    out += terms[i].str();
  }
  return out + "\n";
}

// --- first -------------------------------------------------------------------

struct FirstOptions {
  Common common;
  std::string targets;
  std::uint64_t max_rows = 150;
  std::string cutoff;
};

std::string run_first(const FirstOptions& o) {
  const auto params = o.common.params();
  const auto targets = parse_targets(o.targets, params.d);
  const BigInt certified = bounds::certified_cutoff(params, *targets.rbegin(), o.max_rows);
  const BigInt cutoff = o.cutoff.empty() ? certified : parse_bigint(o.cutoff);
  const auto report = rows::first_appearances(params, targets, o.max_rows, cutoff);

  std::string out;
  if (o.common.format == "json") {
    json found = json::array();
    for (const auto& [x, fa] : report.found) {
      found.push_back({{"x", x.str()},
                       {"a", std::to_string(fa.row_index)},
                       {"witness", path_to_json(fa.witness)}});
    }
    json absent = json::array();
    for (const auto& x : report.absent) absent.push_back(x.str());
    json j{{"params", params_json(params)},
           {"max_rows", std::to_string(o.max_rows)},
           {"cutoff", report.cutoff.str()},
           {"certified_cutoff", certified.str()},
           {"found", std::move(found)},
           {"absent", std::move(absent)}};
    return j.dump(2) + "\n";
  }
  for (const auto& x : targets) {
    auto it = report.found.find(x);
    if (it != report.found.end()) {
      out += x.str() + " " + std::to_string(it->second.row_index) + "\n";
    } else if (o.common.format == "table") {
      out += x.str() + " absent\n";
    }
  }
  return out;
}

// --- bound -------------------------------------------------------------------

struct BoundOptions {
  Common common;
  std::string x;
  std::string y;
  std::uint64_t half_length = 1;
};

std::string run_bound(const BoundOptions& o) {
  const ProblemParams params{o.common.d, o.common.e, 2};
  params.validate();
  const bounds::BoundQuery q{parse_bigint(o.x), parse_bigint(o.y), o.half_length, params};
  const auto general = bounds::general_path_max_bound(q);
  std::vector<std::pair<std::string, BigInt>> lines;
  BigInt max = general.max;
  if (params.is_putnam_shape()) {
    const auto putnam = bounds::path_max_bound(q);
    lines.emplace_back("howmax", putnam.belt_with_power);
    max = putnam.max;
  }
  lines.emplace_back("belt_with_power", general.belt_with_power);
  lines.emplace_back("belt_without_power", *general.belt_without_power);
  lines.emplace_back("start", general.start_branch);
  lines.emplace_back("end", general.end_branch);
  if (params.is_putnam_shape()) lines.emplace_back("general_max", general.max);
  lines.emplace_back("max", max);

  if (o.common.format == "json") {
    json j{{"params", {{"d", std::to_string(params.d)}, {"e", std::to_string(params.e)}}},
           {"x", q.x.str()},
           {"y", q.y.str()},
           {"half_length", std::to_string(q.half_length)}};
    for (const auto& [name, value] : lines) j[name] = value.str();
    return j.dump(2) + "\n";
  }
  std::string out;
  for (const auto& [name, value] : lines) out += name + " " + value.str() + "\n";
  return out;
}

// --- path --------------------------------------------------------------------

struct PathOptions {
  Common common;
  std::string from;
  std::string to;
};

std::string run_path(const PathOptions& o) {
  const ProblemParams params{o.common.d, o.common.e, 2};
  params.validate();
  const auto witness = connecting_path(parse_bigint(o.from), parse_bigint(o.to), params);
  const auto summary = walk_path(witness, params);
  if (o.common.format == "table") {
    std::string out = "start " + witness.start.str() + "\nend " + summary.end.str() +
                      "\nedges " + std::to_string(summary.edge_count) + "\n";
    for (const auto& s : witness.labels.segments()) {
      out += std::string(to_string(s.kind)) + " " + std::to_string(s.repeat) + "\n";
    }
    return out;
  }
  json j = path_to_json(witness);
  j["end"] = summary.end.str();
  return j.dump(2) + "\n";
}

// --- modgraph / maximal / classify -------------------------------------------

struct ModgraphOptions {
  Common common;
  std::uint64_t p = 5;
};

std::string run_modgraph(const ModgraphOptions& o) {
  if (o.common.format == "dot") {
    return modgraph::to_dot(modgraph::build_power_graph(o.p, o.common.e));
  }
  const auto a = modgraph::analyze(o.p, o.common.e);
  if (o.common.format == "json") {
    json j{{"p", std::to_string(a.p)},
           {"e", std::to_string(a.e)},
           {"rho", std::to_string(a.rho)},
           {"formula_count", std::to_string(a.formula_count)},
           {"traversal_count", std::to_string(a.traversal_count)},
           {"is_connected", a.is_connected},
           {"is_star", a.is_star}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "p " << a.p << "\ne " << a.e << "\nrho " << a.rho << "\nformula_count "
      << a.formula_count << "\ntraversal_count " << a.traversal_count << "\nconnected "
      << (a.is_connected ? "true" : "false") << "\nstar " << (a.is_star ? "true" : "false")
      << "\n";
  return out.str();
}

std::string run_maximal(const Common& c) {
  const auto params = c.params();
  const auto verdict = modgraph::is_maximal(params);
  if (c.format == "json") {
    json j{{"params", params_json(params)}, {"maximal", verdict.maximal}};
    if (!verdict.maximal) j["reason"] = verdict.reason;
    return j.dump(2) + "\n";
  }
  return verdict.maximal ? "true\n" : "false: " + verdict.reason + "\n";
}

struct ClassifyOptions {
  Common common;
  std::uint64_t p = 5;
};

std::string run_classify(const ClassifyOptions& o) {
  const auto c = modgraph::classify_prime(o.p);
  std::optional<std::uint64_t> interesting;
  if (o.p >= 3) interesting = modgraph::exists_interesting_exponent(o.p);
  if (o.common.format == "json") {
    json j{{"p", std::to_string(c.p)},
           {"fermat_like_base", c.fermat_like_base ? json(std::to_string(*c.fermat_like_base)) : json()},
           {"base_exponent", std::to_string(c.base_exponent)},
           {"p_minus_1_squarefree", c.p_minus_1_squarefree},
           {"interesting_exponent", interesting ? json(std::to_string(*interesting)) : json()}};
    return j.dump(2) + "\n";
  }
  std::string out = "p " + std::to_string(c.p) + "\n";
  out += "fermat_like_base " +
         (c.fermat_like_base ? std::to_string(*c.fermat_like_base) : std::string("none")) + "\n";
  out += "base_exponent " + std::to_string(c.base_exponent) + "\n";
  out += std::string("p_minus_1_squarefree ") + (c.p_minus_1_squarefree ? "true" : "false") + "\n";
  out += "interesting_exponent " + (interesting ? std::to_string(*interesting) : std::string("none")) + "\n";
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rows, certified first appearances, path bounds and power-map graphs"};
  app.name("chutes");
  app.require_subcommand(1);

  RowsOptions rows_opts;
  auto* rows_cmd = app.add_subcommand("rows", "Print rows R_1..R_n, one per line as 'i: v1 v2 ...'");
  add_row_options(*rows_cmd, rows_opts);
  add_output(*rows_cmd, rows_opts.common, {"table", "json"});

  RowsOptions tri_opts;
  auto* tri_cmd = app.add_subcommand("triangle", "Print rows R_1..R_n flattened into one sequence");
  add_row_options(*tri_cmd, tri_opts);
  add_output(*tri_cmd, tri_opts.common, {"table", "bfile", "json"});

  FirstOptions first_opts;
  auto* first_cmd = app.add_subcommand("first", "Certified first-appearance rows a(x)");
  add_params(*first_cmd, first_opts.common);
  first_cmd->add_option("--targets", first_opts.targets, "e.g. 2..99 or 3,7,12")->required();
  first_cmd->add_option("--max-rows", first_opts.max_rows, "Rows to search")->capture_default_str();
  first_cmd->add_option("--cutoff", first_opts.cutoff,
                        "Cutoff override; must not be below the certified bound");
  add_output(*first_cmd, first_opts.common, {"table", "bfile", "json"});

  BoundOptions bound_opts;
  auto* bound_cmd = app.add_subcommand("bound", "Largest vertex on a path of length <= 2l");
  add_params(*bound_cmd, bound_opts.common, false);
  bound_cmd->add_option("--x", bound_opts.x, "Path start")->required();
  bound_cmd->add_option("--y", bound_opts.y, "Path end")->required();
  bound_cmd->add_option("--half-length", bound_opts.half_length, "l")->required()->check(CLI::PositiveNumber);
  add_output(*bound_cmd, bound_opts.common, {"table", "json"});

  PathOptions path_opts;
  auto* path_cmd = app.add_subcommand("path", "Ladder-belt-chute path between two vertices");
  add_params(*path_cmd, path_opts.common, false);
  path_cmd->add_option("--from", path_opts.from, "Start vertex")->required();
  path_cmd->add_option("--to", path_opts.to, "End vertex")->required();
  add_output(*path_cmd, path_opts.common, {"json", "table"});

  ModgraphOptions mod_opts;
  auto* mod_cmd = app.add_subcommand("modgraph", "Power map x -> x^e on units mod p");
  mod_cmd->add_option("-p", mod_opts.p, "Prime modulus")->required();
  mod_cmd->add_option("-e", mod_opts.common.e, "Exponent")->capture_default_str();
  add_output(*mod_cmd, mod_opts.common, {"table", "json", "dot"});

  Common max_opts;
  auto* max_cmd = app.add_subcommand("maximal", "Is every non-multiple of d reachable from r?");
  add_params(*max_cmd, max_opts);
  add_output(*max_cmd, max_opts, {"table", "json"});

  ClassifyOptions cls_opts;
  auto* cls_cmd = app.add_subcommand("classify", "Shape of p - 1 for a prime p");
  cls_cmd->add_option("-p", cls_opts.p, "Prime")->required();
  add_output(*cls_cmd, cls_opts.common, {"table", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // --help arrives as a ParseError with a success code; help() delegates to
    // the selected subcommand.
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInvalidArguments;
  }

  try {
    if (rows_cmd->parsed()) {
      emit(rows_opts.common, run_rows(rows_opts), out);
    } else if (tri_cmd->parsed()) {
      emit(tri_opts.common, run_triangle(tri_opts), out);
    } else if (first_cmd->parsed()) {
      emit(first_opts.common, run_first(first_opts), out);
    } else if (bound_cmd->parsed()) {
      emit(bound_opts.common, run_bound(bound_opts), out);
    } else if (path_cmd->parsed()) {
      emit(path_opts.common, run_path(path_opts), out);
    } else if (mod_cmd->parsed()) {
      emit(mod_opts.common, run_modgraph(mod_opts), out);
    } else if (max_cmd->parsed()) {
      emit(max_opts, run_maximal(max_opts), out);
    } else if (cls_cmd->parsed()) {
      emit(cls_opts.common, run_classify(cls_opts), out);
    }
  } catch (const CertificationError& e) {
    err << "error: " << e.what() << "\n";
    return kCertificationRefused;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArguments;
  }
  return kOk;
}

}  // namespace chutes::cli
