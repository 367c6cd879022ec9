#include "rvc/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rvc/census.hpp"
#include "rvc/constructions.hpp"
#include "rvc/graph6.hpp"
#include "rvc/rainbow.hpp"

namespace rvc::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

json compute_one(const std::string& text) {
  const Graph g = parse_graph6(text);
  if (!is_connected(g)) throw DataError("graph " + text + " is disconnected; rvc is undefined");
  const RvcResult r = rvc_exact(g);
  return json{
      {"schema", kSchemaVersion},
      {"graph6", to_graph6(g)},
      {"n", g.order()},
      {"diameter", diameter(g)},
      {"rvc", r.value},
      {"coloring", r.witness.one_based()},
      {"lower_bound_reason", std::string(to_string(r.reason))},
      {"exhausted_k", r.exhausted_k},
  };
}

int cmd_compute(const std::string& graph6, std::istream& in, std::ostream& out) {
  std::vector<json> results;
  if (!graph6.empty()) {
    results.push_back(compute_one(graph6));
  } else {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      line = trim(line);
      if (line.empty()) continue;
      try {
        results.push_back(compute_one(line));
      } catch (const std::exception& e) {
        throw DataError("stdin line " + std::to_string(line_no) + ": " + e.what());
      }
    }
  }
  for (const auto& r : results) out << r.dump() << '\n';
  return kOk;
}

VertexColoring parse_colors(const std::string& list, int n) {
  VertexColoring c;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || value < 1) {
      throw DataError("bad color '" + item + "'; colors are positive integers");
    }
    c.color.push_back(value - 1);
    c.k = std::max(c.k, value);
  }
  if (static_cast<int>(c.color.size()) != n) {
    throw DataError("got " + std::to_string(c.color.size()) + " colors for " +
                    std::to_string(n) + " vertices");
  }
  return c;
}

int cmd_check(const std::string& graph6, const std::string& colors, std::ostream& out) {
  const Graph g = parse_graph6(graph6);
  const VertexColoring c = parse_colors(colors, g.order());
  json j{{"schema", kSchemaVersion}};
  if (const auto pair = first_failing_pair(g, c)) {
    j["rainbow_vertex_connected"] = false;
    j["failing_pair"] = {pair->first, pair->second};
  } else {
    j["rainbow_vertex_connected"] = true;
  }
  out << j.dump() << '\n';
  return kOk;
}

int cmd_construct(const std::string& family, int n, std::ostream& out) {
  const auto build = [&] {
    if (family == "path-pair") return path_complement_pair(n);
    if (family == "diam2") return lower_bound_pair(n);
    return make_ng_pair(cycle_graph(n));
  };
  std::optional<NgPair> built;
  try {
    built = build();
  } catch (const TheoremViolation&) {
    throw;
  } catch (const std::exception& e) {
    throw DataError(e.what());
  }
  const NgPair& pair = *built;
  const json j{
      {"schema", kSchemaVersion},
      {"family", family},
      {"n", pair.n},
      {"graph6", to_graph6(pair.g)},
      {"complement_graph6", to_graph6(pair.gbar)},
      {"rvc_g", pair.rvc_g},
      {"rvc_gbar", pair.rvc_gbar},
      {"sum", pair.sum},
  };
  out << j.dump() << '\n';
  return kOk;
}

struct CensusArgs {
  int n = 0;
  bool builtin = false;
  std::string file;
  bool dedup = false;
  int workers = 1;
  std::string out_csv;
  std::string out_summary;
  bool strict = false;
};

int cmd_census(const CensusArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  std::unique_ptr<GraphStream> builtin;
  std::ifstream file;
  std::unique_ptr<Graph6Ingest> ingest;
  std::unique_ptr<DedupStream> dedup;
  GraphStream* source = nullptr;

  if (a.file.empty()) {
    builtin = enumerate_graphs(a.n, a.dedup);
    source = builtin.get();
  } else {
    std::istream* input = &in;
    if (a.file != "-") {
      file.open(a.file);
      if (!file) throw DataError("cannot open " + a.file);
      input = &file;
    }
    ingest = ingest_graph6(*input, a.strict);
    source = ingest.get();
    if (a.dedup) {
      dedup = std::make_unique<DedupStream>(*ingest);
      source = dedup.get();
    }
  }

  if (a.n < 5) {
    err << "warning: n=" << a.n
        << " is below 5; the upper bound n-1 is not claimed there and is not enforced\n";
  }

  const CensusResult result = census_run(*source, a.n, CensusOptions{a.workers});

  if (ingest) {
    for (const auto& issue : ingest->issues()) {
      err << "warning: line " << issue.line << ": " << issue.message << '\n';
    }
  }

  if (!a.out_csv.empty()) {
    std::ofstream csv(a.out_csv);
    if (!csv) throw DataError("cannot write " + a.out_csv);
    write_csv(csv, result.records);
  }
  const json summary = summary_to_json(result.summary);
  if (!a.out_summary.empty()) {
    std::ofstream js(a.out_summary);
    if (!js) throw DataError("cannot write " + a.out_summary);
    js << summary.dump(2) << '\n';
  }
  out << summary.dump() << '\n';

  if (!result.summary.violations.empty()) {
    err << "bounds violated by " << result.summary.violations.size() << " graph(s)\n";
    return kTheoremViolation;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact rainbow vertex-connection numbers and Nordhaus-Gaddum census"};
  app.name("rvc");
  app.require_subcommand(1);

  std::string graph6;
  auto* compute = app.add_subcommand("compute", "rvc of a graph6 graph (or one per stdin line)");
  compute->add_option("graph6", graph6, "graph6 string; omit to read stdin");

  std::string check_graph6;
  std::string colors;
  auto* check = app.add_subcommand("check", "check a 1-based coloring for rainbow connectivity");
  check->add_option("graph6", check_graph6)->required();
  check->add_option("colors", colors, "comma-separated 1-based colors")->required();

  std::string family;
  int construct_n = 0;
  auto* construct = app.add_subcommand("construct", "build and solve an extremal family");
  construct->add_option("family", family)
      ->required()
      ->check(CLI::IsMember({"path-pair", "diam2", "cycle"}));
  construct->add_option("--n", construct_n, "order")->required();

  CensusArgs census_args;
  auto* census = app.add_subcommand("census", "exhaustive rvc(G)+rvc(complement) census");
  census->add_option("--n", census_args.n, "order")->required();
  auto* builtin_flag = census->add_flag("--builtin", census_args.builtin,
                                        "enumerate graphs internally (default)");
  census->add_option("--file", census_args.file, "graph6 file, '-' for stdin")
      ->excludes(builtin_flag);
  census->add_flag("--dedup", census_args.dedup, "one graph per isomorphism class");
  census->add_option("--workers", census_args.workers, "worker threads")
      ->check(CLI::Range(1, 256));
  census->add_option("--out-csv", census_args.out_csv, "write records as CSV");
  census->add_option("--out-summary", census_args.out_summary, "write summary JSON");
  census->add_flag("--strict", census_args.strict, "abort on the first malformed line");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(graph6, in, out);
    if (check->parsed()) return cmd_check(check_graph6, colors, out);
    if (construct->parsed()) return cmd_construct(family, construct_n, out);
    if (census->parsed()) return cmd_census(census_args, in, out, err);
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << '\n';
    return kTheoremViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

}  // namespace rvc::cli
