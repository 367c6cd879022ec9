#include "rvc/census.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "rvc/canonical.hpp"
#include "rvc/graph6.hpp"
#include "rvc/rainbow.hpp"

namespace rvc {

namespace {

bool rows_connected(const std::vector<VertexSet>& rows) {
  const VertexSet full = all_vertices(static_cast<int>(rows.size()));
  VertexSet reached = 1;
  VertexSet frontier = 1;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet rest = frontier; rest; rest &= rest - 1) {
      next |= rows[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == full;
}

// Walks all 2^C(n,2) upper-triangle masks, keeping those connected on both
// sides. Mask bit (m-1-p) is string position p of the graph6 column order.
class MaskWalker {
 public:
  explicit MaskWalker(int n) : n_(n) {
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) pairs_.emplace_back(i, j);
    }
    limit_ = std::uint64_t{1} << pairs_.size();
  }

  int order() const { return n_; }

  std::optional<std::vector<VertexSet>> next() {
    const int m = static_cast<int>(pairs_.size());
    const VertexSet full = all_vertices(n_);
    while (mask_ < limit_) {
      const std::uint64_t mask = mask_++;
      std::vector<VertexSet> rows(static_cast<std::size_t>(n_), 0);
      for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
        const auto& [i, j] = pairs_[static_cast<std::size_t>(m - 1 - std::countr_zero(rest))];
        rows[static_cast<std::size_t>(i)] |= singleton(j);
        rows[static_cast<std::size_t>(j)] |= singleton(i);
      }
      if (!rows_connected(rows)) continue;
      std::vector<VertexSet> co(rows.size());
      for (int v = 0; v < n_; ++v) {
        co[static_cast<std::size_t>(v)] = ~rows[static_cast<std::size_t>(v)] & full & ~singleton(v);
      }
      if (!rows_connected(co)) continue;
      return rows;
    }
    return std::nullopt;
  }

 private:
  int n_;
  std::vector<Edge> pairs_;
  std::uint64_t mask_ = 0;
  std::uint64_t limit_ = 0;
};

class LabeledGraphs : public GraphStream {
 public:
  explicit LabeledGraphs(int n) : walker_(n) {}

  std::optional<Graph> next() override {
    if (auto rows = walker_.next()) return Graph::from_rows(std::move(*rows));
    return std::nullopt;
  }

 private:
  MaskWalker walker_;
};

class CanonicalGraphs : public GraphStream {
 public:
  explicit CanonicalGraphs(int n) : n_(n) {
    MaskWalker walker(n);
    while (auto rows = walker.next()) {
      forms_.push_back(canonical_form(Graph::from_rows(std::move(*rows))).bits());
    }
    std::sort(forms_.begin(), forms_.end());
    forms_.erase(std::unique(forms_.begin(), forms_.end()), forms_.end());
  }

  std::optional<Graph> next() override {
    if (cursor_ == forms_.size()) return std::nullopt;
    return CanonicalForm(n_, forms_[cursor_++]).to_graph();
  }

 private:
  int n_;
  std::vector<std::uint64_t> forms_;
  std::size_t cursor_ = 0;
};

struct SideSolution {
  int rvc = 0;
  int diameter = 0;
};

SideSolution solve_side(const Graph& g) { return {rvc_exact(g).value, diameter(g)}; }

// Shared rvc cache keyed by canonical form. Entries are deterministic
// functions of the key, so racing writers store identical values.
class SolutionMemo {
 public:
  SideSolution get(const Graph& g) {
    if (g.order() > kCanonicalMaxOrder) return solve_side(g);
    const CanonicalForm key = canonical_form(g);
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    const SideSolution solved = solve_side(g);
    std::unique_lock lock(mutex_);
    table_[key] = solved;
    return solved;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<CanonicalForm, SideSolution> table_;
};

CensusRecord make_record(const Graph& g, int n, SolutionMemo& memo) {
  if (g.order() != n) {
    throw CensusError("census for n=" + std::to_string(n) + " received a graph of order " +
                      std::to_string(g.order()));
  }
  const Graph gbar = complement(g);
  if (!is_connected(g) || !is_connected(gbar)) {
    throw DisconnectedGraphError("census input " + to_graph6(g) +
                                 " is not connected on both sides");
  }
  const SideSolution side = memo.get(g);
  const SideSolution co_side = memo.get(gbar);
  CensusRecord r;
  r.graph6 = to_graph6(g);
  r.n = n;
  r.rvc_g = side.rvc;
  r.rvc_gbar = co_side.rvc;
  r.sum = r.rvc_g + r.rvc_gbar;
  r.diam_g = side.diameter;
  r.diam_gbar = co_side.diameter;
  r.bounds_ok = r.sum >= 2 && r.sum <= n - 1;
  return r;
}

CensusSummary summarize(const std::vector<CensusRecord>& records, int n) {
  CensusSummary s;
  s.n = n;
  s.total_pairs = records.size();
  for (const auto& r : records) {
    if (!s.min_sum || r.sum < *s.min_sum) s.min_sum = r.sum;
    if (!s.max_sum || r.sum > *s.max_sum) s.max_sum = r.sum;
  }
  for (const auto& r : records) {
    if (r.sum == *s.min_sum) s.min_witnesses.push_back(r.graph6);
    if (r.sum == *s.max_sum) s.max_witnesses.push_back(r.graph6);
    if (!r.bounds_ok) {
      if (s.theorem_applies()) {
        s.violations.push_back(r.graph6);
      } else {
        ++s.out_of_hypothesis;
      }
    }
  }
  return s;
}

constexpr std::size_t kBatch = 256;

}  // namespace

std::unique_ptr<GraphStream> enumerate_graphs(int n, bool dedup) {
  if (n < kEnumerateMinOrder || n > kEnumerateMaxOrder) {
    throw CensusError("built-in enumeration covers n in [" + std::to_string(kEnumerateMinOrder) +
                      ", " + std::to_string(kEnumerateMaxOrder) + "], got " + std::to_string(n) +
                      "; ingest graph6 for larger orders");
  }
  if (dedup) return std::make_unique<CanonicalGraphs>(n);
  return std::make_unique<LabeledGraphs>(n);
}

IngestError::IngestError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::optional<Graph> Graph6Ingest::next() {
  std::string text;
  while (std::getline(in_, text)) {
    ++line_;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    if (text.rfind(">>graph6<<", 0) == 0) {
      text.erase(0, 10);
      if (text.empty()) continue;
    }
    try {
      Graph g = parse_graph6(text);
      if (is_connected(g) && is_connected(complement(g))) return g;
      ++filtered_;
    } catch (const std::exception& e) {
      if (strict_) throw IngestError(line_, e.what());
      issues_.push_back({line_, e.what()});
    }
  }
  return std::nullopt;
}

std::unique_ptr<Graph6Ingest> ingest_graph6(std::istream& in, bool strict) {
  return std::make_unique<Graph6Ingest>(in, strict);
}

struct DedupStream::Seen {
  std::unordered_set<CanonicalForm> forms;
};

DedupStream::DedupStream(GraphStream& inner) : inner_(inner), seen_(std::make_unique<Seen>()) {}

DedupStream::~DedupStream() = default;

std::optional<Graph> DedupStream::next() {
  while (auto g = inner_.next()) {
    if (seen_->forms.insert(canonical_form(*g)).second) return g;
  }
  return std::nullopt;
}

std::vector<Graph> collect(GraphStream& stream) {
  std::vector<Graph> out;
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

CensusResult census_run(GraphStream& source, int n, const CensusOptions& options) {
  SolutionMemo memo;
  std::mutex source_mutex;
  std::mutex output_mutex;
  std::vector<CensusRecord> records;
  std::exception_ptr failure;
  bool stop = false;

  auto worker = [&] {
    std::vector<Graph> batch;
    std::vector<CensusRecord> local;
    while (true) {
      batch.clear();
      {
        std::lock_guard lock(source_mutex);
        if (stop) break;
        try {
          while (batch.size() < kBatch) {
            auto g = source.next();
            if (!g) break;
            batch.push_back(std::move(*g));
          }
        } catch (...) {
          stop = true;
          std::lock_guard out_lock(output_mutex);
          if (!failure) failure = std::current_exception();
          break;
        }
        if (batch.empty()) break;
      }
      try {
        for (const Graph& g : batch) local.push_back(make_record(g, n, memo));
      } catch (...) {
        std::lock_guard lock(source_mutex);
        stop = true;
        std::lock_guard out_lock(output_mutex);
        if (!failure) failure = std::current_exception();
        break;
      }
    }
    std::lock_guard lock(output_mutex);
    records.insert(records.end(), std::make_move_iterator(local.begin()),
                   std::make_move_iterator(local.end()));
  };

  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(records.begin(), records.end(),
            [](const CensusRecord& a, const CensusRecord& b) { return a.graph6 < b.graph6; });
  CensusResult result;
  result.summary = summarize(records, n);
  result.records = std::move(records);
  return result;
}

void write_csv(std::ostream& out, const std::vector<CensusRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.graph6 << ',' << r.n << ',' << r.rvc_g << ',' << r.rvc_gbar << ',' << r.sum << ','
        << r.diam_g << ',' << r.diam_gbar << ',' << (r.bounds_ok ? "true" : "false") << '\n';
  }
}

nlohmann::json summary_to_json(const CensusSummary& summary) {
  nlohmann::json j;
  j["schema"] = 1;
  j["n"] = summary.n;
  j["total_pairs"] = summary.total_pairs;
  j["min_sum"] = summary.min_sum ? nlohmann::json(*summary.min_sum) : nlohmann::json(nullptr);
  j["max_sum"] = summary.max_sum ? nlohmann::json(*summary.max_sum) : nlohmann::json(nullptr);
  j["min_witnesses"] = summary.min_witnesses;
  j["max_witnesses"] = summary.max_witnesses;
  j["violations"] = summary.violations;
  j["theorem_applies"] = summary.theorem_applies();
  j["out_of_hypothesis"] = summary.out_of_hypothesis;
  return j;
}

}  // namespace rvc
