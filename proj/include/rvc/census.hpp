#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rvc/graph.hpp"

namespace rvc {

class CensusError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pull-based source of graphs. Implementations are single-consumer;
/// census_run serializes access when it shards across workers.
class GraphStream {
 public:
  virtual ~GraphStream() = default;
  virtual std::optional<Graph> next() = 0;
};

/// Built-in enumeration range.
inline constexpr int kEnumerateMinOrder = 2;
inline constexpr int kEnumerateMaxOrder = 7;

/// Every labeled graph on n vertices whose complement is also connected, in
/// ascending upper-triangle order. With `dedup`, one canonical representative
/// per isomorphism class instead, ascending by canonical form. Throws
/// CensusError for n outside [2, 7].
std::unique_ptr<GraphStream> enumerate_graphs(int n, bool dedup);

struct IngestIssue {
  std::size_t line = 0;  // 1-based
  std::string message;
};

class IngestError : public std::runtime_error {
 public:
  IngestError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads graph6 lines, yielding those connected on both sides in input order.
/// Blank lines and a leading ">>graph6<<" marker are skipped. A malformed
/// line throws IngestError in strict mode; otherwise it is recorded in
/// issues() and skipped.
class Graph6Ingest : public GraphStream {
 public:
  Graph6Ingest(std::istream& in, bool strict) : in_(in), strict_(strict) {}

  std::optional<Graph> next() override;

  const std::vector<IngestIssue>& issues() const { return issues_; }
  /// Parsed lines dropped because G or its complement is disconnected.
  std::size_t filtered() const { return filtered_; }

 private:
  std::istream& in_;
  bool strict_;
  std::size_t line_ = 0;
  std::size_t filtered_ = 0;
  std::vector<IngestIssue> issues_;
};

std::unique_ptr<Graph6Ingest> ingest_graph6(std::istream& in, bool strict);

/// Passes through the first graph of each isomorphism class (n <= 8).
class DedupStream : public GraphStream {
 public:
  explicit DedupStream(GraphStream& inner);
  ~DedupStream() override;
  std::optional<Graph> next() override;

 private:
  struct Seen;
  GraphStream& inner_;
  std::unique_ptr<Seen> seen_;
};

std::vector<Graph> collect(GraphStream& stream);

struct CensusRecord {
  std::string graph6;
  int n = 0;
  int rvc_g = 0;
  int rvc_gbar = 0;
  int sum = 0;
  int diam_g = 0;
  int diam_gbar = 0;
  bool bounds_ok = false;  // 2 <= sum <= n - 1

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct CensusSummary {
  int n = 0;
  std::size_t total_pairs = 0;
  std::optional<int> min_sum;
  std::optional<int> max_sum;
  std::vector<std::string> min_witnesses;
  std::vector<std::string> max_witnesses;
  /// graph6 of records outside the bounds; only collected for n >= 5.
  std::vector<std::string> violations;
  /// Records outside the bounds at n < 5, where the bound is not claimed.
  std::size_t out_of_hypothesis = 0;

  bool theorem_applies() const { return n >= 5; }
};

struct CensusResult {
  std::vector<CensusRecord> records;  // sorted by graph6
  CensusSummary summary;
};

struct CensusOptions {
  int workers = 1;
};

/// Exact rvc on both sides of every graph in `source`. Solutions are memoized
/// per canonical form for n <= 8. Output is independent of the worker count.
/// Throws CensusError when a graph's order differs from n, and
/// DisconnectedGraphError when either side is disconnected.
CensusResult census_run(GraphStream& source, int n, const CensusOptions& options = {});

inline constexpr const char* kCsvHeader = "graph6,n,rvc_g,rvc_gbar,sum,diam_g,diam_gbar,bounds_ok";

void write_csv(std::ostream& out, const std::vector<CensusRecord>& records);

nlohmann::json summary_to_json(const CensusSummary& summary);

}  // namespace rvc
