#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclebound/enumerate.hpp"
#include "cyclebound/report.hpp"
#include "cyclebound/theorems.hpp"

namespace cyclebound {

class ScanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StreamSpec {
  enum class Kind { kEnumerate, kGraph6File, kRandom };
  Kind kind = Kind::kEnumerate;
  int n = 0;
  bool connected = true;
  bool dedup = true;
  std::string path;        // graph6 file
  double p = 0.5;          // random
  std::uint64_t count = 0; // random
  bool operator==(const StreamSpec&) const = default;
};

Json to_json(const StreamSpec& spec);
StreamSpec stream_spec_from_json(const Json& j);
// The random stream takes its seed from the scan configuration.
GraphStream open_stream(const StreamSpec& spec, std::uint64_t seed);

// Where a scan stopped: stream position of the next graph, its ordinal, and
// the fingerprint of the stream it belongs to.
struct ScanCursor {
  std::string fingerprint;
  std::uint64_t position = 0;
  std::uint64_t index = 0;
  bool operator==(const ScanCursor&) const = default;
};

Json to_json(const ScanCursor& cursor);
ScanCursor scan_cursor_from_json(const Json& j);

struct ScanConfig {
  StreamSpec stream;
  std::vector<StatementId> statements;
  std::optional<long> budget_ms;  // per graph, shared by its statements
  int workers = 1;
  std::string output;             // JSONL; empty writes nothing
  bool append = false;
  std::optional<ScanCursor> resume;
  std::optional<std::uint64_t> limit;  // graphs to process in this run
  std::uint64_t seed = 0;
  bool operator==(const ScanConfig&) const = default;
};

Json to_json(const ScanConfig& cfg);
ScanConfig scan_config_from_json(const Json& j);

struct ScanOutcome {
  long graphs = 0;
  long checked = 0;  // rows; held + vacuous + candidates + unknown
  long held = 0;
  long vacuous = 0;
  long tight = 0;  // subset of held
  long candidates = 0;
  long unknown = 0;
  double elapsed_ms = 0;
  ScanCursor cursor;
  bool exhausted = false;  // the stream has no further graphs
};

Json to_json(const ScanOutcome& outcome);

// 0 clean, 2 counterexample candidates, 3 unknown rows (candidates win).
int exit_code(const ScanOutcome& outcome);

// One row per (graph, statement) in stream order, each row carrying the
// graph's ordinal "idx" and stream position "pos". Counterexample candidates
// are re-derived with the secondary solvers before being reported as such.
// Rows are also copied to sink when given.
ScanOutcome run_scan(const ScanConfig& cfg, std::ostream* sink = nullptr);

// Continues from cursor. With cfg.append the existing output is repaired
// first: a truncated last line and any incomplete trailing graph are cut
// and their graph is scanned again. Throws ScanError on a fingerprint
// mismatch.
ScanOutcome resume_scan(ScanConfig cfg, const ScanCursor& cursor, std::ostream* sink = nullptr);

}  // namespace cyclebound
