#include "cyclebound/search.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace cyclebound {

namespace {

const char* kind_name(StreamSpec::Kind kind) {
  switch (kind) {
    case StreamSpec::Kind::kEnumerate: return "enumerate";
    case StreamSpec::Kind::kGraph6File: return "graph6";
    case StreamSpec::Kind::kRandom: return "random";
  }
  return "enumerate";
}

}  // namespace

Json to_json(const StreamSpec& spec) {
  Json j;
  j["kind"] = kind_name(spec.kind);
  switch (spec.kind) {
    case StreamSpec::Kind::kEnumerate:
      j["n"] = spec.n;
      j["connected"] = spec.connected;
      j["dedup"] = spec.dedup;
      break;
    case StreamSpec::Kind::kGraph6File: j["path"] = spec.path; break;
    case StreamSpec::Kind::kRandom:
      j["n"] = spec.n;
      j["p"] = spec.p;
      j["count"] = spec.count;
      break;
  }
  return j;
}

StreamSpec stream_spec_from_json(const Json& j) {
  StreamSpec s;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "enumerate") {
      s.kind = StreamSpec::Kind::kEnumerate;
      s.n = j.at("n").get<int>();
      s.connected = j.value("connected", true);
      s.dedup = j.value("dedup", true);
    } else if (kind == "graph6") {
      s.kind = StreamSpec::Kind::kGraph6File;
      s.path = j.at("path").get<std::string>();
    } else if (kind == "random") {
      s.kind = StreamSpec::Kind::kRandom;
      s.n = j.at("n").get<int>();
      s.p = j.at("p").get<double>();
      s.count = j.at("count").get<std::uint64_t>();
    } else {
      throw ScanError("unknown stream kind '" + kind + "'");
    }
  } catch (const Json::exception& e) {
    throw ScanError(std::string("malformed stream spec: ") + e.what());
  }
  return s;
}

GraphStream open_stream(const StreamSpec& spec, std::uint64_t seed) {
  try {
    switch (spec.kind) {
      case StreamSpec::Kind::kEnumerate: return GraphStream::enumerate(spec.n, spec.connected, spec.dedup);
      case StreamSpec::Kind::kGraph6File: return GraphStream::graph6_file(spec.path);
      case StreamSpec::Kind::kRandom: return GraphStream::random(spec.n, spec.p, seed, spec.count);
    }
  } catch (const ScanError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScanError(std::string("cannot open stream: ") + e.what());
  }
  throw ScanError("unknown stream kind");
}

Json to_json(const ScanCursor& c) {
  return Json{{"fingerprint", c.fingerprint}, {"position", c.position}, {"index", c.index}};
}

ScanCursor scan_cursor_from_json(const Json& j) {
  try {
    return ScanCursor{j.at("fingerprint").get<std::string>(), j.at("position").get<std::uint64_t>(),
                      j.at("index").get<std::uint64_t>()};
  } catch (const Json::exception& e) {
    throw ScanError(std::string("malformed cursor: ") + e.what());
  }
}

Json to_json(const ScanConfig& cfg) {
  Json j;
  j["stream"] = to_json(cfg.stream);
  Json ids = Json::array();
  for (StatementId id : cfg.statements) ids.push_back(std::string(statement_name(id)));
  j["statements"] = ids;
  j["budget_ms"] = cfg.budget_ms ? Json(*cfg.budget_ms) : Json();
  j["workers"] = cfg.workers;
  j["output"] = cfg.output;
  j["append"] = cfg.append;
  j["resume"] = cfg.resume ? to_json(*cfg.resume) : Json();
  j["limit"] = cfg.limit ? Json(*cfg.limit) : Json();
  j["seed"] = cfg.seed;
  return j;
}

ScanConfig scan_config_from_json(const Json& j) {
  ScanConfig cfg;
  try {
    cfg.stream = stream_spec_from_json(j.at("stream"));
    for (const auto& id : j.at("statements")) cfg.statements.push_back(parse_statement(id.get<std::string>()));
    if (j.contains("budget_ms") && !j["budget_ms"].is_null()) cfg.budget_ms = j["budget_ms"].get<long>();
    cfg.workers = j.value("workers", 1);
    cfg.output = j.value("output", std::string());
    cfg.append = j.value("append", false);
    if (j.contains("resume") && !j["resume"].is_null()) cfg.resume = scan_cursor_from_json(j["resume"]);
    if (j.contains("limit") && !j["limit"].is_null()) cfg.limit = j["limit"].get<std::uint64_t>();
    cfg.seed = j.value("seed", std::uint64_t{0});
  } catch (const Json::exception& e) {
    throw ScanError(std::string("malformed scan config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ScanError(std::string("malformed scan config: ") + e.what());
  }
  return cfg;
}

Json to_json(const ScanOutcome& o) {
  Json j;
  j["graphs"] = o.graphs;
  j["checked"] = o.checked;
  j["held"] = o.held;
  j["vacuous"] = o.vacuous;
  j["tight"] = o.tight;
  j["candidates"] = o.candidates;
  j["unknown"] = o.unknown;
  j["elapsed_ms"] = o.elapsed_ms;
  j["cursor"] = to_json(o.cursor);
  j["exhausted"] = o.exhausted;
  return j;
}

int exit_code(const ScanOutcome& o) {
  if (o.candidates > 0) return 2;
  if (o.unknown > 0) return 3;
  return 0;
}

namespace {

struct WorkItem {
  std::uint64_t index = 0;
  std::uint64_t position = 0;
  Graph graph;
  std::vector<StatementReport> reports;
};

void check_graph(WorkItem& item, const ScanConfig& cfg) {
  Budget budget = Budget::from_millis(cfg.budget_ms);
  GraphContext ctx(item.graph, budget);
  for (StatementId id : cfg.statements) {
    StatementReport r = check_statement(ctx, id);
    if (r.status == Verdict::kCounterexample) {
      Budget again = Budget::from_millis(cfg.budget_ms);
      r = confirm_candidate(item.graph, id, r, again);
    }
    item.reports.push_back(std::move(r));
  }
}

std::string row_line(const WorkItem& item, const StatementReport& r) {
  Json row;
  row["idx"] = item.index;
  row["pos"] = item.position;
  const Json body = to_json(r);
  for (auto it = body.begin(); it != body.end(); ++it) row[it.key()] = it.value();
  return row.dump() + "\n";
}

void tally(ScanOutcome& o, const StatementReport& r) {
  ++o.checked;
  switch (r.status) {
    case Verdict::kHeld:
      ++o.held;
      if (r.tight) ++o.tight;
      break;
    case Verdict::kVacuous: ++o.vacuous; break;
    case Verdict::kCounterexample: ++o.candidates; break;
    case Verdict::kUnknown: ++o.unknown; break;
  }
}

ScanOutcome scan_from(const ScanConfig& cfg, GraphStream& stream, std::uint64_t index, bool append,
                      std::ostream* sink) {
  const auto start = std::chrono::steady_clock::now();
  if (cfg.statements.empty()) throw ScanError("no statements to check");
  std::ofstream out;
  if (!cfg.output.empty()) {
    out.open(cfg.output, append ? std::ios::app | std::ios::binary : std::ios::trunc | std::ios::binary);
    if (!out) throw ScanError("cannot write " + cfg.output);
  }
  const int workers = std::max(1, cfg.workers);
  const std::size_t chunk = static_cast<std::size_t>(16 * workers);

  ScanOutcome o;
  std::uint64_t remaining = cfg.limit.value_or(UINT64_MAX);
  bool exhausted = false;
  std::vector<WorkItem> items;
  while (remaining > 0 && !exhausted) {
    items.clear();
    while (items.size() < chunk && remaining > 0) {
      const std::uint64_t position = stream.cursor();
      auto g = stream.next();
      if (!g) {
        exhausted = true;
        break;
      }
      items.push_back(WorkItem{index++, position, std::move(*g), {}});
      --remaining;
    }
    if (workers == 1 || items.size() < 2) {
      for (auto& item : items) check_graph(item, cfg);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < items.size(); i = next++) check_graph(items[i], cfg);
        });
      }
      for (auto& t : pool) t.join();
    }
    for (const auto& item : items) {
      for (const auto& r : item.reports) {
        tally(o, r);
        if (!out.is_open() && sink == nullptr) continue;
        const std::string line = row_line(item, r);
        if (out.is_open()) out << line;
        if (sink != nullptr) *sink << line;
      }
      ++o.graphs;
    }
    if (sink != nullptr) sink->flush();
    if (out.is_open()) {
      out.flush();
      if (!out) throw ScanError("write failed on " + cfg.output);
    }
  }
  if (!exhausted && remaining == 0) {
    // Peek so that a run ending exactly at the last graph reports it.
    GraphStream probe = stream;
    exhausted = !probe.next().has_value();
  }
  o.cursor = ScanCursor{stream.fingerprint(), stream.cursor(), index};
  o.exhausted = exhausted;
  o.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return o;
}

struct Recovered {
  std::uint64_t index = 0;
  std::optional<std::uint64_t> position;  // of the last complete graph
};

// Cuts the output back to whole graphs with idx < limit and reports where
// the kept rows end.
Recovered repair_output(const std::string& path, std::size_t per_graph, std::uint64_t limit) {
  Recovered rec;
  std::ifstream in(path, std::ios::binary);
  if (!in) return rec;
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  in.close();

  struct Row {
    std::size_t end;
    std::uint64_t idx;
    std::uint64_t pos;
  };
  std::vector<Row> rows;
  std::size_t begin = 0;
  while (begin < text.size()) {
    const std::size_t nl = text.find('\n', begin);
    if (nl == std::string::npos) break;
    try {
      const Json j = Json::parse(text.substr(begin, nl - begin));
      rows.push_back(Row{nl + 1, j.at("idx").get<std::uint64_t>(), j.at("pos").get<std::uint64_t>()});
    } catch (const Json::exception&) {
      break;
    }
    begin = nl + 1;
  }
  // Keep maximal prefix of complete graphs below the limit.
  std::size_t keep_end = 0;
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t j = i;
    while (j < rows.size() && rows[j].idx == rows[i].idx) ++j;
    if (j - i != per_graph || rows[i].idx >= limit) break;
    keep_end = rows[j - 1].end;
    rec.index = rows[i].idx + 1;
    rec.position = rows[i].pos;
    i = j;
  }
  if (keep_end != text.size()) std::filesystem::resize_file(path, keep_end);
  return rec;
}

}  // namespace

ScanOutcome run_scan(const ScanConfig& cfg, std::ostream* sink) {
  if (cfg.resume) return resume_scan(cfg, *cfg.resume, sink);
  GraphStream stream = open_stream(cfg.stream, cfg.seed);
  return scan_from(cfg, stream, 0, cfg.append, sink);
}

ScanOutcome resume_scan(ScanConfig cfg, const ScanCursor& cursor, std::ostream* sink) {
  GraphStream stream = open_stream(cfg.stream, cfg.seed);
  if (stream.fingerprint() != cursor.fingerprint) {
    throw ScanError("cursor belongs to stream '" + cursor.fingerprint + "', not '" + stream.fingerprint() + "'");
  }
  std::uint64_t index = cursor.index;
  stream.seek(cursor.position);
  if (cfg.append && !cfg.output.empty() && std::filesystem::exists(cfg.output)) {
    const Recovered rec = repair_output(cfg.output, cfg.statements.size(), cursor.index);
    if (rec.index < cursor.index) {
      // Rows after the last complete graph were lost; scan them again.
      index = rec.index;
      if (rec.position) {
        stream.seek(*rec.position);
        stream.next();
      } else {
        stream.seek(0);
      }
    }
  }
  cfg.resume.reset();
  return scan_from(cfg, stream, index, cfg.append, sink);
}

}  // namespace cyclebound
