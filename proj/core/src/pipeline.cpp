#include "bbdec/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "bbdec/backward.hpp"
#include "bbdec/bouncers.hpp"
#include "bbdec/certificates.hpp"
#include "bbdec/far_direct.hpp"
#include "bbdec/far_mitm.hpp"
#include "bbdec/halting_segment.hpp"
#include "bbdec/loops.hpp"
#include "bbdec/simulator.hpp"
#include "json.hpp"

namespace bbdec {

using Json = nlohmann::ordered_json;

namespace {

struct ParamRange {
  std::uint64_t lo;
  std::uint64_t hi;
};

const std::map<std::string, std::map<std::string, ParamRange>>& Ranges() {
  static const std::map<std::string, std::map<std::string, ParamRange>> ranges = {
      {"cyclers", {{"limit", {0, 1'000'000'000}}, {"max_configs", {1, 1ULL << 32}}}},
      {"translated-cyclers", {{"limit", {0, 1'000'000'000}}}},
      {"backward", {{"depth", {0, 1'000'000}}, {"nodes", {1, 1ULL << 40}}}},
      {"halting-segment",
       {{"nmax", {2, static_cast<std::uint64_t>(kMaxSegmentSize)}}, {"nodes", {1, 1ULL << 40}}}},
      {"far-direct", {{"nmax", {1, 10}}}},
      {"far-mitm", {{"nmax", {1, 10}}}},
      {"bouncers", {{"steps", {1, 1'000'000'000}}, {"macro", {1, 1'000'000'000}},
                    {"formulas", {1, 1'000'000'000}}}},
  };
  return ranges;
}

std::string Trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t ParseUnsigned(std::string_view text, const std::string& what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("invalid number for " + what + ": " + std::string(text));
  }
  return value;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = s.find(sep, pos);
    parts.push_back(s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return parts;
}

std::uint64_t Param(const DeciderSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) throw std::logic_error("missing parameter " + key);
  return it->second;
}

void WriteFile(const std::string& dir, const std::string& name, const std::string& content) {
  std::filesystem::create_directories(dir);
  std::ofstream out(std::filesystem::path(dir) / name);
  if (!out) throw std::runtime_error("cannot write " + name);
  out << content << '\n';
}

// Runs one decider. Returns true when it settled the machine.
bool RunDecider(const DeciderSpec& spec, const TransitionTable& table, const MachineInput& input,
                const PipelineConfig& config, MachineResult& result, Json& j) {
  const std::string& name = spec.name;
  auto settle = [&](Verdict v) {
    result.verdict = v;
    result.decider = name;
    j["verdict"] = ToString(v);
    j["decider"] = name;
  };
  if (name == "cyclers") {
    CyclerResult r = DecideCyclers(table, Param(spec, "limit"), Param(spec, "max_configs"));
    if (r.verdict == Verdict::kUnknown) return false;
    settle(r.verdict);
    if (r.verdict == Verdict::kHalt) {
      result.halt_step = r.halt_step;
      j["halt_step"] = r.halt_step;
    } else {
      j["first_seen"] = r.first_seen;
      j["repeated_at"] = r.repeated_at;
    }
    return true;
  }
  if (name == "translated-cyclers") {
    TranslatedCyclerResult r = DecideTranslatedCyclers(table, Param(spec, "limit"));
    if (r.verdict == Verdict::kUnknown) return false;
    settle(r.verdict);
    if (r.verdict == Verdict::kHalt) {
      result.halt_step = r.halt_step;
      j["halt_step"] = r.halt_step;
    } else {
      j["older_step"] = r.older_step;
      j["current_step"] = r.current_step;
      j["side"] = r.side == Side::kRight ? "right" : "left";
      j["distance"] = r.distance;
    }
    return true;
  }
  if (name == "backward") {
    int depth = static_cast<int>(Param(spec, "depth"));
    BackwardResult r = DecideBackward(table, depth, Param(spec, "nodes"));
    if (r.verdict != Verdict::kNonHalt) return false;
    // The backward argument also needs the machine to run depth steps.
    if (static_cast<std::uint64_t>(depth) > config.halt_steps &&
        std::holds_alternative<Halted>(Simulate(table, static_cast<std::uint64_t>(depth)))) {
      return false;
    }
    settle(r.verdict);
    j["depth"] = r.max_depth_reached;
    return true;
  }
  if (name == "halting-segment") {
    int nmax = static_cast<int>(Param(spec, "nmax"));
    for (int n = 2; n <= nmax; ++n) {
      HaltingSegmentResult r = DecideHaltingSegment(table, n, Param(spec, "nodes"));
      if (r.verdict != Verdict::kNonHalt) continue;
      settle(r.verdict);
      j["n"] = n;
      Json uncovered = Json::array();
      for (const HaltingPosition& h : r.uncovered) {
        uncovered.push_back({{"transition", std::string(1, StateLetter(h.state)) +
                                                static_cast<char>('0' + h.read)},
                             {"pos", h.pos}});
      }
      j["uncovered"] = uncovered;
      return true;
    }
    return false;
  }
  if (name == "far-direct" || name == "far-mitm") {
    int nmax = static_cast<int>(Param(spec, "nmax"));
    for (int n = 1; n <= nmax; ++n) {
      FarResult r;
      if (name == "far-direct") {
        r = DecideFarDirect(table, n, true);
        if (r.verdict != Verdict::kNonHalt) r = DecideFarDirect(table, n, false);
      } else {
        r = DecideFarMitm(table, n);
      }
      if (r.verdict != Verdict::kNonHalt) continue;
      settle(r.verdict);
      j["n"] = n;
      j["direction"] = r.certificate->left_to_right ? "left_to_right" : "right_to_left";
      if (!config.out_dir.empty()) {
        std::string file = std::to_string(input.index) + ".far.json";
        WriteFile(config.out_dir, file, FarCertificateToJson(*r.certificate));
        j["certificate"] = file;
      }
      return true;
    }
    return false;
  }
  if (name == "bouncers") {
    BouncerResult r = DecideBouncers(table, Param(spec, "steps"), Param(spec, "macro"),
                                     Param(spec, "formulas"));
    if (r.verdict == Verdict::kUnknown) return false;
    settle(r.verdict);
    if (r.verdict == Verdict::kHalt) {
      result.halt_step = r.halt_step;
      j["halt_step"] = r.halt_step;
      return true;
    }
    j["formula"] = r.certificate->formula.ToString();
    j["start_step"] = r.certificate->start_step;
    j["macro_steps"] = r.certificate->macro_steps;
    if (!config.out_dir.empty()) {
      std::string file = std::to_string(input.index) + ".bouncer.json";
      WriteFile(config.out_dir, file, BouncerCertificateToJson(*r.certificate));
      j["certificate"] = file;
    }
    return true;
  }
  throw ConfigError("unknown decider " + name);
}

}  // namespace

const std::vector<DeciderSpec>& DefaultDeciders() {
  static const std::vector<DeciderSpec> deciders = {
      {"cyclers", {{"limit", 1000}, {"max_configs", 1 << 20}}},
      {"translated-cyclers", {{"limit", 10000}}},
      {"backward", {{"depth", 50}, {"nodes", 1 << 22}}},
      {"halting-segment", {{"nmax", 8}, {"nodes", 1 << 22}}},
      {"far-direct", {{"nmax", 4}}},
      {"far-mitm", {{"nmax", 6}}},
      {"bouncers", {{"steps", 1000}, {"macro", 200}, {"formulas", 16}}},
  };
  return deciders;
}

std::vector<DeciderSpec> ParsePipelineSpec(std::string_view spec) {
  std::vector<DeciderSpec> out;
  for (std::string_view entry : Split(spec, ',')) {
    std::vector<std::string_view> parts = Split(entry, ':');
    std::string name = Trim(parts[0]);
    auto defaults = std::find_if(DefaultDeciders().begin(), DefaultDeciders().end(),
                                 [&](const DeciderSpec& d) { return d.name == name; });
    if (defaults == DefaultDeciders().end()) throw ConfigError("unknown decider '" + name + "'");
    DeciderSpec d = *defaults;
    const auto& ranges = Ranges().at(name);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      std::size_t eq = parts[i].find('=');
      if (eq == std::string_view::npos) throw ConfigError("expected key=value in '" + std::string(entry) + "'");
      std::string key = Trim(parts[i].substr(0, eq));
      auto range = ranges.find(key);
      if (range == ranges.end()) throw ConfigError("unknown parameter " + name + ":" + key);
      std::uint64_t value = ParseUnsigned(Trim(parts[i].substr(eq + 1)), name + ":" + key);
      if (value < range->second.lo || value > range->second.hi) {
        throw ConfigError(name + ":" + key + " out of range [" + std::to_string(range->second.lo) +
                          ", " + std::to_string(range->second.hi) + "]");
      }
      d.params[key] = value;
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::string FormatPipelineSpec(const std::vector<DeciderSpec>& deciders) {
  std::string out;
  for (const DeciderSpec& d : deciders) {
    if (!out.empty()) out += ',';
    out += d.name;
    for (const auto& [k, v] : d.params) out += ":" + k + "=" + std::to_string(v);
  }
  return out;
}

void ApplyConfigText(std::string_view text, PipelineConfig& config) {
  int line_no = 0;
  for (std::string_view line : Split(text, '\n')) {
    ++line_no;
    std::size_t hash = line.find('#');
    std::string content = Trim(line.substr(0, hash));
    if (content.empty()) continue;
    std::size_t eq = content.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    std::string key = Trim(std::string_view(content).substr(0, eq));
    std::string value = Trim(std::string_view(content).substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key == "pipeline") {
      config.deciders = ParsePipelineSpec(value);
    } else if (key == "halt_steps") {
      config.halt_steps = ParseUnsigned(value, key);
    } else if (key == "threads") {
      std::uint64_t t = ParseUnsigned(value, key);
      if (t < 1 || t > 1024) throw ConfigError("threads out of range");
      config.threads = static_cast<int>(t);
    } else if (key == "out") {
      config.out_dir = value;
    } else if (key == "db_left_is_zero") {
      if (value != "true" && value != "false") throw ConfigError("db_left_is_zero must be true or false");
      config.db_left_is_zero = value == "true";
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key " + key);
    }
  }
}

MachineResult DecideMachine(const MachineInput& input, const PipelineConfig& config) {
  MachineResult result;
  result.index = input.index;
  result.machine = input.table.ToString();
  Json j;
  j["index"] = input.index;
  j["machine"] = result.machine;
  j["verdict"] = ToString(Verdict::kUnknown);
  try {
    SimulationOutcome outcome = Simulate(input.table, config.halt_steps);
    if (const auto* h = std::get_if<Halted>(&outcome)) {
      result.verdict = Verdict::kHalt;
      result.decider = "simulation";
      result.halt_step = h->step;
      j["verdict"] = ToString(Verdict::kHalt);
      j["decider"] = "simulation";
      j["halt_step"] = h->step;
    } else {
      for (const DeciderSpec& spec : config.deciders) {
        if (RunDecider(spec, input.table, input, config, result, j)) break;
      }
    }
  } catch (const std::exception& e) {
    result.verdict = Verdict::kUnknown;
    result.decider.clear();
    result.error = e.what();
    j = Json();
    j["index"] = input.index;
    j["machine"] = result.machine;
    j["verdict"] = ToString(Verdict::kUnknown);
    j["error"] = result.error;
  }
  result.json = j.dump();
  return result;
}

std::vector<MachineResult> RunPipeline(const std::vector<MachineInput>& machines,
                                       const PipelineConfig& config, std::ostream* out) {
  std::vector<std::optional<MachineResult>> slots(machines.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= machines.size()) return;
      MachineResult r = DecideMachine(machines[i], config);
      {
        std::lock_guard<std::mutex> lock(mutex);
        slots[i] = std::move(r);
      }
      ready.notify_all();
    }
  };

  int threads = std::max(1, std::min<int>(config.threads, static_cast<int>(machines.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

  std::vector<MachineResult> results;
  results.reserve(machines.size());
  for (std::size_t i = 0; i < machines.size(); ++i) {
    std::unique_lock<std::mutex> lock(mutex);
    ready.wait(lock, [&] { return slots[i].has_value(); });
    results.push_back(std::move(*slots[i]));
    slots[i].reset();
    lock.unlock();
    if (out) *out << results.back().json << '\n';
  }
  for (std::thread& t : pool) t.join();
  if (out) out->flush();
  return results;
}

std::vector<VerifyEntry> VerifyFile(const std::string& path, std::string_view kind) {
  if (kind != "far" && kind != "bouncer") throw ConfigError("kind must be far or bouncer");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::vector<VerifyEntry> entries;
  std::vector<std::string> docs;
  try {
    docs = SplitCertificateDocuments(buffer.str());
  } catch (const CertificateError& e) {
    entries.push_back({0, false, std::string("parse error: ") + e.what()});
    return entries;
  }
  for (std::size_t i = 0; i < docs.size(); ++i) {
    VerifyEntry entry;
    entry.index = i;
    try {
      if (kind == "far") {
        FarCertificate cert = FarCertificateFromJson(docs[i]);
        FarVerifyReport report = VerifyFarCertificate(cert);
        entry.ok = report.ok;
        if (!report.ok) {
          entry.detail = "condition (" + std::to_string(report.failed_condition) +
                         ") violated: " + report.detail;
        }
      } else {
        BouncerCertificate cert = BouncerCertificateFromJson(docs[i]);
        BouncerVerifyReport report =
            VerifyBouncerCertificate(TransitionTable::Parse(cert.machine), cert);
        entry.ok = report.ok;
        entry.detail = report.detail;
      }
    } catch (const std::exception& e) {
      entry.ok = false;
      entry.detail = std::string("error: ") + e.what();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace bbdec
