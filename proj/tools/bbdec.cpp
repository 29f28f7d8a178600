#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bbdec/pipeline.hpp"
#include "bbdec/seed_db.hpp"
#include "bbdec/simulator.hpp"
#include "bbdec/spacetime.hpp"
#include "json.hpp"

namespace {

struct IndexRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;  // inclusive
};

// "a..b" (inclusive) or a single index.
IndexRange ParseRange(const std::string& text, std::uint64_t size) {
  IndexRange r;
  if (text.empty()) {
    if (size == 0) throw std::runtime_error("database is empty");
    r.last = size - 1;
    return r;
  }
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.first = r.last = std::stoull(text);
    } else {
      r.first = std::stoull(text.substr(0, dots));
      r.last = std::stoull(text.substr(dots + 2));
    }
  } catch (const std::logic_error&) {
    throw std::runtime_error("bad index range " + text);
  }
  if (r.first > r.last || r.last >= size) throw std::runtime_error("index range outside the database");
  return r;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int RunSimulate(const std::string& machine, std::uint64_t steps) {
  bbdec::TransitionTable table = bbdec::TransitionTable::Parse(machine);
  bbdec::SimulationOutcome outcome = bbdec::Simulate(table, steps);
  nlohmann::ordered_json j;
  j["machine"] = table.ToString();
  if (const auto* h = std::get_if<bbdec::Halted>(&outcome)) {
    j["outcome"] = "halted";
    j["step"] = h->step;
    j["state"] = std::string(1, bbdec::StateLetter(h->state));
    j["read"] = h->read;
  } else {
    const auto& c = std::get<bbdec::RunningAtLimit>(outcome).config;
    j["outcome"] = "running";
    j["steps"] = steps;
    j["state"] = std::string(1, bbdec::StateLetter(c.state));
    j["head"] = c.head;
    j["ones"] = c.tape.size();
  }
  std::cout << j.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-halting deciders for small Turing machines"};
  app.require_subcommand(1);

  auto* simulate = app.add_subcommand("simulate", "Run a machine from the blank tape");
  std::string sim_machine;
  std::uint64_t sim_steps = 0;
  simulate->add_option("--machine", sim_machine, "Machine, e.g. 1RB1LC_1RC1RB_1RD0LE_1LA1LD_---0LA")
      ->required();
  simulate->add_option("--steps", sim_steps, "Step limit")->required();

  auto* decide = app.add_subcommand("decide", "Run the decider pipeline");
  std::vector<std::string> machines;
  std::string db_path, index_text, pipeline_spec, out_dir, config_path;
  std::uint64_t halt_steps = 0;
  int threads = 1;
  bool left_is_zero = false;
  auto* machine_opt = decide->add_option("--machine", machines, "Machine (repeatable)");
  auto* db_opt = decide->add_option("--db", db_path, "Seed database file");
  decide->add_option("--index", index_text, "Record range a..b (inclusive)")->needs(db_opt);
  auto* pipeline_opt = decide->add_option("--pipeline", pipeline_spec,
                                          "Deciders, e.g. cyclers:limit=1000,bouncers");
  auto* out_opt = decide->add_option("--out", out_dir, "Directory for certificates");
  decide->add_option("--config", config_path, "key = value configuration file");
  auto* halt_opt = decide->add_option("--halt-steps", halt_steps, "Simulation limit before deciding");
  auto* threads_opt = decide->add_option("--threads", threads, "Worker threads")
                          ->check(CLI::Range(1, 1024));
  auto* polarity_opt = decide->add_flag("--db-left-is-zero", left_is_zero,
                                        "Database move byte 0 means L");
  machine_opt->excludes(db_opt);

  auto* verify = app.add_subcommand("verify", "Check certificate files");
  std::string kind, verify_path;
  verify->add_option("--kind", kind, "far or bouncer")
      ->required()
      ->check(CLI::IsMember({"far", "bouncer"}));
  verify->add_option("file", verify_path, "Certificate file")->required();

  auto* diagram = app.add_subcommand("diagram", "Render a space-time diagram");
  std::string dia_machine, dia_out;
  std::uint64_t dia_steps = 0;
  int cell_size = 1;
  diagram->add_option("--machine", dia_machine, "Machine")->required();
  diagram->add_option("--steps", dia_steps, "Steps")->required()->check(CLI::PositiveNumber);
  diagram->add_option("--out", dia_out, "Output PPM file")->required();
  diagram->add_option("--cell-size", cell_size, "Pixels per cell")->check(CLI::Range(1, 64));

  auto* db = app.add_subcommand("db", "Seed database tools");
  db->require_subcommand(1);
  auto* scan = db->add_subcommand("scan", "List database records");
  std::string scan_path, scan_range;
  bool scan_left_is_zero = false;
  scan->add_option("--db", scan_path, "Seed database file")->required();
  scan->add_option("--index", scan_range, "Record range a..b (inclusive)");
  scan->add_flag("--db-left-is-zero", scan_left_is_zero, "Move byte 0 means L");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) return RunSimulate(sim_machine, sim_steps);

    if (*decide) {
      bbdec::PipelineConfig config;
      if (!config_path.empty()) bbdec::ApplyConfigText(ReadFile(config_path), config);
      if (*pipeline_opt) config.deciders = bbdec::ParsePipelineSpec(pipeline_spec);
      if (*out_opt) config.out_dir = out_dir;
      if (*halt_opt) config.halt_steps = halt_steps;
      if (*threads_opt) config.threads = threads;
      if (*polarity_opt) config.db_left_is_zero = left_is_zero;

      std::vector<bbdec::MachineInput> inputs;
      if (!db_path.empty()) {
        bbdec::SeedDatabase database(db_path, config.db_left_is_zero);
        IndexRange range = ParseRange(index_text, database.size());
        for (std::uint64_t i = range.first; i <= range.last; ++i) {
          inputs.push_back({i, database.Read(i)});
        }
      } else {
        for (std::size_t i = 0; i < machines.size(); ++i) {
          inputs.push_back({i, bbdec::TransitionTable::Parse(machines[i])});
        }
      }
      bbdec::RunPipeline(inputs, config, &std::cout);
      return 0;
    }

    if (*verify) {
      std::vector<bbdec::VerifyEntry> entries = bbdec::VerifyFile(verify_path, kind);
      bool all_ok = !entries.empty();
      for (const auto& e : entries) {
        std::cout << "entry " << e.index << ": " << (e.ok ? "PASS" : "FAIL");
        if (!e.ok) std::cout << " " << e.detail;
        std::cout << '\n';
        all_ok = all_ok && e.ok;
      }
      return all_ok ? 0 : 1;
    }

    if (*diagram) {
      bbdec::TransitionTable table = bbdec::TransitionTable::Parse(dia_machine);
      bbdec::Image image = bbdec::RenderSpacetime(table, dia_steps, {cell_size});
      std::ofstream out(dia_out, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + dia_out);
      out << image.ToPpm();
      return 0;
    }

    if (*scan) {
      bbdec::SeedDatabase database(scan_path, scan_left_is_zero);
      IndexRange range = ParseRange(scan_range, database.size());
      std::cerr << "records: " << database.size() << '\n';
      for (std::uint64_t i = range.first; i <= range.last; ++i) {
        std::cout << i << ' ' << database.Read(i).ToString() << '\n';
      }
      return 0;
    }
  } catch (const bbdec::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
