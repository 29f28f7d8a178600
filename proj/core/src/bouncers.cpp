#include "bbdec/bouncers.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace bbdec {

namespace {

std::string TapeKey(const DirectionalTape& t) {
  std::string key = t.left;
  key.push_back(static_cast<char>('A' + t.head.state));
  key.push_back(t.head.facing == Facing::kLeft ? '<' : '>');
  key += t.right;
  return key;
}

std::uint64_t DefaultBudget(int num_states, std::size_t length, std::uint64_t cap) {
  if (length >= 40) return cap;
  std::uint64_t bound = 2 * static_cast<std::uint64_t>(num_states) * (length + 1) *
                        (std::uint64_t{1} << length);
  return std::min(bound, cap);
}

// Reads the symbol the head faces (0 for 0^inf), removes it from its wall and
// writes the new symbol on the side the head moves away from.
StepStatus UsualStep(const TransitionTable& table, FormulaTape& f) {
  std::string& lw = f.left.walls.back();
  std::string& rw = f.right.walls.front();
  Symbol x = 0;
  if (f.head.facing == Facing::kRight) {
    if (!rw.empty()) x = static_cast<Symbol>(rw.front() - '0');
  } else {
    if (!lw.empty()) x = static_cast<Symbol>(lw.back() - '0');
  }
  const auto& t = table.Get(f.head.state, x);
  if (!t) return StepStatus::kHalted;
  if (f.head.facing == Facing::kRight) {
    if (!rw.empty()) rw.erase(rw.begin());
  } else {
    if (!lw.empty()) lw.pop_back();
  }
  char w = static_cast<char>('0' + t->write);
  if (t->move == Move::kRight) {
    lw.push_back(w);
    f.head.facing = Facing::kRight;
  } else {
    rw.insert(rw.begin(), w);
    f.head.facing = Facing::kLeft;
  }
  f.head.state = t->next;
  return StepStatus::kStepped;
}

}  // namespace

std::optional<ShiftRule> DetectShiftRule(const TransitionTable& table, const std::string& u,
                                         const Head& head, const std::string& r,
                                         std::uint64_t step_budget, std::uint64_t step_cap) {
  if (r.empty()) return std::nullopt;
  if (step_budget == 0) step_budget = DefaultBudget(table.num_states(), u.size() + r.size(), step_cap);
  DirectionalTape tape;
  tape.left_inf = false;
  tape.right_inf = false;
  tape.head = head;
  if (head.facing == Facing::kRight) {
    tape.left = u;
    tape.right = r;
  } else {
    tape.left = r;
    tape.right = u;
  }
  std::unordered_set<std::string> seen;
  for (std::uint64_t steps = 0; steps <= step_budget; ++steps) {
    if (!seen.insert(TapeKey(tape)).second) return std::nullopt;
    StepStatus status = ApplyDirectionalStep(table, tape);
    if (status == StepStatus::kHalted) return std::nullopt;
    if (status == StepStatus::kStepped) continue;
    // The head faces a finite end.
    if (tape.head != head) return std::nullopt;
    ShiftRule rule{head.facing, u, head.state, r, std::string(), steps};
    if (head.facing == Facing::kRight) {
      if (!tape.right.empty() || tape.left.substr(r.size()) != u) return std::nullopt;
      rule.r_tilde = tape.left.substr(0, r.size());
    } else {
      if (!tape.left.empty() || tape.right.substr(0, u.size()) != u) return std::nullopt;
      rule.r_tilde = tape.right.substr(u.size());
    }
    return rule;
  }
  return std::nullopt;
}

FormulaStepResult FormulaStep(const TransitionTable& table, const FormulaTape& f,
                              std::uint64_t step_cap) {
  FormulaStepResult result;
  result.tape = f;
  FormulaTape& g = result.tape;
  bool right = f.head.facing == Facing::kRight;
  const FormulaSide& facing_side = right ? f.right : f.left;
  const std::string& adjacent = right ? facing_side.walls.front() : facing_side.walls.back();
  bool at_inf = right ? f.right_inf : f.left_inf;

  if (!adjacent.empty() || (facing_side.repeaters.empty() && at_inf)) {
    result.status = UsualStep(table, g);
    return result;
  }
  if (facing_side.repeaters.empty()) return result;

  result.kind = FormulaStepKind::kShift;
  if (right) {
    const std::string& context = f.left.walls.back();
    const std::string& r = f.right.repeaters.front();
    for (std::size_t len = 0; len <= context.size(); ++len) {
      std::string u = context.substr(context.size() - len);
      auto rule = DetectShiftRule(table, u, f.head, r, 0, step_cap);
      if (!rule) continue;
      g.left.walls.back().resize(context.size() - len);
      g.left.repeaters.push_back(rule->r_tilde);
      g.left.walls.push_back(u);
      g.right.walls.erase(g.right.walls.begin());
      g.right.repeaters.erase(g.right.repeaters.begin());
      result.rule = std::move(rule);
      result.status = StepStatus::kStepped;
      return result;
    }
  } else {
    const std::string& context = f.right.walls.front();
    const std::string& r = f.left.repeaters.back();
    for (std::size_t len = 0; len <= context.size(); ++len) {
      std::string u = context.substr(0, len);
      auto rule = DetectShiftRule(table, u, f.head, r, 0, step_cap);
      if (!rule) continue;
      g.left.walls.pop_back();
      g.left.repeaters.pop_back();
      std::string rest = context.substr(len);
      g.right.walls.front() = u;
      g.right.repeaters.insert(g.right.repeaters.begin(), rule->r_tilde);
      g.right.walls.insert(g.right.walls.begin() + 1, rest);
      result.rule = std::move(rule);
      result.status = StepStatus::kStepped;
      return result;
    }
  }
  return result;
}

FormulaStepResult MacroStep(const TransitionTable& table, const FormulaTape& f,
                            std::uint64_t step_cap) {
  return FormulaStep(table, Align(f), step_cap);
}

std::optional<SpecialCaseRun> ReachesSpecialCase(const TransitionTable& table,
                                                 const FormulaTape& f,
                                                 std::uint64_t macro_limit,
                                                 std::uint64_t step_cap) {
  SpecialCaseRun run;
  FormulaTape current = f;
  for (std::uint64_t k = 1; k <= macro_limit; ++k) {
    FormulaStepResult step = MacroStep(table, current, step_cap);
    if (step.status != StepStatus::kStepped) return std::nullopt;
    if (step.rule && std::find(run.shift_rules.begin(), run.shift_rules.end(), *step.rule) ==
                         run.shift_rules.end()) {
      run.shift_rules.push_back(*step.rule);
    }
    current = std::move(step.tape);
    if (IsSpecialCase(current, f)) {
      run.macro_steps = k;
      return run;
    }
  }
  return std::nullopt;
}

RecordTapeIndex RecordBreakingTapes(const TransitionTable& table, std::uint64_t step_limit) {
  RecordTapeIndex index;
  DirectionalSimulator sim(table);
  for (std::uint64_t t = 1; t <= step_limit; ++t) {
    if (sim.Step() != StepStatus::kStepped) break;
    const Head& h = sim.head();
    if (h.facing == Facing::kRight && sim.at_right_end()) {
      index[h].push_back({t, sim.HeadlessWord()});
    } else if (h.facing == Facing::kLeft && sim.at_left_end()) {
      std::string word = sim.HeadlessWord();
      std::reverse(word.begin(), word.end());
      index[h].push_back({t, std::move(word)});
    }
  }
  return index;
}

std::optional<FormulaSide> FitFormulaTape(std::string_view t0, std::string_view t1,
                                          std::string_view t2) {
  FormulaSide out;
  while (true) {
    if (t0.empty() && t1.empty() && t2.empty()) return out;
    if (!t0.empty() && !t1.empty() && !t2.empty() && t0[0] == t1[0] && t1[0] == t2[0]) {
      out.walls.back().push_back(t0[0]);
      t0.remove_prefix(1);
      t1.remove_prefix(1);
      t2.remove_prefix(1);
      continue;
    }
    std::size_t common = 0;
    while (common < t1.size() && common < t2.size() && t1[common] == t2[common]) ++common;
    bool fitted = false;
    for (std::size_t l = common; l >= 1; --l) {
      if (2 * l <= t2.size() && t2.substr(0, l) == t2.substr(l, l)) {
        out.repeaters.emplace_back(t2.substr(0, l));
        out.walls.emplace_back();
        t1.remove_prefix(l);
        t2.remove_prefix(2 * l);
        fitted = true;
        break;
      }
    }
    if (!fitted) return std::nullopt;
  }
}

bool IsQuadratic(std::span<const std::uint64_t> values) {
  if (values.size() < 4) throw std::invalid_argument("need at least 4 values");
  auto second = [&](std::size_t i) {
    return static_cast<std::int64_t>(values[i + 2]) - 2 * static_cast<std::int64_t>(values[i + 1]) +
           static_cast<std::int64_t>(values[i]);
  };
  for (std::size_t i = 1; i + 2 < values.size(); ++i) {
    if (second(i) != second(0)) return false;
  }
  return true;
}

FormulaTape AttachHead(const FormulaSide& headless, const Head& head) {
  FormulaTape f;
  f.head = head;
  if (head.facing == Facing::kRight) {
    f.left = headless;
  } else {
    f.right = headless.Reversed();
  }
  return f;
}

namespace {

std::optional<std::size_t> FindLength(const std::vector<RecordTape>& tapes, std::size_t end,
                                      std::size_t length) {
  auto first = tapes.begin();
  auto last = tapes.begin() + static_cast<std::ptrdiff_t>(end);
  auto it = std::lower_bound(first, last, length, [](const RecordTape& t, std::size_t len) {
    return t.word.size() < len;
  });
  if (it == last || it->word.size() != length) return std::nullopt;
  return static_cast<std::size_t>(it - first);
}

}  // namespace

BouncerResult DecideBouncers(const TransitionTable& table, std::uint64_t step_limit,
                             std::uint64_t macro_limit, std::uint64_t max_formula_tapes) {
  BouncerResult result;
  {
    DirectionalSimulator sim(table);
    while (sim.steps() < step_limit) {
      if (sim.Step() == StepStatus::kHalted) {
        result.verdict = Verdict::kHalt;
        result.halt_step = sim.steps() + 1;
        return result;
      }
    }
  }
  RecordTapeIndex index = RecordBreakingTapes(table, step_limit);
  for (const auto& [head, tapes] : index) {
    std::uint64_t tested = 0;
    bool done = false;
    for (std::size_t i = 3; i < tapes.size() && !done; ++i) {
      const RecordTape& tape4 = tapes[i];
      for (std::size_t j = 2; j < i; ++j) {
        const RecordTape& tape3 = tapes[j];
        std::size_t diff = tape4.word.size() - tape3.word.size();
        if (diff > tape3.word.size()) continue;
        auto i2 = FindLength(tapes, i, tape3.word.size() - diff);
        if (!i2) continue;
        const RecordTape& tape2 = tapes[*i2];
        if (diff > tape2.word.size()) continue;
        auto i1 = FindLength(tapes, i, tape2.word.size() - diff);
        if (!i1) continue;
        const RecordTape& tape1 = tapes[*i1];
        std::uint64_t steps[] = {tape1.step, tape2.step, tape3.step, tape4.step};
        if (!IsQuadratic(steps)) continue;
        auto fitted = FitFormulaTape(tape1.word, tape2.word, tape3.word);
        if (!fitted) continue;
        FormulaTape f = AttachHead(*fitted, head);
        auto run = ReachesSpecialCase(table, f, macro_limit);
        ++result.tested_formulas;
        if (run) {
          BouncerCertificate cert{table.ToString(), f, tape1.step, run->macro_steps,
                                  std::move(run->shift_rules)};
          BouncerVerifyReport report = VerifyBouncerCertificate(table, cert);
          if (!report.ok) throw std::logic_error("bouncer certificate rejected: " + report.detail);
          result.verdict = Verdict::kNonHalt;
          result.certificate = std::move(cert);
          return result;
        }
        if (++tested == max_formula_tapes) {
          done = true;
          break;
        }
      }
    }
  }
  return result;
}

BouncerVerifyReport VerifyBouncerCertificate(const TransitionTable& table,
                                             const BouncerCertificate& cert,
                                             std::uint64_t step_cap) {
  BouncerVerifyReport report;
  if (!cert.formula.Valid()) {
    report.detail = "malformed formula tape";
    return report;
  }
  if (cert.macro_steps == 0) {
    report.detail = "macro step count must be positive";
    return report;
  }
  DirectionalSimulator sim(table);
  while (sim.steps() < cert.start_step) {
    if (sim.Step() != StepStatus::kStepped) {
      report.detail = "machine halts before the start step";
      return report;
    }
  }
  if (!cert.formula.Contains(sim.Tape())) {
    report.detail = "tape at the start step is not in the formula language";
    return report;
  }
  FormulaTape current = cert.formula;
  for (std::uint64_t k = 0; k < cert.macro_steps; ++k) {
    FormulaStepResult step = MacroStep(table, current, step_cap);
    if (step.status != StepStatus::kStepped) {
      report.detail = "macro step " + std::to_string(k + 1) +
                      (step.status == StepStatus::kHalted ? " halts" : " has no rule");
      return report;
    }
    current = std::move(step.tape);
  }
  if (!IsSpecialCase(current, cert.formula)) {
    report.detail = "final formula " + current.ToString() + " is not a special case";
    return report;
  }
  report.ok = true;
  return report;
}

}  // namespace bbdec
