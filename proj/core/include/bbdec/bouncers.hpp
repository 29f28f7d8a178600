#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bbdec/decision.hpp"
#include "bbdec/directional.hpp"
#include "bbdec/formula_tape.hpp"
#include "bbdec/machine.hpp"

namespace bbdec {

inline constexpr std::uint64_t kShiftRuleStepCap = 10000;

// Right rule: u s> (r) -> (r_tilde) u s>.  Left rule: (r) <s u -> <s u (r_tilde).
// steps is the machine step count of one application.
struct ShiftRule {
  Facing direction = Facing::kRight;
  std::string u;
  State state = 0;
  std::string r;
  std::string r_tilde;
  std::uint64_t steps = 0;

  bool operator==(const ShiftRule&) const = default;
};

// Simulates the finite word around the head. Fails on a halt, an exit through
// the near end or in another state, a repeated configuration, or when the step
// budget runs out. step_budget 0 selects the configuration-count bound capped
// at step_cap.
std::optional<ShiftRule> DetectShiftRule(const TransitionTable& table, const std::string& u,
                                         const Head& head, const std::string& r,
                                         std::uint64_t step_budget = 0,
                                         std::uint64_t step_cap = kShiftRuleStepCap);

enum class FormulaStepKind { kUsual, kShift };

struct FormulaStepResult {
  StepStatus status = StepStatus::kNoRule;
  FormulaTape tape;
  FormulaStepKind kind = FormulaStepKind::kUsual;
  std::optional<ShiftRule> rule;
};

// One usual step or one shift rule application, without alignment.
FormulaStepResult FormulaStep(const TransitionTable& table, const FormulaTape& f,
                              std::uint64_t step_cap = kShiftRuleStepCap);

// FormulaStep(Align(f)).
FormulaStepResult MacroStep(const TransitionTable& table, const FormulaTape& f,
                            std::uint64_t step_cap = kShiftRuleStepCap);

struct SpecialCaseRun {
  std::uint64_t macro_steps = 0;
  std::vector<ShiftRule> shift_rules;  // distinct, in order of first use
};

// Macro steps from f until a special case of f appears.
std::optional<SpecialCaseRun> ReachesSpecialCase(const TransitionTable& table,
                                                 const FormulaTape& f,
                                                 std::uint64_t macro_limit,
                                                 std::uint64_t step_cap = kShiftRuleStepCap);

// Headless tape recorded when the head points at 0^inf on a new cell. Words of
// left records are reversed so the far end comes first.
struct RecordTape {
  std::uint64_t step = 0;
  std::string word;
};

using RecordTapeIndex = std::map<Head, std::vector<RecordTape>>;

RecordTapeIndex RecordBreakingTapes(const TransitionTable& table, std::uint64_t step_limit);

// Greedy headless fit of C_f(0), C_f(1), C_f(2). nullopt on failure.
std::optional<FormulaSide> FitFormulaTape(std::string_view t0, std::string_view t1,
                                          std::string_view t2);

// Constant second differences. Throws std::invalid_argument on fewer than 4 values.
bool IsQuadratic(std::span<const std::uint64_t> values);

// Re-attaches the head and 0^inf ends to a fitted record word.
FormulaTape AttachHead(const FormulaSide& headless, const Head& head);

struct BouncerCertificate {
  std::string machine;
  FormulaTape formula;
  std::uint64_t start_step = 0;
  std::uint64_t macro_steps = 0;
  std::vector<ShiftRule> shift_rules;
};

struct BouncerResult {
  Verdict verdict = Verdict::kUnknown;
  std::optional<BouncerCertificate> certificate;
  std::uint64_t halt_step = 0;
  std::uint64_t tested_formulas = 0;
};

BouncerResult DecideBouncers(const TransitionTable& table, std::uint64_t step_limit = 1000,
                             std::uint64_t macro_limit = 200,
                             std::uint64_t max_formula_tapes = 16);

struct BouncerVerifyReport {
  bool ok = false;
  std::string detail;
};

BouncerVerifyReport VerifyBouncerCertificate(const TransitionTable& table,
                                             const BouncerCertificate& cert,
                                             std::uint64_t step_cap = kShiftRuleStepCap);

}  // namespace bbdec
