#include "bbdec/directional.hpp"

#include <algorithm>

namespace bbdec {

std::string FormatHead(const Head& h) {
  std::string out;
  if (h.facing == Facing::kLeft) out.push_back('<');
  out.push_back(StateLetter(h.state));
  if (h.facing == Facing::kRight) out.push_back('>');
  return out;
}

std::string DirectionalTape::ToString() const {
  std::string out;
  auto token = [&out](const std::string& t) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  };
  if (left_inf) token("0^inf");
  if (!left.empty()) token(left);
  token(FormatHead(head));
  if (!right.empty()) token(right);
  if (right_inf) token("0^inf");
  return out;
}

DirectionalTape InitialDirectionalTape() { return DirectionalTape{}; }

StepStatus ApplyDirectionalStep(const TransitionTable& table, DirectionalTape& tape) {
  Head& h = tape.head;
  if (h.facing == Facing::kRight) {
    bool from_inf = tape.right.empty();
    if (from_inf && !tape.right_inf) return StepStatus::kNoRule;
    Symbol x = from_inf ? 0 : static_cast<Symbol>(tape.right.front() - '0');
    const auto& t = table.Get(h.state, x);
    if (!t) return StepStatus::kHalted;
    char w = static_cast<char>('0' + t->write);
    if (t->move == Move::kRight) {
      // s> x -> x' s>
      if (!from_inf) tape.right.erase(tape.right.begin());
      tape.left.push_back(w);
    } else {
      // s> x -> <s' x'
      if (from_inf) {
        tape.right.push_back(w);
      } else {
        tape.right.front() = w;
      }
      h.facing = Facing::kLeft;
    }
    h.state = t->next;
    return StepStatus::kStepped;
  }
  bool from_inf = tape.left.empty();
  if (from_inf && !tape.left_inf) return StepStatus::kNoRule;
  Symbol x = from_inf ? 0 : static_cast<Symbol>(tape.left.back() - '0');
  const auto& t = table.Get(h.state, x);
  if (!t) return StepStatus::kHalted;
  char w = static_cast<char>('0' + t->write);
  if (t->move == Move::kLeft) {
    // x <s -> <s' x'
    if (!from_inf) tape.left.pop_back();
    tape.right.insert(tape.right.begin(), w);
  } else {
    // x <s -> x' s>
    if (from_inf) {
      tape.left.push_back(w);
    } else {
      tape.left.back() = w;
    }
    h.facing = Facing::kRight;
  }
  h.state = t->next;
  return StepStatus::kStepped;
}

std::optional<DirectionalTape> DirectionalStep(const TransitionTable& table,
                                               const DirectionalTape& tape) {
  DirectionalTape next = tape;
  if (ApplyDirectionalStep(table, next) != StepStatus::kStepped) return std::nullopt;
  return next;
}

DirectionalSimulator::DirectionalSimulator(const TransitionTable& table) : table_(table) {}

StepStatus DirectionalSimulator::Step() {
  if (head_.facing == Facing::kRight) {
    bool from_inf = right_rev_.empty();
    Symbol x = from_inf ? 0 : static_cast<Symbol>(right_rev_.back() - '0');
    const auto& t = table_.Get(head_.state, x);
    if (!t) return StepStatus::kHalted;
    char w = static_cast<char>('0' + t->write);
    if (t->move == Move::kRight) {
      if (!from_inf) right_rev_.pop_back();
      left_.push_back(w);
      ++boundary_;
    } else {
      if (from_inf) {
        right_rev_.push_back(w);
      } else {
        right_rev_.back() = w;
      }
      head_.facing = Facing::kLeft;
    }
    head_.state = t->next;
  } else {
    bool from_inf = left_.empty();
    Symbol x = from_inf ? 0 : static_cast<Symbol>(left_.back() - '0');
    const auto& t = table_.Get(head_.state, x);
    if (!t) return StepStatus::kHalted;
    char w = static_cast<char>('0' + t->write);
    if (t->move == Move::kLeft) {
      if (!from_inf) left_.pop_back();
      right_rev_.push_back(w);
      --boundary_;
    } else {
      if (from_inf) {
        left_.push_back(w);
      } else {
        left_.back() = w;
      }
      head_.facing = Facing::kRight;
    }
    head_.state = t->next;
  }
  ++steps_;
  return StepStatus::kStepped;
}

DirectionalTape DirectionalSimulator::Tape() const {
  DirectionalTape t;
  t.left = left_;
  t.head = head_;
  t.right.assign(right_rev_.rbegin(), right_rev_.rend());
  return t;
}

std::string DirectionalSimulator::HeadlessWord() const {
  std::string out = left_;
  out.append(right_rev_.rbegin(), right_rev_.rend());
  return out;
}

Configuration DirectionalSimulator::ToClassical() const {
  Configuration c;
  c.state = head_.state;
  c.head = head_.facing == Facing::kRight ? boundary_ : boundary_ - 1;
  std::int64_t pos = boundary_ - static_cast<std::int64_t>(left_.size());
  for (char ch : left_) c.Write(pos++, static_cast<Symbol>(ch - '0'));
  for (auto it = right_rev_.rbegin(); it != right_rev_.rend(); ++it) {
    c.Write(pos++, static_cast<Symbol>(*it - '0'));
  }
  // Materialised cells are exactly the visited ones, plus the head cell.
  std::int64_t lo = boundary_ - static_cast<std::int64_t>(left_.size());
  std::int64_t hi = pos - 1;
  c.leftmost = std::min(lo, c.head);
  c.rightmost = std::max(hi, c.head);
  return c;
}

}  // namespace bbdec
