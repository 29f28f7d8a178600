#include "bbdec/machine.hpp"

namespace bbdec {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

char StateLetter(State s) { return static_cast<char>('A' + s); }

TransitionTable::TransitionTable(int num_states)
    : num_states_(num_states), entries_(2 * static_cast<std::size_t>(num_states)) {
  if (num_states < 1 || num_states > kMaxStates) {
    throw std::invalid_argument("number of states out of range: " + std::to_string(num_states));
  }
}

TransitionTable TransitionTable::Parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty machine", 0);
  // Each row is six characters; rows are separated by '_'.
  if ((text.size() + 1) % 7 != 0) throw ParseError("bad row length", text.size());
  int n = static_cast<int>((text.size() + 1) / 7);
  if (n > kMaxStates) throw ParseError("too many states", 0);
  TransitionTable table(n);
  for (int s = 0; s < n; ++s) {
    std::size_t base = 7 * static_cast<std::size_t>(s);
    if (s + 1 < n && text[base + 6] != '_') throw ParseError("expected '_'", base + 6);
    for (int r = 0; r < 2; ++r) {
      std::size_t at = base + 3 * r;
      std::string_view triple = text.substr(at, 3);
      if (triple == "---") continue;
      Transition t;
      if (triple[0] != '0' && triple[0] != '1') throw ParseError("bad write symbol", at);
      t.write = static_cast<Symbol>(triple[0] - '0');
      if (triple[1] == 'L') {
        t.move = Move::kLeft;
      } else if (triple[1] == 'R') {
        t.move = Move::kRight;
      } else {
        throw ParseError("bad move", at + 1);
      }
      if (triple[2] < 'A' || triple[2] > 'Z') throw ParseError("bad state letter", at + 2);
      t.next = triple[2] - 'A';
      if (t.next >= n) throw ParseError("unknown state letter", at + 2);
      table.Set(s, static_cast<Symbol>(r), t);
    }
  }
  return table;
}

std::string TransitionTable::ToString() const {
  std::string out;
  for (State s = 0; s < num_states_; ++s) {
    if (s > 0) out.push_back('_');
    for (Symbol r = 0; r < 2; ++r) {
      const auto& t = Get(s, r);
      if (!t) {
        out += "---";
        continue;
      }
      out.push_back(static_cast<char>('0' + t->write));
      out.push_back(t->move == Move::kLeft ? 'L' : 'R');
      out.push_back(StateLetter(t->next));
    }
  }
  return out;
}

void TransitionTable::Set(State s, Symbol read, std::optional<Transition> t) {
  if (t && (t->next < 0 || t->next >= num_states_)) {
    throw std::invalid_argument("transition target out of range");
  }
  entries_[2 * s + read] = t;
}

int TransitionTable::CountUndefined() const {
  int count = 0;
  for (const auto& e : entries_) count += e ? 0 : 1;
  return count;
}

TransitionTable TransitionTable::Mirrored() const {
  TransitionTable out = *this;
  for (auto& e : out.entries_) {
    if (e) e->move = Opposite(e->move);
  }
  return out;
}

}  // namespace bbdec
