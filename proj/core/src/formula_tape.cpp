#include "bbdec/formula_tape.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bbdec {

namespace {

constexpr std::string_view kInf = "0^inf";

bool IsBits(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

// Whether s is r^k for some k >= 0.
bool IsPowerOf(std::string_view s, std::string_view r) {
  if (r.empty()) return s.empty();
  if (s.size() % r.size() != 0) return false;
  for (std::size_t i = 0; i < s.size(); i += r.size()) {
    if (s.substr(i, r.size()) != r) return false;
  }
  return true;
}

// new_wall == prev^a base next^b, where missing neighbours allow no copies.
bool WallSpecialCase(std::string_view new_wall, std::string_view base,
                     const std::string* prev, const std::string* next) {
  std::size_t offset = 0;
  while (true) {
    std::string_view rest = new_wall.substr(offset);
    if (StartsWith(rest, base)) {
      std::string_view tail = rest.substr(base.size());
      if (next ? IsPowerOf(tail, *next) : tail.empty()) return true;
    }
    if (!prev || !StartsWith(rest, *prev)) return false;
    offset += prev->size();
  }
}

bool SideSpecialCase(const FormulaSide& n, const FormulaSide& b) {
  if (n.repeaters != b.repeaters) return false;
  for (std::size_t i = 0; i < b.walls.size(); ++i) {
    const std::string* prev = i > 0 ? &b.repeaters[i - 1] : nullptr;
    const std::string* next = i < b.repeaters.size() ? &b.repeaters[i] : nullptr;
    if (!WallSpecialCase(n.walls[i], b.walls[i], prev, next)) return false;
  }
  return true;
}

std::string ReversedString(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace

bool FormulaSide::Valid() const {
  if (walls.size() != repeaters.size() + 1) return false;
  for (const auto& w : walls) {
    if (!IsBits(w)) return false;
  }
  for (const auto& r : repeaters) {
    if (r.empty() || !IsBits(r)) return false;
  }
  return true;
}

std::string FormulaSide::Instantiate(int count) const {
  return Instantiate(std::vector<int>(repeaters.size(), count));
}

std::string FormulaSide::Instantiate(const std::vector<int>& counts) const {
  if (counts.size() != repeaters.size()) throw std::invalid_argument("one count per repeater");
  std::string out = walls[0];
  for (std::size_t i = 0; i < repeaters.size(); ++i) {
    for (int k = 0; k < counts[i]; ++k) out += repeaters[i];
    out += walls[i + 1];
  }
  return out;
}

bool FormulaSide::Matches(std::string_view word) const {
  // reach[p]: word[0, p) matched by the segments consumed so far.
  std::vector<char> reach(word.size() + 1, 0);
  reach[0] = 1;
  auto wall = [&](std::string_view w) {
    std::vector<char> next(word.size() + 1, 0);
    for (std::size_t p = 0; p + w.size() <= word.size(); ++p) {
      if (reach[p] && word.substr(p, w.size()) == w) next[p + w.size()] = 1;
    }
    reach.swap(next);
  };
  wall(walls[0]);
  for (std::size_t i = 0; i < repeaters.size(); ++i) {
    const std::string& r = repeaters[i];
    for (std::size_t p = 0; p + r.size() <= word.size(); ++p) {
      if (reach[p] && word.substr(p, r.size()) == r) reach[p + r.size()] = 1;
    }
    wall(walls[i + 1]);
  }
  return reach[word.size()] != 0;
}

std::string FormulaSide::ToString() const {
  std::string out;
  auto token = [&out](const std::string& t) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  };
  for (std::size_t i = 0; i < walls.size(); ++i) {
    if (!walls[i].empty()) token(walls[i]);
    if (i < repeaters.size()) token("(" + repeaters[i] + ")");
  }
  return out;
}

FormulaSide FormulaSide::Reversed() const {
  FormulaSide out;
  out.walls.clear();
  for (auto it = walls.rbegin(); it != walls.rend(); ++it) out.walls.push_back(ReversedString(*it));
  for (auto it = repeaters.rbegin(); it != repeaters.rend(); ++it) {
    out.repeaters.push_back(ReversedString(*it));
  }
  return out;
}

FormulaTape FormulaTape::Parse(std::string_view text) {
  FormulaTape f;
  f.left_inf = false;
  f.right_inf = false;
  std::vector<std::pair<std::string_view, std::size_t>> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    tokens.emplace_back(text.substr(start, i - start), start);
  }
  if (tokens.empty()) throw ParseError("empty formula tape", 0);

  std::size_t first = 0, last = tokens.size();
  if (tokens.front().first == kInf) {
    f.left_inf = true;
    ++first;
  }
  if (last > first && tokens.back().first == kInf) {
    f.right_inf = true;
    --last;
  }
  bool seen_head = false;
  for (std::size_t t = first; t < last; ++t) {
    auto [tok, offset] = tokens[t];
    FormulaSide& side = seen_head ? f.right : f.left;
    if (tok.size() == 2 && (tok[0] == '<' || tok[1] == '>')) {
      char letter = tok[0] == '<' ? tok[1] : tok[0];
      if (letter < 'A' || letter > 'Z') throw ParseError("unknown state letter", offset);
      if (seen_head) throw ParseError("second head", offset);
      seen_head = true;
      f.head = Head{letter - 'A', tok[0] == '<' ? Facing::kLeft : Facing::kRight};
    } else if (tok.size() >= 3 && tok.front() == '(' && tok.back() == ')') {
      std::string_view r = tok.substr(1, tok.size() - 2);
      if (!IsBits(r)) throw ParseError("repeater must be a bit word", offset);
      side.repeaters.emplace_back(r);
      side.walls.emplace_back();
    } else if (IsBits(tok)) {
      side.walls.back() += std::string(tok);
    } else {
      throw ParseError("unexpected token", offset);
    }
  }
  if (!seen_head) throw ParseError("missing head", text.size());
  return f;
}

std::string FormulaTape::ToString() const {
  std::string out;
  auto token = [&out](const std::string& t) {
    if (t.empty()) return;
    if (!out.empty()) out.push_back(' ');
    out += t;
  };
  if (left_inf) token(std::string(kInf));
  token(left.ToString());
  token(FormatHead(head));
  token(right.ToString());
  if (right_inf) token(std::string(kInf));
  return out;
}

bool FormulaTape::Valid() const { return left.Valid() && right.Valid(); }

DirectionalTape FormulaTape::Instantiate(int count) const {
  return Instantiate(std::vector<int>(left.repeaters.size(), count),
                     std::vector<int>(right.repeaters.size(), count));
}

DirectionalTape FormulaTape::Instantiate(const std::vector<int>& left_counts,
                                         const std::vector<int>& right_counts) const {
  DirectionalTape t;
  t.left_inf = left_inf;
  t.left = left.Instantiate(left_counts);
  t.head = head;
  t.right = right.Instantiate(right_counts);
  t.right_inf = right_inf;
  return t;
}

bool FormulaTape::Contains(const DirectionalTape& tape) const {
  return tape.head == head && tape.left_inf == left_inf && tape.right_inf == right_inf &&
         left.Matches(tape.left) && right.Matches(tape.right);
}

FormulaTape FormulaTape::Mirrored() const {
  FormulaTape m;
  m.left_inf = right_inf;
  m.left = right.Reversed();
  m.head = Head{head.state, head.facing == Facing::kLeft ? Facing::kRight : Facing::kLeft};
  m.right = left.Reversed();
  m.right_inf = left_inf;
  return m;
}

void AlignSideRight(FormulaSide& side) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = side.repeaters.size(); j-- > 0;) {
      std::string& r = side.repeaters[j];
      std::string& after = side.walls[j + 1];
      while (!after.empty() && r.front() == after.front()) {
        char c = after.front();
        side.walls[j].push_back(c);
        r.erase(r.begin());
        r.push_back(c);
        after.erase(after.begin());
        changed = true;
      }
    }
  }
}

void AlignSideLeft(FormulaSide& side) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < side.repeaters.size(); ++i) {
      std::string& r = side.repeaters[i];
      std::string& before = side.walls[i];
      while (!before.empty() && r.back() == before.back()) {
        char c = before.back();
        side.walls[i + 1].insert(side.walls[i + 1].begin(), c);
        r.pop_back();
        r.insert(r.begin(), c);
        before.pop_back();
        changed = true;
      }
    }
  }
}

FormulaTape Align(const FormulaTape& f) {
  FormulaTape out = f;
  AlignSideLeft(out.left);
  AlignSideRight(out.right);
  return out;
}

FormulaTape AlignRight(const FormulaTape& f) {
  FormulaTape out = f;
  AlignSideRight(out.left);
  AlignSideRight(out.right);
  return out;
}

bool IsSpecialCase(const FormulaTape& f_new, const FormulaTape& f_base) {
  if (f_new.head != f_base.head || f_new.left_inf != f_base.left_inf ||
      f_new.right_inf != f_base.right_inf) {
    return false;
  }
  FormulaTape n = Align(f_new);
  FormulaTape b = Align(f_base);
  return SideSpecialCase(n.left, b.left) && SideSpecialCase(n.right, b.right);
}

std::optional<std::string> WordPowerRoot(std::string_view a, std::string_view b) {
  if (a.empty() || b.empty()) return std::nullopt;
  std::size_t k = std::gcd(a.size(), b.size());
  std::size_t bound = a.size() / k * b.size();
  for (std::size_t i = 0; i < bound; ++i) {
    if (a[i % a.size()] != b[i % b.size()]) return std::nullopt;
  }
  return std::string(a.substr(0, k));
}

}  // namespace bbdec
