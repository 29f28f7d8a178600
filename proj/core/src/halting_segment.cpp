#include "bbdec/halting_segment.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace bbdec {

namespace {

struct NodeHash {
  std::size_t operator()(const SegmentConfiguration& c) const {
    std::uint64_t h = c.segment * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::uint64_t>(c.pos + 1) << 1;
    h ^= static_cast<std::uint64_t>(c.state + 1) << 8;
    h ^= static_cast<std::uint64_t>(c.halt_state * 2 + c.halt_read) << 16;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

SegmentConfiguration Bottom(const SegmentConfiguration& from, Symbol read) {
  SegmentConfiguration c = from;
  c.state = kBottom;
  c.halt_state = from.state;
  c.halt_read = read;
  return c;
}

}  // namespace

std::string SegmentConfiguration::ToString(int n) const {
  std::string out;
  if (state == kBottom) {
    out = "_|_ ";
    out += StateLetter(halt_state);
    out += static_cast<char>('0' + halt_read);
  } else {
    out = StateLetter(state);
  }
  out += pos == -1 ? " [-]" : " -";
  for (int i = 0; i < n; ++i) {
    char cell = static_cast<char>('0' + Cell(i));
    if (i == pos) {
      out += " [";
      out += cell;
      out += ']';
    } else {
      out += ' ';
      out += cell;
    }
  }
  out += pos == n ? " [-]" : " -";
  return out;
}

std::vector<SegmentConfiguration> ExpandNode(const TransitionTable& table, int n,
                                             const SegmentConfiguration& node) {
  if (node.state == kBottom) throw std::invalid_argument("halting nodes have no children");
  std::vector<SegmentConfiguration> children;
  if (node.pos >= 0 && node.pos < n) {
    Symbol read = node.Cell(node.pos);
    const auto& t = table.Get(node.state, read);
    if (!t) {
      children.push_back(Bottom(node, read));
      return children;
    }
    SegmentConfiguration c = node;
    std::uint64_t bit = std::uint64_t{1} << node.pos;
    c.segment = t->write ? (c.segment | bit) : (c.segment & ~bit);
    c.pos += t->move == Move::kRight ? 1 : -1;
    c.state = t->next;
    children.push_back(c);
    return children;
  }
  Move toward = node.pos < 0 ? Move::kRight : Move::kLeft;
  for (Symbol read = 0; read < 2; ++read) {
    const auto& t = table.Get(node.state, read);
    if (!t) {
      children.push_back(Bottom(node, read));
      continue;
    }
    SegmentConfiguration c = node;
    c.state = t->next;
    if (t->move == toward) {
      SegmentConfiguration enter = c;
      enter.pos = node.pos < 0 ? 0 : n - 1;
      children.push_back(c);
      children.push_back(enter);
    } else {
      children.push_back(c);
    }
  }
  return children;
}

HaltingSegmentResult DecideHaltingSegment(const TransitionTable& table, int n,
                                          std::uint64_t node_budget) {
  if (n < 1 || n > kMaxSegmentSize) throw std::invalid_argument("segment size out of range");
  HaltingSegmentResult result;
  result.n = n;

  std::unordered_set<SegmentConfiguration, NodeHash> seen;
  std::deque<SegmentConfiguration> frontier;
  for (int p = -1; p <= n; ++p) {
    SegmentConfiguration c;
    c.pos = p;
    if (seen.insert(c).second) frontier.push_back(c);
  }
  // covered[2 * state + read] has bit p + 1 set when (T, p) is reachable.
  std::vector<std::uint64_t> covered(2 * table.num_states(), 0);
  while (!frontier.empty()) {
    SegmentConfiguration node = frontier.front();
    frontier.pop_front();
    if (node.state == kBottom) {
      covered[2 * node.halt_state + node.halt_read] |= std::uint64_t{1} << (node.pos + 1);
      continue;
    }
    for (const SegmentConfiguration& child : ExpandNode(table, n, node)) {
      if (!seen.insert(child).second) continue;
      if (seen.size() > node_budget) {
        result.nodes = seen.size();
        return result;
      }
      frontier.push_back(child);
    }
  }
  result.nodes = seen.size();

  for (State s = 0; s < table.num_states(); ++s) {
    for (Symbol r = 0; r < 2; ++r) {
      if (!table.IsHalting(s, r)) continue;
      std::vector<HaltingPosition> missing;
      for (int p = -1; p <= n; ++p) {
        if (!((covered[2 * s + r] >> (p + 1)) & 1U)) missing.push_back({s, r, p});
      }
      if (missing.empty()) {
        result.uncovered.clear();
        return result;
      }
      result.uncovered.insert(result.uncovered.end(), missing.begin(), missing.end());
    }
  }
  result.verdict = Verdict::kNonHalt;
  return result;
}

}  // namespace bbdec
