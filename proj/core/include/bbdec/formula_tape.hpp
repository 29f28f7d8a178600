#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bbdec/directional.hpp"

namespace bbdec {

// walls[0] (repeaters[0]) walls[1] ... (repeaters[k-1]) walls[k], read left to
// right. Walls may be empty, repeaters may not. Also used as a headless formula.
struct FormulaSide {
  std::vector<std::string> walls{std::string()};
  std::vector<std::string> repeaters;

  bool Valid() const;
  // Concatenation with every repeater used count times.
  std::string Instantiate(int count) const;
  std::string Instantiate(const std::vector<int>& counts) const;
  // Whether word is in the regular language of this side.
  bool Matches(std::string_view word) const;
  std::string ToString() const;
  // Reverses the reading direction.
  FormulaSide Reversed() const;

  bool operator==(const FormulaSide&) const = default;
};

// Wall-repeater formula tape around a directional head. The infinite flags put
// 0^inf at the outer ends.
struct FormulaTape {
  bool left_inf = true;
  FormulaSide left;
  Head head;
  FormulaSide right;
  bool right_inf = true;

  // Text form, e.g. "0^inf (111) 1110 (11) 00 D> 0^inf". Throws ParseError.
  static FormulaTape Parse(std::string_view text);
  std::string ToString() const;

  bool Valid() const;
  // C_f(k): every repeater used k times.
  DirectionalTape Instantiate(int count) const;
  DirectionalTape Instantiate(const std::vector<int>& left_counts,
                              const std::vector<int>& right_counts) const;
  bool Contains(const DirectionalTape& tape) const;
  // Same formula read right to left, with the head facing the other way.
  FormulaTape Mirrored() const;

  bool operator==(const FormulaTape&) const = default;
};

// Moves repeaters right past equal wall symbols: (r)v -> v(r') with rv = vr'.
void AlignSideRight(FormulaSide& side);
// Moves repeaters left: v(r) -> (r')v with vr = r'v.
void AlignSideLeft(FormulaSide& side);

// Repeaters pushed away from the head on both sides.
FormulaTape Align(const FormulaTape& f);
// Repeaters pushed to the right on both sides.
FormulaTape AlignRight(const FormulaTape& f);

// True when Align(f_new) is Align(f_base) with some repeaters (r) widened to
// r^n (r) r^m.
bool IsSpecialCase(const FormulaTape& f_new, const FormulaTape& f_base);

// Common root c of a and b (a = c^i, b = c^j) when their infinite powers agree.
std::optional<std::string> WordPowerRoot(std::string_view a, std::string_view b);

}  // namespace bbdec
