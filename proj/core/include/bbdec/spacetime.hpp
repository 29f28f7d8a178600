#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bbdec/machine.hpp"

namespace bbdec {

struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;  // row-major, 3 bytes per pixel

  // Binary PPM (P6) encoding.
  std::string ToPpm() const;
};

struct SpacetimeOptions {
  int cell_size = 1;  // square pixels per cell
};

// Row i shows the tape after i steps; rendering stops early at a halt.
// Tape cells are black (0) or white (1); the head cell takes its state's colour.
Image RenderSpacetime(const TransitionTable& table, std::uint64_t steps,
                      const SpacetimeOptions& options = {});

std::array<std::uint8_t, 3> StateColour(State s);

}  // namespace bbdec
