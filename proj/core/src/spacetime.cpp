#include "bbdec/spacetime.hpp"

#include <stdexcept>

#include "bbdec/simulator.hpp"

namespace bbdec {

std::string Image::ToPpm() const {
  std::string out = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  out.append(rgb.begin(), rgb.end());
  return out;
}

std::array<std::uint8_t, 3> StateColour(State s) {
  static constexpr std::array<std::array<std::uint8_t, 3>, 5> kPalette = {{
      {228, 26, 28},
      {55, 126, 184},
      {77, 175, 74},
      {152, 78, 163},
      {255, 127, 0},
  }};
  return kPalette[s % kPalette.size()];
}

Image RenderSpacetime(const TransitionTable& table, std::uint64_t steps,
                      const SpacetimeOptions& options) {
  if (options.cell_size < 1) throw std::invalid_argument("cell size must be positive");

  struct Row {
    std::int64_t head;
    State state;
    std::vector<std::pair<std::int64_t, Symbol>> cells;
  };
  std::vector<Row> rows;
  Simulator sim(table);
  auto snapshot = [&]() {
    Row row{sim.head(), sim.state(), {}};
    for (std::int64_t p = sim.leftmost(); p <= sim.rightmost(); ++p) {
      if (Symbol s = sim.Read(p)) row.cells.emplace_back(p, s);
    }
    rows.push_back(std::move(row));
  };
  snapshot();
  while (sim.steps() < steps && sim.Step()) snapshot();

  std::int64_t lo = sim.leftmost();
  std::int64_t hi = sim.rightmost();
  int cs = options.cell_size;
  Image img;
  img.width = static_cast<int>(hi - lo + 1) * cs;
  img.height = static_cast<int>(rows.size()) * cs;
  img.rgb.assign(static_cast<std::size_t>(img.width) * img.height * 3, 0);
  auto paint = [&](std::size_t r, std::int64_t pos, std::array<std::uint8_t, 3> colour) {
    for (int dy = 0; dy < cs; ++dy) {
      for (int dx = 0; dx < cs; ++dx) {
        std::size_t x = static_cast<std::size_t>(pos - lo) * cs + dx;
        std::size_t y = r * cs + dy;
        std::size_t at = (y * img.width + x) * 3;
        img.rgb[at] = colour[0];
        img.rgb[at + 1] = colour[1];
        img.rgb[at + 2] = colour[2];
      }
    }
  };
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [pos, sym] : rows[r].cells) paint(r, pos, {255, 255, 255});
    paint(r, rows[r].head, StateColour(rows[r].state));
  }
  return img;
}

}  // namespace bbdec
