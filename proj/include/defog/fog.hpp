#pragma once

#include "defog/grid.hpp"

namespace defog {

struct VisibilityMask {
  int height = 0;
  int width = 0;
  std::vector<uint8_t> mask;  // row major, walk-tile resolution

  VisibilityMask() = default;
  VisibilityMask(int h, int w) : height(h), width(w), mask(size_t(h) * w, 0) {}
  bool at(int y, int x) const { return mask[size_t(y) * width + x] != 0; }
  void set(int y, int x) { mask[size_t(y) * width + x] = 1; }
  size_t count() const;
};

// Tiles within Euclidean distance <= sight_range of any of `player`'s units.
VisibilityMask visibility_mask(const Frame& frame, int map_h, int map_w,
                               int player, const TechTree& tech);

// The player's own units plus any other unit standing on a visible tile.
Frame observe(const Frame& frame, int map_h, int map_w, int player,
              const TechTree& tech);

// Enemy channels: max(full - observed, 0). Ally channels zeroed.
CountGrid hidden_enemy_grid(const CountGrid& full, const CountGrid& observed,
                            const TechTree& tech);

// Per-cell visibility: a cell counts as visible when any covered walk tile is.
std::vector<uint8_t> cell_visibility(const VisibilityMask& mask, const GridSpec& spec);

}  // namespace defog
