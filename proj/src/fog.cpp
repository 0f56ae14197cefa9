#include "defog/fog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace defog {

size_t VisibilityMask::count() const {
  size_t n = 0;
  for (uint8_t v : mask) n += v;
  return n;
}

VisibilityMask visibility_mask(const Frame& frame, int map_h, int map_w,
                               int player, const TechTree& tech) {
  VisibilityMask vis(map_h, map_w);
  for (const Unit& u : frame.units) {
    if (u.player != player) continue;
    double sight = tech.type(u.type).sight_range;
    int rad = int(std::floor(sight));
    double s2 = sight * sight;
    int y_lo = std::max(0, u.y - rad), y_hi = std::min(map_h - 1, u.y + rad);
    int x_lo = std::max(0, u.x - rad), x_hi = std::min(map_w - 1, u.x + rad);
    for (int y = y_lo; y <= y_hi; ++y) {
      for (int x = x_lo; x <= x_hi; ++x) {
        double dy = y - u.y, dx = x - u.x;
        if (dy * dy + dx * dx <= s2) vis.set(y, x);
      }
    }
  }
  return vis;
}

Frame observe(const Frame& frame, int map_h, int map_w, int player,
              const TechTree& tech) {
  VisibilityMask vis = visibility_mask(frame, map_h, map_w, player, tech);
  Frame out;
  out.time = frame.time;
  for (const Unit& u : frame.units) {
    if (u.player == player || vis.at(u.y, u.x)) out.units.push_back(u);
  }
  return out;
}

CountGrid hidden_enemy_grid(const CountGrid& full, const CountGrid& observed,
                            const TechTree& tech) {
  if (!full.same_shape(observed))
    throw std::invalid_argument("hidden_enemy_grid: shape mismatch");
  CountGrid out(full.height(), full.width(), full.channels());
  int n_types = tech.num_types();
  for (int i = 0; i < full.height(); ++i)
    for (int j = 0; j < full.width(); ++j)
      for (int t = 0; t < n_types; ++t) {
        int c = channel_of(tech, 1, t);
        out.at(i, j, c) = std::max(0.f, full.at(i, j, c) - observed.at(i, j, c));
      }
  return out;
}

std::vector<uint8_t> cell_visibility(const VisibilityMask& mask, const GridSpec& spec) {
  auto [gh, gw] = grid_dims(spec.map_h, spec.map_w, spec.r, spec.g);
  std::vector<uint8_t> out(size_t(gh) * gw, 0);
  for (int i = 0; i < gh; ++i) {
    for (int j = 0; j < gw; ++j) {
      bool any = false;
      for (int y = i * spec.g; y < i * spec.g + spec.r && !any; ++y)
        for (int x = j * spec.g; x < j * spec.g + spec.r && !any; ++x)
          any = mask.at(y, x);
      out[size_t(i) * gw + j] = any ? 1 : 0;
    }
  }
  return out;
}

}  // namespace defog
