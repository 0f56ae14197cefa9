#pragma once

#include <array>
#include <string>
#include <vector>

#include "defog/grid.hpp"

namespace defog {

struct Replay {
  TerrainMap terrain;
  std::array<int, 2> factions{0, 0};
  std::vector<Frame> frames;

  int map_h() const { return terrain.height; }
  int map_w() const { return terrain.width; }
  bool operator==(const Replay&) const = default;
};

struct SimConfig {
  int map_h = 64;
  int map_w = 64;
  TechTree tech = TechTree::builtin();
  double game_length = 690;  // seconds; sampling window needs >= 660 + horizon
  double tick = 5;           // seconds per recorded frame
  // Propensity weights for the three behavior templates.
  double w_rush = 1.0;
  double w_tech = 1.0;
  double w_econ = 1.0;
  uint64_t seed = 1;
};

// Deterministic function of the config: two scripted players build up a tech
// tree and move armies around; units persist for the whole game.
Replay generate_replay(const SimConfig& config);

struct ManifestEntry {
  std::string path;  // relative to the manifest's directory
  uint64_t seed = 0;
  int faction0 = 0;
  int faction1 = 0;
};

using Manifest = std::vector<ManifestEntry>;

// Writes `count` replays plus a manifest file under `out_dir`; per-game seeds
// are derived from `base_seed`. Returns the manifest (also written to
// out_dir/manifest.txt).
Manifest generate_dataset(uint64_t base_seed, int count, const SimConfig& config,
                          const std::string& out_dir);

}  // namespace defog
