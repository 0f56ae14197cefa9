#pragma once

#include <memory>

#include "defog/fog.hpp"
#include "defog/grid.hpp"
#include "defog/sim.hpp"

namespace defog {

// Aligned (input, target) sequences for one perspective in one game. Input
// frames are spaced `step` seconds apart inside the [180 s, 660 s] window;
// the target of step k is the full state `horizon` seconds later.
struct Sample {
  int player = 0;
  int f_me = 0;
  int f_op = 0;
  GridSpec spec;
  double step = 5;
  double horizon = 0;
  std::shared_ptr<const TerrainMap> terrain;
  std::vector<double> times;                       // input times t_k
  std::vector<CountGrid> inputs;                   // o(t_k)
  std::vector<CountGrid> targets;                  // y(t_k + horizon)
  std::vector<CountGrid> target_obs;               // o(t_k + horizon)
  std::vector<std::vector<uint8_t>> input_visible; // per-cell visibility at t_k
  std::vector<std::vector<uint8_t>> global_targets;// per enemy type at t_k + horizon

  size_t steps() const { return inputs.size(); }
  int num_types() const { return inputs.empty() ? 0 : inputs[0].channels() / 2; }
};

// Input frames start at 180 s and advance by max(horizon, 5) s while staying
// <= 660 s. Throws if the replay lacks a frame at any required time.
Sample sample_sequence(const Replay& replay, const GridSpec& spec, double horizon,
                       int player, const TechTree& tech);

constexpr double kWindowStart = 180;
constexpr double kWindowEnd = 660;
constexpr double kMinStep = 5;

}  // namespace defog
