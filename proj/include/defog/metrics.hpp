#pragma once

#include <map>
#include <string>

#include "defog/baselines.hpp"

namespace defog {

enum class Task { kGlobalBuildings, kHiddenUnits, kOpponentUnits, kHuber };

const char* task_name(Task task);
Task task_from_name(const std::string& name);

struct TaskScore {
  Task task = Task::kOpponentUnits;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  double huber = 0;     // only for Task::kHuber
  double threshold = 0;
  int games = 0;
};

// Per-game F1 aggregation: pooled counts within a game (default), or F1 per
// frame averaged over frames first.
enum class F1Mode { kPooledPerGame, kPerFrame };

// Existence scoring. Targets per task:
//   op_u   : enemy channels of y(t+s), count >= 1
//   hid_u  : clamp(y - o, 0) at t+s, count > 0; predictions are compared
//            after the same subtraction of o(t+s)
//   g_op_b : global per-enemy-building-type existence
// Predictions are thresholded strictly (> threshold). A game with no
// positives anywhere scores P = R = F1 = 1; a zero denominator alone gives 0.
TaskScore score_existence_task(const std::vector<SequencePrediction>& preds,
                               const std::vector<Sample>& samples, Task task,
                               double threshold, const TechTree& tech,
                               F1Mode mode = F1Mode::kPooledPerGame);

// Mean Huber over (steps, cells, enemy channels) per game, then over games.
TaskScore score_huber(const std::vector<SequencePrediction>& preds,
                      const std::vector<Sample>& samples, double huber_delta,
                      const TechTree& tech);

// F1-maximizing threshold over `grid_size` log-spaced points in
// [0.001, 1.5]; ties resolve to the smallest threshold.
double sweep_threshold(const std::vector<SequencePrediction>& preds,
                       const std::vector<Sample>& samples, Task task,
                       const TechTree& tech, int grid_size = 30,
                       F1Mode mode = F1Mode::kPooledPerGame,
                       std::vector<std::pair<double, double>>* curve = nullptr);

std::vector<double> threshold_grid(int grid_size = 30);

double huber_value(double error, double delta);

}  // namespace defog
