#include "defog/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace defog {

namespace {

struct Counts {
  int64_t tp = 0, fp = 0, fn = 0;
  void add(bool pred, bool truth) {
    if (pred && truth) ++tp;
    else if (pred) ++fp;
    else if (truth) ++fn;
  }
};

struct Prf {
  double p = 0, r = 0, f1 = 0;
};

Prf prf_from(const Counts& c) {
  if (c.tp == 0 && c.fp == 0 && c.fn == 0) return {1, 1, 1};
  Prf out;
  out.p = c.tp + c.fp > 0 ? double(c.tp) / double(c.tp + c.fp) : 0;
  out.r = c.tp + c.fn > 0 ? double(c.tp) / double(c.tp + c.fn) : 0;
  out.f1 = out.p + out.r > 0 ? 2 * out.p * out.r / (out.p + out.r) : 0;
  return out;
}

// Accumulates one step's (prediction, truth) pairs for a task.
template <class F>
void for_each_pair(const StepPrediction& pred, const Sample& sample, size_t k,
                   Task task, const TechTree& tech, F&& visit) {
  const CountGrid& target = sample.targets[k];
  switch (task) {
    case Task::kOpponentUnits:
      for (int i = 0; i < target.height(); ++i)
        for (int j = 0; j < target.width(); ++j)
          for (int u = 0; u < tech.num_types(); ++u) {
            int c = channel_of(tech, 1, u);
            visit(double(pred.grid.at(i, j, c)), target.at(i, j, c) >= 1.f);
          }
      break;
    case Task::kHiddenUnits: {
      const CountGrid& seen = sample.target_obs[k];
      for (int i = 0; i < target.height(); ++i)
        for (int j = 0; j < target.width(); ++j)
          for (int u = 0; u < tech.num_types(); ++u) {
            int c = channel_of(tech, 1, u);
            double hidden_truth = std::max(0.f, target.at(i, j, c) - seen.at(i, j, c));
            double hidden_pred = std::max(0.f, pred.grid.at(i, j, c) - seen.at(i, j, c));
            visit(hidden_pred, hidden_truth > 0);
          }
      break;
    }
    case Task::kGlobalBuildings:
      for (int u = 0; u < tech.num_types(); ++u) {
        if (!tech.type(u).is_building) continue;
        visit(double(pred.global[size_t(u)]), sample.global_targets[k][size_t(u)] != 0);
      }
      break;
    case Task::kHuber:
      throw std::invalid_argument("for_each_pair: huber is not an existence task");
  }
}

}  // namespace

const char* task_name(Task task) {
  switch (task) {
    case Task::kGlobalBuildings: return "g_op_b";
    case Task::kHiddenUnits: return "hid_u";
    case Task::kOpponentUnits: return "op_u";
    case Task::kHuber: return "huber";
  }
  return "?";
}

Task task_from_name(const std::string& name) {
  if (name == "g_op_b") return Task::kGlobalBuildings;
  if (name == "hid_u") return Task::kHiddenUnits;
  if (name == "op_u") return Task::kOpponentUnits;
  if (name == "huber") return Task::kHuber;
  throw std::invalid_argument("unknown task: " + name);
}

double huber_value(double error, double delta) {
  double a = std::abs(error);
  return a <= delta ? 0.5 * error * error : delta * (a - 0.5 * delta);
}

TaskScore score_existence_task(const std::vector<SequencePrediction>& preds,
                               const std::vector<Sample>& samples, Task task,
                               double threshold, const TechTree& tech, F1Mode mode) {
  if (preds.size() != samples.size())
    throw std::invalid_argument("score: prediction/sample stream mismatch");
  TaskScore score;
  score.task = task;
  score.threshold = threshold;
  double sum_p = 0, sum_r = 0, sum_f1 = 0;
  for (size_t gi = 0; gi < samples.size(); ++gi) {
    const Sample& sample = samples[gi];
    const SequencePrediction& pred = preds[gi];
    if (pred.size() != sample.steps())
      throw std::invalid_argument("score: step count mismatch");
    if (mode == F1Mode::kPooledPerGame) {
      Counts counts;
      for (size_t k = 0; k < sample.steps(); ++k)
        for_each_pair(pred[k], sample, k, task, tech,
                      [&](double score_value, bool truth) {
                        counts.add(score_value > threshold, truth);
                      });
      Prf prf = prf_from(counts);
      sum_p += prf.p;
      sum_r += prf.r;
      sum_f1 += prf.f1;
    } else {
      double game_p = 0, game_r = 0, game_f1 = 0;
      for (size_t k = 0; k < sample.steps(); ++k) {
        Counts counts;
        for_each_pair(pred[k], sample, k, task, tech,
                      [&](double score_value, bool truth) {
                        counts.add(score_value > threshold, truth);
                      });
        Prf prf = prf_from(counts);
        game_p += prf.p;
        game_r += prf.r;
        game_f1 += prf.f1;
      }
      double n = double(sample.steps());
      sum_p += game_p / n;
      sum_r += game_r / n;
      sum_f1 += game_f1 / n;
    }
  }
  double n_games = double(samples.size());
  score.precision = sum_p / n_games;
  score.recall = sum_r / n_games;
  score.f1 = sum_f1 / n_games;
  score.games = int(samples.size());
  return score;
}

TaskScore score_huber(const std::vector<SequencePrediction>& preds,
                      const std::vector<Sample>& samples, double huber_delta,
                      const TechTree& tech) {
  if (preds.size() != samples.size())
    throw std::invalid_argument("score: prediction/sample stream mismatch");
  TaskScore score;
  score.task = Task::kHuber;
  double total = 0;
  for (size_t gi = 0; gi < samples.size(); ++gi) {
    const Sample& sample = samples[gi];
    double game_sum = 0;
    size_t game_n = 0;
    for (size_t k = 0; k < sample.steps(); ++k) {
      const CountGrid& target = sample.targets[k];
      const CountGrid& grid = preds[gi][k].grid;
      for (int i = 0; i < target.height(); ++i)
        for (int j = 0; j < target.width(); ++j)
          for (int u = 0; u < tech.num_types(); ++u) {
            int c = channel_of(tech, 1, u);
            game_sum += huber_value(double(grid.at(i, j, c)) - target.at(i, j, c),
                                    huber_delta);
            ++game_n;
          }
    }
    total += game_n > 0 ? game_sum / double(game_n) : 0;
  }
  score.huber = samples.empty() ? 0 : total / double(samples.size());
  score.games = int(samples.size());
  return score;
}

std::vector<double> threshold_grid(int grid_size) {
  std::vector<double> grid;
  double lo = std::log(0.001), hi = std::log(1.5);
  for (int i = 0; i < grid_size; ++i)
    grid.push_back(std::exp(lo + (hi - lo) * double(i) / double(grid_size - 1)));
  return grid;
}

double sweep_threshold(const std::vector<SequencePrediction>& preds,
                       const std::vector<Sample>& samples, Task task,
                       const TechTree& tech, int grid_size, F1Mode mode,
                       std::vector<std::pair<double, double>>* curve) {
  if (samples.empty()) throw std::invalid_argument("sweep: empty validation set");
  double best_theta = 0;
  double best_f1 = -1;
  for (double theta : threshold_grid(grid_size)) {
    TaskScore s = score_existence_task(preds, samples, task, theta, tech, mode);
    if (curve) curve->emplace_back(theta, s.f1);
    if (s.f1 > best_f1) {
      best_f1 = s.f1;
      best_theta = theta;
    }
  }
  return best_theta;
}

}  // namespace defog
