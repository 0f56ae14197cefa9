#include "defog/baselines.hpp"

#include <algorithm>
#include <stdexcept>

namespace defog {

namespace {

std::vector<float> global_scores(const CountGrid& grid, const TechTree& tech) {
  std::vector<float> scores(size_t(tech.num_types()), 0.f);
  for (int u = 0; u < tech.num_types(); ++u) {
    int c = channel_of(tech, 1, u);
    float sum = 0;
    for (int i = 0; i < grid.height(); ++i)
      for (int j = 0; j < grid.width(); ++j) sum += grid.at(i, j, c);
    scores[size_t(u)] = sum;
  }
  return scores;
}

int enemy_corner_cell(const Sample& sample, const CountGrid& grid) {
  int enemy = 1 - sample.player;
  return enemy == 0 ? 0 : (grid.height() * grid.width() - 1);
}

}  // namespace

SequencePrediction input_predict(const Sample& sample, const TechTree& tech) {
  SequencePrediction out;
  out.reserve(sample.steps());
  for (const CountGrid& o : sample.inputs)
    out.push_back({o, global_scores(o, tech)});
  return out;
}

SequencePrediction ps_predict(const Sample& sample, const TechTree& tech) {
  SequencePrediction out;
  out.reserve(sample.steps());
  const int n_types = tech.num_types();
  MemoryState mem;
  for (size_t k = 0; k < sample.steps(); ++k) {
    const CountGrid& o = sample.inputs[k];
    if (k == 0) mem.last_seen = CountGrid(o.height(), o.width(), o.channels());
    mem.last_visible = sample.input_visible[k];
    for (int i = 0; i < o.height(); ++i)
      for (int j = 0; j < o.width(); ++j) {
        if (!mem.last_visible[size_t(i) * o.width() + j]) continue;
        for (int u = 0; u < n_types; ++u) {
          int c = channel_of(tech, 1, u);
          mem.last_seen.at(i, j, c) = o.at(i, j, c);
        }
      }
    CountGrid pred = mem.last_seen;
    for (int i = 0; i < o.height(); ++i)  // ally channels mirror the input
      for (int j = 0; j < o.width(); ++j)
        for (int u = 0; u < n_types; ++u)
          pred.at(i, j, channel_of(tech, 0, u)) = o.at(i, j, channel_of(tech, 0, u));
    out.push_back({std::move(pred), {}});
    out.back().global = global_scores(out.back().grid, tech);
  }
  return out;
}

SequencePrediction pm_predict(const Sample& sample, const TechTree& tech) {
  SequencePrediction out;
  out.reserve(sample.steps());
  const int n_types = tech.num_types();
  MemoryState mem;
  for (size_t k = 0; k < sample.steps(); ++k) {
    const CountGrid& o = sample.inputs[k];
    if (k == 0) mem.ever_seen_max = CountGrid(o.height(), o.width(), o.channels());
    for (int i = 0; i < o.height(); ++i)
      for (int j = 0; j < o.width(); ++j)
        for (int u = 0; u < n_types; ++u) {
          int c = channel_of(tech, 1, u);
          mem.ever_seen_max.at(i, j, c) =
              std::max(mem.ever_seen_max.at(i, j, c), o.at(i, j, c));
        }
    CountGrid pred = mem.ever_seen_max;
    for (int i = 0; i < o.height(); ++i)
      for (int j = 0; j < o.width(); ++j)
        for (int u = 0; u < n_types; ++u)
          pred.at(i, j, channel_of(tech, 0, u)) = o.at(i, j, channel_of(tech, 0, u));
    out.push_back({std::move(pred), {}});
    out.back().global = global_scores(out.back().grid, tech);
  }
  return out;
}

SequencePrediction pmr_predict(const Sample& sample, const TechTree& tech) {
  SequencePrediction out = pm_predict(sample, tech);
  const int n_types = tech.num_types();
  MemoryState mem;
  mem.seen_types.assign(size_t(n_types), 0);
  for (size_t k = 0; k < sample.steps(); ++k) {
    const CountGrid& o = sample.inputs[k];
    // Track seen enemy types and the most recently observed enemy building
    // cell (first such cell in row-major order within a step).
    int building_cell_now = -1;
    for (int i = 0; i < o.height(); ++i)
      for (int j = 0; j < o.width(); ++j)
        for (int u = 0; u < n_types; ++u) {
          if (o.at(i, j, channel_of(tech, 1, u)) <= 0) continue;
          mem.seen_types[size_t(u)] = 1;
          if (tech.type(u).is_building && building_cell_now < 0)
            building_cell_now = i * o.width() + j;
        }
    if (building_cell_now >= 0) mem.last_building_cell = building_cell_now;

    std::vector<int> seen_list;
    for (int u = 0; u < n_types; ++u)
      if (mem.seen_types[size_t(u)]) seen_list.push_back(u);
    int place = mem.last_building_cell >= 0 ? mem.last_building_cell
                                            : enemy_corner_cell(sample, o);
    CountGrid& pred = out[k].grid;
    for (int u : tech.prerequisite_closure(seen_list)) {
      if (mem.seen_types[size_t(u)] || !tech.type(u).is_building) continue;
      int i = place / pred.width(), j = place % pred.width();
      pred.at(i, j, channel_of(tech, 1, u)) += 1.f;
    }
    out[k].global = global_scores(pred, tech);
  }
  return out;
}

SequencePrediction predict_baseline(BaselineKind kind, const Sample& sample,
                                    const TechTree& tech) {
  switch (kind) {
    case BaselineKind::kInput: return input_predict(sample, tech);
    case BaselineKind::kPS: return ps_predict(sample, tech);
    case BaselineKind::kPM: return pm_predict(sample, tech);
    case BaselineKind::kPMR: return pmr_predict(sample, tech);
  }
  throw std::invalid_argument("unknown baseline kind");
}

const char* baseline_name(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::kInput: return "Input";
    case BaselineKind::kPS: return "PS";
    case BaselineKind::kPM: return "PM";
    case BaselineKind::kPMR: return "PM+R";
  }
  return "?";
}

BaselineKind baseline_from_name(const std::string& name) {
  if (name == "Input" || name == "input") return BaselineKind::kInput;
  if (name == "PS" || name == "ps") return BaselineKind::kPS;
  if (name == "PM" || name == "pm") return BaselineKind::kPM;
  if (name == "PM+R" || name == "pmr" || name == "PMR") return BaselineKind::kPMR;
  throw std::invalid_argument("unknown baseline name: " + name);
}

}  // namespace defog
