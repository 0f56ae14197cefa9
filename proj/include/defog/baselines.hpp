#pragma once

#include <string>

#include "defog/sample.hpp"

namespace defog {

// One step of any predictor: per-cell counts for all channels plus a global
// per-enemy-type score (thresholded later for g_op_b).
struct StepPrediction {
  CountGrid grid;
  std::vector<float> global;
};

using SequencePrediction = std::vector<StepPrediction>;

// Rolling per-sample memory shared by the rule-based predictors.
struct MemoryState {
  CountGrid last_seen;       // enemy channels, last value when the cell was visible
  CountGrid ever_seen_max;   // enemy channels, running max of observed counts
  std::vector<uint8_t> seen_types;     // per enemy type id
  std::vector<uint8_t> last_visible;   // per cell, visibility at the latest step
  int last_building_cell = -1;         // flat cell index, -1 until one is seen
};

// Copies the input frame.
SequencePrediction input_predict(const Sample& sample, const TechTree& tech);
// Last-seen counts per cell; a cell revealed empty resets to what is observed.
SequencePrediction ps_predict(const Sample& sample, const TechTree& tech);
// Running max of observed counts; nothing is ever forgotten.
SequencePrediction pm_predict(const Sample& sample, const TechTree& tech);
// PM plus prerequisite inference over the tech tree for building types.
SequencePrediction pmr_predict(const Sample& sample, const TechTree& tech);

enum class BaselineKind { kInput, kPS, kPM, kPMR };

SequencePrediction predict_baseline(BaselineKind kind, const Sample& sample,
                                    const TechTree& tech);
const char* baseline_name(BaselineKind kind);
BaselineKind baseline_from_name(const std::string& name);

}  // namespace defog
