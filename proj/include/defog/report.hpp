#pragma once

#include "defog/metrics.hpp"

namespace defog {

// One predictor scored at one (r, g, s) setting.
struct ReportRow {
  std::string predictor;
  int r = 0;
  int g = 0;
  double s = 0;
  std::map<Task, TaskScore> scores;
};

struct EvalReport {
  std::vector<ReportRow> rows;
};

// Aligned human-readable table, grouped by (g, s).
std::string render_table(const EvalReport& report);
// One line per (row, task): `predictor g s task P R F1 huber threshold`,
// with `-` for fields a task does not define.
std::string render_machine(const EvalReport& report);

// Plain PGM (P2) triptych for one enemy unit-type channel: what the player
// saw, what was predicted, and the real counts. Intensities share one scale
// with the maximum count mapped to black. Writes <prefix>_input.pgm,
// <prefix>_pred.pgm, <prefix>_real.pgm.
void write_heatmaps(const CountGrid& input, const CountGrid& pred,
                    const CountGrid& truth, int type_id, const TechTree& tech,
                    const std::string& out_prefix);

}  // namespace defog
