#include "defog/sample.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace defog {

namespace {

int64_t time_key(double t) { return int64_t(std::llround(t * 1000.0)); }

}  // namespace

Sample sample_sequence(const Replay& replay, const GridSpec& spec, double horizon,
                       int player, const TechTree& tech) {
  if (horizon < 0) throw std::invalid_argument("sample_sequence: negative horizon");
  if (player != 0 && player != 1)
    throw std::invalid_argument("sample_sequence: player must be 0 or 1");
  if (spec.map_h != replay.map_h() || spec.map_w != replay.map_w())
    throw std::invalid_argument("sample_sequence: grid spec does not match replay map");

  std::unordered_map<int64_t, size_t> frame_at;
  frame_at.reserve(replay.frames.size());
  for (size_t i = 0; i < replay.frames.size(); ++i)
    frame_at[time_key(replay.frames[i].time)] = i;

  auto frame_for = [&](double t) -> const Frame& {
    auto it = frame_at.find(time_key(t));
    if (it == frame_at.end())
      throw std::runtime_error("sample_sequence: replay too short, no frame at t=" +
                               std::to_string(t));
    return replay.frames[it->second];
  };

  Sample sample;
  sample.player = player;
  sample.f_me = replay.factions[size_t(player)];
  sample.f_op = replay.factions[size_t(1 - player)];
  sample.spec = spec;
  sample.step = std::max(horizon, kMinStep);
  sample.horizon = horizon;
  sample.terrain = std::make_shared<TerrainMap>(replay.terrain);

  const int h = replay.map_h(), w = replay.map_w();
  for (int k = 0;; ++k) {
    double t = kWindowStart + k * sample.step;
    if (t > kWindowEnd + 1e-9) break;
    const Frame& now = frame_for(t);
    const Frame& later = frame_for(t + horizon);

    VisibilityMask vis_now = visibility_mask(now, h, w, player, tech);
    Frame obs_now;
    obs_now.time = now.time;
    for (const Unit& u : now.units)
      if (u.player == player || vis_now.at(u.y, u.x)) obs_now.units.push_back(u);

    sample.times.push_back(t);
    sample.inputs.push_back(featurize_frame(obs_now, spec, tech, player));
    sample.input_visible.push_back(cell_visibility(vis_now, spec));

    CountGrid target = featurize_frame(later, spec, tech, player);
    CountGrid obs_later =
        featurize_frame(observe(later, h, w, player, tech), spec, tech, player);

    std::vector<uint8_t> global(size_t(tech.num_types()), 0);
    for (int u = 0; u < tech.num_types(); ++u) {
      int c = channel_of(tech, 1, u);
      bool present = false;
      for (int i = 0; i < target.height() && !present; ++i)
        for (int j = 0; j < target.width() && !present; ++j)
          present = target.at(i, j, c) >= 1.f;
      global[size_t(u)] = present ? 1 : 0;
    }

    sample.targets.push_back(std::move(target));
    sample.target_obs.push_back(std::move(obs_later));
    sample.global_targets.push_back(std::move(global));
  }
  return sample;
}

}  // namespace defog
