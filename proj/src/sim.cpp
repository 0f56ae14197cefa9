#include "defog/sim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "defog/replay_io.hpp"
#include "defog/rng.hpp"

namespace defog {

namespace {

enum class Role { kDefend, kScout, kAttack };
enum class Template { kRush = 0, kTech = 1, kEcon = 2 };

struct SimUnit {
  int type = 0;
  double x = 0, y = 0;
  double wx = 0, wy = 0;  // current waypoint
  Role role = Role::kDefend;
  bool mobile = false;
};

struct Point {
  double x = 0, y = 0;
};

struct PlayerState {
  int id = 0;
  int faction = 0;
  Point base;
  Point enemy_base;
  Template tmpl = Template::kRush;
  std::deque<int> build_queue;
  std::vector<SimUnit> units;
  std::vector<int> built_types;
  double next_production = 0;
  int expansions_used = 0;
};

double clampd(double v, double lo, double hi) { return std::min(hi, std::max(lo, v)); }

TerrainMap make_terrain(int h, int w, SplitMix64& rng) {
  TerrainMap m = TerrainMap::flat(h, w);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (y == 0 || x == 0 || y == h - 1 || x == w - 1) m.at(y, x, 1) = 0.f;
  int plateaus = 2 + int(rng.next_below(3));
  for (int p = 0; p < plateaus; ++p) {
    int ph = int(rng.next_range(h / 8, h / 3));
    int pw = int(rng.next_range(w / 8, w / 3));
    int py = int(rng.next_below(uint64_t(h - ph)));
    int px = int(rng.next_below(uint64_t(w - pw)));
    float level = float(1 + rng.next_below(2));
    for (int y = py; y < py + ph; ++y)
      for (int x = px; x < px + pw; ++x) m.at(y, x, 2) = level;
  }
  return m;
}

// Role pool per tree: the first no-prerequisite building is the start base,
// the first mobile type the worker; remaining mobile types form the army,
// ordered by tech depth.
struct Roles {
  int base = -1;
  int worker = -1;
  int shallow_army = -1;
  int deep_army = -1;
};

Roles derive_roles(const TechTree& tech) {
  Roles roles;
  for (const UnitType& t : tech.types()) {
    if (t.is_building && t.prerequisites.empty() && roles.base < 0) roles.base = t.id;
    if (!t.is_building && roles.worker < 0) roles.worker = t.id;
  }
  if (roles.base < 0)
    throw std::invalid_argument("generate_replay: tech tree has no prerequisite-free building");
  if (roles.worker < 0)
    throw std::invalid_argument("generate_replay: tech tree has no mobile unit type");
  size_t best_shallow = SIZE_MAX;
  size_t best_deep = 0;
  for (const UnitType& t : tech.types()) {
    if (t.is_building || t.id == roles.worker) continue;
    size_t depth = tech.prerequisite_closure(t.id).size();
    if (depth < best_shallow) {
      best_shallow = depth;
      roles.shallow_army = t.id;
    }
    if (depth >= best_deep) {
      best_deep = depth;
      roles.deep_army = t.id;
    }
  }
  if (roles.shallow_army < 0) roles.shallow_army = roles.worker;
  if (roles.deep_army < 0) roles.deep_army = roles.shallow_army;
  return roles;
}

std::deque<int> make_build_queue(Template tmpl, const Roles& roles) {
  int W = roles.worker, As = roles.shallow_army, Ad = roles.deep_army, B = roles.base;
  switch (tmpl) {
    case Template::kRush:
      return {W, As, As, As, W, As, As, As, As};
    case Template::kTech:
      return {W, W, Ad, Ad, W, Ad, Ad, Ad};
    case Template::kEcon:
      return {W, W, W, B, W, W, As, Ad, W, As};
  }
  return {};
}

bool has_type(const PlayerState& p, int type) {
  return std::find(p.built_types.begin(), p.built_types.end(), type) !=
         p.built_types.end();
}

// Expansion candidates, ordered by preference for player 0; player 1 walks the
// mirrored list.
std::vector<Point> expansion_sites(int h, int w, int player) {
  double m = std::max(4.0, w / 8.0);
  std::vector<Point> sites = {
      {m, h - 1 - m}, {w - 1 - m, m}, {w / 2.0, h / 2.0}, {w / 2.0, m}, {m, h / 2.0}};
  if (player == 1)
    for (Point& s : sites) {
      s.x = w - 1 - s.x;
      s.y = h - 1 - s.y;
    }
  return sites;
}

void assign_waypoint(SimUnit& u, const PlayerState& p, int h, int w, SplitMix64& rng) {
  auto jitter = [&](Point c, double spread) {
    return Point{clampd(c.x + rng.next_real(-spread, spread), 1, w - 2),
                 clampd(c.y + rng.next_real(-spread, spread), 1, h - 2)};
  };
  Point t;
  switch (u.role) {
    case Role::kDefend:
      t = jitter(p.base, 8);
      break;
    case Role::kScout:
      t = {rng.next_real(1, w - 2), rng.next_real(1, h - 2)};
      break;
    case Role::kAttack: {
      double dx = u.x - p.enemy_base.x, dy = u.y - p.enemy_base.y;
      bool arrived = dx * dx + dy * dy < 14 * 14;
      t = arrived ? jitter(p.enemy_base, 8) : jitter(p.enemy_base, 4);
      break;
    }
  }
  u.wx = t.x;
  u.wy = t.y;
}

void spawn_unit(PlayerState& p, int type, const TechTree& tech, int h, int w,
                SplitMix64& rng) {
  const UnitType& def = tech.type(type);
  SimUnit u;
  u.type = type;
  u.mobile = !def.is_building;
  // Spawn next to the deepest prerequisite building already present, or the base.
  Point origin = p.base;
  if (!def.prerequisites.empty()) {
    for (const SimUnit& b : p.units)
      if (!b.mobile && std::find(def.prerequisites.begin(), def.prerequisites.end(),
                                 b.type) != def.prerequisites.end())
        origin = {b.x, b.y};
  }
  if (def.is_building) {
    u.x = clampd(origin.x + rng.next_real(-6, 6), 1, w - 2);
    u.y = clampd(origin.y + rng.next_real(-6, 6), 1, h - 2);
  } else {
    u.x = clampd(origin.x + rng.next_real(-2, 2), 1, w - 2);
    u.y = clampd(origin.y + rng.next_real(-2, 2), 1, h - 2);
    // Standing order; workers ignore it and shuttle near the base instead.
    double roll = rng.next_double();
    if (roll < 0.40)
      u.role = Role::kAttack;
    else if (roll < 0.65)
      u.role = Role::kScout;
    else
      u.role = Role::kDefend;
  }
  u.wx = u.x;
  u.wy = u.y;
  p.units.push_back(u);
  p.built_types.push_back(type);
}

void spawn_expansion(PlayerState& p, int base_type, int h, int w, SplitMix64& rng) {
  auto sites = expansion_sites(h, w, p.id);
  Point site = sites[size_t(p.expansions_used) % sites.size()];
  p.expansions_used++;
  SimUnit u;
  u.type = base_type;
  u.mobile = false;
  u.x = clampd(site.x + rng.next_real(-2, 2), 1, w - 2);
  u.y = clampd(site.y + rng.next_real(-2, 2), 1, h - 2);
  u.wx = u.x;
  u.wy = u.y;
  p.units.push_back(u);
  p.built_types.push_back(base_type);
}

}  // namespace

Replay generate_replay(const SimConfig& config) {
  if (config.tick <= 0) throw std::invalid_argument("generate_replay: tick must be > 0");
  if (config.game_length < 660)
    throw std::invalid_argument("generate_replay: game length must cover 660 s");
  const TechTree& tech = config.tech;
  Roles roles = derive_roles(tech);
  const int h = config.map_h, w = config.map_w;

  SplitMix64 rng(config.seed);
  Replay replay;
  replay.terrain = make_terrain(h, w, rng);

  double margin = std::max(4.0, w / 8.0);
  std::array<PlayerState, 2> players;
  for (int pid = 0; pid < 2; ++pid) {
    PlayerState& p = players[size_t(pid)];
    p.id = pid;
    p.base = pid == 0 ? Point{margin, margin} : Point{w - 1 - margin, h - 1 - margin};
    p.enemy_base = pid == 0 ? Point{w - 1 - margin, h - 1 - margin} : Point{margin, margin};
    p.faction = tech.factions().empty()
                    ? 0
                    : tech.factions()[rng.next_below(tech.factions().size())];
    replay.factions[size_t(pid)] = p.faction;
    double weights[3] = {config.w_rush, config.w_tech, config.w_econ};
    weights[size_t(p.faction) % 3] *= 2.0;  // factions lean toward one template
    p.tmpl = Template(rng.next_weighted(weights, 3));
    p.build_queue = make_build_queue(p.tmpl, roles);
    p.next_production = 20 + rng.next_real(0, 10);

    spawn_unit(p, roles.base, tech, h, w, rng);
    p.units.back().x = p.base.x;  // main base exactly at the start point
    p.units.back().y = p.base.y;
    for (int i = 0; i < 4; ++i) spawn_unit(p, roles.worker, tech, h, w, rng);
  }

  int frames = int(std::floor(config.game_length / config.tick)) + 1;
  for (int f = 0; f < frames; ++f) {
    double t = f * config.tick;

    for (PlayerState& p : players) {
      // Production: one queue pop per interval; missing prerequisites are
      // built first so every spawn is tech-consistent.
      if (t >= p.next_production) {
        p.next_production = t + 20 + rng.next_real(0, 12);
        if (p.build_queue.empty()) {
          double army_mix[2] = {p.tmpl == Template::kTech ? 0.7 : 1.8,
                                p.tmpl == Template::kTech ? 1.6 : 0.6};
          int pick = rng.next_weighted(army_mix, 2);
          p.build_queue.push_back(pick == 0 ? roles.shallow_army : roles.deep_army);
          if (rng.next_double() < 0.25) p.build_queue.push_back(roles.worker);
        }
        int want = p.build_queue.front();
        int missing = -1;
        for (int pre : tech.prerequisite_closure(want))
          if (!has_type(p, pre)) missing = missing < 0 ? pre : std::min(missing, pre);
        if (missing >= 0) {
          // Build the shallowest missing prerequisite instead this slot.
          for (int pre : tech.prerequisite_closure(want))
            if (!has_type(p, pre) &&
                tech.prerequisite_closure(pre).size() <
                    tech.prerequisite_closure(missing).size())
              missing = pre;
          spawn_unit(p, missing, tech, h, w, rng);
        } else {
          p.build_queue.pop_front();
          if (want == roles.base && has_type(p, roles.base))
            spawn_expansion(p, roles.base, h, w, rng);
          else
            spawn_unit(p, want, tech, h, w, rng);
        }
      }

      // Movement: straight lines toward the current waypoint.
      for (SimUnit& u : p.units) {
        if (!u.mobile) continue;
        double speed = tech.type(u.type).move_speed;
        if (u.type == roles.worker) {
          // Workers shuttle between the base and a nearby gathering spot.
          double dx = u.wx - u.x, dy = u.wy - u.y;
          double dist = std::sqrt(dx * dx + dy * dy);
          double step = speed * config.tick;
          if (dist <= step || dist == 0) {
            u.x = u.wx;
            u.y = u.wy;
            double toward = (std::abs(u.x - p.base.x) + std::abs(u.y - p.base.y) < 2)
                                ? 1.0
                                : 0.0;
            double cx = w / 2.0 >= p.base.x ? 1 : -1;
            double cy = h / 2.0 >= p.base.y ? 1 : -1;
            if (toward > 0.5) {
              u.wx = clampd(p.base.x + cx * (5 + rng.next_real(0, 3)), 1, w - 2);
              u.wy = clampd(p.base.y + cy * (5 + rng.next_real(0, 3)), 1, h - 2);
            } else {
              u.wx = p.base.x;
              u.wy = p.base.y;
            }
          } else {
            u.x += dx / dist * step;
            u.y += dy / dist * step;
          }
          continue;
        }
        double dx = u.wx - u.x, dy = u.wy - u.y;
        double dist = std::sqrt(dx * dx + dy * dy);
        double step = speed * config.tick;
        if (dist <= step || dist == 0) {
          u.x = u.wx;
          u.y = u.wy;
          assign_waypoint(u, p, h, w, rng);
        } else {
          u.x += dx / dist * step;
          u.y += dy / dist * step;
        }
      }
    }

    Frame frame;
    frame.time = t;
    for (const PlayerState& p : players)
      for (const SimUnit& u : p.units) {
        Unit out;
        out.player = p.id;
        out.type = u.type;
        out.x = int(clampd(std::llround(u.x), 0, w - 1));
        out.y = int(clampd(std::llround(u.y), 0, h - 1));
        frame.units.push_back(out);
      }
    replay.frames.push_back(std::move(frame));
  }
  return replay;
}

Manifest generate_dataset(uint64_t base_seed, int count, const SimConfig& config,
                          const std::string& out_dir) {
  if (count < 1) throw std::invalid_argument("generate_dataset: count must be >= 1");
  std::filesystem::create_directories(out_dir);
  Manifest manifest;
  for (int i = 0; i < count; ++i) {
    SimConfig c = config;
    c.seed = SplitMix64::derive(base_seed, uint64_t(i));
    Replay replay = generate_replay(c);
    char name[32];
    std::snprintf(name, sizeof(name), "replay_%05d.dfg", i);
    write_replay(replay, out_dir + "/" + name);
    manifest.push_back({name, c.seed, replay.factions[0], replay.factions[1]});
  }
  write_manifest(manifest, out_dir + "/manifest.txt");
  return manifest;
}

}  // namespace defog
