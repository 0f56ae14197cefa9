#include "defog/grid.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace defog {

TechTree::TechTree(std::vector<UnitType> types, std::vector<int> factions)
    : types_(std::move(types)), factions_(std::move(factions)) {
  validate();
}

void TechTree::validate() const {
  for (size_t i = 0; i < types_.size(); ++i) {
    const UnitType& t = types_[i];
    if (t.id != int(i))
      throw std::invalid_argument("tech tree: type ids must be dense 0..n-1");
    if (t.sight_range < 0)
      throw std::invalid_argument("tech tree: negative sight range for " + t.name);
    if (t.is_building && t.move_speed != 0)
      throw std::invalid_argument("tech tree: building with nonzero speed: " + t.name);
    for (int p : t.prerequisites)
      if (p < 0 || p >= int(types_.size()))
        throw std::invalid_argument("tech tree: bad prerequisite id for " + t.name);
  }
  // Cycle check: iterative DFS over the prerequisite edges.
  enum { kWhite, kGray, kBlack };
  std::vector<int> color(types_.size(), kWhite);
  for (size_t root = 0; root < types_.size(); ++root) {
    if (color[root] != kWhite) continue;
    std::vector<std::pair<int, size_t>> stack{{int(root), 0}};
    color[root] = kGray;
    while (!stack.empty()) {
      auto& [node, edge] = stack.back();
      const auto& pre = types_[size_t(node)].prerequisites;
      if (edge == pre.size()) {
        color[size_t(node)] = kBlack;
        stack.pop_back();
        continue;
      }
      int next = pre[edge++];
      if (color[size_t(next)] == kGray)
        throw std::invalid_argument("tech tree: prerequisite cycle involving " +
                                    types_[size_t(next)].name);
      if (color[size_t(next)] == kWhite) {
        color[size_t(next)] = kGray;
        stack.emplace_back(next, 0);
      }
    }
  }
}

TechTree TechTree::builtin() {
  std::vector<UnitType> types = {
      {0, "base", true, {}, 10, 0},
      {1, "worker", false, {0}, 6, 1.0},
      {2, "barracks", true, {0}, 8, 0},
      {3, "techlab", true, {2}, 8, 0},
      {4, "light", false, {2}, 7, 1.5},
      {5, "heavy", false, {3}, 7, 0.75},
  };
  return TechTree(std::move(types), {0, 1, 2});
}

std::vector<int> TechTree::prerequisite_closure(int id) const {
  return prerequisite_closure(std::vector<int>{id});
}

std::vector<int> TechTree::prerequisite_closure(const std::vector<int>& ids) const {
  std::set<int> seen;
  std::vector<int> stack;
  for (int id : ids)
    for (int p : type(id).prerequisites) stack.push_back(p);
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    if (!seen.insert(t).second) continue;
    for (int p : type(t).prerequisites) stack.push_back(p);
  }
  return {seen.begin(), seen.end()};
}

TechTree TechTree::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tech tree file: " + path);
  std::vector<UnitType> types;
  std::vector<int> factions;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "factions") {
      int f;
      while (ss >> f) factions.push_back(f);
    } else if (tag == "type") {
      UnitType t;
      std::string kind, prereq;
      ss >> t.id >> t.name >> kind >> prereq >> t.sight_range >> t.move_speed;
      if (!ss)
        throw std::runtime_error("tech tree: malformed line " + std::to_string(lineno));
      if (kind != "building" && kind != "unit")
        throw std::runtime_error("tech tree: bad kind at line " + std::to_string(lineno));
      t.is_building = kind == "building";
      if (prereq != "-") {
        std::istringstream ps(prereq);
        std::string tok;
        while (std::getline(ps, tok, ',')) t.prerequisites.push_back(std::stoi(tok));
      }
      types.push_back(std::move(t));
    } else {
      throw std::runtime_error("tech tree: unknown directive at line " +
                               std::to_string(lineno));
    }
  }
  std::sort(types.begin(), types.end(),
            [](const UnitType& a, const UnitType& b) { return a.id < b.id; });
  return TechTree(std::move(types), std::move(factions));
}

void TechTree::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write tech tree file: " + path);
  out << "# columns: type <id> <name> <building|unit> <prereq-ids or -> <sight> <speed>\n";
  out << "factions";
  for (int f : factions_) out << ' ' << f;
  out << '\n';
  for (const UnitType& t : types_) {
    out << "type " << t.id << ' ' << t.name << ' '
        << (t.is_building ? "building" : "unit") << ' ';
    if (t.prerequisites.empty()) {
      out << '-';
    } else {
      for (size_t i = 0; i < t.prerequisites.size(); ++i)
        out << (i ? "," : "") << t.prerequisites[i];
    }
    out << ' ' << t.sight_range << ' ' << t.move_speed << '\n';
  }
}

TerrainMap TerrainMap::flat(int h, int w) {
  TerrainMap m;
  m.height = h;
  m.width = w;
  m.data.assign(size_t(h) * w * kChannels, 0.f);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      m.at(y, x, 0) = 1.f;  // walkable
      m.at(y, x, 1) = 1.f;  // buildable
    }
  return m;
}

std::pair<int, int> grid_dims(int map_h, int map_w, int r, int g) {
  if (g < 1) throw std::invalid_argument("grid_dims: stride must be >= 1");
  if (r < g) throw std::invalid_argument("grid_dims: window must be >= stride");
  if (r >= map_h || r >= map_w)
    throw std::invalid_argument("grid_dims: window does not fit in map");
  auto ceil_div = [](int a, int b) { return (a + b - 1) / b; };
  return {ceil_div(map_h - r, g), ceil_div(map_w - r, g)};
}

CountGrid featurize_frame(const Frame& frame, const GridSpec& spec,
                          const TechTree& tech, int perspective_player) {
  auto [gh, gw] = grid_dims(spec.map_h, spec.map_w, spec.r, spec.g);
  CountGrid grid(gh, gw, tech.num_channels());
  const int r = spec.r, g = spec.g;
  for (const Unit& u : frame.units) {
    if (u.player == kNeutralPlayer) continue;
    if (u.type < 0 || u.type >= tech.num_types())
      throw std::invalid_argument("featurize_frame: unknown unit type id " +
                                  std::to_string(u.type));
    if (u.x < 0 || u.x >= spec.map_w || u.y < 0 || u.y >= spec.map_h)
      throw std::invalid_argument("featurize_frame: unit out of map bounds");
    int side = u.player == perspective_player ? 0 : 1;
    int c = channel_of(tech, side, u.type);
    // Cell (i,j) covers tiles [i*g, i*g+r) x [j*g, j*g+r).
    int i_lo = u.y < r ? 0 : (u.y - r) / g + 1;
    int i_hi = std::min(gh - 1, u.y / g);
    int j_lo = u.x < r ? 0 : (u.x - r) / g + 1;
    int j_hi = std::min(gw - 1, u.x / g);
    for (int i = i_lo; i <= i_hi; ++i)
      for (int j = j_lo; j <= j_hi; ++j) grid.at(i, j, c) += 1.f;
  }
  return grid;
}

BoolGrid existence(const CountGrid& grid, float threshold) {
  BoolGrid out(grid.height(), grid.width(), grid.channels());
  for (size_t k = 0; k < grid.size(); ++k)
    out.data[k] = grid.data()[k] > threshold ? 1 : 0;
  return out;
}

}  // namespace defog
