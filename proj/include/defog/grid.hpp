#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace defog {

constexpr int kNeutralPlayer = -1;

struct UnitType {
  int id = 0;
  std::string name;
  bool is_building = false;
  std::vector<int> prerequisites;  // unit-type ids
  double sight_range = 0;          // walk tiles, Euclidean radius
  double move_speed = 0;           // walk tiles per second, 0 for buildings
};

// Unit-type table plus the faction id list. Type ids are dense 0..n-1 and
// define the channel layout everywhere downstream.
class TechTree {
 public:
  TechTree() = default;
  TechTree(std::vector<UnitType> types, std::vector<int> factions);

  static TechTree builtin();                    // 6-type default table
  static TechTree load(const std::string& path);
  void save(const std::string& path) const;

  int num_types() const { return int(types_.size()); }
  int num_channels() const { return 2 * num_types(); }  // ally + enemy
  const UnitType& type(int id) const { return types_.at(size_t(id)); }
  const std::vector<UnitType>& types() const { return types_; }
  const std::vector<int>& factions() const { return factions_; }

  // All ancestors (direct and transitive prerequisites) of `id`.
  std::vector<int> prerequisite_closure(int id) const;
  // Union of closures over a set of type ids.
  std::vector<int> prerequisite_closure(const std::vector<int>& ids) const;

 private:
  void validate() const;
  std::vector<UnitType> types_;
  std::vector<int> factions_;
};

struct TerrainMap {
  static constexpr int kChannels = 3;  // walkability, buildability, ground height
  int height = 0;
  int width = 0;
  std::vector<float> data;  // height*width*kChannels, row major, channel last

  float at(int y, int x, int c) const {
    return data[size_t((y * width + x) * kChannels + c)];
  }
  float& at(int y, int x, int c) {
    return data[size_t((y * width + x) * kChannels + c)];
  }
  static TerrainMap flat(int h, int w);
};

struct Unit {
  int player = 0;  // 0, 1, or kNeutralPlayer
  int type = 0;
  int x = 0;  // column, [0, W)
  int y = 0;  // row, [0, H)

  bool operator==(const Unit&) const = default;
};

struct Frame {
  double time = 0;  // game seconds
  std::vector<Unit> units;

  bool operator==(const Frame&) const = default;
};

// (H_rg, W_rg) for an r x r window slid with stride g over an H x W map.
std::pair<int, int> grid_dims(int map_h, int map_w, int r, int g);

struct GridSpec {
  int r = 8;   // pooling window, walk tiles
  int g = 8;   // stride, walk tiles
  int map_h = 64;
  int map_w = 64;

  int grid_h() const { return grid_dims(map_h, map_w, r, g).first; }
  int grid_w() const { return grid_dims(map_h, map_w, r, g).second; }
  bool operator==(const GridSpec&) const = default;
};

// Dense H_rg x W_rg x C_u count tensor. Channels [0, U) are the perspective
// player's types in id order, [U, 2U) the enemy's.
class CountGrid {
 public:
  CountGrid() = default;
  CountGrid(int h, int w, int channels)
      : h_(h), w_(w), c_(channels), data_(size_t(h) * w * channels, 0.f) {}

  int height() const { return h_; }
  int width() const { return w_; }
  int channels() const { return c_; }
  size_t size() const { return data_.size(); }

  float at(int i, int j, int c) const { return data_[index(i, j, c)]; }
  float& at(int i, int j, int c) { return data_[index(i, j, c)]; }
  const std::vector<float>& data() const { return data_; }
  std::vector<float>& data() { return data_; }

  bool same_shape(const CountGrid& o) const {
    return h_ == o.h_ && w_ == o.w_ && c_ == o.c_;
  }
  bool operator==(const CountGrid&) const = default;

  size_t index(int i, int j, int c) const {
    return size_t((i * w_ + j) * c_ + c);
  }

 private:
  int h_ = 0, w_ = 0, c_ = 0;
  std::vector<float> data_;
};

// Boolean grid with CountGrid geometry.
struct BoolGrid {
  int h = 0, w = 0, c = 0;
  std::vector<uint8_t> data;

  BoolGrid() = default;
  BoolGrid(int h_, int w_, int c_) : h(h_), w(w_), c(c_), data(size_t(h_) * w_ * c_, 0) {}
  bool at(int i, int j, int ch) const { return data[size_t((i * w + j) * c + ch)] != 0; }
  void set(int i, int j, int ch, bool v) { data[size_t((i * w + j) * c + ch)] = v ? 1 : 0; }
};

// Channel index helpers. `side` 0 = perspective player (ally), 1 = enemy.
inline int channel_of(const TechTree& tech, int side, int type) {
  return side * tech.num_types() + type;
}

// Accumulates per-type unit counts into every covering grid cell, from the
// given player's perspective. Neutral units are skipped; unknown type ids
// are an error.
CountGrid featurize_frame(const Frame& frame, const GridSpec& spec,
                          const TechTree& tech, int perspective_player);

// Entry-wise `count > threshold` (strictly greater).
BoolGrid existence(const CountGrid& grid, float threshold);

}  // namespace defog
