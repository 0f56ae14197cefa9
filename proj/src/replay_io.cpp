#include "defog/replay_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "defog/rng.hpp"

namespace defog {

namespace {

void fail(const std::string& path, int lineno, const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + what);
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_float(float v) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%.9g", double(v));
  return buf;
}

}  // namespace

void write_replay(const Replay& replay, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write replay file: " + path);
  const TerrainMap& t = replay.terrain;
  out << "DFG1 " << t.height << ' ' << t.width << ' ' << TerrainMap::kChannels << ' '
      << replay.factions[0] << ' ' << replay.factions[1] << '\n';
  for (int c = 0; c < TerrainMap::kChannels; ++c)
    for (int y = 0; y < t.height; ++y) {
      for (int x = 0; x < t.width; ++x) out << (x ? " " : "") << fmt_float(t.at(y, x, c));
      out << '\n';
    }
  for (const Frame& f : replay.frames) {
    out << fmt_double(f.time) << " |";
    for (size_t i = 0; i < f.units.size(); ++i) {
      const Unit& u = f.units[i];
      out << (i ? " ; " : " ") << u.player << ',' << u.type << ',' << u.x << ',' << u.y;
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

Replay read_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open replay file: " + path);
  std::string line;
  int lineno = 0;

  if (!std::getline(in, line)) fail(path, 1, "empty replay file");
  ++lineno;
  std::istringstream header(line);
  std::string magic;
  int h = 0, w = 0, ct = 0, f0 = 0, f1 = 0;
  header >> magic >> h >> w >> ct >> f0 >> f1;
  if (magic.rfind("DFG", 0) == 0 && magic != "DFG1")
    fail(path, lineno, "unsupported replay version " + magic);
  if (magic != "DFG1" || !header) fail(path, lineno, "malformed header");
  if (h <= 0 || w <= 0 || ct != TerrainMap::kChannels)
    fail(path, lineno, "bad map dimensions in header");

  Replay replay;
  replay.factions = {f0, f1};
  replay.terrain.height = h;
  replay.terrain.width = w;
  replay.terrain.data.assign(size_t(h) * w * TerrainMap::kChannels, 0.f);
  for (int c = 0; c < TerrainMap::kChannels; ++c)
    for (int y = 0; y < h; ++y) {
      if (!std::getline(in, line))
        fail(path, lineno, "terrain truncated (channel " + std::to_string(c) + ")");
      ++lineno;
      std::istringstream ss(line);
      for (int x = 0; x < w; ++x)
        if (!(ss >> replay.terrain.at(y, x, c)))
          fail(path, lineno, "malformed terrain row");
    }

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    Frame frame;
    std::string bar;
    if (!(ss >> frame.time >> bar) || bar != "|") {
      std::string at = replay.frames.empty()
                           ? "no frames read"
                           : "last good frame at t=" + fmt_double(replay.frames.back().time);
      fail(path, lineno, "malformed frame line (" + at + ")");
    }
    std::string tok;
    while (ss >> tok) {
      if (tok == ";") continue;
      Unit u;
      if (std::sscanf(tok.c_str(), "%d,%d,%d,%d", &u.player, &u.type, &u.x, &u.y) != 4) {
        std::string at = replay.frames.empty()
                             ? "no frames read"
                             : "last good frame at t=" + fmt_double(replay.frames.back().time);
        fail(path, lineno, "malformed unit record '" + tok + "' (" + at + ")");
      }
      frame.units.push_back(u);
    }
    replay.frames.push_back(std::move(frame));
  }
  return replay;
}

void write_manifest(const Manifest& manifest, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest: " + path);
  for (const ManifestEntry& e : manifest)
    out << e.path << ' ' << e.seed << ' ' << e.faction0 << ' ' << e.faction1 << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

Manifest read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path);
  Manifest manifest;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    ManifestEntry e;
    if (!(ss >> e.path >> e.seed >> e.faction0 >> e.faction1))
      fail(path, lineno, "malformed manifest line");
    manifest.push_back(std::move(e));
  }
  return manifest;
}

std::string manifest_dir(const std::string& manifest_path) {
  std::filesystem::path p(manifest_path);
  auto dir = p.parent_path();
  return dir.empty() ? std::string(".") : dir.string();
}

Replay load_entry(const std::string& manifest_path, const ManifestEntry& entry) {
  return read_replay(manifest_dir(manifest_path) + "/" + entry.path);
}

std::array<Manifest, 3> split_manifest(const Manifest& manifest,
                                       const std::array<double, 3>& ratios,
                                       uint64_t seed) {
  double total = ratios[0] + ratios[1] + ratios[2];
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("split: ratios must sum to 1");
  size_t n = manifest.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t(0));
  SplitMix64 rng(seed);
  for (size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.next_below(i)]);

  size_t n0 = size_t(std::floor(double(n) * ratios[0]));
  size_t n1 = size_t(std::floor(double(n) * ratios[1]));
  size_t n2 = n - n0 - n1;
  if (n0 == 0 || n1 == 0 || n2 == 0)
    throw std::invalid_argument("split: a split would be empty");

  std::array<Manifest, 3> out;
  for (size_t i = 0; i < n; ++i) {
    size_t bucket = i < n0 ? 0 : (i < n0 + n1 ? 1 : 2);
    out[bucket].push_back(manifest[order[i]]);
  }
  return out;
}

}  // namespace defog
