#pragma once

#include <array>
#include <string>

#include "defog/sim.hpp"

namespace defog {

// Line-based replay file, version tag DFG1:
//   DFG1 H W C_T f0 f1
//   C_T terrain blocks, each H lines of W values
//   one line per frame: `t | player,type,x,y ; player,type,x,y ; ...`
void write_replay(const Replay& replay, const std::string& path);
Replay read_replay(const std::string& path);

// Manifest: one line per game, `path seed faction0 faction1`, paths relative
// to the manifest's own directory.
void write_manifest(const Manifest& manifest, const std::string& path);
Manifest read_manifest(const std::string& path);
std::string manifest_dir(const std::string& manifest_path);
Replay load_entry(const std::string& manifest_path, const ManifestEntry& entry);

// Deterministic disjoint partition by game. Ratios must sum to 1 and every
// split must end up non-empty.
std::array<Manifest, 3> split_manifest(const Manifest& manifest,
                                       const std::array<double, 3>& ratios,
                                       uint64_t seed);

}  // namespace defog
