#pragma once

#include <string>

#include "defog/nn.hpp"

namespace defog {

// Binary checkpoint, little-endian:
//   magic "DFGC", u32 version (1), u32 block count,
//   per block: u32 name length, name bytes, u32 rank, u32 dims[rank],
//              f32 values[numel].
void save_params(const ParamStore<float>& params, const std::string& path);
ParamStore<float> load_params(const std::string& path);

}  // namespace defog
