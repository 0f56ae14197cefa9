#include "defog/checkpoint.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace defog {

namespace {

constexpr char kMagic[4] = {'D', 'F', 'G', 'C'};
constexpr uint32_t kVersion = 1;

void write_u32(std::ostream& out, uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16),
                        static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

uint32_t read_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return uint32_t(b[0]) | uint32_t(b[1]) << 8 | uint32_t(b[2]) << 16 |
         uint32_t(b[3]) << 24;
}

void write_f32(std::ostream& out, float v) {
  uint32_t bits;
  std::memcpy(&bits, &v, 4);
  write_u32(out, bits);
}

float read_f32(std::istream& in) {
  uint32_t bits = read_u32(in);
  float v;
  std::memcpy(&v, &bits, 4);
  return v;
}

}  // namespace

void save_params(const ParamStore<float>& params, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write checkpoint: " + path);
  out.write(kMagic, 4);
  write_u32(out, kVersion);
  write_u32(out, uint32_t(params.entries.size()));
  for (const auto& e : params.entries) {
    write_u32(out, uint32_t(e.name.size()));
    out.write(e.name.data(), std::streamsize(e.name.size()));
    write_u32(out, uint32_t(e.value.rank()));
    for (size_t d = 0; d < e.value.rank(); ++d) write_u32(out, uint32_t(e.value.dim(d)));
    for (float v : e.value.data) write_f32(out, v);
  }
  if (!out) throw std::runtime_error("checkpoint write failed: " + path);
}

ParamStore<float> load_params(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open checkpoint: " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("not a checkpoint file: " + path);
  uint32_t version = read_u32(in);
  if (version != kVersion)
    throw std::runtime_error("unsupported checkpoint version " +
                             std::to_string(version) + ": " + path);
  uint32_t count = read_u32(in);
  ParamStore<float> params;
  for (uint32_t i = 0; i < count; ++i) {
    uint32_t name_len = read_u32(in);
    std::string name(name_len, '\0');
    in.read(name.data(), name_len);
    uint32_t rank = read_u32(in);
    std::vector<int> shape;
    for (uint32_t d = 0; d < rank; ++d) shape.push_back(int(read_u32(in)));
    Tensor<float>& t = params.add(name, shape);
    for (size_t k = 0; k < t.numel(); ++k) t[k] = read_f32(in);
    if (!in) throw std::runtime_error("truncated checkpoint: " + path);
  }
  return params;
}

}  // namespace defog
