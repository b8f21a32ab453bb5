#include "cvm/snapshot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "cvm/error.hpp"

namespace cvm {

std::string encode_pgm(const OpinionConfig& c, std::size_t width, std::size_t height) {
  if (width * height != c.size()) {
    throw ValidationError("snapshot is " + std::to_string(width) + "x" + std::to_string(height) +
                          " but configuration has " + std::to_string(c.size()) + " opinions");
  }
  std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  out.reserve(out.size() + c.size());
  for (double v : c) {
    const double level = std::floor(v * 255.0 + 0.5);
    out.push_back(static_cast<char>(static_cast<unsigned char>(std::clamp(level, 0.0, 255.0))));
  }
  return out;
}

void write_snapshot(const OpinionConfig& c, std::size_t width, std::size_t height,
                    const std::filesystem::path& path) {
  const std::string bytes = encode_pgm(c, width, height);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write snapshot '" + path.string() + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for snapshot '" + path.string() + "'");
}

}  // namespace cvm
