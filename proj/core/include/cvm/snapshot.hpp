#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include "cvm/opinions.hpp"

namespace cvm {

// Binary PGM (P5, maxval 255), row-major, pixel = floor(opinion * 255 + 0.5).
// Throws ValidationError unless width * height == c.size().
std::string encode_pgm(const OpinionConfig& c, std::size_t width, std::size_t height);

// Throws IoError when the file cannot be written.
void write_snapshot(const OpinionConfig& c, std::size_t width, std::size_t height,
                    const std::filesystem::path& path);

}  // namespace cvm
