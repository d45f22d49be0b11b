#pragma once

#include <filesystem>

#include "cdpauth/matrix.hpp"

namespace cdpauth {

// Persistence format is 8-bit grayscale PNG; values are scaled by 255 with
// round-half-up. quantize8 snaps a value onto that grid so that in-memory
// data and its PNG round trip agree exactly.
double quantize8(double v);
Matrix quantize8(const Matrix& m);

// Reads any grayscale PNG (bit depth 1..16) into [0,1]. Color images are
// rejected. Throws IoError on filesystem problems, IngestionError on format
// problems; both name the path.
Matrix read_png_gray(const std::filesystem::path& path);

void write_png_gray8(const std::filesystem::path& path, const Matrix& image);

// 1-bit file for binary matrices (bit 1 = white). Values must be exactly 0/1.
void write_png_gray1(const std::filesystem::path& path, const Matrix& image);

} // namespace cdpauth
