#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "aupc/render/image.hpp"

namespace aupc {

using Bytes = std::vector<std::uint8_t>;

// 8-bit RGBA, un-premultiplied on write. Output depends only on the pixels.
Bytes encode_png(const LayerImage& img);
// Inverse of encode_png for 8-bit RGBA files; the result is premultiplied.
LayerImage decode_png(std::span<const std::uint8_t> bytes);

// 8-bit grayscale of values clamped to [0, 1].
Bytes encode_gray_png(const Grid<double>& img);
Grid<double> decode_gray_png(std::span<const std::uint8_t> bytes);

void export_png(const LayerImage& img, const std::filesystem::path& path);
void export_gray_png(const Grid<double>& img, const std::filesystem::path& path);

// Throws IoError naming the path.
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
Bytes read_file(const std::filesystem::path& path);

}  // namespace aupc
