#include "aupc/render/png.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "aupc/core/error.hpp"

namespace aupc {

namespace {

std::uint8_t to_byte(double x) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(x, 0.0, 1.0) * 255.0));
}

void on_error(png_structp png, png_const_charp msg) {
  auto* text = static_cast<std::string*>(png_get_error_ptr(png));
  if (text) *text = msg;
  png_longjmp(png, 1);
}

void on_warning(png_structp, png_const_charp) {}

void on_write(png_structp png, png_bytep data, png_size_t length) {
  auto* out = static_cast<Bytes*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + length);
}

void on_flush(png_structp) {}

struct Reader {
  std::span<const std::uint8_t> bytes;
  std::size_t offset = 0;
};

void on_read(png_structp png, png_bytep data, png_size_t length) {
  auto* r = static_cast<Reader*>(png_get_io_ptr(png));
  if (r->offset + length > r->bytes.size()) png_error(png, "unexpected end of PNG data");
  std::memcpy(data, r->bytes.data() + r->offset, length);
  r->offset += length;
}

// rows: height rows of width*channels bytes.
Bytes encode(int width, int height, int color_type, const std::vector<std::uint8_t>& pixels, int channels) {
  if (width <= 0 || height <= 0) throw InvalidArgument("cannot encode an empty image");
  std::string error;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &error, on_error, on_warning);
  if (!png) throw IoError("png: cannot create write struct");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("png: cannot create info struct");
  }
  Bytes out;
  std::vector<png_bytep> rows(static_cast<std::size_t>(height));
  for (int y = 0; y < height; ++y) {
    rows[y] = const_cast<png_bytep>(pixels.data()) + static_cast<std::size_t>(y) * width * channels;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("png encode failed: " + error);
  }
  png_set_write_fn(png, &out, on_write, on_flush);
  png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8, color_type,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_set_compression_level(png, 6);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

struct Decoded {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;
};

Decoded decode(std::span<const std::uint8_t> bytes, int color_type, int channels) {
  if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0) throw IoError("not a PNG stream");
  std::string error;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &error, on_error, on_warning);
  if (!png) throw IoError("png: cannot create read struct");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("png: cannot create info struct");
  }
  Reader reader{bytes, 0};
  Decoded d;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("png decode failed: " + error);
  }
  png_set_read_fn(png, &reader, on_read);
  png_read_info(png, info);
  if (png_get_bit_depth(png, info) != 8 || png_get_color_type(png, info) != color_type) {
    png_error(png, "unsupported PNG layout");
  }
  d.width = static_cast<int>(png_get_image_width(png, info));
  d.height = static_cast<int>(png_get_image_height(png, info));
  d.pixels.resize(static_cast<std::size_t>(d.width) * d.height * channels);
  rows.resize(static_cast<std::size_t>(d.height));
  for (int y = 0; y < d.height; ++y) rows[y] = d.pixels.data() + static_cast<std::size_t>(y) * d.width * channels;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return d;
}

}  // namespace

Bytes encode_png(const LayerImage& img) {
  std::vector<std::uint8_t> px(img.size() * 4);
  const auto& c = img.cells();
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double a = std::clamp(c[k].a, 0.0, 1.0);
    const std::uint8_t a8 = to_byte(a);
    std::uint8_t* p = &px[4 * k];
    if (a8 == 0) {
      p[0] = p[1] = p[2] = p[3] = 0;
      continue;
    }
    p[0] = to_byte(c[k].r / a);
    p[1] = to_byte(c[k].g / a);
    p[2] = to_byte(c[k].b / a);
    p[3] = a8;
  }
  return encode(img.width(), img.height(), PNG_COLOR_TYPE_RGBA, px, 4);
}

LayerImage decode_png(std::span<const std::uint8_t> bytes) {
  const Decoded d = decode(bytes, PNG_COLOR_TYPE_RGBA, 4);
  LayerImage img(d.width, d.height);
  auto& c = img.cells();
  for (std::size_t k = 0; k < c.size(); ++k) {
    const std::uint8_t* p = &d.pixels[4 * k];
    const double a = p[3] / 255.0;
    c[k] = {p[0] / 255.0 * a, p[1] / 255.0 * a, p[2] / 255.0 * a, a};
  }
  return img;
}

Bytes encode_gray_png(const Grid<double>& img) {
  std::vector<std::uint8_t> px(img.size());
  const auto& c = img.cells();
  for (std::size_t k = 0; k < c.size(); ++k) px[k] = to_byte(c[k]);
  return encode(img.width(), img.height(), PNG_COLOR_TYPE_GRAY, px, 1);
}

Grid<double> decode_gray_png(std::span<const std::uint8_t> bytes) {
  const Decoded d = decode(bytes, PNG_COLOR_TYPE_GRAY, 1);
  Grid<double> img(d.width, d.height);
  for (std::size_t k = 0; k < img.size(); ++k) img.cells()[k] = d.pixels[k] / 255.0;
  return img;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void export_png(const LayerImage& img, const std::filesystem::path& path) {
  write_file(path, encode_png(img));
}

void export_gray_png(const Grid<double>& img, const std::filesystem::path& path) {
  write_file(path, encode_gray_png(img));
}

}  // namespace aupc
