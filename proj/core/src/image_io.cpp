#include "cdpauth/image_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>
#include <vector>

#include "cdpauth/errors.hpp"

namespace cdpauth {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

} // namespace

double quantize8(double v) {
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    double u = std::floor(v * 255.0 + 0.5);  // round half up
    return u / 255.0;
}

Matrix quantize8(const Matrix& m) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = quantize8(m[i]);
    return out;
}

Matrix read_png_gray(const std::filesystem::path& path) {
    FilePtr f(std::fopen(path.string().c_str(), "rb"));
    if (!f) throw IoError("cannot open PNG for reading: " + path.string());

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("libpng: failed to allocate read struct");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("libpng: failed to allocate info struct");
    }

    std::vector<png_byte> raw;
    std::vector<png_bytep> row_ptrs;
    png_uint_32 width = 0, height = 0;
    int bit_depth = 0, color_type = 0;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IngestionError("malformed PNG: " + path.string());
    }

    png_init_io(png, f.get());
    png_read_info(png, info);
    png_get_IHDR(png, info, &width, &height, &bit_depth, &color_type, nullptr, nullptr, nullptr);

    if (color_type != PNG_COLOR_TYPE_GRAY && color_type != PNG_COLOR_TYPE_GRAY_ALPHA) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IngestionError("not a grayscale PNG: " + path.string());
    }
    if (bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_GRAY_ALPHA) png_set_strip_alpha(png);
    png_read_update_info(png, info);

    raw.resize(static_cast<std::size_t>(width) * height);
    row_ptrs.resize(height);
    for (png_uint_32 r = 0; r < height; ++r) row_ptrs[r] = raw.data() + static_cast<std::size_t>(r) * width;
    png_read_image(png, row_ptrs.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    Matrix out(height, width);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = raw[i] / 255.0;
    return out;
}

namespace {

void write_png(const std::filesystem::path& path, const Matrix& image, int bit_depth) {
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    FilePtr f(std::fopen(path.string().c_str(), "wb"));
    if (!f) throw IoError("cannot open PNG for writing: " + path.string());

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("libpng: failed to allocate write struct");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("libpng: failed to allocate info struct");
    }

    const std::size_t height = image.rows();
    const std::size_t width = image.cols();
    std::vector<png_byte> raw;
    std::vector<png_bytep> row_ptrs(height);

    if (bit_depth == 8) {
        raw.resize(height * width);
        for (std::size_t i = 0; i < image.size(); ++i) {
            double v = image[i];
            if (v < 0.0) v = 0.0;
            if (v > 1.0) v = 1.0;
            raw[i] = static_cast<png_byte>(std::floor(v * 255.0 + 0.5));
        }
        for (std::size_t r = 0; r < height; ++r) row_ptrs[r] = raw.data() + r * width;
    } else {  // 1-bit, MSB first
        const std::size_t stride = (width + 7) / 8;
        raw.assign(height * stride, 0);
        for (std::size_t r = 0; r < height; ++r) {
            for (std::size_t c = 0; c < width; ++c) {
                if (image(r, c) >= 0.5) raw[r * stride + c / 8] |= static_cast<png_byte>(0x80u >> (c % 8));
            }
            row_ptrs[r] = raw.data() + r * stride;
        }
    }

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("libpng: write failed: " + path.string());
    }

    png_init_io(png, f.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height),
                 bit_depth, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, row_ptrs.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

} // namespace

void write_png_gray8(const std::filesystem::path& path, const Matrix& image) {
    if (image.empty()) throw ParameterError("write_png_gray8: empty image");
    write_png(path, image, 8);
}

void write_png_gray1(const std::filesystem::path& path, const Matrix& image) {
    if (image.empty()) throw ParameterError("write_png_gray1: empty image");
    for (double v : image.flat())
        if (v != 0.0 && v != 1.0) throw ParameterError("write_png_gray1: image must be binary");
    write_png(path, image, 1);
}

} // namespace cdpauth
