#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace forgescan {

/// Decoded 8-bit raster, 1 (gray) or 3 (RGB) interleaved channels, row-major.
struct RasterImage {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<std::uint8_t> data;

    RasterImage() = default;
    RasterImage(int w, int h, int c, std::uint8_t fill = 0)
        : width(w), height(h), channels(c),
          data(static_cast<std::size_t>(w) * h * c, fill) {
        if (w <= 0 || h <= 0 || (c != 1 && c != 3))
            throw std::invalid_argument("RasterImage: bad dimensions");
    }

    std::uint8_t& at(int row, int col, int ch) {
        return data[(static_cast<std::size_t>(row) * width + col) * channels + ch];
    }
    std::uint8_t at(int row, int col, int ch) const {
        return data[(static_cast<std::size_t>(row) * width + col) * channels + ch];
    }
};

/// Single-channel 8-bit image.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {
        if (w <= 0 || h <= 0)
            throw std::invalid_argument("GrayImage: bad dimensions");
    }

    std::uint8_t& at(int row, int col) {
        return data[static_cast<std::size_t>(row) * width + col];
    }
    std::uint8_t at(int row, int col) const {
        return data[static_cast<std::size_t>(row) * width + col];
    }
};

/// Binary, input-sized tamper map. Nonzero = suspected tampering.
struct FeatureMap {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // 0 or 1

    FeatureMap() = default;
    FeatureMap(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {
        if (w <= 0 || h <= 0)
            throw std::invalid_argument("FeatureMap: bad dimensions");
    }

    std::uint8_t& at(int row, int col) {
        return data[static_cast<std::size_t>(row) * width + col];
    }
    std::uint8_t at(int row, int col) const {
        return data[static_cast<std::size_t>(row) * width + col];
    }
};

/// BT.601 luma: round(0.299 R + 0.587 G + 0.114 B). 1-channel input passes through.
GrayImage to_luma(const RasterImage& img);

/// HSV value channel: per-pixel max(R,G,B). 1-channel input passes through.
GrayImage to_v_channel(const RasterImage& img);

}  // namespace forgescan
