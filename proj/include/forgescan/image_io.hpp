#pragma once

#include <string>

#include "forgescan/image.hpp"

namespace forgescan {

/// Decode a JPEG, PNG, or BMP file. 3-channel output is R,G,B order.
/// Throws std::runtime_error on unreadable or undecodable input.
RasterImage load_image(const std::string& path);

/// Write an image as PNG (gray or RGB). Lossless.
void save_image_png(const RasterImage& img, const std::string& path);
void save_gray_png(const GrayImage& img, const std::string& path);

/// Write a baseline JPEG through the system codec (test corpora, docs).
void save_gray_jpeg(const GrayImage& img, const std::string& path, int quality);

/// Write a binary map as an 8-bit gray PNG with values exactly {0, 255}.
void save_mask(const FeatureMap& mask, const std::string& path);

/// Reload a mask PNG written by save_mask back into a 0/1 map.
FeatureMap load_mask(const std::string& path);

}  // namespace forgescan
