#include "forgescan/image.hpp"

#include <algorithm>
#include <cmath>

namespace forgescan {

GrayImage to_luma(const RasterImage& img) {
    GrayImage out(img.width, img.height);
    if (img.channels == 1) {
        out.data = img.data;
        return out;
    }
    const std::size_t n = out.data.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double r = img.data[3 * i + 0];
        const double g = img.data[3 * i + 1];
        const double b = img.data[3 * i + 2];
        const double y = std::round(0.299 * r + 0.587 * g + 0.114 * b);
        out.data[i] = static_cast<std::uint8_t>(std::clamp(y, 0.0, 255.0));
    }
    return out;
}

GrayImage to_v_channel(const RasterImage& img) {
    GrayImage out(img.width, img.height);
    if (img.channels == 1) {
        out.data = img.data;
        return out;
    }
    const std::size_t n = out.data.size();
    for (std::size_t i = 0; i < n; ++i) {
        out.data[i] = std::max({img.data[3 * i + 0], img.data[3 * i + 1],
                                img.data[3 * i + 2]});
    }
    return out;
}

}  // namespace forgescan
