#include "forgescan/jpeg_sim.hpp"

#include <algorithm>
#include <cmath>

namespace forgescan {
namespace {

constexpr double kPi = 3.14159265358979323846;

// cos((2x+1) u pi / 16) premultiplied by the w(u) normalization.
struct CosTable {
    double c[8][8];  // c[u][x]
    CosTable() {
        for (int u = 0; u < 8; ++u) {
            const double w = (u == 0) ? 1.0 / std::sqrt(2.0) : 1.0;
            for (int x = 0; x < 8; ++x)
                c[u][x] = w * std::cos((2 * x + 1) * u * kPi / 16.0);
        }
    }
};

const CosTable& cos_table() {
    static const CosTable t;
    return t;
}

double round_half_away(double v) {
    return v < 0.0 ? -std::floor(-v + 0.5) : std::floor(v + 0.5);
}

}  // namespace

const QuantMatrix& annex_k_luminance() {
    static const QuantMatrix k = {
        16, 11, 10, 16, 24,  40,  51,  61,
        12, 12, 14, 19, 26,  58,  60,  55,
        14, 13, 16, 24, 40,  57,  69,  56,
        14, 17, 22, 29, 51,  87,  80,  62,
        18, 22, 37, 56, 68,  109, 103, 77,
        24, 35, 55, 64, 81,  104, 113, 92,
        49, 64, 78, 87, 103, 121, 120, 101,
        72, 92, 95, 98, 112, 100, 103, 99};
    return k;
}

Block8x8 dct8x8(const Block8x8& block) {
    const CosTable& t = cos_table();
    // Row pass then column pass; 1/2 scale per pass gives the overall 1/4.
    Block8x8 tmp{};
    for (int y = 0; y < 8; ++y)
        for (int u = 0; u < 8; ++u) {
            double s = 0.0;
            for (int x = 0; x < 8; ++x)
                s += block[y * 8 + x] * t.c[u][x];
            tmp[y * 8 + u] = 0.5 * s;
        }
    Block8x8 out{};
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v) {
            double s = 0.0;
            for (int y = 0; y < 8; ++y)
                s += tmp[y * 8 + u] * t.c[v][y];
            out[v * 8 + u] = 0.5 * s;
        }
    return out;
}

Block8x8 idct8x8(const Block8x8& coeffs) {
    const CosTable& t = cos_table();
    Block8x8 tmp{};
    for (int v = 0; v < 8; ++v)
        for (int x = 0; x < 8; ++x) {
            double s = 0.0;
            for (int u = 0; u < 8; ++u)
                s += coeffs[v * 8 + u] * t.c[u][x];
            tmp[v * 8 + x] = 0.5 * s;
        }
    Block8x8 out{};
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            double s = 0.0;
            for (int v = 0; v < 8; ++v)
                s += tmp[v * 8 + x] * t.c[v][y];
            out[y * 8 + x] = 0.5 * s;
        }
    return out;
}

QuantMatrix quality_to_matrix(QualityFactor qf) {
    const int s = qf.value < 50 ? 5000 / qf.value : 200 - 2 * qf.value;
    const QuantMatrix& base = annex_k_luminance();
    QuantMatrix out{};
    for (int i = 0; i < 64; ++i)
        out[i] = std::clamp((base[i] * s + 50) / 100, 1, 255);
    return out;
}

Block8x8 quantize(const Block8x8& coeffs, const QuantMatrix& q) {
    Block8x8 out{};
    for (int i = 0; i < 64; ++i)
        out[i] = round_half_away(coeffs[i] / q[i]);
    return out;
}

Block8x8 dequantize(const Block8x8& quantized, const QuantMatrix& q) {
    Block8x8 out{};
    for (int i = 0; i < 64; ++i)
        out[i] = quantized[i] * q[i];
    return out;
}

GrayImage recompress(const GrayImage& img, QualityFactor qf) {
    if (img.width < 8 || img.height < 8)
        throw std::invalid_argument("recompress: image smaller than 8x8");

    const QuantMatrix q = quality_to_matrix(qf);
    const int pw = (img.width + 7) / 8 * 8;
    const int ph = (img.height + 7) / 8 * 8;

    GrayImage out(img.width, img.height);
    for (int by = 0; by < ph; by += 8) {
        for (int bx = 0; bx < pw; bx += 8) {
            Block8x8 b{};
            for (int y = 0; y < 8; ++y) {
                const int sy = std::min(by + y, img.height - 1);
                for (int x = 0; x < 8; ++x) {
                    const int sx = std::min(bx + x, img.width - 1);
                    b[y * 8 + x] = static_cast<double>(img.at(sy, sx)) - 128.0;
                }
            }
            b = idct8x8(dequantize(quantize(dct8x8(b), q), q));
            for (int y = 0; y < 8 && by + y < img.height; ++y)
                for (int x = 0; x < 8 && bx + x < img.width; ++x) {
                    const double v = std::round(b[y * 8 + x] + 128.0);
                    out.at(by + y, bx + x) =
                        static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
                }
        }
    }
    return out;
}

}  // namespace forgescan
