#pragma once

#include <array>
#include <cstdint>

#include "forgescan/image.hpp"

namespace forgescan {

/// One 8x8 tile, pixel-domain samples or DCT coefficients.
using Block8x8 = std::array<double, 64>;

/// 8x8 table of positive integer divisors (entries 1..255).
using QuantMatrix = std::array<int, 64>;

/// JPEG quality knob, 1..100. Higher = less quantization.
struct QualityFactor {
    int value;
    explicit QualityFactor(int v) : value(v) {
        if (v < 1 || v > 100)
            throw std::invalid_argument("QualityFactor: out of range 1..100");
    }
};

/// Annex-K baseline luminance quantization table.
const QuantMatrix& annex_k_luminance();

/// Orthonormal 2-D type-II DCT of an 8x8 block (w(0)=1/sqrt2, 1/4 scaling).
Block8x8 dct8x8(const Block8x8& block);

/// Inverse of dct8x8.
Block8x8 idct8x8(const Block8x8& coeffs);

/// IJG quality scaling of the Annex-K table:
/// s = qf < 50 ? 5000/qf : 200 - 2*qf; entry = clamp(floor((base*s + 50)/100), 1, 255).
QuantMatrix quality_to_matrix(QualityFactor qf);

/// Element-wise round(D/Q), halves away from zero.
Block8x8 quantize(const Block8x8& coeffs, const QuantMatrix& q);

/// Element-wise multiply by Q.
Block8x8 dequantize(const Block8x8& quantized, const QuantMatrix& q);

/// One lossy JPEG transform cycle per disjoint 8x8 block: shift, DCT, quantize,
/// dequantize, IDCT, unshift, clamp. No entropy coding; dimensions preserved
/// (edges padded by replication, cropped on output).
GrayImage recompress(const GrayImage& img, QualityFactor qf);

}  // namespace forgescan
