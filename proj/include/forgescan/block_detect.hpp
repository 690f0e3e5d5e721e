#pragma once

#include <vector>

#include "forgescan/image.hpp"

namespace forgescan {

/// Per-block corner feature R and its neighbor differences.
/// d_right(i,j) = |r(i,j) - r(i,j+1)|, d_bottom(i,j) = |r(i,j) - r(i+1,j)|.
struct BlockFeatureGrid {
    int bw = 0;  // blocks across = floor(width/8)
    int bh = 0;  // blocks down
    std::vector<double> r;         // bh x bw
    std::vector<double> d_right;   // bh x (bw-1)
    std::vector<double> d_bottom;  // (bh-1) x bw

    double rv(int i, int j) const { return r[static_cast<std::size_t>(i) * bw + j]; }
    double dr(int i, int j) const { return d_right[static_cast<std::size_t>(i) * (bw - 1) + j]; }
    double db(int i, int j) const { return d_bottom[static_cast<std::size_t>(i) * bw + j]; }
};

/// Per-block suspicion grid. true = suspicious ("white").
struct BlockMask {
    int bw = 0;
    int bh = 0;
    std::vector<std::uint8_t> marked;  // bh x bw, 0/1

    bool is_marked(int i, int j) const {
        return marked[static_cast<std::size_t>(i) * bw + j] != 0;
    }
    int count() const;
};

/// Corner feature per disjoint 8x8 block: with A..D the block's top-left 2x2
/// samples (row-major), R = |A - B - C - D|; trailing partial blocks ignored.
BlockFeatureGrid block_features(const GrayImage& img);

/// Mark block (i,j) iff d_right >= t or d_bottom >= t. Last column uses only
/// d_bottom, last row only d_right; the bottom-right block is never marked.
/// literal_rule switches to the "d_right >= t or d_bottom <= t" form.
BlockMask classify_blocks(const BlockFeatureGrid& grid, double t,
                          bool literal_rule = false);

struct SweepEntry {
    double threshold;
    BlockMask mask;
    int marked_count;
};

/// Classify one shared feature grid at each threshold.
std::vector<SweepEntry> threshold_sweep(const GrayImage& img,
                                        const std::vector<double>& ts);

/// Paint each marked block as a solid 8x8 patch at pixel resolution.
/// Output size pw x ph (the source image dims); pixels outside the block
/// grid stay clear.
FeatureMap render_block_mask(const BlockMask& mask, int pw, int ph);

}  // namespace forgescan
