#include "forgescan/block_detect.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace forgescan {

int BlockMask::count() const {
    return static_cast<int>(
        std::count(marked.begin(), marked.end(), std::uint8_t{1}));
}

BlockFeatureGrid block_features(const GrayImage& img) {
    if (img.width < 16 || img.height < 16)
        throw std::invalid_argument("block_features: image smaller than 16x16");

    BlockFeatureGrid g;
    g.bw = img.width / 8;
    g.bh = img.height / 8;
    g.r.resize(static_cast<std::size_t>(g.bw) * g.bh);
    for (int i = 0; i < g.bh; ++i)
        for (int j = 0; j < g.bw; ++j) {
            const long a = img.at(8 * i, 8 * j);
            const long b = img.at(8 * i, 8 * j + 1);
            const long c = img.at(8 * i + 1, 8 * j);
            const long d = img.at(8 * i + 1, 8 * j + 1);
            g.r[static_cast<std::size_t>(i) * g.bw + j] =
                static_cast<double>(std::labs(a - b - c - d));
        }

    g.d_right.resize(static_cast<std::size_t>(g.bw - 1) * g.bh);
    for (int i = 0; i < g.bh; ++i)
        for (int j = 0; j + 1 < g.bw; ++j)
            g.d_right[static_cast<std::size_t>(i) * (g.bw - 1) + j] =
                std::abs(g.rv(i, j) - g.rv(i, j + 1));

    g.d_bottom.resize(static_cast<std::size_t>(g.bw) * (g.bh - 1));
    for (int i = 0; i + 1 < g.bh; ++i)
        for (int j = 0; j < g.bw; ++j)
            g.d_bottom[static_cast<std::size_t>(i) * g.bw + j] =
                std::abs(g.rv(i, j) - g.rv(i + 1, j));
    return g;
}

BlockMask classify_blocks(const BlockFeatureGrid& grid, double t,
                          bool literal_rule) {
    if (t < 0.0)
        throw std::invalid_argument("classify_blocks: negative threshold");

    BlockMask m;
    m.bw = grid.bw;
    m.bh = grid.bh;
    m.marked.assign(static_cast<std::size_t>(m.bw) * m.bh, 0);
    for (int i = 0; i < m.bh; ++i)
        for (int j = 0; j < m.bw; ++j) {
            const bool has_right = j + 1 < m.bw;
            const bool has_bottom = i + 1 < m.bh;
            bool hit = false;
            if (literal_rule) {
                // the printed Fig 3.2 step 3 condition, kept for comparison
                if (has_right && grid.dr(i, j) >= t) hit = true;
                if (has_bottom && grid.db(i, j) <= t) hit = true;
            } else {
                if (has_right && grid.dr(i, j) >= t) hit = true;
                if (has_bottom && grid.db(i, j) >= t) hit = true;
            }
            if (hit)
                m.marked[static_cast<std::size_t>(i) * m.bw + j] = 1;
        }
    return m;
}

std::vector<SweepEntry> threshold_sweep(const GrayImage& img,
                                        const std::vector<double>& ts) {
    if (ts.empty())
        throw std::invalid_argument("threshold_sweep: empty threshold list");
    const BlockFeatureGrid grid = block_features(img);
    std::vector<SweepEntry> out;
    out.reserve(ts.size());
    for (double t : ts) {
        BlockMask m = classify_blocks(grid, t);
        const int n = m.count();
        out.push_back(SweepEntry{t, std::move(m), n});
    }
    return out;
}

FeatureMap render_block_mask(const BlockMask& mask, int pw, int ph) {
    FeatureMap out(pw, ph, 0);
    for (int i = 0; i < mask.bh; ++i)
        for (int j = 0; j < mask.bw; ++j) {
            if (!mask.is_marked(i, j)) continue;
            for (int y = 8 * i; y < std::min(8 * i + 8, ph); ++y)
                for (int x = 8 * j; x < std::min(8 * j + 8, pw); ++x)
                    out.at(y, x) = 1;
        }
    return out;
}

}  // namespace forgescan
