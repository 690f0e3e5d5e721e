#include "forgescan/direction_detect.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <stdexcept>

namespace forgescan {
namespace {

constexpr double kTan225 = 0.41421356237309503;  // tan(22.5 deg)

// Replicate-padded copy, pad_x columns each side, pad_y rows.
std::vector<std::uint8_t> pad_replicate(const GrayImage& img, int pad_x,
                                        int pad_y, int& pw, int& ph) {
    pw = img.width + 2 * pad_x;
    ph = img.height + 2 * pad_y;
    std::vector<std::uint8_t> out(static_cast<std::size_t>(pw) * ph);
    for (int r = 0; r < ph; ++r) {
        const int sr = std::clamp(r - pad_y, 0, img.height - 1);
        for (int c = 0; c < pw; ++c) {
            const int sc = std::clamp(c - pad_x, 0, img.width - 1);
            out[static_cast<std::size_t>(r) * pw + c] = img.at(sr, sc);
        }
    }
    return out;
}

std::vector<double> gaussian_kernel(double sigma) {
    const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
    std::vector<double> k(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        k[i + radius] = std::exp(-(i * i) / (2.0 * sigma * sigma));
        sum += k[i + radius];
    }
    for (double& v : k) v /= sum;
    return k;
}

// Separable convolution with replicate borders.
EdgeImage gaussian_blur(const GrayImage& img, double sigma) {
    const std::vector<double> k = gaussian_kernel(sigma);
    const int radius = static_cast<int>(k.size() / 2);
    const int w = img.width, h = img.height;

    EdgeImage tmp(w, h);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            double s = 0.0;
            for (int i = -radius; i <= radius; ++i)
                s += k[i + radius] * img.at(r, std::clamp(c + i, 0, w - 1));
            tmp.at(r, c) = s;
        }
    EdgeImage out(w, h);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            double s = 0.0;
            for (int i = -radius; i <= radius; ++i)
                s += k[i + radius] * tmp.at(std::clamp(r + i, 0, h - 1), c);
            out.at(r, c) = s;
        }
    return out;
}

double percentile(std::vector<double> v, double q) {
    if (v.empty()) return 0.0;
    const std::size_t idx = static_cast<std::size_t>(
        q * static_cast<double>(v.size() - 1));
    std::nth_element(v.begin(), v.begin() + idx, v.end());
    return v[idx];
}

FeatureMap close5x5(const FeatureMap& in) {
    const int w = in.width, h = in.height, rad = 2;
    FeatureMap dil(w, h, 0);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            std::uint8_t v = 0;
            for (int dr = -rad; dr <= rad && !v; ++dr) {
                const int rr = r + dr;
                if (rr < 0 || rr >= h) continue;
                for (int dc = -rad; dc <= rad; ++dc) {
                    const int cc = c + dc;
                    if (cc < 0 || cc >= w) continue;
                    if (in.at(rr, cc)) { v = 1; break; }
                }
            }
            dil.at(r, c) = v;
        }
    // Erode; out-of-bounds neighborhood counts as set so closing stays extensive.
    FeatureMap out(w, h, 0);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            std::uint8_t v = 1;
            for (int dr = -rad; dr <= rad && v; ++dr) {
                const int rr = r + dr;
                if (rr < 0 || rr >= h) continue;
                for (int dc = -rad; dc <= rad; ++dc) {
                    const int cc = c + dc;
                    if (cc < 0 || cc >= w) continue;
                    if (!dil.at(rr, cc)) { v = 0; break; }
                }
            }
            out.at(r, c) = v;
        }
    return out;
}

}  // namespace

EdgeImage std_edge_image(const GrayImage& img, int win_w, int win_h) {
    if (win_w < 1 || win_h < 1 || win_w % 2 == 0 || win_h % 2 == 0)
        throw std::invalid_argument("std_edge_image: window dims must be odd positive");
    if (img.width < win_w || img.height < win_h)
        throw std::invalid_argument("std_edge_image: image smaller than window");

    const int rx = win_w / 2, ry = win_h / 2;
    int pw = 0, ph = 0;
    const std::vector<std::uint8_t> p = pad_replicate(img, rx, ry, pw, ph);

    // Integral images of v and v^2; 8-bit inputs keep these exact in u64.
    const int iw = pw + 1, ih = ph + 1;
    std::vector<std::uint64_t> s1(static_cast<std::size_t>(iw) * ih, 0);
    std::vector<std::uint64_t> s2(static_cast<std::size_t>(iw) * ih, 0);
    for (int r = 0; r < ph; ++r)
        for (int c = 0; c < pw; ++c) {
            const std::uint64_t v = p[static_cast<std::size_t>(r) * pw + c];
            const std::size_t i = static_cast<std::size_t>(r + 1) * iw + (c + 1);
            s1[i] = v + s1[i - 1] + s1[i - iw] - s1[i - iw - 1];
            s2[i] = v * v + s2[i - 1] + s2[i - iw] - s2[i - iw - 1];
        }

    const double n = static_cast<double>(win_w) * win_h;
    EdgeImage out(img.width, img.height);
    for (int r = 0; r < img.height; ++r)
        for (int c = 0; c < img.width; ++c) {
            // window in padded coords: rows r..r+win_h-1, cols c..c+win_w-1
            const std::size_t tl = static_cast<std::size_t>(r) * iw + c;
            const std::size_t tr = tl + win_w;
            const std::size_t bl = tl + static_cast<std::size_t>(win_h) * iw;
            const std::size_t br = bl + win_w;
            const double sum = static_cast<double>(s1[br] + s1[tl] - s1[tr] - s1[bl]);
            const double sq = static_cast<double>(s2[br] + s2[tl] - s2[tr] - s2[bl]);
            const double mu = sum / n;
            const double var = std::max(0.0, (sq - sum * mu) / (n - 1.0));
            out.at(r, c) = std::sqrt(var);
        }
    return out;
}

std::pair<EdgeImage, EdgeImage> directional_edges(const GrayImage& img,
                                                  const DirectionParams& p) {
    if (img.width < 16 || img.height < 16)
        throw std::invalid_argument("directional_edges: image smaller than 16x16");

    const int w = img.width, h = img.height;
    const EdgeImage smooth = gaussian_blur(img, p.gauss_sigma);

    // Sobel gradients, replicate border.
    EdgeImage gx(w, h), gy(w, h), mag(w, h);
    auto S = [&](int r, int c) {
        return smooth.at(std::clamp(r, 0, h - 1), std::clamp(c, 0, w - 1));
    };
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            const double x = (S(r - 1, c + 1) + 2 * S(r, c + 1) + S(r + 1, c + 1)) -
                             (S(r - 1, c - 1) + 2 * S(r, c - 1) + S(r + 1, c - 1));
            const double y = (S(r + 1, c - 1) + 2 * S(r + 1, c) + S(r + 1, c + 1)) -
                             (S(r - 1, c - 1) + 2 * S(r - 1, c) + S(r - 1, c + 1));
            gx.at(r, c) = x;
            gy.at(r, c) = y;
            mag.at(r, c) = std::hypot(x, y);
        }

    // Non-maximum suppression. Direction classes are decided by |gx| vs |gy|
    // ratios so that transposing the input transposes the result.
    FeatureMap keep(w, h, 0);
    auto M = [&](int r, int c) {
        return (r < 0 || r >= h || c < 0 || c >= w) ? 0.0 : mag.at(r, c);
    };
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            const double m = mag.at(r, c);
            if (m <= 0.0) continue;
            const double ax = std::abs(gx.at(r, c)), ay = std::abs(gy.at(r, c));
            double n1, n2;
            if (ay <= kTan225 * ax) {            // near-horizontal gradient
                n1 = M(r, c - 1); n2 = M(r, c + 1);
            } else if (ax <= kTan225 * ay) {     // near-vertical gradient
                n1 = M(r - 1, c); n2 = M(r + 1, c);
            } else if (gx.at(r, c) * gy.at(r, c) > 0.0) {
                n1 = M(r - 1, c - 1); n2 = M(r + 1, c + 1);
            } else {
                n1 = M(r - 1, c + 1); n2 = M(r + 1, c - 1);
            }
            // tiny relative slack keeps true plateau ties independent of the
            // floating-point summation order
            const double tol = 1e-9 * m;
            if (m >= n1 - tol && m >= n2 - tol) keep.at(r, c) = 1;
        }

    const double high = percentile(mag.data, p.high_percentile);
    const double low = p.low_ratio * high;

    // Hysteresis: grow from strong pixels through weak neighbors (8-conn).
    FeatureMap retained(w, h, 0);
    std::deque<std::pair<int, int>> stack;
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c)
            if (keep.at(r, c) && mag.at(r, c) > high) {
                retained.at(r, c) = 1;
                stack.emplace_back(r, c);
            }
    while (!stack.empty()) {
        auto [r, c] = stack.back();
        stack.pop_back();
        for (int dr = -1; dr <= 1; ++dr)
            for (int dc = -1; dc <= 1; ++dc) {
                const int rr = r + dr, cc = c + dc;
                if (rr < 0 || rr >= h || cc < 0 || cc >= w) continue;
                if (retained.at(rr, cc) || !keep.at(rr, cc)) continue;
                if (mag.at(rr, cc) >= low && mag.at(rr, cc) > 0.0) {
                    retained.at(rr, cc) = 1;
                    stack.emplace_back(rr, cc);
                }
            }
    }

    // Orientation split weighted by the windowed-std response.
    const EdgeImage sd = std_edge_image(img, p.win_w, p.win_h);
    EdgeImage h_edges(w, h), v_edges(w, h);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            if (!retained.at(r, c)) continue;
            const double v = mag.at(r, c) * sd.at(r, c);
            if (std::abs(gy.at(r, c)) > std::abs(gx.at(r, c)))
                h_edges.at(r, c) = v;  // vertical gradient = horizontal edge
            else
                v_edges.at(r, c) = v;
        }
    return {std::move(h_edges), std::move(v_edges)};
}

ProjectionProfile projections(const EdgeImage& edges) {
    if (edges.width <= 0 || edges.height <= 0)
        throw std::invalid_argument("projections: empty edge image");
    ProjectionProfile prof;
    prof.horizontal.assign(edges.height, 0.0);
    prof.vertical.assign(edges.width, 0.0);
    for (int r = 0; r < edges.height; ++r)
        for (int c = 0; c < edges.width; ++c) {
            prof.horizontal[r] += edges.at(r, c);
            prof.vertical[c] += edges.at(r, c);
        }
    double hs = 0.0, vs = 0.0;
    for (double v : prof.horizontal) hs += v;
    for (double v : prof.vertical) vs += v;
    prof.h_threshold = hs / edges.height;
    prof.v_threshold = vs / edges.width;
    return prof;
}

FeatureMap feature_map(const EdgeImage& h_edges, const EdgeImage& v_edges,
                       const ProjectionProfile& prof_h,
                       const ProjectionProfile& prof_v, bool closing) {
    if (h_edges.width != v_edges.width || h_edges.height != v_edges.height)
        throw std::invalid_argument("feature_map: dimension mismatch");
    if (static_cast<int>(prof_h.horizontal.size()) != h_edges.height ||
        static_cast<int>(prof_v.vertical.size()) != v_edges.width)
        throw std::invalid_argument("feature_map: profile dimension mismatch");

    FeatureMap out(h_edges.width, h_edges.height, 0);
    for (int r = 0; r < out.height; ++r) {
        const bool row_on = prof_h.horizontal[r] > prof_h.h_threshold;
        for (int c = 0; c < out.width; ++c) {
            const bool h_keep = row_on && h_edges.at(r, c) > 0.0;
            const bool v_keep =
                prof_v.vertical[c] > prof_v.v_threshold && v_edges.at(r, c) > 0.0;
            if (h_keep || v_keep) out.at(r, c) = 1;
        }
    }
    return closing ? close5x5(out) : out;
}

std::vector<Region> extract_regions(const FeatureMap& map, long min_area) {
    const int w = map.width, h = map.height;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(w) * h, 0);
    std::vector<Region> out;
    std::vector<std::pair<int, int>> stack;

    for (int r0 = 0; r0 < h; ++r0)
        for (int c0 = 0; c0 < w; ++c0) {
            const std::size_t i0 = static_cast<std::size_t>(r0) * w + c0;
            if (!map.data[i0] || seen[i0]) continue;
            int minr = r0, maxr = r0, minc = c0, maxc = c0;
            long area = 0;
            seen[i0] = 1;
            stack.emplace_back(r0, c0);
            while (!stack.empty()) {
                auto [r, c] = stack.back();
                stack.pop_back();
                ++area;
                minr = std::min(minr, r); maxr = std::max(maxr, r);
                minc = std::min(minc, c); maxc = std::max(maxc, c);
                for (int dr = -1; dr <= 1; ++dr)
                    for (int dc = -1; dc <= 1; ++dc) {
                        const int rr = r + dr, cc = c + dc;
                        if (rr < 0 || rr >= h || cc < 0 || cc >= w) continue;
                        const std::size_t i = static_cast<std::size_t>(rr) * w + cc;
                        if (map.data[i] && !seen[i]) {
                            seen[i] = 1;
                            stack.emplace_back(rr, cc);
                        }
                    }
            }
            if (area >= min_area)
                out.push_back(Region{minc, minr, maxc - minc + 1,
                                     maxr - minr + 1, area});
        }

    std::sort(out.begin(), out.end(), [](const Region& a, const Region& b) {
        if (a.area != b.area) return a.area > b.area;
        if (a.y != b.y) return a.y < b.y;
        return a.x < b.x;
    });
    return out;
}

std::pair<FeatureMap, std::vector<Region>> detect_direction(
    const RasterImage& img, const DirectionParams& p) {
    const GrayImage v = to_v_channel(img);
    auto [h_edges, v_edges] = directional_edges(v, p);
    const ProjectionProfile prof_h = projections(h_edges);
    const ProjectionProfile prof_v = projections(v_edges);
    FeatureMap map = feature_map(h_edges, v_edges, prof_h, prof_v, p.closing);
    std::vector<Region> regions = extract_regions(map, p.min_area);
    return {std::move(map), std::move(regions)};
}

}  // namespace forgescan
