#pragma once

#include <utility>
#include <vector>

#include "forgescan/image.hpp"

namespace forgescan {

/// Per-pixel non-negative edge response (local std or weighted gradient).
struct EdgeImage {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    EdgeImage() = default;
    EdgeImage(int w, int h, double fill = 0.0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    double& at(int row, int col) {
        return data[static_cast<std::size_t>(row) * width + col];
    }
    double at(int row, int col) const {
        return data[static_cast<std::size_t>(row) * width + col];
    }
};

/// Connected component of a FeatureMap with its bounding box.
struct Region {
    int x = 0;  // bounding-box top-left column
    int y = 0;  // bounding-box top-left row
    int w = 0;
    int h = 0;
    long area = 0;  // set pixels inside the component
};

/// Row/column sums of an edge image; thresholds are the vector means.
struct ProjectionProfile {
    std::vector<double> horizontal;  // per-row sums, length = height
    std::vector<double> vertical;    // per-column sums, length = width
    double h_threshold = 0.0;
    double v_threshold = 0.0;
};

struct DirectionParams {
    int win_w = 7;  // std window columns
    int win_h = 3;  // std window rows
    double gauss_sigma = 1.4;
    double high_percentile = 0.90;  // hysteresis high = this magnitude quantile
    double low_ratio = 0.4;         // low = low_ratio * high
    int min_area = 64;
    bool closing = true;  // 5x5 morphological closing of the feature map
};

/// Sample standard deviation over a win_h x win_w window centered per pixel,
/// replicate-padded. Window sums are exact (integer accumulation).
EdgeImage std_edge_image(const GrayImage& img, int win_w = 7, int win_h = 3);

/// Canny-style edge extraction split by gradient orientation. Retained pixels
/// with a dominant vertical gradient land in the first (horizontal-edge)
/// image, the rest in the second; both are weighted by the local std response.
std::pair<EdgeImage, EdgeImage> directional_edges(const GrayImage& img,
                                                  const DirectionParams& p = {});

/// Row and column projections with mean thresholds.
ProjectionProfile projections(const EdgeImage& edges);

/// Keep h_edges pixels on rows whose projection exceeds the row mean and
/// v_edges pixels on columns exceeding the column mean; OR the survivors,
/// then optionally close with a 5x5 square element.
FeatureMap feature_map(const EdgeImage& h_edges, const EdgeImage& v_edges,
                       const ProjectionProfile& prof_h,
                       const ProjectionProfile& prof_v, bool closing = true);

/// 8-connected components of set pixels, area >= min_area, sorted by area
/// descending, ties by (y, x).
std::vector<Region> extract_regions(const FeatureMap& map, long min_area = 64);

/// Full pipeline: v-channel -> std edges + directional edges -> projections
/// -> feature map -> regions.
std::pair<FeatureMap, std::vector<Region>> detect_direction(
    const RasterImage& img, const DirectionParams& p = {});

}  // namespace forgescan
