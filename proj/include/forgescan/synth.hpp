#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forgescan/direction_detect.hpp"
#include "forgescan/image.hpp"

namespace forgescan {

/// A pasted forgery plus its pixel-exact ground truth.
struct PasteResult {
    RasterImage image;
    FeatureMap ground_truth;  // marks exactly the destination rect
};

/// Copy src_rect of host onto (dst_x, dst_y) in the same image. feather > 0
/// alpha-blends that many border pixels of the pasted rect (Photoshop-like);
/// feather 0 is a hard Paint-like edge. Ground truth marks the full rect.
PasteResult copy_move(const RasterImage& host, const Region& src_rect,
                      int dst_x, int dst_y, int feather = 0);

/// Same, but source pixels come from a donor image.
PasteResult copy_create(const RasterImage& donor, const RasterImage& host,
                        const Region& src_rect, int dst_x, int dst_y,
                        int feather = 0);

/// Seeded synthetic base image (soft-edged blobs on a flat canvas), the
/// self-contained substitute for a camera corpus.
GrayImage generate_base(int width, int height, std::uint64_t seed);

struct CorpusOptions {
    int min_size = 256;
    int max_size = 384;
    int qf_min = 50;
    int qf_max = 90;
    double misaligned_fraction = 0.75;
    double feathered_fraction = 0.5;
    int feather_radius = 2;
    int jobs = 1;
};

struct CorpusEntry {
    std::string id;
    std::string kind;  // copy-move | copy-create | authentic
    std::string image_path;  // relative to corpus dir
    std::string gt_path;     // empty for authentic
    int qf = 0;
    int offset_x = 0, offset_y = 0;  // dst - src
    bool aligned = false;
    bool feathered = false;
    int rect_x = 0, rect_y = 0, rect_w = 0, rect_h = 0;
};

/// Write n forged + n authentic images with ground truth and a JSONL manifest
/// (one record per image, 2n lines). Deterministic for fixed (n, seed, opts).
std::vector<CorpusEntry> build_corpus(int n, std::uint64_t seed,
                                      const CorpusOptions& opts,
                                      const std::string& out_dir);

/// Parse a manifest.jsonl previously written by build_corpus.
std::vector<CorpusEntry> load_manifest(const std::string& corpus_dir);

}  // namespace forgescan
