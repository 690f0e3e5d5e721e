#pragma once

#include <string>
#include <vector>

#include "forgescan/direction_detect.hpp"
#include "forgescan/synth.hpp"

namespace forgescan {

struct EvalCounts {
    long tp = 0;
    long fp = 0;
    long fn = 0;
};

struct PrecisionRecall {
    double precision = 0.0;  // percent
    double recall = 0.0;     // percent
    bool vacuous_precision = false;  // tp = fp = 0
    bool vacuous_recall = false;     // tp = fn = 0
};

/// Greedy one-to-one matching in descending bounding-box IoU order; a pair
/// with IoU >= iou_min is a TP, unmatched predictions are FPs, unmatched
/// ground-truth parts are FNs.
EvalCounts match_regions(const std::vector<Region>& pred,
                         const std::vector<Region>& gt, double iou_min = 0.5);

/// Bounding-box intersection over union.
double region_iou(const Region& a, const Region& b);

/// Eq.-style rates in percent. A zero denominator with zero TP counts as
/// vacuous perfection (100.0, flagged).
PrecisionRecall precision_recall(const EvalCounts& c);

enum class Detector { kBlock, kDirection };

struct EvalParams {
    Detector detector = Detector::kBlock;
    double block_threshold = 65.0;
    long min_area = 64;
    double iou_min = 0.5;
    DirectionParams direction;
    int jobs = 1;
};

struct EvalRow {
    std::string id;
    std::string kind;
    bool aligned = false;
    bool feathered = false;
    EvalCounts counts;
    PrecisionRecall pr;
    std::string error;  // nonempty when the image was excluded
};

struct GroupStats {
    std::string label;
    int n = 0;
    EvalCounts counts;           // summed
    PrecisionRecall micro;       // from summed counts (primary)
    double macro_precision = 0;  // mean of per-image rates (secondary)
    double macro_recall = 0;
};

struct EvalReport {
    std::vector<EvalRow> rows;
    std::vector<GroupStats> groups;
    bool had_errors = false;
};

/// Run a detector over every manifest entry and tally Table-1-style groups
/// (micro-averaged; macro emitted alongside).
EvalReport evaluate_corpus(const std::string& corpus_dir, const EvalParams& p);

/// Detect regions in one image with the given parameters. Block masks are
/// rendered to pixel resolution before component extraction.
std::vector<Region> detect_regions(const RasterImage& img, const EvalParams& p);

}  // namespace forgescan
