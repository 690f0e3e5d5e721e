#include "forgescan/eval.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <tuple>

#include "forgescan/block_detect.hpp"
#include "forgescan/image_io.hpp"
#include "forgescan/parallel.hpp"

namespace fs = std::filesystem;

namespace forgescan {

double region_iou(const Region& a, const Region& b) {
    const int x1 = std::max(a.x, b.x);
    const int y1 = std::max(a.y, b.y);
    const int x2 = std::min(a.x + a.w, b.x + b.w);
    const int y2 = std::min(a.y + a.h, b.y + b.h);
    if (x2 <= x1 || y2 <= y1) return 0.0;
    const double inter = static_cast<double>(x2 - x1) * (y2 - y1);
    const double uni =
        static_cast<double>(a.w) * a.h + static_cast<double>(b.w) * b.h - inter;
    return inter / uni;
}

EvalCounts match_regions(const std::vector<Region>& pred,
                         const std::vector<Region>& gt, double iou_min) {
    if (iou_min <= 0.0 || iou_min > 1.0)
        throw std::invalid_argument("match_regions: iou_min outside (0,1]");

    struct Cand { double iou; std::size_t pi, gi; };
    std::vector<Cand> cands;
    for (std::size_t pi = 0; pi < pred.size(); ++pi)
        for (std::size_t gi = 0; gi < gt.size(); ++gi) {
            const double iou = region_iou(pred[pi], gt[gi]);
            if (iou >= iou_min) cands.push_back({iou, pi, gi});
        }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.iou != b.iou) return a.iou > b.iou;
        return std::tie(a.pi, a.gi) < std::tie(b.pi, b.gi);
    });

    std::vector<bool> pused(pred.size(), false), gused(gt.size(), false);
    EvalCounts c;
    for (const Cand& cand : cands) {
        if (pused[cand.pi] || gused[cand.gi]) continue;
        pused[cand.pi] = gused[cand.gi] = true;
        ++c.tp;
    }
    c.fp = static_cast<long>(pred.size()) - c.tp;
    c.fn = static_cast<long>(gt.size()) - c.tp;
    return c;
}

PrecisionRecall precision_recall(const EvalCounts& c) {
    PrecisionRecall pr;
    if (c.tp + c.fp == 0) {
        pr.precision = 100.0;
        pr.vacuous_precision = true;
    } else {
        pr.precision = 100.0 * static_cast<double>(c.tp) / (c.tp + c.fp);
    }
    if (c.tp + c.fn == 0) {
        pr.recall = 100.0;
        pr.vacuous_recall = true;
    } else {
        pr.recall = 100.0 * static_cast<double>(c.tp) / (c.tp + c.fn);
    }
    return pr;
}

std::vector<Region> detect_regions(const RasterImage& img, const EvalParams& p) {
    if (p.detector == Detector::kBlock) {
        const GrayImage luma = to_luma(img);
        const BlockMask mask =
            classify_blocks(block_features(luma), p.block_threshold);
        const FeatureMap pixels = render_block_mask(mask, img.width, img.height);
        return extract_regions(pixels, p.min_area);
    }
    DirectionParams dp = p.direction;
    dp.min_area = static_cast<int>(p.min_area);
    return detect_direction(img, dp).second;
}

namespace {

GroupStats finish_group(const std::string& label,
                        const std::vector<const EvalRow*>& rows) {
    GroupStats g;
    g.label = label;
    g.n = static_cast<int>(rows.size());
    double mp = 0.0, mr = 0.0;
    for (const EvalRow* r : rows) {
        g.counts.tp += r->counts.tp;
        g.counts.fp += r->counts.fp;
        g.counts.fn += r->counts.fn;
        mp += r->pr.precision;
        mr += r->pr.recall;
    }
    g.micro = precision_recall(g.counts);
    if (g.n > 0) {
        g.macro_precision = mp / g.n;
        g.macro_recall = mr / g.n;
    }
    return g;
}

}  // namespace

EvalReport evaluate_corpus(const std::string& corpus_dir, const EvalParams& p) {
    const std::vector<CorpusEntry> entries = load_manifest(corpus_dir);
    EvalReport report;
    report.rows.resize(entries.size());

    parallel_for(static_cast<int>(entries.size()), p.jobs, [&](int i) {
        const CorpusEntry& e = entries[i];
        EvalRow& row = report.rows[i];
        row.id = e.id;
        row.kind = e.kind;
        row.aligned = e.aligned;
        row.feathered = e.feathered;
        try {
            const RasterImage img =
                load_image((fs::path(corpus_dir) / e.image_path).string());
            const std::vector<Region> pred = detect_regions(img, p);
            std::vector<Region> gt;
            if (e.kind != "authentic") {
                const FeatureMap gt_mask =
                    load_mask((fs::path(corpus_dir) / e.gt_path).string());
                gt = extract_regions(gt_mask, 1);
            }
            row.counts = match_regions(pred, gt, p.iou_min);
            row.pr = precision_recall(row.counts);
        } catch (const std::exception& ex) {
            row.error = ex.what();
        }
    });

    std::map<std::string, std::vector<const EvalRow*>> groups;
    for (const EvalRow& row : report.rows) {
        if (!row.error.empty()) {
            report.had_errors = true;
            continue;
        }
        groups["total"].push_back(&row);
        if (row.kind == "authentic") {
            groups["authentic"].push_back(&row);
            continue;
        }
        groups["all-forged"].push_back(&row);
        groups[row.feathered ? "feathered" : "hard-edge"].push_back(&row);
        groups[row.aligned ? "aligned" : "misaligned"].push_back(&row);
    }
    // Fixed emission order, Table-1 style: forged splits, controls, total.
    for (const char* label :
         {"all-forged", "hard-edge", "feathered", "aligned", "misaligned",
          "authentic", "total"}) {
        auto it = groups.find(label);
        if (it != groups.end())
            report.groups.push_back(finish_group(label, it->second));
    }
    return report;
}

}  // namespace forgescan
