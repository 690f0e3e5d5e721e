// forgescan: passive photo-forgery detection (JPEG block inconsistencies and
// direction-filter localization), synthetic-forgery corpus generation, and
// precision/recall evaluation.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "forgescan/block_detect.hpp"
#include "forgescan/direction_detect.hpp"
#include "forgescan/eval.hpp"
#include "forgescan/image_io.hpp"
#include "forgescan/jpeg_sim.hpp"
#include "forgescan/parallel.hpp"
#include "forgescan/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace forgescan;

namespace {

void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
    }
    fs::rename(tmp, path);
}

void write_report(const std::string& path, const json& j) {
    write_atomic(path, j.dump(2) + "\n");
}

// Derive per-threshold mask paths for sweeps: mask.png -> mask_t65.png.
std::string sweep_mask_path(const std::string& base, double t) {
    const fs::path p(base);
    char suffix[32];
    std::snprintf(suffix, sizeof suffix, "_t%g", t);
    fs::path out = p.parent_path() / (p.stem().string() + suffix + p.extension().string());
    return out.string();
}

void draw_box(RasterImage& img, const Region& r, int stroke) {
    auto paint = [&](int row, int col) {
        if (row < 0 || row >= img.height || col < 0 || col >= img.width) return;
        if (img.channels == 3) {
            img.at(row, col, 0) = 255;
            img.at(row, col, 1) = 0;
            img.at(row, col, 2) = 0;
        } else {
            img.at(row, col, 0) = 255;
        }
    };
    for (int s = 0; s < stroke; ++s) {
        for (int x = r.x - s; x < r.x + r.w + s; ++x) {
            paint(r.y - s, x);
            paint(r.y + r.h - 1 + s, x);
        }
        for (int y = r.y - s; y < r.y + r.h + s; ++y) {
            paint(y, r.x - s);
            paint(y, r.x + r.w - 1 + s);
        }
    }
}

int run_block(const std::string& image, double threshold,
              const std::string& sweep_csv, const std::string& mask_out,
              const std::string& report_out, bool literal_rule) {
    const RasterImage img = load_image(image);
    const GrayImage luma = to_luma(img);
    const BlockFeatureGrid grid = block_features(luma);
    const BlockMask mask = classify_blocks(grid, threshold, literal_rule);

    json rep{{"schema_version", "1"},
             {"image", image},
             {"threshold", threshold},
             {"literal_rule", literal_rule},
             {"block_grid", {{"bw", mask.bw}, {"bh", mask.bh}}},
             {"marked_count", mask.count()}};

    if (!mask_out.empty()) {
        save_mask(render_block_mask(mask, img.width, img.height), mask_out);
        rep["mask"] = mask_out;
    }

    if (!sweep_csv.empty()) {
        std::vector<double> ts;
        std::stringstream ss(sweep_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) ts.push_back(std::stod(tok));
        json sweep = json::array();
        for (double t : ts) {
            const BlockMask m = classify_blocks(grid, t, literal_rule);
            json e{{"threshold", t}, {"marked_count", m.count()}};
            if (!mask_out.empty()) {
                const std::string p = sweep_mask_path(mask_out, t);
                save_mask(render_block_mask(m, img.width, img.height), p);
                e["mask"] = p;
            }
            sweep.push_back(e);
        }
        rep["sweep"] = sweep;
    }

    if (!report_out.empty()) write_report(report_out, rep);
    std::cout << "blocks " << mask.bw << "x" << mask.bh << ", marked "
              << mask.count() << " at t=" << threshold << "\n";
    return 0;
}

int run_direction(const std::string& image, const DirectionParams& params,
                  const std::string& mask_out, const std::string& overlay_out,
                  const std::string& report_out) {
    const RasterImage img = load_image(image);
    auto [map, regions] = detect_direction(img, params);

    long set_pixels = 0;
    for (std::uint8_t v : map.data) set_pixels += v;
    const double fill =
        static_cast<double>(set_pixels) / (static_cast<double>(map.width) * map.height);

    json rep{{"schema_version", "1"},
             {"image", image},
             {"fill_ratio", fill},
             {"params",
              {{"win_w", params.win_w},
               {"win_h", params.win_h},
               {"gauss_sigma", params.gauss_sigma},
               {"high_percentile", params.high_percentile},
               {"low_ratio", params.low_ratio},
               {"min_area", params.min_area},
               {"closing", params.closing}}}};
    json jr = json::array();
    for (const Region& r : regions)
        jr.push_back({{"x", r.x}, {"y", r.y}, {"w", r.w}, {"h", r.h}, {"area", r.area}});
    rep["regions"] = jr;

    if (!mask_out.empty()) {
        save_mask(map, mask_out);
        rep["mask"] = mask_out;
    }
    if (!overlay_out.empty()) {
        RasterImage overlay = img;
        if (overlay.channels == 1) {
            RasterImage rgb(overlay.width, overlay.height, 3);
            for (std::size_t i = 0; i < overlay.data.size(); ++i)
                rgb.data[3 * i] = rgb.data[3 * i + 1] = rgb.data[3 * i + 2] =
                    overlay.data[i];
            overlay = std::move(rgb);
        }
        for (const Region& r : regions) draw_box(overlay, r, 2);
        save_image_png(overlay, overlay_out);
        rep["overlay"] = overlay_out;
    }
    if (!report_out.empty()) write_report(report_out, rep);
    std::cout << regions.size() << " region(s), fill ratio " << fill << "\n";
    return 0;
}

json group_to_json(const GroupStats& g) {
    return json{{"label", g.label},
                {"n", g.n},
                {"tp", g.counts.tp},
                {"fp", g.counts.fp},
                {"fn", g.counts.fn},
                {"precision", g.micro.precision},
                {"recall", g.micro.recall},
                {"vacuous_precision", g.micro.vacuous_precision},
                {"vacuous_recall", g.micro.vacuous_recall},
                {"macro_precision", g.macro_precision},
                {"macro_recall", g.macro_recall}};
}

int run_eval(const std::string& corpus, const EvalParams& params,
             const std::string& report_out, const std::string& csv_out) {
    const EvalReport rep = evaluate_corpus(corpus, params);

    json rows = json::array();
    for (const EvalRow& r : rep.rows) {
        json row{{"id", r.id}, {"kind", r.kind}};
        if (!r.error.empty()) {
            row["error"] = r.error;
        } else {
            row["tp"] = r.counts.tp;
            row["fp"] = r.counts.fp;
            row["fn"] = r.counts.fn;
            row["precision"] = r.pr.precision;
            row["recall"] = r.pr.recall;
            if (r.kind != "authentic") {
                row["aligned"] = r.aligned;
                row["feathered"] = r.feathered;
            }
        }
        rows.push_back(row);
    }
    json groups = json::array();
    for (const GroupStats& g : rep.groups) groups.push_back(group_to_json(g));

    json out{{"schema_version", "1"},
             {"corpus", corpus},
             {"detector", params.detector == Detector::kBlock ? "block" : "direction"},
             {"averaging", "micro (summed counts); macro emitted per group"},
             {"params",
              {{"block_threshold", params.block_threshold},
               {"min_area", params.min_area},
               {"iou_min", params.iou_min}}},
             {"groups", groups},
             {"rows", rows}};
    if (!report_out.empty()) write_report(report_out, out);

    if (!csv_out.empty()) {
        std::string csv = "group,n,precision,recall\n";
        char line[128];
        for (const GroupStats& g : rep.groups) {
            std::snprintf(line, sizeof line, "%s,%d,%.1f,%.1f\n", g.label.c_str(),
                          g.n, g.micro.precision, g.micro.recall);
            csv += line;
        }
        write_atomic(csv_out, csv);
    }
    for (const GroupStats& g : rep.groups)
        std::cout << g.label << ": n=" << g.n << " P=" << g.micro.precision
                  << "% R=" << g.micro.recall << "%\n";
    return rep.had_errors ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forgescan: passive photo-image forgery detection"};
    app.require_subcommand(1);
    int jobs_flag = 0;
    app.add_option("--jobs", jobs_flag, "worker threads (default: env FORGESCAN_JOBS or core count)");

    // block
    auto* block = app.add_subcommand("block", "JPEG block-inconsistency detector");
    std::string b_image, b_sweep, b_mask, b_report;
    double b_threshold = 65.0;
    bool b_literal = false;
    block->add_option("--image", b_image, "input image")->required();
    block->add_option("--threshold", b_threshold, "difference threshold (default 65)");
    block->add_option("--sweep", b_sweep, "comma-separated threshold sweep, e.g. 55,65,75");
    block->add_option("--mask-out", b_mask, "suspicion mask PNG");
    block->add_option("--report", b_report, "JSON report path");
    block->add_flag("--literal-rule", b_literal,
                    "use the printed classification rule (d_bottom <= t)");

    // direction
    auto* dir = app.add_subcommand("direction", "direction-filter detector");
    std::string d_image, d_mask, d_overlay, d_report;
    DirectionParams d_params;
    bool d_no_closing = false;
    dir->add_option("--image", d_image, "input image")->required();
    dir->add_option("--min-area", d_params.min_area, "minimum region area in pixels (default 64)");
    dir->add_option("--win-w", d_params.win_w, "std window columns (default 7)");
    dir->add_option("--win-h", d_params.win_h, "std window rows (default 3)");
    dir->add_option("--sigma", d_params.gauss_sigma, "Gaussian smoothing sigma (default 1.4)");
    dir->add_option("--high-percentile", d_params.high_percentile,
                    "hysteresis high threshold quantile (default 0.9)");
    dir->add_option("--low-ratio", d_params.low_ratio, "hysteresis low/high ratio (default 0.4)");
    dir->add_flag("--no-closing", d_no_closing, "skip the 5x5 closing of the feature map");
    dir->add_option("--mask-out", d_mask, "feature map PNG");
    dir->add_option("--overlay-out", d_overlay, "input with red region boxes");
    dir->add_option("--report", d_report, "JSON report path");

    // synth
    auto* synth = app.add_subcommand("synth", "generate a seeded forgery corpus");
    int s_n = 100;
    std::uint64_t s_seed = 0;
    std::string s_out;
    CorpusOptions s_opts;
    synth->add_option("--n", s_n, "forgery count (plus as many authentic controls)");
    synth->add_option("--seed", s_seed, "corpus seed (default 0)");
    synth->add_option("--out", s_out, "output directory")->required();
    synth->add_option("--min-size", s_opts.min_size, "minimum image side (default 256)");
    synth->add_option("--max-size", s_opts.max_size, "maximum image side (default 384)");
    synth->add_option("--qf-min", s_opts.qf_min, "minimum host quality factor (default 50)");
    synth->add_option("--qf-max", s_opts.qf_max, "maximum host quality factor (default 90)");
    synth->add_option("--misaligned-fraction", s_opts.misaligned_fraction,
                      "fraction of grid-misaligned pastes (default 0.75)");
    synth->add_option("--feathered-fraction", s_opts.feathered_fraction,
                      "fraction of feathered (Photoshop-like) pastes (default 0.5)");
    synth->add_option("--feather", s_opts.feather_radius,
                      "feather radius in pixels (default 2)");

    // eval
    auto* eval = app.add_subcommand("eval", "score a detector against a corpus");
    std::string e_corpus, e_detector = "block", e_report, e_csv, e_params_file;
    EvalParams e_params;
    eval->add_option("--corpus", e_corpus, "corpus directory with manifest.jsonl")->required();
    eval->add_option("--detector", e_detector, "block | direction")
        ->check(CLI::IsMember({"block", "direction"}));
    eval->add_option("--threshold", e_params.block_threshold, "block threshold (default 65)");
    eval->add_option("--min-area", e_params.min_area, "minimum region area (default 64)");
    eval->add_option("--iou-min", e_params.iou_min, "IoU for a true positive (default 0.5)");
    eval->add_option("--params", e_params_file, "JSON file with detector parameter overrides");
    eval->add_option("--report", e_report, "JSON report path");
    eval->add_option("--csv", e_csv, "CSV summary path (group,n,precision,recall)");

    // recompress
    auto* rec = app.add_subcommand("recompress", "apply one lossy JPEG transform cycle");
    std::string r_image, r_out;
    int r_qf = 75;
    rec->add_option("--image", r_image, "input image")->required();
    rec->add_option("--qf", r_qf, "quality factor 1..100 (default 75)")
        ->check(CLI::Range(1, 100));
    rec->add_option("--out", r_out, "output PNG")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const int jobs = resolve_jobs(jobs_flag);
    try {
        if (block->parsed())
            return run_block(b_image, b_threshold, b_sweep, b_mask, b_report, b_literal);
        if (dir->parsed()) {
            d_params.closing = !d_no_closing;
            return run_direction(d_image, d_params, d_mask, d_overlay, d_report);
        }
        if (synth->parsed()) {
            s_opts.jobs = jobs;
            build_corpus(s_n, s_seed, s_opts, s_out);
            std::cout << "wrote " << 2 * s_n << " images to " << s_out << "\n";
            return 0;
        }
        if (eval->parsed()) {
            e_params.detector =
                e_detector == "block" ? Detector::kBlock : Detector::kDirection;
            e_params.jobs = jobs;
            if (!e_params_file.empty()) {
                std::ifstream in(e_params_file);
                if (!in) throw std::runtime_error("cannot read " + e_params_file);
                const json psj = json::parse(in);
                if (psj.contains("block_threshold"))
                    e_params.block_threshold = psj["block_threshold"];
                if (psj.contains("min_area")) e_params.min_area = psj["min_area"];
                if (psj.contains("iou_min")) e_params.iou_min = psj["iou_min"];
                if (psj.contains("win_w")) e_params.direction.win_w = psj["win_w"];
                if (psj.contains("win_h")) e_params.direction.win_h = psj["win_h"];
                if (psj.contains("gauss_sigma"))
                    e_params.direction.gauss_sigma = psj["gauss_sigma"];
                if (psj.contains("high_percentile"))
                    e_params.direction.high_percentile = psj["high_percentile"];
                if (psj.contains("low_ratio"))
                    e_params.direction.low_ratio = psj["low_ratio"];
                if (psj.contains("closing")) e_params.direction.closing = psj["closing"];
            }
            return run_eval(e_corpus, e_params, e_report, e_csv);
        }
        if (rec->parsed()) {
            const RasterImage img = load_image(r_image);
            const GrayImage out = recompress(to_luma(img), QualityFactor(r_qf));
            save_gray_png(out, r_out);
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "forgescan: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
