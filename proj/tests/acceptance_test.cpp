// Acceptance gate: one self-contained check per shipped guarantee, each
// printing a single "criterion N (...): PASS|FAIL" line. The process exits
// with the number of failed criteria. argv[1] must point at the forgescan
// CLI binary (used by the determinism criterion).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "forgescan/block_detect.hpp"
#include "forgescan/direction_detect.hpp"
#include "forgescan/eval.hpp"
#include "forgescan/image_io.hpp"
#include "forgescan/jpeg_sim.hpp"
#include "forgescan/synth.hpp"

using namespace forgescan;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int n, const std::string& label, bool ok, const std::string& detail) {
    std::printf("criterion %d (%s): %s%s%s\n", n, label.c_str(),
                ok ? "PASS" : "FAIL", detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

RasterImage gray_to_rgb(const GrayImage& g) {
    RasterImage out(g.width, g.height, 3);
    for (int y = 0; y < g.height; ++y)
        for (int x = 0; x < g.width; ++x)
            for (int c = 0; c < 3; ++c) out.at(y, x, c) = g.at(y, x);
    return out;
}

GrayImage random_gray(std::mt19937_64& rng, int w, int h) {
    GrayImage img(w, h);
    for (auto& p : img.data) p = static_cast<std::uint8_t>(rng() % 256);
    return img;
}

// ---------------------------------------------------------------- criterion 1

void criterion1() {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> dist(0.0, 255.0);
    double worst_rt = 0.0, worst_energy = 0.0;
    const auto t0 = Clock::now();
    for (int trial = 0; trial < 1000; ++trial) {
        Block8x8 b{};
        double energy_in = 0.0;
        for (double& v : b) {
            v = dist(rng);
            energy_in += v * v;
        }
        const Block8x8 c = dct8x8(b);
        double energy_out = 0.0;
        for (double v : c) energy_out += v * v;
        const Block8x8 back = idct8x8(c);
        for (int i = 0; i < 64; ++i)
            worst_rt = std::max(worst_rt, std::abs(back[i] - b[i]));
        worst_energy = std::max(
            worst_energy, std::abs(energy_out - energy_in) / energy_in);
    }
    const double elapsed = ms_since(t0);
    const bool ok = worst_rt < 1e-6 && worst_energy < 1e-6 && elapsed < 1000.0;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "max roundtrip err %.2e, max relative energy err %.2e, %.0f ms",
                  worst_rt, worst_energy, elapsed);
    report(1, "dct roundtrip and energy preservation", ok, detail);
}

// ---------------------------------------------------------------- criterion 2

void criterion2() {
    bool ok = quality_to_matrix(QualityFactor(50)) == annex_k_luminance();
    const QuantMatrix q100 = quality_to_matrix(QualityFactor(100));
    for (int v : q100) ok = ok && v == 1;
    std::vector<QuantMatrix> all;
    all.reserve(100);
    for (int qf = 1; qf <= 100; ++qf)
        all.push_back(quality_to_matrix(QualityFactor(qf)));
    for (int a = 0; a < 100 && ok; ++a)
        for (int b = a + 1; b < 100 && ok; ++b)
            for (int i = 0; i < 64; ++i)
                if (all[a][i] < all[b][i]) {
                    ok = false;
                    break;
                }
    report(2, "quality scaling of the quantization table", ok, "");
}

// ---------------------------------------------------------------- criterion 3

void criterion3() {
    std::mt19937_64 rng(303);
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        const int w = 16 + static_cast<int>(rng() % 497);  // up to 512
        const int h = 16 + static_cast<int>(rng() % 497);
        const GrayImage img = random_gray(rng, w, h);
        const BlockFeatureGrid grid = block_features(img);
        const int bw = w / 8, bh = h / 8;
        ok = ok && grid.bw == bw && grid.bh == bh;
        // independent naive double-loop reference
        std::vector<double> r(static_cast<std::size_t>(bw) * bh);
        for (int i = 0; i < bh; ++i)
            for (int j = 0; j < bw; ++j) {
                const double a = img.at(8 * i, 8 * j);
                const double b = img.at(8 * i, 8 * j + 1);
                const double c = img.at(8 * i + 1, 8 * j);
                const double d = img.at(8 * i + 1, 8 * j + 1);
                r[static_cast<std::size_t>(i) * bw + j] = std::abs(a - b - c - d);
            }
        for (int i = 0; i < bh && ok; ++i)
            for (int j = 0; j < bw; ++j)
                if (grid.rv(i, j) != r[static_cast<std::size_t>(i) * bw + j]) {
                    ok = false;
                    break;
                }
        const double t = 55.0 + 10.0 * static_cast<double>(rng() % 3);
        const BlockMask mask = classify_blocks(grid, t);
        auto rr = [&](int i, int j) { return r[static_cast<std::size_t>(i) * bw + j]; };
        for (int i = 0; i < bh && ok; ++i)
            for (int j = 0; j < bw; ++j) {
                const bool right = j + 1 < bw && std::abs(rr(i, j) - rr(i, j + 1)) >= t;
                const bool bottom = i + 1 < bh && std::abs(rr(i, j) - rr(i + 1, j)) >= t;
                if (mask.is_marked(i, j) != (right || bottom)) {
                    ok = false;
                    break;
                }
            }
    }
    report(3, "block detector equals the naive reference", ok, "");
}

// ------------------------------------------------------------ criteria 4/5/6

struct CorpusFixture {
    fs::path dir;
    std::vector<CorpusEntry> entries;
};

CorpusFixture build_default_corpus() {
    CorpusFixture f;
    f.dir = fs::temp_directory_path() / "forgescan_acceptance" / "corpus";
    fs::remove_all(f.dir);
    fs::create_directories(f.dir);
    CorpusOptions opts;  // library defaults: 256..384 px, qf 50..90
    opts.jobs = std::max(1u, std::thread::hardware_concurrency());
    f.entries = build_corpus(100, 0, opts, f.dir.string());
    return f;
}

void criterion4(const CorpusFixture& f) {
    int violations = 0;
    const auto t0 = Clock::now();
    for (const CorpusEntry& e : f.entries) {
        const GrayImage g = to_luma(load_image((f.dir / e.image_path).string()));
        const auto sweep = threshold_sweep(g, {55.0, 65.0, 75.0});
        if (!(sweep[2].marked_count <= sweep[1].marked_count &&
              sweep[1].marked_count <= sweep[0].marked_count))
            ++violations;
    }
    const double elapsed = ms_since(t0);
    char detail[120];
    std::snprintf(detail, sizeof detail, "%d violations over %zu images, %.0f ms",
                  violations, f.entries.size(), elapsed);
    report(4, "marked count monotone in threshold", violations == 0 && elapsed < 10000.0,
           detail);
}

// marked-block density ratio inside/outside the pasted rect at t = 65
double density_ratio(const BlockMask& m, const CorpusEntry& e) {
    const int bx0 = e.rect_x / 8, by0 = e.rect_y / 8;
    const int bx1 = (e.rect_x + e.rect_w - 1) / 8;
    const int by1 = (e.rect_y + e.rect_h - 1) / 8;
    long in = 0, out = 0;
    for (int i = 0; i < m.bh; ++i)
        for (int j = 0; j < m.bw; ++j)
            ((j >= bx0 && j <= bx1 && i >= by0 && i <= by1) ? in : out) +=
                m.is_marked(i, j);
    const long it = static_cast<long>(bx1 - bx0 + 1) * (by1 - by0 + 1);
    const long ot = static_cast<long>(m.bw) * m.bh - it;
    const double di = static_cast<double>(in) / it;
    const double dn = static_cast<double>(out) / ot;
    if (di == 0.0 && dn == 0.0) return 1.0;  // featureless either side
    if (dn == 0.0) return 9e9;               // all signal inside
    return di / dn;
}

void criterion5(const CorpusFixture& f) {
    int mis_ok = 0, mis_n = 0, ali_ok = 0, ali_n = 0;
    for (const CorpusEntry& e : f.entries) {
        if (e.kind == "authentic" || e.feathered) continue;  // hard-edge forgeries
        const GrayImage g = to_luma(load_image((f.dir / e.image_path).string()));
        const double r = density_ratio(classify_blocks(block_features(g), 65.0), e);
        if (!e.aligned) {
            ++mis_n;
            mis_ok += r >= 2.0;
        } else {
            ++ali_n;
            ali_ok += r < 1.5;
        }
    }
    const bool ok = mis_ok * 10 >= mis_n * 8 && ali_ok * 10 >= ali_n * 8;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "misaligned ratio>=2 on %d/%d, aligned ratio<1.5 on %d/%d",
                  mis_ok, mis_n, ali_ok, ali_n);
    report(5, "grid-misalignment fingerprint separates pastes", ok, detail);
}

void criterion6(const CorpusFixture& f) {
    int hit = 0, n = 0;
    for (const CorpusEntry& e : f.entries) {
        if (e.kind == "authentic" || e.feathered) continue;
        const RasterImage img = load_image((f.dir / e.image_path).string());
        const auto [map, regions] = detect_direction(img);
        ++n;
        if (regions.empty()) continue;
        const Region gt{e.rect_x, e.rect_y, e.rect_w, e.rect_h, 0};
        hit += region_iou(regions[0], gt) >= 0.3;
    }
    bool dims_ok = true;
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 20; ++trial) {
        const int w = 48 + static_cast<int>(rng() % 200);
        const int h = 48 + static_cast<int>(rng() % 200);
        const GrayImage g = generate_base(w, h, rng());
        const auto [map, regions] = detect_direction(gray_to_rgb(g));
        dims_ok = dims_ok && map.width == w && map.height == h;
    }
    const bool ok = hit * 10 >= n * 6 && dims_ok;
    char detail[120];
    std::snprintf(detail, sizeof detail, "largest region IoU>=0.3 on %d/%d, dims %s",
                  hit, n, dims_ok ? "exact" : "WRONG");
    report(6, "direction detector localizes hard-edge pastes", ok, detail);
}

// ---------------------------------------------------------------- criterion 7

void criterion7() {
    std::mt19937_64 rng(707);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const int w = 9 + static_cast<int>(rng() % 120);
        const int h = 9 + static_cast<int>(rng() % 120);
        const GrayImage img = random_gray(rng, w, h);
        const EdgeImage fast = std_edge_image(img);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                // brute-force 3x7 replicate-padded sample std, N-1 divisor
                std::vector<double> win;
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -3; dx <= 3; ++dx) {
                        const int yy = std::clamp(y + dy, 0, h - 1);
                        const int xx = std::clamp(x + dx, 0, w - 1);
                        win.push_back(img.at(yy, xx));
                    }
                double mean = 0.0;
                for (double v : win) mean += v;
                mean /= static_cast<double>(win.size());
                double ss = 0.0;
                for (double v : win) ss += (v - mean) * (v - mean);
                const double ref = std::sqrt(ss / (static_cast<double>(win.size()) - 1.0));
                worst = std::max(worst, std::abs(fast.at(y, x) - ref));
            }
    }
    bool const_zero = true;
    const GrayImage flat(33, 21, 173);
    const EdgeImage fe = std_edge_image(flat);
    for (double v : fe.data) const_zero = const_zero && v == 0.0;
    char detail[80];
    std::snprintf(detail, sizeof detail, "max deviation %.2e", worst);
    report(7, "windowed std matches brute force", worst < 1e-9 && const_zero, detail);
}

// ---------------------------------------------------------------- criterion 8

long best_matching(const std::vector<Region>& pred, const std::vector<Region>& gt,
                   double iou_min) {
    long best = 0;
    std::vector<bool> used(gt.size(), false);
    std::function<void(std::size_t, long)> rec = [&](std::size_t pi, long matched) {
        if (pi == pred.size()) {
            best = std::max(best, matched);
            return;
        }
        rec(pi + 1, matched);
        for (std::size_t gi = 0; gi < gt.size(); ++gi) {
            if (used[gi] || region_iou(pred[pi], gt[gi]) < iou_min) continue;
            used[gi] = true;
            rec(pi + 1, matched + 1);
            used[gi] = false;
        }
    };
    rec(0, 0);
    return best;
}

void criterion8() {
    struct Fixture {
        long tp, fp, fn;
        double precision, recall;
        bool vac_p, vac_r;
    };
    // hand-computed percentages for fixed count triples
    const Fixture fixtures[20] = {
        {0, 0, 0, 100.0, 100.0, true, true},
        {0, 0, 5, 100.0, 0.0, true, false},
        {0, 5, 0, 0.0, 100.0, false, true},
        {1, 0, 0, 100.0, 100.0, false, false},
        {1, 1, 0, 50.0, 100.0, false, false},
        {1, 0, 1, 100.0, 50.0, false, false},
        {1, 1, 1, 50.0, 50.0, false, false},
        {3, 1, 0, 75.0, 100.0, false, false},
        {3, 0, 1, 100.0, 75.0, false, false},
        {2, 3, 0, 40.0, 100.0, false, false},
        {2, 0, 3, 100.0, 40.0, false, false},
        {2, 2, 2, 50.0, 50.0, false, false},
        {4, 1, 1, 80.0, 80.0, false, false},
        {9, 1, 3, 90.0, 75.0, false, false},
        {1, 3, 3, 25.0, 25.0, false, false},
        {5, 5, 15, 50.0, 25.0, false, false},
        {7, 1, 7, 87.5, 50.0, false, false},
        {10, 30, 10, 25.0, 50.0, false, false},
        {24, 8, 6, 75.0, 80.0, false, false},
        {33, 11, 66, 75.0, 100.0 / 3.0, false, false},
    };
    bool ok = true;
    for (const Fixture& fx : fixtures) {
        const PrecisionRecall pr = precision_recall({fx.tp, fx.fp, fx.fn});
        ok = ok && pr.precision == fx.precision && pr.recall == fx.recall &&
             pr.vacuous_precision == fx.vac_p && pr.vacuous_recall == fx.vac_r;
    }
    std::mt19937_64 rng(808);
    auto random_region = [&rng]() {
        return Region{static_cast<int>(rng() % 48), static_cast<int>(rng() % 48),
                      4 + static_cast<int>(rng() % 24),
                      4 + static_cast<int>(rng() % 24), 0};
    };
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        std::vector<Region> pred(rng() % 7), gt(rng() % 7);
        for (Region& r : pred) r = random_region();
        for (Region& r : gt) r = random_region();
        const EvalCounts c = match_regions(pred, gt, 0.5);
        ok = ok && c.tp == best_matching(pred, gt, 0.5) &&
             c.fp == static_cast<long>(pred.size()) - c.tp &&
             c.fn == static_cast<long>(gt.size()) - c.tp;
    }
    report(8, "precision/recall and matching vs exhaustive oracle", ok, "");
}

// ---------------------------------------------------------------- criterion 9

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void criterion9(const std::string& cli) {
    const fs::path base = fs::temp_directory_path() / "forgescan_acceptance" / "cli";
    fs::remove_all(base);
    fs::create_directories(base);
    bool ok = true;
    std::string why;
    auto run = [&](int jobs, const std::string& args) {
        const std::string cmd = cli + " --jobs " + std::to_string(jobs) + " " +
                                args + " > /dev/null 2>&1";
        const int rc = std::system(cmd.c_str());
        if (rc != 0 && ok) {
            ok = false;
            why = "exit " + std::to_string(rc) + ": " + args;
        }
    };
    auto snapshot = [](const fs::path& dir) {
        std::vector<std::pair<fs::path, std::string>> snap;
        for (const auto& ent : fs::recursive_directory_iterator(dir))
            if (ent.is_regular_file())
                snap.emplace_back(fs::relative(ent.path(), dir), read_file(ent.path()));
        std::sort(snap.begin(), snap.end());
        return snap;
    };
    // identical argv at --jobs 1 and --jobs 8 must give byte-identical files
    const fs::path corpus = base / "corpus", out = base / "out";
    const std::string synth_args = "synth --n 4 --seed 5 --out " + corpus.string();
    run(1, synth_args);
    const auto corpus_snap = snapshot(corpus);
    fs::remove_all(corpus);
    run(8, synth_args);
    if (ok && snapshot(corpus) != corpus_snap) {
        ok = false;
        why = "synth outputs differ across --jobs";
    }
    const std::string img = (corpus / "forged_0000.png").string();
    const std::vector<std::string> cmds = {
        "block --image " + img + " --sweep 55,65,75 --mask-out " +
            (out / "block.png").string() + " --report " + (out / "block.json").string(),
        "direction --image " + img + " --mask-out " + (out / "dir.png").string() +
            " --overlay-out " + (out / "overlay.png").string() + " --report " +
            (out / "dir.json").string(),
        "recompress --image " + img + " --qf 70 --out " + (out / "rec.png").string(),
        "eval --corpus " + corpus.string() + " --detector block --report " +
            (out / "eval.json").string() + " --csv " + (out / "eval.csv").string()};
    fs::create_directories(out);
    for (const std::string& c : cmds) run(1, c);
    const auto out_snap = snapshot(out);
    fs::remove_all(out);
    fs::create_directories(out);
    for (const std::string& c : cmds) run(8, c);
    if (ok && snapshot(out) != out_snap) {
        ok = false;
        why = "subcommand outputs differ across --jobs";
    }
    report(9, "byte-identical outputs at --jobs 1 and --jobs 8", ok, why);
}

// --------------------------------------------------------------- criterion 10

void criterion10() {
    const GrayImage big = generate_base(1024, 1024, 7);
    // warm cache once, then time
    (void)classify_blocks(block_features(big), 65.0).count();
    auto t0 = Clock::now();
    const BlockMask m = classify_blocks(block_features(big), 65.0);
    const double block_ms = ms_since(t0);
    const RasterImage rgb = gray_to_rgb(big);
    t0 = Clock::now();
    const auto [map, regions] = detect_direction(rgb);
    const double dir_ms = ms_since(t0);
    char detail[120];
    std::snprintf(detail, sizeof detail,
                  "block %.1f ms (budget 100), direction %.0f ms (budget 1000)",
                  block_ms, dir_ms);
    report(10, "1024x1024 throughput", block_ms < 100.0 && dir_ms < 1000.0, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance_test <path-to-forgescan-cli>\n");
        return 64;
    }
    criterion1();
    criterion2();
    criterion3();
    const CorpusFixture corpus = build_default_corpus();
    criterion4(corpus);
    criterion5(corpus);
    criterion6(corpus);
    criterion7();
    criterion8();
    criterion9(argv[1]);
    criterion10();
    std::printf("%d of 10 criteria passed\n", 10 - g_failures);
    return g_failures;
}
