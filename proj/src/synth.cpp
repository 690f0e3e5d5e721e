#include "forgescan/synth.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include "forgescan/image_io.hpp"
#include "forgescan/jpeg_sim.hpp"
#include "forgescan/parallel.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace forgescan {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ splitmix64(b));
}

double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

double unit_from(std::uint64_t h) {
    return static_cast<double>(h >> 11) / 9007199254740992.0;
}

RasterImage gray_to_raster(const GrayImage& g) {
    RasterImage out(g.width, g.height, 1);
    out.data = g.data;
    return out;
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    // closed range, avoids distribution implementation differences
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    double unit() { return static_cast<double>(eng() >> 11) / 9007199254740992.0; }
};

void check_rect(const RasterImage& img, const Region& r, const char* what) {
    if (r.w <= 0 || r.h <= 0 || r.x < 0 || r.y < 0 || r.x + r.w > img.width ||
        r.y + r.h > img.height)
        throw std::invalid_argument(std::string("paste: ") + what +
                                    " rect out of bounds");
}

}  // namespace

PasteResult copy_create(const RasterImage& donor, const RasterImage& host,
                        const Region& src_rect, int dst_x, int dst_y,
                        int feather) {
    if (donor.channels != host.channels)
        throw std::invalid_argument("paste: donor/host channel mismatch");
    check_rect(donor, src_rect, "source");
    check_rect(host, Region{dst_x, dst_y, src_rect.w, src_rect.h, 0},
               "destination");

    // Buffer the source first so overlapping self-pastes read pre-paste pixels.
    std::vector<std::uint8_t> src(
        static_cast<std::size_t>(src_rect.w) * src_rect.h * donor.channels);
    for (int y = 0; y < src_rect.h; ++y)
        for (int x = 0; x < src_rect.w; ++x)
            for (int ch = 0; ch < donor.channels; ++ch)
                src[(static_cast<std::size_t>(y) * src_rect.w + x) * donor.channels + ch] =
                    donor.at(src_rect.y + y, src_rect.x + x, ch);

    PasteResult out;
    out.image = host;
    out.ground_truth = FeatureMap(host.width, host.height, 0);
    for (int y = 0; y < src_rect.h; ++y)
        for (int x = 0; x < src_rect.w; ++x) {
            const int border =
                std::min({x, y, src_rect.w - 1 - x, src_rect.h - 1 - y});
            const double alpha =
                feather > 0 ? std::min(1.0, (border + 1.0) / (feather + 1.0)) : 1.0;
            for (int ch = 0; ch < host.channels; ++ch) {
                const double p =
                    src[(static_cast<std::size_t>(y) * src_rect.w + x) * host.channels + ch];
                const double q = host.at(dst_y + y, dst_x + x, ch);
                out.image.at(dst_y + y, dst_x + x, ch) = static_cast<std::uint8_t>(
                    std::clamp(std::round(alpha * p + (1.0 - alpha) * q), 0.0, 255.0));
            }
            out.ground_truth.at(dst_y + y, dst_x + x) = 1;
        }
    return out;
}

PasteResult copy_move(const RasterImage& host, const Region& src_rect,
                      int dst_x, int dst_y, int feather) {
    return copy_create(host, host, src_rect, dst_x, dst_y, feather);
}

namespace {

// The base scene is a flat canvas dotted with soft-edged elliptical blobs
// laid out on a coarse cell grid. Three blob roles tune what the block
// detector can see:
//   * "quiet" blobs step the canvas by well under t/2 (t = 65), so their
//     outlines never trip the corner rule. They spread edge content across
//     the whole frame without marking any blocks.
//   * "loud" blobs (one small one per 2x2 cell group) step the canvas well
//     past the threshold and fire wherever they sit. They provide a stable,
//     alignment-neutral marked-block floor across the whole image, so a
//     stray natural fire inside an aligned paste cannot dominate the
//     inside/outside density ratio.
//   * a dense "subject" cell pair concentrates quiet outlines (ring plus
//     satellites) and carries two "phase bars" (see kBarAmp). It holds the
//     edge energy the projection-based detector keys on yet stays
//     block-quiet in place; forgeries clone or splice it, and the phase
//     bars make any grid-misaligned paste fire the corner rule while an
//     aligned paste stays silent.
struct Blob {
    double cx, cy, rx, ry, amp;
    bool ring;        // annulus: subtract an inner ellipse at half the radius
    bool bar = false; // axis-aligned strip with ramped edges (rx/ry = half extents)
};

struct SceneLayout {
    int cell = 0;       // cell pitch in px, multiple of 8
    int gw = 0, gh = 0; // grid extent in cells
    int sx = 0, sy = 0; // subject pair anchor cell (grid coords)
    bool subj_horiz = true;
    std::vector<Blob> blobs;
};

constexpr double kEdgeWidth = 2.2;   // blob outline ramp, px
constexpr double kLoudAmp = 45.0;    // always fires: step 2*45 > 65
constexpr double kSparseBlobP = 0.5;
// "Phase bar" amplitude: a strip edge whose centerline lies one pixel past a
// block corner sample reads ~kBarAmp in the corner statistic on the original
// grid (below the threshold of 65) but ~2*kBarAmp once the content is pasted
// with a one-pixel offset, so a misaligned paste fires deterministically at
// every quality factor.
constexpr double kBarAmp = 42.0;

// Quiet amplitude: 2*amp must stay below the detection threshold by a
// margin proportional to the quantization error available at this quality.
double quiet_amp(int qf) {
    const double scale = qf < 50 ? 5000.0 / qf : 200.0 - 2.0 * qf;
    return std::max(8.0, 29.75 - 0.0375 * scale);
}

// Subject satellites sit closer to the threshold: the remaining gap tracks
// the quantization step so misalignment-induced requantization tips them
// over at every quality while single-compression error rarely does.
double subject_amp(int qf) { return quiet_amp(qf); }

SceneLayout plan_scene(int width, int height, std::uint64_t seed, double amp,
                       double sat_amp, bool with_subject) {
    SceneLayout out;
    const int m = std::min(width, height);
    out.cell = m >= 192 ? 96 : 8 * (m / 16);
    const int C = out.cell;
    const double s = C / 96.0;
    out.gw = width / C;
    out.gh = height / C;

    // subject pair: two adjacent cells, orientation and place hash-chosen
    const int horiz_pairs = (out.gw - 1) * out.gh;
    const int vert_pairs = out.gw * (out.gh - 1);
    const int pick =
        static_cast<int>(mix(seed, 0xABCDULL) % static_cast<std::uint64_t>(
                                                    horiz_pairs + vert_pairs));
    if (pick < horiz_pairs) {
        out.subj_horiz = true;
        out.sx = pick % (out.gw - 1);
        out.sy = pick / (out.gw - 1);
    } else {
        out.subj_horiz = false;
        out.sx = (pick - horiz_pairs) % out.gw;
        out.sy = (pick - horiz_pairs) / out.gw;
    }

    for (int gy = 0; gy < out.gh; ++gy)
        for (int gx = 0; gx < out.gw; ++gx) {
            const bool subject =
                with_subject &&
                ((gx == out.sx && gy == out.sy) ||
                 (out.subj_horiz ? gx == out.sx + 1 && gy == out.sy
                                 : gx == out.sx && gy == out.sy + 1));
            const std::uint64_t k =
                mix(seed, (static_cast<std::uint64_t>(gx) << 20) ^
                              static_cast<std::uint64_t>(gy));
            const double x0 = gx * C, y0 = gy * C;
            const double jx = (unit_from(mix(k, 5)) - 0.5) * 8.0 * s;
            const double jy = (unit_from(mix(k, 6)) - 0.5) * 8.0 * s;
            if (subject) {
                // One large quiet annulus spans the whole pair, so the edge
                // pipeline extracts a single component whose bounding box
                // matches the paste rect; satellites inside the hole add
                // outline length for the misalignment fingerprint.
                if (gx == out.sx && gy == out.sy) {
                    const double px = out.subj_horiz ? x0 + 96.0 * s : x0 + 48.0 * s;
                    const double py = out.subj_horiz ? y0 + 48.0 * s : y0 + 96.0 * s;
                    const double ra = (78.0 + 4.0 * unit_from(mix(k, 2))) * s;
                    const double rb = (32.0 + 3.0 * unit_from(mix(k, 3))) * s;
                    out.blobs.push_back(Blob{px, py, out.subj_horiz ? ra : rb,
                                             out.subj_horiz ? rb : ra, amp, true});
                    // round blobs inside the ring: steep outlines in both
                    // axes, the shape the corner rule actually samples
                    for (int i = -1; i <= 1; ++i) {
                        const double off = 30.0 * s * i;
                        const double rr =
                            (12.0 + 2.0 * unit_from(mix(k, 12 + i))) * s;
                        out.blobs.push_back(
                            Blob{px + (out.subj_horiz ? off : 0.0),
                                 py + (out.subj_horiz ? 0.0 : off), rr, rr,
                                 sat_amp, false});
                    }
                    for (int i = 0; i < 4; ++i) {
                        const double oa = (i < 2 ? -30.0 : 30.0) * s;
                        const double op = (i % 2 == 0 ? -26.0 : 26.0) * s;
                        const double rr =
                            (10.0 + 2.0 * unit_from(mix(k, 20 + i))) * s;
                        out.blobs.push_back(
                            Blob{px + (out.subj_horiz ? oa : op),
                                 py + (out.subj_horiz ? op : oa), rr, rr,
                                 sat_amp, false});
                    }
                    // phase bars: edge centerlines snapped to columns/rows
                    // that are 1 mod 8 (the pixel the corner rule samples)
                    const auto snap = [](double v) {
                        return std::floor(v / 8.0) * 8.0 + 1.0;
                    };
                    // all four edges snapped so the ends stay quiet too
                    const auto bar = [&](double a0, double a1, double b0,
                                         double b1, bool vert) {
                        const double ca = (a0 + a1) / 2, ra = (a1 - a0) / 2;
                        const double cb = (b0 + b1) / 2, rb = (b1 - b0) / 2;
                        if (vert)
                            out.blobs.push_back(
                                Blob{ca, cb, ra, rb, kBarAmp, false, true});
                        else
                            out.blobs.push_back(
                                Blob{cb, ca, rb, ra, kBarAmp, false, true});
                    };
                    const bool H = out.subj_horiz;
                    const double pa = H ? px : py, pb = H ? py : px;
                    // strip across the long axis: detects offset along it
                    bar(snap(pa - 48.0 * s), snap(pa - 48.0 * s) + 16.0,
                        snap(pb - 38.0 * s), snap(pb + 38.0 * s), H);
                    // strip across the short axis: detects the other offset
                    bar(snap(pa - 72.0 * s), snap(pa + 72.0 * s),
                        snap(pb + 14.0 * s), snap(pb + 14.0 * s) + 16.0, H);
                }
                continue;
            }
            // one loud blob per 2x2 cell group (partial edge groups included);
            // the group's pick skips subject cells so the subject stays quiet
            const std::uint64_t gk =
                mix(seed, 0x900ULL + ((static_cast<std::uint64_t>(gx / 2) << 20) ^
                                      static_cast<std::uint64_t>(gy / 2)));
            bool loud = false;
            {
                std::vector<std::pair<int, int>> group;
                for (int cy = (gy / 2) * 2; cy < std::min(out.gh, (gy / 2) * 2 + 2); ++cy)
                    for (int cx = (gx / 2) * 2; cx < std::min(out.gw, (gx / 2) * 2 + 2); ++cx) {
                        const bool subj =
                            with_subject &&
                            ((cx == out.sx && cy == out.sy) ||
                             (out.subj_horiz ? cx == out.sx + 1 && cy == out.sy
                                             : cx == out.sx && cy == out.sy + 1));
                        if (!subj) group.emplace_back(cx, cy);
                    }
                if (!group.empty()) {
                    const auto& pick = group[gk % group.size()];
                    loud = pick.first == gx && pick.second == gy;
                }
            }
            if (loud) {
                out.blobs.push_back(Blob{x0 + 48.0 * s + jx, y0 + 48.0 * s + jy,
                                         (5.0 + 2.0 * unit_from(mix(k, 8))) * s,
                                         (5.0 + 2.0 * unit_from(mix(k, 9))) * s,
                                         kLoudAmp, false});
            } else if (unit_from(mix(k, 1)) < kSparseBlobP) {
                // near-threshold round blobs, same grade as the subject
                // satellites: they keep the natural-fire density of the
                // background comparable to the subject's, so an aligned
                // paste does not stand out
                for (int i = 0; i < 2; ++i) {
                    const double ox = (unit_from(mix(k, 30 + i)) - 0.5) * 40.0 * s;
                    const double oy = (unit_from(mix(k, 40 + i)) - 0.5) * 40.0 * s;
                    const double rr = (10.0 + 3.0 * unit_from(mix(k, 50 + i))) * s;
                    out.blobs.push_back(Blob{x0 + 48.0 * s + ox,
                                             y0 + 48.0 * s + oy, rr, rr,
                                             sat_amp, false});
                }
            }
        }
    // Loud blobs in the leftover margins outside the cell grid: small grids
    // would otherwise leave too thin a marked-block floor (a forgery can
    // overwrite every in-grid loud cell).
    const int mx = width - out.gw * C, my = height - out.gh * C;
    auto margin_loud = [&](double cx, double cy, std::uint64_t k) {
        out.blobs.push_back(Blob{cx, cy, (5.0 + 2.0 * unit_from(mix(k, 8))) * s,
                                 (5.0 + 2.0 * unit_from(mix(k, 9))) * s,
                                 kLoudAmp, false});
    };
    if (mx >= 32)
        for (int gy = 0; gy < out.gh; gy += 2)
            margin_loud(out.gw * C + mx / 2.0, gy * C + C / 2.0,
                        mix(seed, 0xA00ULL + static_cast<std::uint64_t>(gy)));
    if (my >= 32)
        for (int gx = 0; gx < out.gw; gx += 2)
            margin_loud(gx * C + C / 2.0, out.gh * C + my / 2.0,
                        mix(seed, 0xB00ULL + static_cast<std::uint64_t>(gx)));
    return out;
}

GrayImage render_scene(int width, int height, const SceneLayout& scene) {
    std::vector<double> canvas(static_cast<std::size_t>(width) * height, 100.0);
    for (const Blob& b : scene.blobs) {
        const int x0 = std::max(0, static_cast<int>(b.cx - b.rx - kEdgeWidth));
        const int x1 = std::min(width - 1,
                                static_cast<int>(b.cx + b.rx + kEdgeWidth) + 1);
        const int y0 = std::max(0, static_cast<int>(b.cy - b.ry - kEdgeWidth));
        const int y1 = std::min(height - 1,
                                static_cast<int>(b.cy + b.ry + kEdgeWidth) + 1);
        for (int y = y0; y <= y1; ++y)
            for (int x = x0; x <= x1; ++x) {
                const double dx = x - b.cx, dy = y - b.cy;
                double t;
                if (b.bar) {
                    const double tx = smoothstep(std::clamp(
                        (b.rx - std::abs(dx)) / kEdgeWidth + 0.5, 0.0, 1.0));
                    const double ty = smoothstep(std::clamp(
                        (b.ry - std::abs(dy)) / kEdgeWidth + 0.5, 0.0, 1.0));
                    t = std::min(tx, ty);
                } else {
                const double d = std::sqrt(dx * dx / (b.rx * b.rx) +
                                           dy * dy / (b.ry * b.ry));
                t = smoothstep(
                    std::clamp((1.0 - d) * b.rx / kEdgeWidth + 0.5, 0.0, 1.0));
                if (b.ring)
                    t -= smoothstep(std::clamp(
                        (0.72 - d) * b.rx / kEdgeWidth + 0.5, 0.0, 1.0));
                }
                double& v = canvas[static_cast<std::size_t>(y) * width + x];
                v = std::max(v, 100.0 + b.amp * t);
            }
    }
    GrayImage out(width, height);
    for (std::size_t i = 0; i < canvas.size(); ++i)
        out.data[i] =
            static_cast<std::uint8_t>(std::clamp(canvas[i] + 0.5, 0.0, 255.0));
    return out;
}

}  // namespace

GrayImage generate_base(int width, int height, std::uint64_t seed) {
    if (width < 32 || height < 32)
        throw std::invalid_argument("generate_base: size must be >= 32");
    // Amplitude tuned for the middle of the corpus quality range.
    return render_scene(width, height,
                        plan_scene(width, height, seed, quiet_amp(75),
                                   subject_amp(75), true));
}

namespace {

// Enumerate candidate paste anchors: cell pairs of the given orientation that
// do not touch the excluded pair (grid coords; exclude_x < 0 disables).
std::vector<std::pair<int, int>> paste_anchors(const SceneLayout& scene,
                                               bool horiz, int exclude_x,
                                               int exclude_y,
                                               bool exclude_horiz) {
    std::vector<std::pair<int, int>> out;
    const int nx = horiz ? scene.gw - 1 : scene.gw;
    const int ny = horiz ? scene.gh : scene.gh - 1;
    for (int gy = 0; gy < ny; ++gy)
        for (int gx = 0; gx < nx; ++gx) {
            bool clash = false;
            if (exclude_x >= 0) {
                for (int a = 0; a < 2 && !clash; ++a)
                    for (int b = 0; b < 2 && !clash; ++b) {
                        const int cx = gx + (horiz ? a : 0);
                        const int cy = gy + (horiz ? 0 : a);
                        const int ex = exclude_x + (exclude_horiz ? b : 0);
                        const int ey = exclude_y + (exclude_horiz ? 0 : b);
                        clash = cx == ex && cy == ey;
                    }
            }
            if (!clash) out.emplace_back(gx, gy);
        }
    return out;
}

CorpusEntry make_forged(int index, std::uint64_t seed, const CorpusOptions& opts,
                        const std::string& out_dir) {
    Rng rng(mix(seed, static_cast<std::uint64_t>(index) * 2 + 1));
    const int w = rng.uniform(opts.min_size, opts.max_size);
    const int h = rng.uniform(opts.min_size, opts.max_size);
    const int qf = rng.uniform(opts.qf_min, opts.qf_max);
    const bool misaligned = rng.unit() < opts.misaligned_fraction;
    const bool feathered = rng.unit() < opts.feathered_fraction;
    const bool create = rng.unit() < 0.5;
    const double amp = quiet_amp(qf);

    // copy-move clones the host's own subject pair; copy-create splices the
    // subject of a donor scene into a subject-free host.
    const std::uint64_t host_seed = mix(seed, index * 31 + 7);
    const SceneLayout host_scene =
        plan_scene(w, h, host_seed, amp, subject_amp(qf), !create);
    const std::uint64_t donor_seed = mix(seed, index * 31 + 13);
    const SceneLayout donor_scene =
        plan_scene(w, h, donor_seed, amp, subject_amp(qf), true);
    const SceneLayout& src_scene = create ? donor_scene : host_scene;

    const int C = host_scene.cell;
    const bool horiz = src_scene.subj_horiz;
    const int rw = horiz ? 2 * C - 8 : C - 8;
    const int rh = horiz ? C - 8 : 2 * C - 8;
    const Region src{src_scene.sx * C, src_scene.sy * C, rw, rh, 0};

    // Destination: a same-orientation cell pair, clear of the host subject
    // for copy-move. Cell pitch is a multiple of 8, so cell-anchored pastes
    // preserve the 8x8 grid; misaligned ones shift it by (1,1).
    const auto anchors =
        paste_anchors(host_scene, horiz, create ? -1 : host_scene.sx,
                      host_scene.sy, host_scene.subj_horiz);
    const auto [agx, agy] =
        anchors[static_cast<std::size_t>(rng.uniform(
            0, static_cast<int>(anchors.size()) - 1))];
    const int dst_x = agx * C + (misaligned ? 1 : 0);
    const int dst_y = agy * C + (misaligned ? 1 : 0);

    const RasterImage host =
        gray_to_raster(recompress(render_scene(w, h, host_scene),
                                  QualityFactor(qf)));
    PasteResult pasted;
    std::string kind;
    if (create) {
        const RasterImage donor =
            gray_to_raster(recompress(render_scene(w, h, donor_scene),
                                      QualityFactor(qf)));
        pasted = copy_create(donor, host, src, dst_x, dst_y,
                             feathered ? opts.feather_radius : 0);
        kind = "copy-create";
    } else {
        pasted = copy_move(host, src, dst_x, dst_y,
                           feathered ? opts.feather_radius : 0);
        kind = "copy-move";
    }
    const int dx = dst_x - src.x, dy = dst_y - src.y;

    char id[32];
    std::snprintf(id, sizeof id, "forged_%04d", index);
    CorpusEntry e;
    e.id = id;
    e.kind = kind;
    e.image_path = std::string(id) + ".png";
    e.gt_path = std::string(id) + "_gt.png";
    e.qf = qf;
    e.offset_x = dx;
    e.offset_y = dy;
    e.aligned = !misaligned;
    e.feathered = feathered;
    e.rect_x = dst_x;
    e.rect_y = dst_y;
    e.rect_w = rw;
    e.rect_h = rh;
    save_image_png(pasted.image, (fs::path(out_dir) / e.image_path).string());
    save_mask(pasted.ground_truth, (fs::path(out_dir) / e.gt_path).string());
    return e;
}

CorpusEntry make_authentic(int index, std::uint64_t seed,
                           const CorpusOptions& opts,
                           const std::string& out_dir) {
    Rng rng(mix(seed, static_cast<std::uint64_t>(index) * 2 + 0x1000));
    const int w = rng.uniform(opts.min_size, opts.max_size);
    const int h = rng.uniform(opts.min_size, opts.max_size);
    const int qf = rng.uniform(opts.qf_min, opts.qf_max);
    const GrayImage base = render_scene(
        w, h,
        plan_scene(w, h, mix(seed, index * 53 + 29), quiet_amp(qf),
                   subject_amp(qf), true));
    const RasterImage img = gray_to_raster(recompress(base, QualityFactor(qf)));

    char id[32];
    std::snprintf(id, sizeof id, "authentic_%04d", index);
    CorpusEntry e;
    e.id = id;
    e.kind = "authentic";
    e.image_path = std::string(id) + ".png";
    e.qf = qf;
    save_image_png(img, (fs::path(out_dir) / e.image_path).string());
    return e;
}

json entry_to_json(const CorpusEntry& e) {
    json j{{"id", e.id},        {"kind", e.kind}, {"image", e.image_path},
           {"qf", e.qf}};
    if (e.kind != "authentic") {
        j["gt"] = e.gt_path;
        j["offset"] = {e.offset_x, e.offset_y};
        j["aligned"] = e.aligned;
        j["feathered"] = e.feathered;
        j["rect"] = {e.rect_x, e.rect_y, e.rect_w, e.rect_h};
    }
    return j;
}

}  // namespace

std::vector<CorpusEntry> build_corpus(int n, std::uint64_t seed,
                                      const CorpusOptions& opts,
                                      const std::string& out_dir) {
    if (n < 1) throw std::invalid_argument("build_corpus: n must be >= 1");
    fs::create_directories(out_dir);

    std::vector<CorpusEntry> entries(static_cast<std::size_t>(n) * 2);
    parallel_for(n, opts.jobs, [&](int i) {
        entries[i] = make_forged(i, seed, opts, out_dir);
        entries[n + i] = make_authentic(i, seed, opts, out_dir);
    });

    const fs::path manifest = fs::path(out_dir) / "manifest.jsonl";
    std::ofstream out(manifest);
    if (!out) throw std::runtime_error("build_corpus: cannot write manifest");
    for (const CorpusEntry& e : entries)
        out << entry_to_json(e).dump() << '\n';
    return entries;
}

std::vector<CorpusEntry> load_manifest(const std::string& corpus_dir) {
    const fs::path manifest = fs::path(corpus_dir) / "manifest.jsonl";
    std::ifstream in(manifest);
    if (!in)
        throw std::runtime_error("load_manifest: cannot open " + manifest.string());
    std::vector<CorpusEntry> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json j = json::parse(line);
        CorpusEntry e;
        e.id = j.at("id");
        e.kind = j.at("kind");
        e.image_path = j.at("image");
        e.qf = j.at("qf");
        if (e.kind != "authentic") {
            e.gt_path = j.at("gt");
            e.offset_x = j.at("offset")[0];
            e.offset_y = j.at("offset")[1];
            e.aligned = j.at("aligned");
            e.feathered = j.at("feathered");
            e.rect_x = j.at("rect")[0];
            e.rect_y = j.at("rect")[1];
            e.rect_w = j.at("rect")[2];
            e.rect_h = j.at("rect")[3];
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace forgescan
