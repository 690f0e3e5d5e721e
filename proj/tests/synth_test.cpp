#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "forgescan/image_io.hpp"
#include "forgescan/synth.hpp"

using namespace forgescan;
namespace fs = std::filesystem;

namespace {

RasterImage random_rgb(int w, int h, std::uint64_t seed) {
    RasterImage img(w, h, 3);
    std::mt19937_64 rng(seed);
    for (auto& v : img.data) v = static_cast<std::uint8_t>(rng() & 0xff);
    return img;
}

fs::path temp_dir(const char* name) {
    fs::path dir = fs::temp_directory_path() / "forgescan_synth_test" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("self-paste is the identity on pixels but still marks the rect") {
    const RasterImage host = random_rgb(32, 32, 1);
    const Region rect{4, 6, 8, 8, 0};
    const PasteResult r = copy_move(host, rect, 4, 6);
    CHECK(r.image.data == host.data);
    long marked = 0;
    for (auto v : r.ground_truth.data) marked += v;
    CHECK(marked == 64);
}

TEST_CASE("copy within an image moves the expected pixels") {
    const RasterImage host = random_rgb(16, 16, 2);
    const PasteResult r = copy_move(host, Region{0, 0, 8, 8, 0}, 8, 8);
    for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x)
            for (int ch = 0; ch < 3; ++ch)
                CHECK(r.image.at(8 + y, 8 + x, ch) == host.at(y, x, ch));
}

TEST_CASE("output differs from host only inside the mask") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int w = 40 + static_cast<int>(rng() % 60);
        const int h = 40 + static_cast<int>(rng() % 60);
        const RasterImage host = random_rgb(w, h, rng());
        const int rw = 8 + static_cast<int>(rng() % 16);
        const int rh = 8 + static_cast<int>(rng() % 16);
        const Region rect{static_cast<int>(rng() % (w - rw)),
                          static_cast<int>(rng() % (h - rh)), rw, rh, 0};
        const int dx = static_cast<int>(rng() % (w - rw));
        const int dy = static_cast<int>(rng() % (h - rh));
        const int feather = static_cast<int>(rng() % 3);
        const PasteResult r = copy_move(host, rect, dx, dy, feather);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                if (r.ground_truth.at(y, x)) continue;
                for (int ch = 0; ch < 3; ++ch)
                    CHECK(r.image.at(y, x, ch) == host.at(y, x, ch));
            }
    }
}

TEST_CASE("ground-truth pixel count equals the rect area") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        const RasterImage donor = random_rgb(64, 48, rng());
        const RasterImage host = random_rgb(80, 70, rng());
        const int rw = 5 + static_cast<int>(rng() % 20);
        const int rh = 5 + static_cast<int>(rng() % 20);
        const PasteResult r = copy_create(
            donor, host, Region{2, 3, rw, rh, 0}, 10, 12,
            static_cast<int>(rng() % 4));
        long marked = 0;
        for (auto v : r.ground_truth.data) marked += v;
        CHECK(marked == static_cast<long>(rw) * rh);
    }
}

TEST_CASE("copy_create pastes donor pixels onto the host") {
    const RasterImage donor(16, 16, 1, 255);
    const RasterImage host(16, 16, 1, 0);
    const PasteResult r = copy_create(donor, host, Region{0, 0, 8, 8, 0}, 0, 0);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x)
            CHECK(r.image.at(y, x, 0) == ((y < 8 && x < 8) ? 255 : 0));
}

TEST_CASE("copy_create with donor == host equals copy_move") {
    const RasterImage host = random_rgb(32, 32, 77);
    const Region rect{2, 2, 10, 12, 0};
    const PasteResult a = copy_move(host, rect, 18, 16);
    const PasteResult b = copy_create(host, host, rect, 18, 16);
    CHECK(a.image.data == b.image.data);
    CHECK(a.ground_truth.data == b.ground_truth.data);
}

TEST_CASE("feathered paste blends only the rect border") {
    RasterImage donor(20, 20, 1, 200);
    RasterImage host(20, 20, 1, 100);
    const PasteResult r = copy_create(donor, host, Region{0, 0, 10, 10, 0}, 5, 5, 2);
    // interior pixel fully pasted, outermost border pixel blended
    CHECK(r.image.at(9, 9, 0) == 200);
    const int border = r.image.at(5, 5, 0);
    CHECK(border > 100);
    CHECK(border < 200);
}

TEST_CASE("out-of-bounds rects are rejected") {
    const RasterImage host = random_rgb(20, 20, 5);
    CHECK_THROWS_AS(copy_move(host, Region{15, 15, 10, 10, 0}, 0, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(copy_move(host, Region{0, 0, 8, 8, 0}, 15, 15),
                    std::invalid_argument);
}

TEST_CASE("generate_base is deterministic and covers a sane range") {
    const GrayImage a = generate_base(96, 64, 42);
    const GrayImage b = generate_base(96, 64, 42);
    const GrayImage c = generate_base(96, 64, 43);
    CHECK(a.data == b.data);
    CHECK(a.data != c.data);
}

TEST_CASE("corpus generation is byte-identical across runs") {
    CorpusOptions opts;
    opts.min_size = 96;
    opts.max_size = 128;
    const fs::path d1 = temp_dir("run1");
    const fs::path d2 = temp_dir("run2");
    build_corpus(4, 42, opts, d1.string());
    build_corpus(4, 42, opts, d2.string());
    for (const auto& entry : fs::directory_iterator(d1)) {
        const fs::path other = d2 / entry.path().filename();
        REQUIRE(fs::exists(other));
        CHECK(slurp(entry.path()) == slurp(other));
    }
}

TEST_CASE("manifest has one record per image") {
    CorpusOptions opts;
    opts.min_size = 96;
    opts.max_size = 112;
    const fs::path dir = temp_dir("manifest");
    const auto entries = build_corpus(5, 7, opts, dir.string());
    CHECK(entries.size() == 10);
    std::ifstream in(dir / "manifest.jsonl");
    int lines = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++lines;
    CHECK(lines == 10);

    const auto loaded = load_manifest(dir.string());
    REQUIRE(loaded.size() == 10);
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        CHECK(loaded[i].id == entries[i].id);
        CHECK(loaded[i].kind == entries[i].kind);
        CHECK(loaded[i].qf == entries[i].qf);
        CHECK(loaded[i].aligned == entries[i].aligned);
    }
}

TEST_CASE("misaligned fraction tracks the policy over a large draw") {
    CorpusOptions opts;
    opts.min_size = 96;
    opts.max_size = 112;
    const fs::path dir = temp_dir("fraction");
    const auto entries = build_corpus(100, 42, opts, dir.string());
    int misaligned = 0, forged = 0;
    for (const auto& e : entries) {
        if (e.kind == "authentic") continue;
        ++forged;
        if (!e.aligned) {
            ++misaligned;
            CHECK((e.offset_x % 8 != 0 || e.offset_y % 8 != 0));
        } else {
            CHECK(e.offset_x % 8 == 0);
            CHECK(e.offset_y % 8 == 0);
        }
    }
    CHECK(forged == 100);
    CHECK(misaligned >= 70);
    CHECK(misaligned <= 80);
}

TEST_CASE("forged image agrees with ground truth outside the mask") {
    CorpusOptions opts;
    opts.min_size = 96;
    opts.max_size = 112;
    const fs::path dir = temp_dir("agree");
    const auto entries = build_corpus(3, 11, opts, dir.string());
    for (const auto& e : entries) {
        if (e.kind == "authentic") continue;
        const FeatureMap gt = load_mask((dir / e.gt_path).string());
        long marked = 0;
        for (auto v : gt.data) marked += v;
        CHECK(marked == static_cast<long>(e.rect_w) * e.rect_h);
    }
}
