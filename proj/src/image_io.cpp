#include "forgescan/image_io.hpp"

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include <stdexcept>

namespace forgescan {

RasterImage load_image(const std::string& path) {
    cv::Mat m = cv::imread(path, cv::IMREAD_UNCHANGED);
    if (m.empty())
        throw std::runtime_error("load_image: cannot read or decode " + path);
    if (m.depth() != CV_8U)
        throw std::runtime_error("load_image: only 8-bit images supported: " + path);
    if (m.channels() == 4)
        cv::cvtColor(m, m, cv::COLOR_BGRA2BGR);
    if (m.channels() == 3)
        cv::cvtColor(m, m, cv::COLOR_BGR2RGB);
    else if (m.channels() != 1)
        throw std::runtime_error("load_image: unsupported channel count in " + path);

    RasterImage out(m.cols, m.rows, m.channels());
    for (int r = 0; r < m.rows; ++r) {
        const std::uint8_t* row = m.ptr<std::uint8_t>(r);
        std::copy(row, row + static_cast<std::size_t>(m.cols) * m.channels(),
                  out.data.begin() + static_cast<std::size_t>(r) * m.cols * m.channels());
    }
    return out;
}

void save_image_png(const RasterImage& img, const std::string& path) {
    cv::Mat m(img.height, img.width, img.channels == 3 ? CV_8UC3 : CV_8UC1,
              const_cast<std::uint8_t*>(img.data.data()));
    cv::Mat bgr;
    if (img.channels == 3)
        cv::cvtColor(m, bgr, cv::COLOR_RGB2BGR);
    else
        bgr = m;
    if (!cv::imwrite(path, bgr))
        throw std::runtime_error("save_image_png: cannot write " + path);
}

void save_gray_png(const GrayImage& img, const std::string& path) {
    cv::Mat m(img.height, img.width, CV_8UC1,
              const_cast<std::uint8_t*>(img.data.data()));
    if (!cv::imwrite(path, m))
        throw std::runtime_error("save_gray_png: cannot write " + path);
}

void save_gray_jpeg(const GrayImage& img, const std::string& path, int quality) {
    cv::Mat m(img.height, img.width, CV_8UC1,
              const_cast<std::uint8_t*>(img.data.data()));
    if (!cv::imwrite(path, m, {cv::IMWRITE_JPEG_QUALITY, quality}))
        throw std::runtime_error("save_gray_jpeg: cannot write " + path);
}

void save_mask(const FeatureMap& mask, const std::string& path) {
    GrayImage g(mask.width, mask.height);
    for (std::size_t i = 0; i < mask.data.size(); ++i)
        g.data[i] = mask.data[i] ? 255 : 0;
    save_gray_png(g, path);
}

FeatureMap load_mask(const std::string& path) {
    RasterImage img = load_image(path);
    GrayImage g = to_luma(img);
    FeatureMap out(g.width, g.height);
    for (std::size_t i = 0; i < g.data.size(); ++i)
        out.data[i] = g.data[i] >= 128 ? 1 : 0;
    return out;
}

}  // namespace forgescan
