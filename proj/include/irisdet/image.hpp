#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "irisdet/types.hpp"

namespace irisdet {

// 8-bit grayscale raster, row-major, top-left origin, x right, y down.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

    bool empty() const { return width <= 0 || height <= 0; }
    bool inBounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }

    std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }

    std::uint8_t atClamped(int x, int y) const {
        x = std::clamp(x, 0, width - 1);
        y = std::clamp(y, 0, height - 1);
        return at(x, y);
    }

    // Edge-clamped bilinear sample.
    double bilinear(double x, double y) const;
};

struct FloatImage {
    int width = 0;
    int height = 0;
    std::vector<float> data;

    FloatImage() = default;
    FloatImage(int w, int h, float fill = 0.f)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    bool empty() const { return width <= 0 || height <= 0; }
    bool inBounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }

    float& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    float at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }

    float atClamped(int x, int y) const {
        x = std::clamp(x, 0, width - 1);
        y = std::clamp(y, 0, height - 1);
        return at(x, y);
    }

    double bilinear(double x, double y) const;
};

FloatImage toFloat(const GrayImage& img);

// Separable Gaussian, kernel truncated at 3 sigma, replicated edges.
// sigma <= 0 returns the input as float. OpenMP over rows/columns.
FloatImage gaussianBlur(const GrayImage& img, double sigma);
FloatImage gaussianBlur(const FloatImage& img, double sigma);

// Centered differences with replicated edges: dx(x,y) = (I(x+1,y)-I(x-1,y))/2.
struct GradientField {
    FloatImage dx;
    FloatImage dy;
};
GradientField gradients(const FloatImage& img);

// Bilinear sample of a gradient field at a sub-pixel position.
inline Point2 sampleGradient(const GradientField& g, Point2 p) {
    return {g.dx.bilinear(p.x, p.y), g.dy.bilinear(p.x, p.y)};
}

} // namespace irisdet
