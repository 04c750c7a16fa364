#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "irisdet/geometry.hpp"
#include "irisdet/image.hpp"
#include "irisdet/rng.hpp"

namespace irisdet {

struct HogConfig {
    double eHog = 100.0;        // reference interocular distance for feature extraction, px
    double patchFraction = 0.4; // patch side W = patchFraction * eHog
    int cellsPerSide = 4;
    int orientationBins = 6;
    bool bilinearOrientationVote = false; // hard binning by default

    int patchSide() const { return static_cast<int>(std::lround(patchFraction * eHog)); }
    int descriptorSize() const { return cellsPerSide * cellsPerSide * orientationBins; }
};

// Concatenated cell histograms, unit L2 norm (or all-zero for a
// gradient-free patch). 96 values with the default config.
using HogDescriptor = std::vector<float>;

enum class Eye : std::uint8_t { Right = 0, Left = 1 };

// Binary split test: (h[dimA] - h[dimB]) > threshold on the chosen
// eye's descriptor.
struct DiffFeature {
    Eye eye = Eye::Right;
    std::uint16_t dimA = 0;
    std::uint16_t dimB = 1;
    float threshold = 0.f;
};

// W x W patch around `center` (image px), sampled by bilinear interpolation
// from the image scaled by s = eHog / ||E_inter||. Out-of-bounds samples
// clamp to the nearest edge pixel. Throws DataError if the anchor has a
// non-positive interocular distance.
FloatImage extractPatch(const GrayImage& image, Point2 center, const EyeAnchor& anchor,
                        const HogConfig& cfg);

HogDescriptor computeHog(const FloatImage& patch, const HogConfig& cfg);

bool evalDiffFeature(const DiffFeature& f, const HogDescriptor& right, const HogDescriptor& left);

// Pool of k candidate split features: eye uniform, dims uniform without
// replacement within a feature, threshold uniform in [thresholdLo, thresholdHi].
std::vector<DiffFeature> samplePool(Rng& rng, int k, double thresholdLo, double thresholdHi,
                                    int descriptorSize = 96);

} // namespace irisdet
