#pragma once

#include <vector>

#include "irisdet/circlefit.hpp"
#include "irisdet/geometry.hpp"
#include "irisdet/image.hpp"

namespace irisdet {

struct VoteConfig {
    double radiusBandLo = 0.3; // annulus, fractions of the eye size E
    double radiusBandHi = 0.5;
    double defaultIrisRadiusFrac = 0.2;
    double candidateThresholdFrac = 0.8; // keep maxima above this fraction of the global max
    double smoothingSigmaFrac = 0.05;    // sigma = clamp(0.05*E, 1, 5) px
    double erosionFrac = 0.05;           // mask erosion = 0.05*E px
};

struct Candidate {
    Point2 position;
    double radius = 0.0;
    double score = 0.0;
};

// Smoothed image and unit gradients shared by all score evaluations on
// one eye region. Gradients below the magnitude floor are zeroed.
struct VotingField {
    FloatImage smoothed; // I*, 0..255
    FloatImage gx;       // unit gradient components
    FloatImage gy;
};

VotingField buildVotingField(const GrayImage& image, double eyeSizeE, const VoteConfig& cfg);

// Eye-center score at c: mean over annulus pixels i (radiusBand of E,
// inside the image) of w_c * max(d_i . g_i, 0), where d_i is the unit
// direction from c to i and w_c = 255 - I*(c).
double scoreAt(const VotingField& field, Point2 c, double eyeSizeE, const VoteConfig& cfg,
               bool* annulusOutside = nullptr);

// Convenience overload building the field internally.
double scoreAt(const GrayImage& image, Point2 c, double eyeSizeE, const VoteConfig& cfg,
               bool* annulusOutside = nullptr);

// Dense score raster over the eroded-mask pixels of one eye. Pixels
// outside the mask hold -1. OpenMP over rows.
struct MaskedScoreMap {
    int x0 = 0, y0 = 0;    // raster origin in image coordinates
    FloatImage scores;     // -1 outside the eroded mask
    double maxScore = 0.0; // over mask pixels
    int maxX = 0, maxY = 0;
    int maskPixels = 0;
};

MaskedScoreMap scoreMap(const VotingField& field, const EyeContour& contour, double eyeSizeE,
                        const VoteConfig& cfg);

// Strict 8-neighborhood local maxima of the masked score map above
// candidateThresholdFrac of the global mask maximum. The global arg-max
// pixel is always included. Initial radius = defaultIrisRadiusFrac * E.
// Throws DataError when the eroded mask is empty.
std::vector<Candidate> findCandidates(const GrayImage& image, const EyeContour& contour,
                                      Point2 cornerA, Point2 cornerB, const VoteConfig& cfg);

// Same, reusing a prebuilt field (and optionally receiving the map).
std::vector<Candidate> findCandidates(const VotingField& field, const EyeContour& contour,
                                      double eyeSizeE, const VoteConfig& cfg,
                                      MaskedScoreMap* mapOut = nullptr);

// Single-radius ring score at integer position p: mean over pixels with
// | ||d*|| - r | <= 0.5 px of the scoreAt summand.
double ringScore(const VotingField& field, Point2 p, double r);

// Best single radius in [radiusBandLo*E, radiusBandHi*E], 1 px steps.
// Ties go to the smaller radius.
std::pair<double, double> bestRingRadius(const VotingField& field, Point2 p, double eyeSizeE,
                                         const VoteConfig& cfg);

// 8-neighborhood hill climb of the per-position best ring score. Ties
// never move away from the current center; walk capped at 0.5*E steps.
Candidate hillClimb(const VotingField& field, const Candidate& start, double eyeSizeE,
                    const VoteConfig& cfg);
Candidate hillClimb(const GrayImage& image, const Candidate& start, double eyeSizeE,
                    const VoteConfig& cfg);

struct HandcraftedEye {
    Point2 center;
    double radius = 0.0;
    double score = 0.0;
    bool fallback = false; // no candidates; corner midpoint + default radius
};

struct HandcraftedDetection {
    HandcraftedEye right;
    HandcraftedEye left;
};

// Full hand-crafted detector: candidates, hill climb, best-candidate
// selection (ties: nearest eye-mask centroid, then scan order), then
// sub-pixel circle refinement seeded at the winning candidate.
HandcraftedDetection detectHandcrafted(const GrayImage& image, const EyeCorners& corners,
                                       const EyeContour& contourRight,
                                       const EyeContour& contourLeft,
                                       const VoteConfig& cfg = {},
                                       const RobustFitConfig& fitCfg = {});

} // namespace irisdet
