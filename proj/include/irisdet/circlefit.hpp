#pragma once

#include <vector>

#include "irisdet/geometry.hpp"
#include "irisdet/image.hpp"

namespace irisdet {

struct CircleEstimate {
    double a = 0.0; // center x, px
    double b = 0.0; // center y, px
    double r = 0.0; // radius, px
    double finalCost = 0.0;
    int iterations = 0;
    double inlierFraction = 0.0;
    bool fromPriorFallback = false; // too few edge points; prior returned as-is
};

struct EdgePoint {
    Point2 pos;
    double score = 0.0; // gradient . outward-normal at the stored position
};

struct EdgePointSet {
    std::vector<EdgePoint> points;
    bool sectorCoverageEmpty = false; // the mask rejected every circle sample
};

struct RobustFitConfig {
    double w1 = 1.0;
    double w2 = 0.1;
    double w3 = 0.1;
    int maxIterations = 30;
    double relTolerance = 1e-4;
    double tukeyInitialFactor = 0.3; // C = factor * rInit
    double tukeyFinalFactor = 0.1;
    double scanFraction = 0.3;  // scan line reaches +-scanFraction*r radially
    double angleCutoffDeg = 25.0;
    double sampleStepDeg = 5.0; // circle-sample spacing inside the sectors
    double scanStepPx = 0.25;
    double gradientSigmaPx = 1.0; // refine() sets max(1, 0.02*||E_inter||)
};

struct FitTraceEntry {
    double cost = 0.0;
    double tukeyC = 0.0;
};

// Tukey biweight: rho(u) = (C^2/6)(1 - (1 - (u/C)^2)^3) for |u| <= C,
// C^2/6 beyond.
double tukeyRho(double u, double c);

// Candidate iris-boundary points along short radial scan lines through
// circle samples restricted to the [-45,45] and [135,225] degree sectors.
// Samples outside the eye mask are dropped (pass nullptr to skip masking);
// per scan line the best gradient/normal agreement position is kept, and
// points whose gradient-to-normal angle exceeds the cutoff are discarded.
EdgePointSet extractEdgePoints(const GrayImage& image, const CircleEstimate& init,
                               const EyeContour* mask, const RobustFitConfig& cfg);

// Sum of squared radial residuals (no averaging, no robustness).
double plainCircleCost(const std::vector<Point2>& points, double a, double b, double r);

// Robust circle fit: Gauss-Newton / IRLS on
//   C2 = w1 * sum_i rho(||e_i - (a,b)|| - r) + w2 (a-a0)^2 + w2 (b-b0)^2
//        + w3 (r - rDefault)^2
// with the Tukey parameter scheduled from tukeyInitialFactor*rInit down to
// tukeyFinalFactor*rInit after first convergence. Fewer than 3 points
// returns the prior, flagged. Steps that increase C2 are halved up to 8
// times. `trace` (optional) records the accepted cost per iteration.
CircleEstimate robustFit(const EdgePointSet& points, Point2 priorCenter, double rDefault,
                         double rInit, const RobustFitConfig& cfg,
                         std::vector<FitTraceEntry>* trace = nullptr);

struct RefineResult {
    CircleEstimate right;
    CircleEstimate left;
};

// Per-eye circle refinement of regressor centers: rInit = rDefault
// = 0.1 * ||E_inter||, priors at the regressor output. Contours may be
// nullptr when no mask is available.
RefineResult refine(const GrayImage& image, Point2 centerRight, Point2 centerLeft,
                    const EyeAnchor& anchor, const EyeContour* contourRight,
                    const EyeContour* contourLeft, const RobustFitConfig& cfg = {});

} // namespace irisdet
