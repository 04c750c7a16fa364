#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "irisdet/geometry.hpp"
#include "irisdet/hog.hpp"
#include "irisdet/image.hpp"
#include "irisdet/rng.hpp"

namespace irisdet {

// Shape increment (dxR.x, dxR.y, dxL.x, dxL.y), normalized units.
using ShapeDelta = std::array<float, 4>;

// Complete binary tree of `depth` node levels; the last level holds the
// leaves, so a depth-4 tree has 7 split nodes and 8 leaves and needs 3
// feature evaluations per descent. Splits stored in breadth-first order.
struct RegressionTree {
    int depth = 4;
    std::vector<DiffFeature> splits;
    std::vector<ShapeDelta> leaves;

    int internalLevels() const { return depth - 1; }
    int internalCount() const { return (1 << (depth - 1)) - 1; }
    int leafCount() const { return 1 << (depth - 1); }

    const ShapeDelta& descend(const HogDescriptor& right, const HogDescriptor& left) const;
};

struct ForestLevel {
    std::vector<RegressionTree> trees;
};

struct PcaShapeModel {
    std::array<float, 4> meanShape{};
    std::vector<std::array<float, 4>> basis; // orthonormal rows
    std::vector<float> variances;            // non-increasing
};

struct CascadeModel {
    int formatVersion = 1;
    HogConfig hogConfig;
    float shrinkage = 0.1f;
    PcaShapeModel shapePrior;
    std::vector<ForestLevel> levels;
};

struct TrainConfig {
    int oversample = 50;
    Interval translationRangeX{-0.1, 0.1};
    Interval translationRangeY{-0.03, 0.03};
    int poolSize = 20;
    int treesPerLevel = 200;
    int treeDepth = 4;
    int levels = 10;
    double shrinkage = 0.1;
    Interval thresholdRange{-0.3, 0.3};
    HogConfig hog;
    std::uint64_t rngSeed = 1;
};

struct PredictStats {
    std::size_t featureComparisons = 0; // one per split node traversed
    std::size_t deltaAdditions = 0;     // one per leaf scalar added
};

// Eq.-style cascade inference: start from S^0 = ((0,0),(1,0)); per level
// extract per-eye HoG at the current estimates mapped to image pixels,
// add the sum of the level's leaf deltas. Deterministic.
Shape predict(const CascadeModel& model, const GrayImage& image, const EyeAnchor& anchor,
              const NormalizationTransform& t, PredictStats* stats = nullptr);

// Translation-only Procrustes (each shape recentred onto the global mean
// shape's mean point) followed by PCA; all components retained.
PcaShapeModel buildShapePrior(const std::vector<Shape>& shapes);

// `oversample` initial shapes for one training image: PCA coefficients
// uniform in [-2 sqrt(lambda_k), 2 sqrt(lambda_k)], recentred at the mean,
// plus one shared translation from the configured ranges.
std::vector<Shape> sampleInitialShapes(const PcaShapeModel& prior, const TrainConfig& cfg,
                                       Rng& rng);

// One training image: pixel-space landmarks plus ground-truth centers.
struct TrainingItem {
    const GrayImage* image = nullptr;
    EyeCorners corners;
    Point2 centerRight; // image px
    Point2 centerLeft;
};

struct TrainTrace {
    std::vector<double> levelMeanError;      // mean normalized error after each level,
                                             // preceded by the initial value
    std::vector<double> perTreeResidualNorm; // mean residual norm after every tree
};

// Gradient-boosted training. Deterministic for a fixed seed regardless of
// thread count. Throws DataError (with the item index) on invalid items.
CascadeModel trainCascade(const std::vector<TrainingItem>& corpus, const TrainConfig& cfg,
                          TrainTrace* trace = nullptr);

// Versioned structured-text serialization; grammar in docs/formats.md.
// loadModel distinguishes version, parse, and invariant errors.
void saveModel(const CascadeModel& model, std::ostream& out);
CascadeModel loadModel(std::istream& in);
void saveModelFile(const CascadeModel& model, const std::string& path);
CascadeModel loadModelFile(const std::string& path);

// Per-sample per-eye descriptors at the current shape estimates; the
// per-level batch kernel of training (OpenMP over samples).
struct LevelDescriptors {
    std::vector<HogDescriptor> right;
    std::vector<HogDescriptor> left;
};
LevelDescriptors computeLevelDescriptors(const std::vector<const GrayImage*>& images,
                                         const std::vector<EyeAnchor>& anchors,
                                         const std::vector<NormalizationTransform>& transforms,
                                         const std::vector<Shape>& shapes,
                                         const std::vector<int>& imageIndex,
                                         const HogConfig& cfg);

} // namespace irisdet
