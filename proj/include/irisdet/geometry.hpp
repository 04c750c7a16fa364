#pragma once

#include <utility>
#include <vector>

#include "irisdet/types.hpp"

namespace irisdet {

// The four eye corners delivered by a facial feature aligner, image pixels.
// "Right"/"left" are the subject's right and left eyes.
struct EyeCorners {
    Point2 rightOuter;
    Point2 rightInner;
    Point2 leftInner;
    Point2 leftOuter;
};

// Per-eye anchor points (corner midpoints) and the interocular vector.
struct EyeAnchor {
    Point2 cR;
    Point2 cL;
    Point2 interOcular; // cL - cR
    double interOcularDist() const { return norm(interOcular); }
};

// Similarity transform between image and face-normalized coordinates:
// cR maps to (0,0), cL maps to (1,0).
class NormalizationTransform {
public:
    NormalizationTransform() = default;

    static NormalizationTransform fromAnchor(const EyeAnchor& anchor);

    // image px -> normalized
    Point2 apply(Point2 imagePt) const {
        Point2 d = imagePt - origin_;
        return {scale_ * (r00_ * d.x + r01_ * d.y), scale_ * (r10_ * d.x + r11_ * d.y)};
    }

    // normalized -> image px
    Point2 invert(Point2 normPt) const {
        double ux = normPt.x / scale_;
        double uy = normPt.y / scale_;
        return {origin_.x + r00_ * ux + r10_ * uy, origin_.y + r01_ * ux + r11_ * uy};
    }

    double scale() const { return scale_; }

private:
    double scale_ = 1.0; // 1 / interocular distance
    double r00_ = 1.0, r01_ = 0.0, r10_ = 0.0, r11_ = 1.0;
    Point2 origin_; // cR
};

// Pair of eye centers, stored exclusively in the normalized frame.
struct Shape {
    Point2 xR;
    Point2 xL;
};

// Per-eye contour polygon from the aligner, image pixels, ordered.
struct EyeContour {
    std::vector<Point2> points;
};

// Corner midpoints + the similarity transform. Throws DataError on a
// degenerate (zero-length) interocular vector or coincident corner pairs.
std::pair<EyeAnchor, NormalizationTransform> buildTransform(const EyeCorners& corners);

// S^0: cR and cL in the normalized frame, ((0,0),(1,0)) by construction.
Shape initialShape();

// Height-to-width ratio of the eye opening: sqrt of the minor/major
// second-moment eigenvalue ratio of the contour points. Rigid-invariant.
double closureRatio(const EyeContour& contour);

bool pointInPolygon(Point2 p, const EyeContour& contour);
double distanceToPolygon(Point2 p, const EyeContour& contour);

// True iff p lies inside the contour at distance >= erosionPx from its edge.
bool pointInEyeMask(Point2 p, const EyeContour& contour, double erosionPx);

} // namespace irisdet
