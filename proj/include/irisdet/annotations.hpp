#pragma once

#include <optional>
#include <string>
#include <vector>

#include "irisdet/geometry.hpp"
#include "irisdet/image.hpp"

namespace irisdet {

enum class AnnotationSource { Manual, Auto, Synthetic };

const char* toString(AnnotationSource s);

// One image's labels. Corners/contours are optional because some external
// formats (BioID sidecars) carry centers only; operations that need them
// validate per record.
struct EyeAnnotation {
    std::string imageId;
    std::optional<EyeCorners> corners;
    std::optional<EyeContour> contourRight;
    std::optional<EyeContour> contourLeft;
    Point2 centerRight;
    Point2 centerLeft;
    AnnotationSource source = AnnotationSource::Manual;
    double occlusionFraction = 0.0; // synthetic renders: iris fraction hidden by lids
};

// Decodes common raster formats (backed by OpenCV imgcodecs), color
// converted to gray with the standard luma weights. Throws DataError.
GrayImage loadImage(const std::string& path);

// .pgm goes through the native binary P5 writer (byte-deterministic);
// other extensions through OpenCV imwrite.
void saveImage(const GrayImage& image, const std::string& path);

// Eye centers as labeled in a BioID-style sidecar: one header line, then
// left-x left-y right-x right-y. Labels are the file's own; callers map
// them to the toolkit's subject-right/subject-left convention.
struct BioidEyes {
    Point2 left;
    Point2 right;
};
BioidEyes loadBioidEyes(const std::string& path);

enum class AnnotationFormat { Native, BioidLike, Gi4eLike };

// Native: the toolkit's tagged line format (docs/formats.md).
// BioidLike: a listing of image paths; each image's <stem>.eye sidecar
//            supplies centers only (corners/contours left empty).
// Gi4eLike: whitespace-separated "name x1 y1 ... x6 y6" lines, points in
//           image order; mapped to subject-right-then-left on load.
std::vector<EyeAnnotation> loadAnnotations(const std::string& path, AnnotationFormat format);

// Native format, atomic write (temp file + rename).
void saveAnnotations(const std::vector<EyeAnnotation>& annotations, const std::string& path);

// Shared helper: write content to path atomically.
void writeFileAtomic(const std::string& path, const std::string& content);

// FNV-1a 64 over a file's bytes; used for corpus digests.
std::uint64_t fileDigest(const std::string& path);

} // namespace irisdet
