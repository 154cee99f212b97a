#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fpdea/fp.hpp"
#include "fpdea/panel.hpp"

namespace fpdea {

enum class IsoquantTag { True, Ccr, Fp, Bg };

const char* isoquant_tag_name(IsoquantTag tag);  // TRUE, CCR, FP, BG

// Boundary of a unit-output input requirement set in the two-input
// plane. Vertices run left to right: increasing x1, decreasing x2. The
// set continues upward from the first vertex along ray_first and
// rightward from the last along ray_last.
struct IsoquantPolyline {
    IsoquantTag tag = IsoquantTag::True;
    std::vector<std::array<double, 2>> vertices;
    std::array<double, 2> ray_first{0.0, 1.0};
    std::array<double, 2> ray_last{1.0, 0.0};
};

// Unit isoquant of the chosen estimator over a two-input, one-output
// panel. DMUs with zero output are ignored; all of them zero is
// DegenerateDmu, other shapes are WrongDimensions.
//
// CCR traces the lower-left hull of the output-normalized points. FP is
// the L-corner of the best per-input ratios when the structure makes
// the two inputs non-substitutable (the default), and falls back to the
// CCR hull when it declares nothing. BG is the slope -1 line through
// the best input-sum ratio. TRUE is the L-corner at (1,1).
IsoquantPolyline build_isoquant(const DmuPanel& panel, IsoquantTag tag,
                                const std::optional<FpStructure>& fp = std::nullopt);

// SVG overlay of the normalized scatter and the polylines. Fixed
// 640x480 canvas, axes spanning [0, 1.1 * max normalized coordinate],
// rays and out-of-range segments clipped at the plot box. TRUE is
// black, CCR blue, FP red, BG green. Byte-identical for identical
// inputs.
std::string to_svg(const std::vector<IsoquantPolyline>& lines, const DmuPanel& panel);

// to_svg written to a file. Throws IoFailure when the file cannot be
// written.
void render_svg(const std::vector<IsoquantPolyline>& lines, const DmuPanel& panel,
                const std::string& path);

// One row per vertex: estimator,x1,x2,point_order.
void write_vertex_csv(const std::vector<IsoquantPolyline>& lines, std::ostream& out);

}  // namespace fpdea
