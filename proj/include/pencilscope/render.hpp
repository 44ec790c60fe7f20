#pragma once

#include <span>
#include <string>

#include "pencilscope/pseudogrid.hpp"

namespace pencilscope {

/// "re,im,log10r" header, one row per grid point in row-major order.
std::string field_csv(const Field& f);

/// {"levels": [{"epsilon", "level", "empty", "polylines": [{"closed", "vertices"}]}]}
std::string contours_json(const ContourSet& cs);

/// Axes, eigenvalue markers and one path per polyline (class "eps-k" for
/// the k-th ε). Closed polylines end in Z.
std::string render_svg(const ContourSet& cs, std::span<const Complex> eigs, const GridSpec& g,
                       const std::string& title = "");

}  // namespace pencilscope
