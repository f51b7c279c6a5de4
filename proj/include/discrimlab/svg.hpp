#pragma once

#include "discrimlab/nvg.hpp"

#include <optional>
#include <ostream>

namespace discrimlab {

/// Draws the translated lines of a k = 2 arrangement. With a T-set the
/// vertices P_i are marked and the K_T edges drawn. The view box is the
/// bounding box of the vertices (or of all pairwise line crossings when no
/// T-set is given) padded by 10% per side. Exact coordinates are rounded to
/// double only here.
void emit_svg(const CentralArrangement& a, const Translate& t, const std::optional<TSet>& T, std::ostream& out);

}  // namespace discrimlab
