#pragma once

#include "palf/curves.hpp"
#include "palf/factor.hpp"
#include "palf/matrix.hpp"
#include "palf/mcg.hpp"

#include <string_view>

namespace palf {

/// `d<i>` | `<p>/<q>` | `{i,j,...}`. Slopes must be given in lowest terms
/// (NonCoprime otherwise) and need the 4-holed page.
Curve parse_curve(std::string_view text, Surface page = kFourHoled);

/// Comma-separated curves in tuple order. Throws EmptyTuple on blank input.
TwistTuple parse_tuple(std::string_view text, Surface page = kFourHoled);

/// Product of twist factors in composition order, e.g. `t(1/0) t(0/1)^-1 t(d1)`.
MappingClass parse_word(std::string_view text);

/// Row-major integer matrix `[[1,2],[3,4]]`.
IntMatrix parse_matrix(std::string_view text);

} // namespace palf
