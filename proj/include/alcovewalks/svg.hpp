#pragma once

#include <string>

#include "alcovewalks/multiplicity.hpp"

namespace aw {

/**
 * Static SVG picture of a semisimple-rank-2 apartment: the affine hyperplane
 * arrangement clipped to a bounding box, the shaded base alcove, the orbit
 * of -mu in bold, and (when lambda is given) the maximal-dimension weight
 * walks for every Weyl conjugate of lambda, one arrow per step, fold marks
 * at the f+ steps, endpoint vertices highlighted with one color per endpoint.
 *
 * Requires exactly two simple roots (InvalidArgument otherwise).
 */
std::string render_walks_svg(const RootDatum& R, const Vec& mu, const Vec* lambda);

}  // namespace aw
