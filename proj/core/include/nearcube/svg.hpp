#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "nearcube/autocorr.hpp"
#include "nearcube/polybox.hpp"

namespace nearcube {

struct SliceRendering {
  /// The planar set drawn: the set itself in 2D, its cross-section in 3D.
  PolyBox section;
  /// Plot range, taken from the bounding box of the full set on the two
  /// drawn axes so that slices of one set share a frame.
  Box viewport;
  std::size_t first_axis = 0;
  std::size_t second_axis = 1;
  std::string svg;
};

/// Static SVG of a planar set or of the cross-section of a 3D set at
/// x[axis] = level, one rectangle per box. Output depends only on the inputs.
///
/// Throws DimensionMismatch unless dim is 2 or 3, InvalidInput when a 3D set
/// comes without axis/level or the level lies outside the bounding box.
SliceRendering render_slice(const PolyBox& set, std::optional<std::size_t> axis = std::nullopt,
                            std::optional<Rational> level = std::nullopt);

/// Static SVG line graph of a piecewise-linear function over its support.
std::string render_graph(const PiecewiseLinear1D& g);

}  // namespace nearcube
