#pragma once

#include <string>

#include "nodal/fiber.hpp"

namespace nodal {

/**
 * Deterministic SVG 1.1 drawing of the fiber polygon: one closed path plus a
 * coordinate label per vertex.  Lattice units are blown up by a fixed integer
 * scale and the view box padded by a tenth per side, so equal polygons always
 * produce byte-identical output.
 */
std::string to_svg(const FiberPolygon& p);

void write_svg(const FiberPolygon& p, const std::string& path);

}  // namespace nodal
