#pragma once

#include <string>

#include "kdyck/paths.hpp"
#include "kdyck/trees.hpp"

namespace kdyck {

// Hex fill for a residue class: class k is always red, the others cycle
// through a fixed palette.
std::string class_color(std::size_t cls, std::size_t k);

// Lattice drawing on a unit grid: up-steps in dark gray, each down-step in
// the color of its landing-residue class, the floor -t dashed when t > 0.
std::string render_path_svg(const KDyckPath& p);
std::string render_path_tikz(const KDyckPath& p);

// Circular layout: nodes on a circle in contour (preorder) order, so the
// chords never cross; edges colored by their residue class.  Throws
// LayoutError if the computed positions collide.
std::string render_tree_svg(const KnctTree& t);
std::string render_tree_tikz(const KnctTree& t);

} // namespace kdyck
