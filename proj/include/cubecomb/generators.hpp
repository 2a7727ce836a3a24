#pragma once

#include <span>

#include "cubecomb/document.hpp"
#include "cubecomb/median_graph.hpp"

namespace cubecomb {

// Path with n edges, vertices v0..vn.
MedianGraph path_graph(int n);

// Box {0..w1} x ... x {0..wd}, labels "(i,j,...)".
MedianGraph grid_graph(std::span<const int> widths);

// Ball of radius `depth` in the `degree`-regular tree (the root has `degree`
// children, every other internal vertex `degree - 1`).
MedianGraph tree_graph(int degree, int depth);

// n unit squares glued corner to corner along the diagonal of Z^2.
MedianGraph staircase_graph(int n);

// k >= 4 squares arranged cyclically around a centre vertex.
MedianGraph cyclic_squares_graph(int k);

MedianGraph product_graph(const MedianGraph& a, const MedianGraph& b);

// Non-median fixtures, kept for validation demos.
MedianGraph cycle_graph(int n);
MedianGraph complete_graph(int n);

// Throws BAD_PARAMS for unknown names or out-of-range parameters.
MedianGraph generate(const GeneratorSpec& spec);

}  // namespace cubecomb
