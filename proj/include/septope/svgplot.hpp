#pragma once

#include <string>
#include <vector>

#include "septope/roots.hpp"

namespace septope {

// Deterministic scatter plot of the root set: fixed 800x600 viewBox, the
// symmetry line Re = -1/2, dashed vertical guides at -D, -D/2, D/2-1, D-1
// and D, labeled axes.  Byte-identical output for identical inputs.
std::string root_scatter_svg(int d, const std::vector<certified_root>& roots);

}  // namespace septope
