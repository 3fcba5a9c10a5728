#pragma once

#include <string>

namespace simplicial {

/// Shortest round-trip decimal form; integral values keep a trailing ".0"
/// so CSV columns read as reals ("1.0", "0.25", "1e-300").
std::string format_real(double value);

}  // namespace simplicial
