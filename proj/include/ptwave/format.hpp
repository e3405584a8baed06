#pragma once

#include <string>

namespace ptwave::fmt {

// Shortest decimal string that round-trips to the same double. Used for all
// machine-readable output so identical configs give identical bytes.
std::string full(double v);

// Six significant digits for human-facing tables.
std::string sig6(double v);

}  // namespace ptwave::fmt
