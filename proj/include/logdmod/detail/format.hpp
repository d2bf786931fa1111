#pragma once

#include <span>
#include <string>
#include <vector>

#include "logdmod/poly.hpp"

namespace logdmod::detail {

// Prints terms in the given sequence; `names[i]` labels slot i.
std::string format_terms(std::span<const Term> terms, std::span<const std::string> names,
                         PrintStyle style);

}  // namespace logdmod::detail
