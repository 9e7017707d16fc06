#pragma once

// Text forms accepted on the command line: map specs, index ranges and
// field descriptors.

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "amzeta/fixed_points.hpp"

namespace amzeta::cli {

/// power:p,m | additive:p,m,[a] | pthpow:p,"poly" | pthpow:p,m,"poly" |
/// general:p,m,"poly"
MapSpec parse_map_spec(std::string_view text);

/// "lo..hi" (inclusive) or a single integer.
std::pair<std::uint64_t, std::uint64_t> parse_range(std::string_view text);

/// "p^k" or "p".
std::pair<std::uint32_t, unsigned> parse_field(std::string_view text);

/// Comma-separated unsigned integers; empty text gives an empty list.
std::vector<std::uint64_t> parse_uint_list(std::string_view text);
std::vector<std::int64_t> parse_int_list(std::string_view text);

}  // namespace amzeta::cli
