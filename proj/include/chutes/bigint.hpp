#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace chutes {

using BigInt = boost::multiprecision::cpp_int;
__extension__ typedef unsigned __int128 u128;

inline std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(u128 v);

/// Parses a non-negative decimal integer; throws std::invalid_argument otherwise.
BigInt parse_bigint(std::string_view text);

}  // namespace chutes
