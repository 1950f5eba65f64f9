#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ferrers {

// Weights and coefficients grow factorially with the number of rooks, so every
// count, weight and polynomial coefficient is an arbitrary-precision integer.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& value) { return value.str(); }

inline std::optional<std::int64_t> to_int64(const Integer& value) {
  if (value < std::numeric_limits<std::int64_t>::min() ||
      value > std::numeric_limits<std::int64_t>::max()) {
    return std::nullopt;
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace ferrers
