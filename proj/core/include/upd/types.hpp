#pragma once

#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace upd {

// Exponents, lattice coordinates and degrees. Family evaluation substitutes
// box coordinates into exponent forms, so these must not silently overflow.
using Integer = boost::multiprecision::cpp_int;

inline std::uint64_t to_u64_clamped(const Integer& v) {
  if (v < 0) return 0;
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace upd
