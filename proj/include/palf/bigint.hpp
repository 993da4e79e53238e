#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace palf {

/// Slope coordinates grow exponentially under Hurwitz moves, so they are kept
/// exact; everything else stays in checked 64-bit arithmetic.
using BigInt = boost::multiprecision::cpp_int;

/// Throws Overflow when v does not fit.
int64_t to_int64(const BigInt& v, const std::string& what);

} // namespace palf
