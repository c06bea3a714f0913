#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace qwnull {

// Arbitrary-precision integers and rationals. cpp_rational keeps values in
// lowest terms after every operation, which the canonical subspace form
// relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Checked narrowing for serialization. Canonical bases at the supported
// orders stay tiny, but refuse silent truncation regardless.
inline std::int64_t to_int64(const Int& x) {
    if (x < std::numeric_limits<std::int64_t>::min() ||
        x > std::numeric_limits<std::int64_t>::max()) {
        throw std::overflow_error("integer entry exceeds the int64 serialization range");
    }
    return x.convert_to<std::int64_t>();
}

}  // namespace qwnull
