#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qalinks {

// Tree counts grow exponentially with crossing number, so every count and
// signed sum is an arbitrary-precision integer.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline std::string to_string(const Integer& value) { return value.str(); }

}  // namespace qalinks
