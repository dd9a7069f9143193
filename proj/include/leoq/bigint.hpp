#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace leoq {

// Exact signed integer. Sequence terms grow exponentially, so every
// fixed-width type overflows within the first hundred indices.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace leoq
