#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace megs {

// Group orders overflow machine words quickly (5^75 and beyond).
using BigInt = boost::multiprecision::cpp_int;

}  // namespace megs
