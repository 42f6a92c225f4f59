#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace klr {

// All coefficients are exact arbitrary-size integers. No field arithmetic.
using Int = boost::multiprecision::cpp_int;

}  // namespace klr
