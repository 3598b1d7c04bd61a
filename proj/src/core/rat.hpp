#pragma once
#include <boost/multiprecision/cpp_int.hpp>

namespace qs {
using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;
}  // namespace qs
