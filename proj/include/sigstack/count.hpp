#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sigstack {

// Exact counts. Desk-scale values fit in 64 bits, the closed forms do not.
using Count = boost::multiprecision::cpp_int;

inline std::string to_string(const Count& c) { return c.str(); }

Count factorial(unsigned n);
Count catalan(unsigned n);

}  // namespace sigstack
