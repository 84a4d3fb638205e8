#pragma once

#include <vector>

#include "absarith/smirnov.hpp"

namespace absarith {

// Order of a*b^-1 at every prime <= bound (0 marks primes dividing a*b),
// in ascending prime order.  The brute-force oracle behind the fiber tables.
std::vector<std::pair<u64, u64>> order_scan(const Int& a, const Int& b, u64 bound);
std::vector<std::pair<u64, u64>> order_scan_serial(const Int& a, const Int& b, u64 bound);

}  // namespace absarith
