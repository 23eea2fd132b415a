#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nurowski {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// direct: 5 small^2 - big^2 = 1 from (2,1); dual: 10 small^2 - big^2 = 1 from (3,1).
enum class PellFamily { direct, dual };

struct PellPair {
    int index = 0;      // n >= 0
    BigInt big;         // m resp. alpha
    BigInt small;       // m~ resp. alpha~
};

// Exact-integer solutions by the recurrence obtained from squaring the
// fundamental unit; every returned pair satisfies its Pell identity exactly.
std::vector<PellPair> pell_enumerate(PellFamily family, int count);

bool pell_identity_holds(PellFamily family, const PellPair& p);

}  // namespace nurowski
