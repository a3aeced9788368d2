#pragma once

#include <gmpxx.h>

#include <string>

namespace rankproj {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// C(a, b), zero whenever b < 0, a < 0 or b > a.
BigInt binomial(long a, long b);

std::string to_decimal(const BigInt& value);

}  // namespace rankproj
