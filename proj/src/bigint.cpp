#include "rankproj/bigint.hpp"

namespace rankproj {

BigInt binomial(long a, long b) {
  BigInt out;
  if (a < 0 || b < 0 || b > a) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

}  // namespace rankproj
