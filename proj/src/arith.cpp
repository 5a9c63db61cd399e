#include "grcone/arith.hpp"

#include <stdexcept>

namespace grcone {

Int binom(long n, long k) {
  if (n < 0) throw std::invalid_argument("binom: n < 0");
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n < 0");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rat pow_rat(const Rat& b, int e) {
  if (e == 0) return Rat(1);
  if (b == 0 && e < 0) throw std::invalid_argument("pow_rat: 0 to negative power");
  Rat base = e > 0 ? b : Rat(1) / b;
  int n = e > 0 ? e : -e;
  Rat acc(1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  acc.canonicalize();
  return acc;
}

}  // namespace grcone
