#pragma once

#include <gmpxx.h>

#include <string>

namespace grcone {

using Int = mpz_class;
using Rat = mpq_class;

// binom(n, k) = 0 for k < 0 or k > n; n must be >= 0.
Int binom(long n, long k);

Int factorial(int n);

// e may be negative when b != 0.
Rat pow_rat(const Rat& b, int e);

}  // namespace grcone
