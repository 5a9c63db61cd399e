#pragma once

#include <map>
#include <vector>

#include "grcone/glsm.hpp"
#include "grcone/hilbert.hpp"

namespace grcone {

// Sparse Laurent polynomial in a fixed number of variables.
class LaurentPoly {
 public:
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}
  static LaurentPoly monomial(std::vector<int> exponents, Int coeff);

  int nvars() const { return nvars_; }
  void add_term(const std::vector<int>& e, const Int& c);
  Int coeff(const std::vector<int>& e) const;
  Int constant_term() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }

 private:
  int nvars_;
  std::map<std::vector<int>, Int> terms_;
};

// Dimension of the degree-m piece of the invariant ring of GL(Z) acting on
// Hom(V, Z) x F, graded by polynomial degree along F.  Weyl integration
// reduces to a constant-term extraction; supported for k <= 2.
Int molien_invariant_dim(const GLSMPresentation& p, int m);

// Euler characteristic by torus localization at the coordinate fixed points.
// Torus values are x^p for distinct primes p selected by `draw`; the
// fixed-point sum is formed over a common denominator in Z[x] and the exact
// division is the convention check (the quotient is the character of the
// alternating cohomology sum, and its value at x = 1 is the integer returned).
// Supported for N <= 8.
Int localization_euler(const HomogeneousBundle& bundle, int draw = 0);

}  // namespace grcone
