#include <doctest.h>

#include <stdexcept>

#include "grcone/oracles.hpp"
#include "grcone/presets.hpp"

using namespace grcone;

TEST_SUITE("oracles") {

TEST_CASE("laurent polynomial arithmetic") {
  LaurentPoly a(1);
  a.add_term({0}, 1);
  a.add_term({1}, 1);
  LaurentPoly b(1);
  b.add_term({0}, 1);
  b.add_term({1}, -1);

  LaurentPoly prod = a * b;
  CHECK(prod.coeff({0}) == 1);
  CHECK(prod.coeff({1}) == 0);
  CHECK(prod.coeff({2}) == -1);
  CHECK(prod.constant_term() == 1);
  CHECK(prod.terms().size() == 2);

  // Cancelling terms are erased rather than stored as zeros.
  LaurentPoly c(1);
  c.add_term({3}, 5);
  c.add_term({3}, -5);
  CHECK(c.terms().empty());

  LaurentPoly m = LaurentPoly::monomial({1, -1}, 2);
  CHECK(m.nvars() == 2);
  CHECK(m.coeff({1, -1}) == 2);

  CHECK_THROWS_AS(a.add_term({0, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(a * m, std::invalid_argument);
  LaurentPoly d(2);
  CHECK_THROWS_AS(d += a, std::invalid_argument);
}

TEST_CASE("invariant-ring dimensions by Weyl integration") {
  GLSMPresentation conic = parse_preset("ci:2:2").presentation;
  CHECK(molien_invariant_dim(conic, 0) == 1);
  CHECK(molien_invariant_dim(conic, 1) == 3);

  GLSMPresentation bd = parse_preset("beauville-donagi").presentation;
  CHECK(molien_invariant_dim(bd, 1) == 56);

  for (const char* text : {"beauville-donagi", "ci:2:2", "ci:3:3",
                           "isotropic-orth:6:2", "isotropic-symp:6:2"}) {
    GLSMPresentation p = parse_preset(text).presentation;
    for (int m = 0; m <= 2; ++m)
      CHECK(molien_invariant_dim(p, m) == dim_R(p, m));
  }

  GLSMPresentation wide(6, 3, 1, BundleSpec(3, {{1, Partition({1})}}));
  CHECK_THROWS_AS(molien_invariant_dim(wide, 1), std::invalid_argument);
}

TEST_CASE("localization on the projective line") {
  GrassmannianContext line(2, 1);
  for (int d = -4; d <= 5; ++d) {
    HomogeneousBundle b = irreducible_bundle(line, MixedWeight({d}));
    CHECK(localization_euler(b) == d + 1);
  }
}

TEST_CASE("localization pins on Grassmannians") {
  GrassmannianContext gr24(4, 2);
  CHECK(localization_euler(irreducible_bundle(gr24, MixedWeight({1, 1}))) == 6);
  CHECK(localization_euler(irreducible_bundle(gr24, MixedWeight({-4, -4}))) == 1);
  CHECK(localization_euler(irreducible_bundle(gr24, MixedWeight({0, 0}))) == 1);

  GrassmannianContext plane(3, 1);
  CHECK(localization_euler(irreducible_bundle(plane, MixedWeight({-3}))) == 1);
  CHECK(localization_euler(irreducible_bundle(plane, MixedWeight({-2}))) == 0);
}

TEST_CASE("localization is draw independent and matches the Weyl-character route") {
  GrassmannianContext gr25(5, 2);
  SchurExpansion mixed(2);
  mixed.add(MixedWeight({2, -1}), 1);
  mixed.add(MixedWeight({1, 1}), 2);
  HomogeneousBundle b(gr25, mixed);

  Int reference = euler_characteristic(b);
  for (int draw = 0; draw < 5; ++draw)
    CHECK(localization_euler(b, draw) == reference);

  GrassmannianContext gr36(6, 3);
  HomogeneousBundle c = irreducible_bundle(gr36, MixedWeight({1, 0, -2}));
  Int ref_c = euler_characteristic(c);
  for (int draw = 0; draw < 3; ++draw)
    CHECK(localization_euler(c, draw) == ref_c);
}

TEST_CASE("localization is additive over direct sums") {
  GrassmannianContext gr24(4, 2);
  SchurExpansion sum(2);
  sum.add(MixedWeight({1, 0}), 1);
  sum.add(MixedWeight({0, -1}), 1);
  Int whole = localization_euler(HomogeneousBundle(gr24, sum));
  Int parts = localization_euler(irreducible_bundle(gr24, MixedWeight({1, 0}))) +
              localization_euler(irreducible_bundle(gr24, MixedWeight({0, -1})));
  CHECK(whole == parts);
  CHECK(whole == 4);
}

TEST_CASE("localization rejects large ambient spaces") {
  GrassmannianContext big(9, 2);
  CHECK_THROWS_AS(localization_euler(irreducible_bundle(big, MixedWeight({1, 0}))),
                  std::invalid_argument);
}

}  // TEST_SUITE
