#include <doctest.h>

#include <vector>

#include "grcone/hilbert.hpp"
#include "grcone/oracles.hpp"
#include "grcone/presets.hpp"

using namespace grcone;

namespace {

SchurExpansion tensor(const SchurExpansion& a, const SchurExpansion& b) {
  SchurExpansion out(a.rank());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Int c = ca * cb;
      for (const auto& [w, m] : lr_product(wa, wb).terms()) out.add(w, c * m);
    }
  return out;
}

// Pairwise Euler characteristics of the endomorphism bundle, localization
// route.  Equals dim_Lambda when the higher cohomology vanishes.
Int lambda_by_localization(const GLSMPresentation& p, int m, int draw) {
  GrassmannianContext ctx = p.ctx();
  SchurExpansion sym = sym_power_of_bundle(m, p.bundle());
  Int total = 0;
  for (const Partition& pa : ctx.box())
    for (const Partition& pb : ctx.box()) {
      MixedWeight a = MixedWeight::from_partition(pa, ctx.k);
      MixedWeight b = MixedWeight::from_partition(pb, ctx.k);
      SchurExpansion hom(ctx.k);
      for (const auto& [w, c] : lr_product(a.dual(), b).terms()) hom.add(w, c);
      total += localization_euler(HomogeneousBundle(ctx, tensor(hom, sym)), draw);
    }
  return total;
}

}  // namespace

TEST_SUITE("hilbert") {

TEST_CASE("coordinate ring dimensions") {
  GLSMPresentation conic = parse_preset("ci:2:2").presentation;
  for (int m = 0; m <= 3; ++m) CHECK(dim_R(conic, m) == 2 * m + 1);

  GLSMPresentation cubic = parse_preset("ci:3:3").presentation;
  for (int m = 0; m <= 4; ++m) CHECK(dim_R(cubic, m) == binom(3 * m + 2, 2));

  GLSMPresentation bd = parse_preset("beauville-donagi").presentation;
  CHECK(dim_R(bd, 0) == 1);
  CHECK(dim_R(bd, 1) == 56);
}

TEST_CASE("endomorphism algebra, two routes") {
  GLSMPresentation conic = parse_preset("ci:2:2").presentation;
  std::vector<Int> expected = {4, 12, 20, 28};
  for (int m = 0; m <= 3; ++m) {
    CHECK(dim_Lambda(conic, m) == expected[m]);
    CHECK(dim_Lambda_closed_form_CI(2, {2}, m) == expected[m]);
  }

  CHECK(dim_Lambda_closed_form_CI(3, {3}, 0) == 15);
  GLSMPresentation pair = parse_preset("ci:5:2,3").presentation;
  for (int m = 0; m <= 2; ++m)
    CHECK(dim_Lambda(pair, m) == dim_Lambda_closed_form_CI(5, {2, 3}, m));

  CHECK_THROWS_AS(dim_Lambda_closed_form_CI(4, {}, 1), std::invalid_argument);
}

TEST_CASE("endomorphism algebra against localization") {
  GLSMPresentation cubic = parse_preset("ci:3:3").presentation;
  for (int m = 0; m <= 2; ++m)
    CHECK(dim_Lambda(cubic, m) == lambda_by_localization(cubic, m, m % 2));

  GLSMPresentation bd = parse_preset("beauville-donagi").presentation;
  CHECK(dim_Lambda(bd, 0) == lambda_by_localization(bd, 0, 0));
}

TEST_CASE("module dimensions") {
  GLSMPresentation bd = parse_preset("beauville-donagi").presentation;
  CHECK(dim_M_alpha(bd, Partition({1}), 0) == 6);
  CHECK(dim_M_alpha(bd, Partition(std::vector<int>{}), 1) == dim_R(bd, 1));

  GLSMPresentation cubic = parse_preset("ci:3:3").presentation;
  CHECK(dim_M_alpha(cubic, Partition({1}), 0) == 3);
  // O(2+3m) sections on the plane.
  CHECK(dim_M_alpha(cubic, Partition({2}), 0) == 6);
  CHECK(dim_M_alpha(cubic, Partition({2}), 1) == 21);
}

TEST_CASE("vanishing holds for the box collection") {
  GLSMPresentation conic = parse_preset("ci:2:2").presentation;
  VanishingReport rep = vanishing_check(conic, 1, 3);
  CHECK(rep.ok);
  CHECK(!rep.witness);
  CHECK(rep.keys_checked > 0);

  GLSMPresentation bd = parse_preset("beauville-donagi").presentation;
  VanishingReport slice = vanishing_check_degree(bd, 8, 0);
  CHECK(slice.ok);
  CHECK(slice.keys_checked > 200);
}

TEST_CASE("vanishing failure is witnessed") {
  GLSMPresentation conic = parse_preset("ci:2:2").presentation;
  std::vector<MixedWeight> bad = {MixedWeight({0}), MixedWeight({-2})};
  VanishingReport rep = vanishing_check(conic, 1, 1, nullptr, &bad);
  CHECK(!rep.ok);
  REQUIRE(rep.witness);
  CHECK(rep.witness->m == 0);
  CHECK(rep.witness->i == 1);
  CHECK(rep.witness->gamma == MixedWeight({-2}));
  CHECK(rep.witness->alpha == Partition(std::vector<int>{}));
  CHECK(rep.witness->beta == Partition(std::vector<int>{}));
  CHECK(rep.keys_checked == 2);
}

}  // TEST_SUITE
