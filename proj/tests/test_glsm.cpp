#include <doctest.h>

#include <string>

#include "grcone/glsm.hpp"
#include "grcone/presets.hpp"

using namespace grcone;

TEST_SUITE("glsm") {

TEST_CASE("presentation validation") {
  BundleSpec line(1, {{1, Partition({2})}});
  CHECK_THROWS_AS(GLSMPresentation(1, 1, 1, line), std::invalid_argument);
  CHECK_THROWS_AS(GLSMPresentation(3, 1, 0, line), std::invalid_argument);
  CHECK_THROWS_AS(GLSMPresentation(3, 2, 1, line), std::invalid_argument);
  GLSMPresentation ok(3, 1, 2, line);
  CHECK(ok.t() == 2);
  CHECK(ok.ctx().dim() == 2);
}

TEST_CASE("axioms hold for the preset families") {
  for (const char* text : {"beauville-donagi", "ci:3:3", "isotropic-orth:6:2",
                           "isotropic-symp:6:2", "ci:5:2,3"}) {
    ValidationReport rep = validate(parse_preset(text).presentation);
    CHECK(rep.all_pass);
    REQUIRE(rep.checks.size() == 4);
    CHECK(rep.checks[0].name == "stable locus");
    CHECK(rep.checks[1].name == "quotient");
    CHECK(rep.checks[2].name == "destabilizer weights");
    CHECK(rep.checks[3].name == "unstable codimension >= 2");
  }
}

TEST_CASE("cone invariants for the cubic-fourfold family") {
  ConeInvariants inv = cone_invariants(parse_preset("beauville-donagi").presentation);
  CHECK(inv.dim_B == 8);
  CHECK(inv.rank_E == 4);
  CHECK(inv.dim_E == 12);
  CHECK(inv.dim_H == 56);
  CHECK(inv.c_E == 6);
  CHECK(inv.crepancy_target == 6);
  CHECK(inv.crepant_hypothesis);
  CHECK(inv.det_trivial);
  CHECK(!inv.nonstable_codim);

  REQUIRE(inv.dim_C_E);
  CHECK(*inv.dim_C_E == 12);
  REQUIRE(inv.birational);
  CHECK(*inv.birational);
  REQUIRE(inv.exc_codims.size() == 2);
  CHECK(inv.exc_codims[0] == 4);
  CHECK(inv.exc_codims[1] == 2);
  CHECK(*inv.min_preimage_codim == 2);

  CHECK(inv.normal_CM.value == std::optional<bool>(true));
  CHECK(inv.rational_sing.value == std::optional<bool>(true));
  // Codimension of the non-stable locus is not computed for k = 2, so the
  // Gorenstein conclusion stays open even though the determinant balances.
  CHECK(!inv.gorenstein.value.has_value());
  REQUIRE(inv.gorenstein.hypotheses.size() == 2);
  CHECK(inv.gorenstein.hypotheses[1].find("not computed") != std::string::npos);
}

TEST_CASE("cone invariants for hypersurface families") {
  ConeInvariants quintic = cone_invariants(parse_preset("ci:5:5").presentation);
  CHECK(quintic.det_trivial);
  REQUIRE(quintic.nonstable_codim);
  CHECK(*quintic.nonstable_codim == 1);
  CHECK(!quintic.gorenstein.value.has_value());

  ConeInvariants pair = cone_invariants(parse_preset("ci:6:3,3").presentation);
  CHECK(pair.det_trivial);
  CHECK(*pair.nonstable_codim == 2);
  CHECK(pair.gorenstein.value == std::optional<bool>(true));

  ConeInvariants off = cone_invariants(parse_preset("ci:6:2,2").presentation);
  CHECK(!off.det_trivial);
  CHECK(!off.gorenstein.value.has_value());
  CHECK(off.dim_H == hook_content_dim(Partition({2}), 6) * 2);
}

TEST_CASE("symmetric-power strata") {
  CHECK_THROWS_AS(catalecticant_invariants(4, 2, 1), std::invalid_argument);

  ConeInvariants quad3 = catalecticant_invariants(7, 3, 2);
  REQUIRE(quad3.exc_codims.size() == 3);
  CHECK(quad3.exc_codims[0] == 6);
  CHECK(quad3.exc_codims[1] == 3);
  CHECK(quad3.exc_codims[2] == 1);
  CHECK(*quad3.min_preimage_codim == 1);

  ConeInvariants cubic = catalecticant_invariants(6, 2, 3);
  CHECK(*quad3.birational == (quad3.dim_E == *quad3.dim_C_E));
  CHECK(*cubic.min_preimage_codim == 2);
  CHECK(cubic.dim_E == 12);
}

TEST_CASE("crepancy degrees") {
  auto bd = crepancy_degree(parse_preset("beauville-donagi").presentation);
  CHECK(bd.first == 6);
  CHECK(bd.second == 6);
  auto quintic = crepancy_degree(parse_preset("ci:5:5").presentation);
  CHECK(quintic.first == 5);
  CHECK(quintic.second == 5);
  auto off = crepancy_degree(parse_preset("ci:6:2,2").presentation);
  CHECK(off.first == 4);
  CHECK(off.second == 6);
}

TEST_CASE("isotropic dimensions") {
  IsotropicDims orth = isotropic_dims(6, 2, IsotropicKind::Orthogonal);
  CHECK(orth.dim_B == 8);
  CHECK(orth.rank_E == 3);
  CHECK(orth.dim_S_E == 5);

  IsotropicDims symp = isotropic_dims(6, 2, IsotropicKind::Symplectic);
  CHECK(symp.rank_E == 1);
  CHECK(symp.dim_S_E == 7);

  CHECK(isotropic_dims(12, 6, IsotropicKind::Orthogonal).dim_S_E == 36 - 21);

  CHECK_THROWS_AS(isotropic_dims(5, 3, IsotropicKind::Orthogonal), std::invalid_argument);
  CHECK_THROWS_AS(isotropic_dims(5, 2, IsotropicKind::Symplectic), std::invalid_argument);
  CHECK_THROWS_AS(isotropic_dims(6, 3, IsotropicKind::Symplectic), std::invalid_argument);
  CHECK_THROWS_AS(isotropic_dims(6, 0, IsotropicKind::Orthogonal), std::invalid_argument);
}

}  // TEST_SUITE
