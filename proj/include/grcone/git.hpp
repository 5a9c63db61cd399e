#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grcone/plethysm.hpp"

namespace grcone {

using RatMatrix = std::vector<std::vector<Rat>>;  // row major

struct RrefResult {
  int rank;
  std::vector<int> pivot_cols;
  RatMatrix rows;  // reduced row echelon form, zero rows dropped
};

RrefResult rref(RatMatrix m);

// One-parameter subgroup diagonalized in some basis of Z = C^k.
struct OneParamSubgroup {
  std::vector<int> weights;
};

enum class Stability { Stable, Semistable, Unstable };

// For the determinant character with t != 0 the semistable and stable loci of
// Hom(V, Z) coincide, so Semistable is never produced; it is kept so the
// verdict type matches the general trichotomy.
struct StabilityVerdict {
  Stability status;
  std::optional<OneParamSubgroup> destabilizer;
  std::optional<Rat> pairing;  // <det^t, destabilizer>, negative iff destabilizing
  // Basis of Z adapted to the destabilizer: the first rank(u) vectors span
  // im(u), the rest are the standard vectors off the pivot coordinates.
  std::optional<RatMatrix> adapted_basis;
};

// u is a k x N matrix (a point of Hom(V, Z)); t is the exponent of the
// determinant character.  Requires 1 <= k < N and t != 0.
StabilityVerdict classify(const RatMatrix& u, const Rat& t);

Rat mu_pairing(const OneParamSubgroup& xi, const Rat& t);

// Multiset of xi-weights on S^lambda(Z*): negated content pairings, keyed by
// weight with multiplicities.
std::map<int, Int> weights_on_schur_dual(const OneParamSubgroup& xi, const Partition& lambda);

struct MatterSummand {
  Partition lambda;
  bool dual = true;  // false only appears in engineered failure inputs
};

struct Condition3Witness {
  int r;  // destabilizer pattern (0^r, (-1)^(k-r))
  Partition lambda;
  int weight;
};

struct Condition3Result {
  bool ok;
  std::optional<Condition3Witness> witness;
};

// Every optimal destabilizer pattern must act with non-negative weights on
// every matter summand.
Condition3Result condition3_check(int k, const std::vector<MatterSummand>& summands);

struct GorensteinCheck {
  Int c_E;           // determinant degree of the fiber in units of det Z
  Int balance;       // N - c_E; zero iff det of the total space is trivial
  bool det_trivial;
  std::optional<int> nonstable_codim;  // computed for k == 1 families only
  std::optional<bool> codim_ok;        // nonstable_codim >= 2
};

GorensteinCheck gorenstein_check(int N, const BundleSpec& spec);

// codim of the non-surjective locus inside Hom(V, Z).
int unstable_codim(int N, int k);

}  // namespace grcone
