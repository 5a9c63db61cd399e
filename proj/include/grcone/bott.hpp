#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "grcone/partitions.hpp"

namespace grcone {

// Gr_k(V*) for an N-dimensional V; irreducible homogeneous bundles are keyed
// by rank-k weights gamma, normalized so that a partition key gamma is the
// bundle with H^0 = S^gamma(V).  Key (1,..,1) is the Pluecker line bundle and
// the canonical bundle is key (-N,...,-N).
struct GrassmannianContext {
  int N;
  int k;

  GrassmannianContext(int N_, int k_);

  int dim() const { return k * (N - k); }
  std::vector<Partition> box() const;  // partitions in a k x (N-k) box, lex order
};

struct BbwResult {
  int degree;          // the single cohomological degree that survives
  MixedWeight weight;  // rank-N highest weight of H^degree
};

// Bott's algorithm on the full GL(N) weight (gamma, 0, ..., 0): a repeat in
// gamma + rho kills all cohomology, otherwise the inversion count of the
// sort is the degree.
std::optional<BbwResult> bbw_irreducible(const MixedWeight& gamma,
                                         const GrassmannianContext& ctx);

// Key of the bundle whose cohomology is Serre-dual to key gamma.
MixedWeight serre_dual_weight(const MixedWeight& gamma, const GrassmannianContext& ctx);

class CohomologyTable {
 public:
  void add(int i, int m, const Int& dim);
  Int dim(int i, int m) const;
  Int total_dim(int m) const;
  Int euler(int m) const;
  bool zero_above_degree_zero(int i_max, int m) const;
  const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }
  void merge(const CohomologyTable& other);

 private:
  std::map<std::pair<int, int>, Int> entries_;  // (i, m) -> dim, zero rows dropped
};

struct HomogeneousBundle {
  GrassmannianContext ctx;
  SchurExpansion expansion;  // rank ctx.k

  HomogeneousBundle(GrassmannianContext c, SchurExpansion e);
};

HomogeneousBundle irreducible_bundle(const GrassmannianContext& ctx, const MixedWeight& gamma);

// All cohomology of the bundle, recorded in grading column m.
CohomologyTable cohomology(const HomogeneousBundle& bundle, int grading_degree = 0);

Int euler_characteristic(const HomogeneousBundle& bundle);

}  // namespace grcone
