#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grcone/bott.hpp"
#include "grcone/git.hpp"
#include "grcone/plethysm.hpp"

namespace grcone {

// The 4-tuple (GL(Z), Hom(V, Z), F, det^t) with Z = C^k, V = C^N and F the
// dual fiber of the bundle datum.
class GLSMPresentation {
 public:
  GLSMPresentation(int N, int k, int t, BundleSpec bundle);

  int N() const { return N_; }
  int k() const { return k_; }
  int t() const { return t_; }
  const BundleSpec& bundle() const { return bundle_; }
  GrassmannianContext ctx() const { return GrassmannianContext(N_, k_); }

 private:
  int N_, k_, t_;
  BundleSpec bundle_;
};

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct ValidationReport {
  bool all_pass;
  std::vector<CheckResult> checks;
};

ValidationReport validate(const GLSMPresentation& p);

// A conclusion together with the hypotheses this run actually checked; value
// is set only when every hypothesis came out true.
struct FlagValue {
  std::optional<bool> value;
  std::vector<std::string> hypotheses;
};

struct ConeInvariants {
  int dim_B;
  Int rank_E;
  Int dim_E;
  Int dim_H;  // sections of the dual bundle in degree one

  Int c_E;  // det E = (det of the rank-k factor)^{c_E}
  int crepancy_target;  // N
  bool crepant_hypothesis;  // c_E == N

  bool det_trivial;
  std::optional<int> nonstable_codim;

  // Symmetric-power family extras (single summand, one-row shape, d >= 2).
  std::optional<Int> dim_C_E;
  std::optional<bool> birational;
  std::vector<Int> exc_codims;      // indexed by corank r = 0..k-1
  std::optional<Int> min_preimage_codim;

  FlagValue normal_CM;
  FlagValue rational_sing;
  FlagValue gorenstein;
};

ConeInvariants cone_invariants(const GLSMPresentation& p);

// E = S^d of the rank-k factor over Gr_k(V*); closed-form dimension and
// exceptional-fiber codimension bookkeeping.
ConeInvariants catalecticant_invariants(int N, int k, int d);

// (c_E, N); the two agree exactly when det E matches the canonical bundle.
std::pair<Int, int> crepancy_degree(const GLSMPresentation& p);

enum class IsotropicKind { Orthogonal, Symplectic };

struct IsotropicDims {
  int dim_B;
  Int rank_E;
  Int dim_S_E;  // dimension of the isotropic-flag image
};

IsotropicDims isotropic_dims(int N, int k, IsotropicKind kind);

}  // namespace grcone
