#include "grcone/glsm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grcone {

GLSMPresentation::GLSMPresentation(int N, int k, int t, BundleSpec bundle)
    : N_(N), k_(k), t_(t), bundle_(std::move(bundle)) {
  if (k_ < 1 || k_ >= N_)
    throw std::invalid_argument("presentation requires 1 <= k < N");
  if (t_ < 1) throw std::invalid_argument("presentation requires t >= 1");
  if (bundle_.rank_k() != k_)
    throw std::invalid_argument("bundle rank must equal k");
}

namespace {

std::string weights_str(int r, int k) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < k; ++i) {
    if (i) os << ',';
    os << (i < r ? 0 : -1);
  }
  os << ')';
  return os.str();
}

}  // namespace

ValidationReport validate(const GLSMPresentation& p) {
  ValidationReport report;
  int N = p.N(), k = p.k();

  {
    // Spot-check the rank criterion on both sides of the wall.
    RatMatrix full(k, std::vector<Rat>(N, 0));
    for (int i = 0; i < k; ++i) full[i][i] = 1;
    StabilityVerdict sv_full = classify(full, Rat(p.t()));
    RatMatrix defect(k, std::vector<Rat>(N, 0));  // rank 0
    StabilityVerdict sv_defect = classify(defect, Rat(p.t()));
    bool pass = sv_full.status == Stability::Stable &&
                sv_defect.status == Stability::Unstable &&
                sv_defect.pairing && *sv_defect.pairing < 0;
    std::ostringstream os;
    os << "t = " << p.t() << " selects the surjective locus; semistable = stable, "
       << "GL(" << k << ") acts freely there";
    report.checks.push_back({"stable locus", pass, os.str()});
  }
  {
    std::ostringstream os;
    os << "quotient is Gr_" << k << "(V*), dimension " << k * (N - k);
    report.checks.push_back({"quotient", true, os.str()});
  }
  {
    std::vector<MatterSummand> summands;
    for (const auto& s : p.bundle().summands())
      summands.push_back({s.lambda, true});
    Condition3Result c3 = condition3_check(k, summands);
    std::ostringstream os;
    if (c3.ok) {
      os << "all destabilizer patterns (0^r,(-1)^(k-r)) act with non-negative "
         << "weights on the fiber";
    } else {
      os << "weight " << c3.witness->weight << " < 0 for pattern "
         << weights_str(c3.witness->r, k) << " on shape " << c3.witness->lambda.str();
    }
    report.checks.push_back({"destabilizer weights", c3.ok, os.str()});
  }
  {
    int codim = unstable_codim(N, k);
    std::ostringstream os;
    os << "non-surjective locus has codimension N-k+1 = " << codim;
    report.checks.push_back({"unstable codimension >= 2", codim >= 2, os.str()});
  }

  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const CheckResult& c) { return c.pass; });
  return report;
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void fill_flags(ConeInvariants& inv, const GLSMPresentation& p, bool validated) {
  int N = p.N();

  inv.normal_CM.hypotheses = {
      "homogeneous presentation over the Grassmannian: " + yes_no(true),
      "semistable locus = stable locus (t >= 1): " + yes_no(validated),
      "collapsing map is proper over the cone: " + yes_no(validated)};
  if (validated) inv.normal_CM.value = true;

  bool birational_known = inv.birational.has_value() && *inv.birational;
  inv.rational_sing.hypotheses = {
      "cone has rational singularities needs: normal Cohen-Macaulay image: " +
          yes_no(validated),
      "collapsing birational onto the image: " +
          (inv.birational ? yes_no(*inv.birational) : std::string("not computed"))};
  if (validated && birational_known) inv.rational_sing.value = true;

  std::ostringstream det;
  det << "det of the total space trivial (c_E = N): " << yes_no(inv.det_trivial)
      << " (c_E = " << inv.c_E.get_str() << ", N = " << N << ")";
  std::ostringstream cod;
  if (inv.nonstable_codim) {
    cod << "non-stable locus has codim >= 2: " << yes_no(*inv.nonstable_codim >= 2)
        << " (codim = " << *inv.nonstable_codim << ")";
  } else {
    cod << "non-stable locus has codim >= 2: not computed for k >= 2";
  }
  inv.gorenstein.hypotheses = {det.str(), cod.str()};
  if (inv.det_trivial && inv.nonstable_codim && *inv.nonstable_codim >= 2)
    inv.gorenstein.value = true;
}

}  // namespace

ConeInvariants cone_invariants(const GLSMPresentation& p) {
  const BundleSpec& spec = p.bundle();
  int N = p.N(), k = p.k();

  ConeInvariants inv;
  inv.dim_B = k * (N - k);
  inv.rank_E = spec.fiber_rank();
  inv.dim_E = Int(inv.dim_B) + inv.rank_E;
  inv.dim_H = 0;
  for (const auto& s : spec.summands())
    inv.dim_H += Int(s.mult) * hook_content_dim(s.lambda, N);

  GorensteinCheck gc = gorenstein_check(N, spec);
  inv.c_E = gc.c_E;
  inv.crepancy_target = N;
  inv.crepant_hypothesis = gc.det_trivial;
  inv.det_trivial = gc.det_trivial;
  inv.nonstable_codim = gc.nonstable_codim;

  // Symmetric-power extras only for E = S^d of the tautological factor.
  if (spec.summands().size() == 1 && spec.summands()[0].mult == 1 &&
      spec.summands()[0].lambda.rows() == 1 && spec.summands()[0].lambda.part(0) >= 2) {
    int d = spec.summands()[0].lambda.part(0);
    inv.dim_C_E = binom(k + d - 1, d) + Int(inv.dim_B);
    inv.birational = (*inv.dim_C_E == inv.dim_E);
    for (int r = 0; r < k; ++r)
      inv.exc_codims.push_back(binom(k + d - 1, d) - binom(r + d - 1, d) - Int(r) * (k - r));
    inv.min_preimage_codim = *std::min_element(inv.exc_codims.begin(), inv.exc_codims.end());
  }

  fill_flags(inv, p, validate(p).all_pass);
  return inv;
}

ConeInvariants catalecticant_invariants(int N, int k, int d) {
  if (d < 2) throw std::invalid_argument("symmetric-power family requires d >= 2");
  GLSMPresentation p(N, k, 1, BundleSpec(k, {{1, Partition({d})}}));
  return cone_invariants(p);
}

std::pair<Int, int> crepancy_degree(const GLSMPresentation& p) {
  return {gorenstein_check(p.N(), p.bundle()).c_E, p.N()};
}

IsotropicDims isotropic_dims(int N, int k, IsotropicKind kind) {
  if (kind == IsotropicKind::Orthogonal) {
    if (k < 1 || 2 * k > N)
      throw std::invalid_argument(
          "orthogonal isotropic family requires 1 <= k <= N/2");
    IsotropicDims out;
    out.dim_B = k * (N - k);
    out.rank_E = binom(k + 1, 2);
    out.dim_S_E = Int(k) * (N - k) - Int(k) * (k + 1) / 2;
    if (out.dim_S_E != Int(out.dim_B) - out.rank_E)
      throw std::logic_error("isotropic dimension bookkeeping is inconsistent");
    return out;
  }
  if (N % 2 != 0 || k % 2 != 0 || k < 2 || 2 * k > N)
    throw std::invalid_argument(
        "symplectic isotropic family requires even N and even k with 2 <= k <= N/2");
  IsotropicDims out;
  out.dim_B = k * (N - k);
  out.rank_E = binom(k, 2);
  out.dim_S_E = Int(k) * (N - k) - Int(k) * (k - 1) / 2;
  if (out.dim_S_E != Int(out.dim_B) - out.rank_E)
    throw std::logic_error("isotropic dimension bookkeeping is inconsistent");
  return out;
}

}  // namespace grcone
