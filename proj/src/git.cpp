#include "grcone/git.hpp"

#include <algorithm>
#include <stdexcept>

namespace grcone {

RrefResult rref(RatMatrix m) {
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (const auto& r : m)
    if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("ragged matrix");

  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Rat inv = Rat(1) / m[r][c];
    for (int j = c; j < cols; ++j) {
      m[r][j] *= inv;
      m[r][j].canonicalize();
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) {
        m[i][j] -= f * m[r][j];
        m[i][j].canonicalize();
      }
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return RrefResult{r, std::move(pivots), std::move(m)};
}

StabilityVerdict classify(const RatMatrix& u, const Rat& t) {
  int k = static_cast<int>(u.size());
  if (k < 1) throw std::invalid_argument("classify: empty matrix");
  int N = static_cast<int>(u[0].size());
  if (k >= N) throw std::invalid_argument("classify: requires k < N");
  if (t == 0) throw std::invalid_argument("classify: t must be nonzero");

  if (t < 0) {
    // Scaling all of Z drives u to zero while the character pairs negatively.
    OneParamSubgroup xi{std::vector<int>(k, 1)};
    Rat pairing = mu_pairing(xi, t);
    RatMatrix basis(k, std::vector<Rat>(k, 0));
    for (int i = 0; i < k; ++i) basis[i][i] = 1;
    return StabilityVerdict{Stability::Unstable, xi, pairing, std::move(basis)};
  }

  // Column space of u: row space of the transpose.
  RatMatrix ut(N, std::vector<Rat>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < N; ++j) ut[j][i] = u[i][j];
  RrefResult red = rref(std::move(ut));

  if (red.rank == k) return StabilityVerdict{Stability::Stable, {}, {}, {}};

  int r = red.rank;
  std::vector<int> weights(k, 0);
  for (int i = r; i < k; ++i) weights[i] = -1;
  OneParamSubgroup xi{std::move(weights)};

  RatMatrix basis;
  basis.reserve(k);
  for (int i = 0; i < r; ++i) basis.push_back(red.rows[i]);
  std::vector<bool> is_pivot(k, false);
  for (int c : red.pivot_cols) is_pivot[c] = true;
  for (int c = 0; c < k; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> e(k, 0);
    e[c] = 1;
    basis.push_back(std::move(e));
  }

  Rat pairing = mu_pairing(xi, t);
  return StabilityVerdict{Stability::Unstable, std::move(xi), pairing, std::move(basis)};
}

Rat mu_pairing(const OneParamSubgroup& xi, const Rat& t) {
  long s = 0;
  for (int w : xi.weights) s += w;
  Rat out = t * Rat(s);
  out.canonicalize();
  return out;
}

std::map<int, Int> weights_on_schur_dual(const OneParamSubgroup& xi, const Partition& lambda) {
  int k = static_cast<int>(xi.weights.size());
  std::map<int, Int> out;
  if (lambda.rows() > k) return out;
  for (const auto& [content, mult] : ssyt_weight_multiset(lambda, k)) {
    long w = 0;
    for (int i = 0; i < k; ++i) w -= static_cast<long>(content[i]) * xi.weights[i];
    out[static_cast<int>(w)] += mult;
  }
  return out;
}

Condition3Result condition3_check(int k, const std::vector<MatterSummand>& summands) {
  for (int r = 0; r < k; ++r) {
    std::vector<int> weights(k, 0);
    for (int i = r; i < k; ++i) weights[i] = -1;
    OneParamSubgroup xi{std::move(weights)};
    for (const auto& s : summands) {
      if (s.lambda.rows() > k) continue;
      int worst = 0;
      bool found = false;
      for (const auto& [content, mult] : ssyt_weight_multiset(s.lambda, k)) {
        long w = 0;
        for (int i = 0; i < k; ++i) w += static_cast<long>(content[i]) * xi.weights[i];
        if (s.dual) w = -w;
        if (!found || w < worst) {
          worst = static_cast<int>(w);
          found = true;
        }
      }
      if (found && worst < 0)
        return Condition3Result{false, Condition3Witness{r, s.lambda, worst}};
    }
  }
  return Condition3Result{true, {}};
}

GorensteinCheck gorenstein_check(int N, const BundleSpec& spec) {
  int k = spec.rank_k();
  Int c_E = 0;
  for (const auto& s : spec.summands()) {
    Int contrib = Int(s.mult) * Int(s.lambda.weight()) * hook_content_dim(s.lambda, k);
    if (!mpz_divisible_ui_p(contrib.get_mpz_t(), static_cast<unsigned long>(k)))
      throw std::logic_error("determinant degree not divisible by the rank");
    Int q;
    mpz_divexact_ui(q.get_mpz_t(), contrib.get_mpz_t(), static_cast<unsigned long>(k));
    c_E += q;
  }
  GorensteinCheck out;
  out.c_E = c_E;
  out.balance = Int(N) - c_E;
  out.det_trivial = out.balance == 0;
  if (k == 1) {
    // Non-stable locus is {u = 0} union {f = 0}; for k = 1 every summand is a
    // line, so the second stratum has codim = number of summands.
    long fdim = 0;
    for (const auto& s : spec.summands()) fdim += s.mult;
    int codim = static_cast<int>(std::min<long>(N, fdim));
    out.nonstable_codim = codim;
    out.codim_ok = codim >= 2;
  }
  return out;
}

int unstable_codim(int N, int k) {
  if (k < 1 || k >= N) throw std::invalid_argument("unstable_codim: requires 1 <= k < N");
  return N - k + 1;
}

}  // namespace grcone
