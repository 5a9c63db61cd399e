#include "grcone/bott.hpp"

#include <algorithm>
#include <stdexcept>

namespace grcone {

GrassmannianContext::GrassmannianContext(int N_, int k_) : N(N_), k(k_) {
  if (k < 1 || k >= N) throw std::invalid_argument("Grassmannian needs 1 <= k < N");
}

std::vector<Partition> GrassmannianContext::box() const {
  return partitions_in_box(k, N - k);
}

std::optional<BbwResult> bbw_irreducible(const MixedWeight& gamma,
                                         const GrassmannianContext& ctx) {
  if (gamma.rank() != ctx.k) throw std::invalid_argument("weight rank must equal k");
  int N = ctx.N;
  std::vector<int> v(N);
  for (int i = 0; i < N; ++i) {
    int w = i < ctx.k ? gamma.entry(i) : 0;
    v[i] = w + (N - 1 - i);
  }
  int inversions = 0;
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      if (v[i] == v[j]) return std::nullopt;
      if (v[i] < v[j]) inversions++;
    }
  }
  std::sort(v.begin(), v.end(), std::greater<int>());
  std::vector<int> mu(N);
  for (int i = 0; i < N; ++i) mu[i] = v[i] - (N - 1 - i);
  return BbwResult{inversions, MixedWeight(std::move(mu))};
}

MixedWeight serre_dual_weight(const MixedWeight& gamma, const GrassmannianContext& ctx) {
  if (gamma.rank() != ctx.k) throw std::invalid_argument("weight rank must equal k");
  return gamma.dual().shifted(-ctx.N);
}

void CohomologyTable::add(int i, int m, const Int& dim) {
  if (dim == 0) return;
  auto key = std::make_pair(i, m);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, dim);
  } else {
    it->second += dim;
    if (it->second == 0) entries_.erase(it);
  }
}

Int CohomologyTable::dim(int i, int m) const {
  auto it = entries_.find({i, m});
  return it == entries_.end() ? Int(0) : it->second;
}

Int CohomologyTable::total_dim(int m) const {
  Int s = 0;
  for (const auto& [key, d] : entries_)
    if (key.second == m) s += d;
  return s;
}

Int CohomologyTable::euler(int m) const {
  Int s = 0;
  for (const auto& [key, d] : entries_)
    if (key.second == m) s += (key.first % 2 == 0) ? d : -d;
  return s;
}

bool CohomologyTable::zero_above_degree_zero(int i_max, int m) const {
  for (const auto& [key, d] : entries_)
    if (key.second == m && key.first >= 1 && key.first <= i_max && d != 0) return false;
  return true;
}

void CohomologyTable::merge(const CohomologyTable& other) {
  for (const auto& [key, d] : other.entries_) add(key.first, key.second, d);
}

HomogeneousBundle::HomogeneousBundle(GrassmannianContext c, SchurExpansion e)
    : ctx(c), expansion(std::move(e)) {
  if (expansion.rank() != ctx.k)
    throw std::invalid_argument("bundle expansion rank must equal k");
}

HomogeneousBundle irreducible_bundle(const GrassmannianContext& ctx, const MixedWeight& gamma) {
  SchurExpansion e(ctx.k);
  e.add(gamma, 1);
  return HomogeneousBundle(ctx, std::move(e));
}

CohomologyTable cohomology(const HomogeneousBundle& bundle, int grading_degree) {
  CohomologyTable table;
  for (const auto& [gamma, mult] : bundle.expansion.terms()) {
    if (auto res = bbw_irreducible(gamma, bundle.ctx))
      table.add(res->degree, grading_degree, mult * weight_dim(res->weight));
  }
  return table;
}

Int euler_characteristic(const HomogeneousBundle& bundle) {
  Int chi = 0;
  for (const auto& [gamma, mult] : bundle.expansion.terms()) {
    if (auto res = bbw_irreducible(gamma, bundle.ctx)) {
      Int d = mult * weight_dim(res->weight);
      chi += (res->degree % 2 == 0) ? d : -d;
    }
  }
  return chi;
}

}  // namespace grcone
