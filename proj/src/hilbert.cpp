#include "grcone/hilbert.hpp"

#include <stdexcept>

namespace grcone {

namespace {

SchurExpansion expansion_product(const SchurExpansion& a, const SchurExpansion& b) {
  SchurExpansion out(a.rank());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Int c = ca * cb;
      for (const auto& [w, m] : lr_product(wa, wb).terms()) out.add(w, c * m);
    }
  return out;
}

Int h0_dim(const SchurExpansion& e, const GrassmannianContext& ctx) {
  Int total = 0;
  for (const auto& [w, m] : e.terms()) {
    if (auto res = bbw_irreducible(w, ctx); res && res->degree == 0)
      total += m * weight_dim(res->weight);
  }
  return total;
}

std::vector<MixedWeight> box_keys(const GrassmannianContext& ctx) {
  std::vector<MixedWeight> keys;
  for (const Partition& a : ctx.box()) keys.push_back(MixedWeight::from_partition(a, ctx.k));
  return keys;
}

Partition key_label(const MixedWeight& w) {
  // Collection keys are partitions in the default setup; engineered
  // collections may carry negative entries, label those by the shifted shape.
  int c = std::max(0, -w.entry(w.rank() - 1));
  return w.shifted(c).to_partition();
}

}  // namespace

Int dim_R(const GLSMPresentation& p, int m, PlethysmCache* cache) {
  SchurExpansion sym = sym_power_of_bundle(m, p.bundle(), cache);
  Int total = 0;
  for (const auto& [w, mult] : sym.terms())
    total += mult * hook_content_dim(w.to_partition(), p.N());
  return total;
}

Int dim_Lambda(const GLSMPresentation& p, int m, PlethysmCache* cache) {
  GrassmannianContext ctx = p.ctx();
  std::vector<MixedWeight> keys = box_keys(ctx);
  SchurExpansion sym = sym_power_of_bundle(m, p.bundle(), cache);

  SchurExpansion endsum(ctx.k);
  for (const MixedWeight& a : keys)
    for (const MixedWeight& b : keys)
      for (const auto& [w, c] : lr_product(a.dual(), b).terms()) endsum.add(w, c);

  return h0_dim(expansion_product(endsum, sym), ctx);
}

Int dim_Lambda_closed_form_CI(int N, const std::vector<int>& degrees, int m) {
  if (degrees.empty()) throw std::invalid_argument("no degrees given");
  int r = static_cast<int>(degrees.size());
  // Sum over exponent tuples kappa with |kappa| = m.
  std::vector<int> kappa(r, 0);
  Int total = 0;
  auto rec = [&](auto&& self, int idx, int left) -> void {
    if (idx == r - 1) {
      kappa[idx] = left;
      int e0 = 0;
      for (int i = 0; i < r; ++i) e0 += kappa[i] * degrees[i];
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
          int e = e0 + b - a;
          if (e >= 0) total += binom(N - 1 + e, e);
        }
      return;
    }
    for (int v = 0; v <= left; ++v) {
      kappa[idx] = v;
      self(self, idx + 1, left - v);
    }
  };
  rec(rec, 0, m);
  return total;
}

Int dim_M_alpha(const GLSMPresentation& p, const Partition& alpha, int m,
                PlethysmCache* cache) {
  GrassmannianContext ctx = p.ctx();
  MixedWeight a = MixedWeight::from_partition(alpha, ctx.k);
  SchurExpansion sym = sym_power_of_bundle(m, p.bundle(), cache);
  SchurExpansion shifted(ctx.k);
  for (const auto& [w, c] : sym.terms())
    for (const auto& [v, n] : lr_product(a, w).terms()) shifted.add(v, c * n);
  return h0_dim(shifted, ctx);
}

VanishingReport vanishing_check_degree(const GLSMPresentation& p, int i_max, int m,
                                       PlethysmCache* cache,
                                       const std::vector<MixedWeight>* collection) {
  GrassmannianContext ctx = p.ctx();
  std::vector<MixedWeight> keys = collection ? *collection : box_keys(ctx);
  SchurExpansion sym = sym_power_of_bundle(m, p.bundle(), cache);

  VanishingReport report;
  report.i_max = i_max;
  report.m_max = m;
  for (const MixedWeight& a : keys) {
    for (const MixedWeight& b : keys) {
      SchurExpansion hom(ctx.k);
      for (const auto& [w, c] : lr_product(a.dual(), b).terms()) hom.add(w, c);
      SchurExpansion prod = expansion_product(hom, sym);
      for (const auto& [w, c] : prod.terms()) {
        report.keys_checked++;
        auto res = bbw_irreducible(w, ctx);
        if (res && res->degree >= 1 && res->degree <= i_max) {
          report.ok = false;
          report.witness = VanishingWitness{key_label(a), key_label(b), m, res->degree, w};
          return report;
        }
      }
    }
  }
  return report;
}

VanishingReport vanishing_check(const GLSMPresentation& p, int i_max, int m_max,
                                PlethysmCache* cache,
                                const std::vector<MixedWeight>* collection) {
  VanishingReport report;
  report.i_max = i_max;
  report.m_max = m_max;
  for (int m = 0; m <= m_max; ++m) {
    VanishingReport slice = vanishing_check_degree(p, i_max, m, cache, collection);
    report.keys_checked += slice.keys_checked;
    if (!slice.ok) {
      report.ok = false;
      report.witness = slice.witness;
      return report;
    }
  }
  return report;
}

}  // namespace grcone
