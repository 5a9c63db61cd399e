#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grcone/glsm.hpp"

namespace grcone {

struct HilbertTable {
  std::string series;  // "R", "Lambda" or "M"
  std::string route;
  std::optional<Partition> alpha;  // set for the M series
  std::vector<Int> dims;           // index = degree
  bool tilting_verified = true;
};

// Sections of the m-th symmetric power of the dual bundle.
Int dim_R(const GLSMPresentation& p, int m, PlethysmCache* cache = nullptr);

// Degree-m piece of the endomorphism algebra of the box collection.
Int dim_Lambda(const GLSMPresentation& p, int m, PlethysmCache* cache = nullptr);

// Same, by the line-bundle closed form available when k = 1.
Int dim_Lambda_closed_form_CI(int N, const std::vector<int>& degrees, int m);

// Degree-m piece of the module attached to one box partition alpha.
Int dim_M_alpha(const GLSMPresentation& p, const Partition& alpha, int m,
                PlethysmCache* cache = nullptr);

struct VanishingWitness {
  Partition alpha;
  Partition beta;
  int m;
  int i;
  MixedWeight gamma;  // offending irreducible key, rank k
};

struct VanishingReport {
  bool ok = true;
  int i_max = 0;
  int m_max = 0;
  long long keys_checked = 0;
  std::optional<VanishingWitness> witness;  // first in (m, alpha, beta, key) order
};

// H^i of Hom(component_a, component_b) (x) S^m(dual bundle) for all component
// pairs, 1 <= i <= i_max, 0 <= m <= m_max.  `collection` overrides the box
// collection; entries are rank-k keys.
VanishingReport vanishing_check(const GLSMPresentation& p, int i_max, int m_max,
                                PlethysmCache* cache = nullptr,
                                const std::vector<MixedWeight>* collection = nullptr);

// Single degree slice, merged by the callers that fan degrees out to workers.
VanishingReport vanishing_check_degree(const GLSMPresentation& p, int i_max, int m,
                                       PlethysmCache* cache = nullptr,
                                       const std::vector<MixedWeight>* collection = nullptr);

}  // namespace grcone
