#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "grcone/partitions.hpp"

namespace grcone {

struct BundleSummand {
  int mult;
  Partition lambda;
};

// Equivariant vector bundle datum: a multiplicity-tagged list of Schur
// functors of the rank-k tautological factor.
class BundleSpec {
 public:
  BundleSpec(int rank_k, std::vector<BundleSummand> summands);

  int rank_k() const { return rank_k_; }
  const std::vector<BundleSummand>& summands() const { return summands_; }

  Int fiber_rank() const;
  int max_weight() const;  // max |lambda| over summands
  int min_weight() const;

 private:
  int rank_k_;
  std::vector<BundleSummand> summands_;
};

using MonomialMap = std::map<std::vector<int>, Int>;

// Weight monomials of the full fiber, multiplicities included.
MonomialMap weight_multiset(const BundleSpec& spec);

// Character of S^m applied to a representation given by its weight multiset.
MonomialMap sym_power_character(const MonomialMap& weights, int m);

// Leading-monomial elimination in exactly k variables; input must be the
// character of an actual (virtual) polynomial representation of GL(k).
SchurExpansion schur_decompose(MonomialMap poly, int k);

class PlethysmCache;

// S^m(S^lambda C^k) in the Schur basis.
SchurExpansion plethysm_sym(int m, const Partition& lambda, int k,
                            PlethysmCache* cache = nullptr);

// S^m of the whole fiber of spec.
SchurExpansion sym_power_of_bundle(int m, const BundleSpec& spec,
                                   PlethysmCache* cache = nullptr);

// Persistent memo for plethysm_sym keyed on (m, lambda, k).  The file is a
// versioned JSON document with sorted keys; a corrupt or mismatched file is
// ignored and results are recomputed.  Writes go through a temp file followed
// by a rename.
class PlethysmCache {
 public:
  explicit PlethysmCache(std::filesystem::path file);
  ~PlethysmCache();

  // GRCONE_PLETHYSM_CACHE wins over the built-in location.
  static std::filesystem::path default_path();

  std::optional<SchurExpansion> lookup(int m, const Partition& lambda, int k);
  void store(int m, const Partition& lambda, int k, const SchurExpansion& value);
  void flush();

  const std::filesystem::path& path() const { return file_; }
  std::size_t entry_count();

 private:
  std::filesystem::path file_;
  std::mutex mutex_;
  bool dirty_ = false;
  std::map<std::string, std::map<MixedWeight, Int>> entries_;

  void load_locked();
};

}  // namespace grcone
