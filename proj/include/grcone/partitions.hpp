#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "grcone/arith.hpp"

namespace grcone {

// Weakly decreasing non-negative parts, trailing zeros stripped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int rows() const { return static_cast<int>(parts_.size()); }
  int weight() const;                  // |lambda|
  int part(int i) const;               // 0-based, 0 past the last row
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  bool contains(const Partition& inner) const;
  bool all_parts_even() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  // Lexicographic on zero-padded part vectors.
  std::strong_ordering operator<=>(const Partition& o) const;

  std::string str() const;

 private:
  std::vector<int> parts_;
};

// Weakly decreasing integer vector with explicit rank; zero entries are
// significant, entries may be negative.
class MixedWeight {
 public:
  explicit MixedWeight(std::vector<int> entries);
  static MixedWeight from_partition(const Partition& p, int rank);

  int rank() const { return static_cast<int>(entries_.size()); }
  int entry(int i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  int sum() const;

  bool is_partition() const;            // all entries >= 0
  Partition to_partition() const;       // requires is_partition()
  MixedWeight dual() const;             // (-e_k, ..., -e_1)
  MixedWeight shifted(int c) const;     // entrywise + c

  bool operator==(const MixedWeight& o) const { return entries_ == o.entries_; }
  std::strong_ordering operator<=>(const MixedWeight& o) const;

  std::string str() const;

 private:
  std::vector<int> entries_;
};

// Dimension of the GL(rank) irreducible with highest weight w.
Int weight_dim(const MixedWeight& w);

// Formal non-negative combination of irreducibles, keyed by highest weight.
class SchurExpansion {
 public:
  explicit SchurExpansion(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  void add(const MixedWeight& w, const Int& mult);
  Int mult(const MixedWeight& w) const;
  std::size_t term_count() const { return terms_.size(); }
  // Rvalue overload returns by value so `for (... : f(...).terms())` never
  // iterates a map owned by an already-destroyed temporary.
  const std::map<MixedWeight, Int>& terms() const& { return terms_; }
  std::map<MixedWeight, Int> terms() && { return std::move(terms_); }

  Int total_dim() const;  // sum of mult * weight_dim over terms

  bool operator==(const SchurExpansion& o) const;

  std::string str() const;

 private:
  int rank_;
  std::map<MixedWeight, Int> terms_;
};

// dim S^lambda(C^n): product of (n + content) over cells divided by hooks;
// zero when lambda has more than n rows.
Int hook_content_dim(const Partition& lambda, int n);

// Content vectors of semistandard tableaux of shape lambda, entries 1..k,
// keyed by the exponent vector of the corresponding monomial.
std::map<std::vector<int>, Int> ssyt_weight_multiset(const Partition& lambda, int k);

// Littlewood-Richardson coefficient c^{nu}_{lambda, mu}.
Int lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu);

// Product of irreducibles for GL(rank), rows truncated to the rank.
// Mixed weights are handled by shifting both factors into partitions with a
// power of the determinant and shifting back.
SchurExpansion lr_product(const MixedWeight& a, const MixedWeight& b);

// Partitions fitting in rows x cols, ascending lexicographic order.
std::vector<Partition> partitions_in_box(int rows, int cols);

// Partitions of n with at most max_rows rows.
std::vector<Partition> partitions_of(int n, int max_rows);

Partition parse_partition(const std::string& text);  // "2,1" or "" for empty

}  // namespace grcone
