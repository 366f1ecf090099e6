#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lieq/rootsys.hpp"

namespace lieq {

/// Bitset over root indices; compares as a binary number with bit 0 least
/// significant.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i, bool v = true) {
    if (v)
      w_[i >> 6] |= uint64_t(1) << (i & 63);
    else
      w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
  }
  int count() const;
  bool none() const;
  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator<(const Bitset& o) const;  // as binary numbers
  Bitset operator|(const Bitset& o) const;
  Bitset operator&(const Bitset& o) const;
  bool is_subset_of(const Bitset& o) const;
  std::vector<int> indices() const;

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

/// A set of roots encoding a regular ad-nilpotent subalgebra candidate.
struct RootSubset {
  const RootSystem* rs = nullptr;
  Bitset members;

  int size() const { return members.count(); }
  std::vector<int> indices() const { return members.indices(); }
  bool contains(int idx) const { return members.test(idx); }

  bool is_closed(std::pair<int, int>* offending = nullptr) const;
  bool disjoint_from_negative(int* offending = nullptr) const;
  /// No two members sum to a root.
  bool is_abelian() const;
  bool operator==(const RootSubset& o) const { return members == o.members; }
};

RootSubset make_subset(const RootSystem& rs, const std::vector<int>& root_indices);
RootSubset empty_subset(const RootSystem& rs);

/// Smallest closed subset containing g (saturation under pairwise sums).
RootSubset closure(const RootSubset& g);

struct WideVerdict {
  bool wide;
  RootSubset closure_sym;  // closure(G u -G); the witness subset when not wide
};

/// Root-combinatorial wideness criterion: wide iff closure(G u -G) is the
/// whole root system. Precondition: G closed and G n -G empty; violations
/// are rejected (std::invalid_argument naming the offending pair).
WideVerdict is_wide_criterion(const RootSubset& g);

/// {gamma : ht_{Pi'}(gamma) > 0}; pi_prime holds 0-based simple root indices.
RootSubset parabolic_nilradical_set(const RootSystem& rs, const std::vector<int>& pi_prime);

/// closure(Pi' u -(Pi \ Pi')).
RootSubset pi_partition_set(const RootSystem& rs, const std::vector<int>& pi_prime);

/// Delta+ \ Pi, the roots of [u+, u+].
RootSubset derived_uplus_set(const RootSystem& rs);

/// C(h) = {mu : (mu, gamma) >= 0 for all gamma in the subset}, with extreme
/// rays computed by double description when the cone is strictly convex.
struct Cone {
  const RootSystem* rs = nullptr;
  std::vector<int> defining;               // root indices
  bool strictly_convex = false;
  std::vector<std::vector<Int>> generators;  // primitive integer ray vectors (root coords)

  bool contains(const Weight& w) const;
  bool has_generator_ray(const Weight& w) const;
};

Cone cone_of(const RootSubset& g);

struct CensusRecord {
  RootSubset subset;
  bool wide;
  int size;
  bool abelian;
  std::vector<std::string> family_tags;
  RootSubset witness;  // closure(G u -G) when not wide
};

/// Enumerates every closed subset of the roots disjoint from its negative,
/// in ascending bitset order. Yields until the callback returns false or
/// max_results records were emitted (max_results < 0: unlimited).
/// Guard: |roots| <= 24.
void enumerate_census(const RootSystem& rs, long max_results,
                      const std::function<bool(const CensusRecord&)>& yield);

}  // namespace lieq
