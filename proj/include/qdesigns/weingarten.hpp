#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

namespace qdesigns {

/// Bijection on {0, ..., t-1}; p(i) = mapping()[i].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> mapping);
  static Permutation identity(int t);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& mapping() const { return map_; }

  /// (*this o other)(i) = (*this)(other(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  bool is_identity() const;

  /// Number of disjoint cycles, fixed points included.
  int cycle_count() const;
  /// Cycle lengths sorted in descending order.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

inline constexpr int kMaxSymmetricDegree = 6;

/// All t! permutations in lexicographic order (identity first).
std::vector<Permutation> enumerate_symmetric_group(int t);

struct WeingartenTable {
  int t = 0;
  double D = 0.0;
  std::map<std::vector<int>, double> values;  // keyed by cycle type

  double operator()(const Permutation& p) const;
};

/// Solves sum_tau D^{Cl(sigma^-1 tau)} w_tau = delta_{sigma,id} over S_t.
/// Requires D >= t. Results are cached per (t, D).
std::shared_ptr<const WeingartenTable> weingarten_table(int t, double D);

/// Un-collapsed solution of the same system, indexed like
/// enumerate_symmetric_group(t).
std::vector<double> weingarten_vector(int t, double D);

/// max_sigma |sum_tau Wg(sigma tau^-1) D^{Cl(tau)} - delta_{sigma,id}|.
double weingarten_gram_residual(const WeingartenTable& table);

void clear_weingarten_cache();
std::size_t weingarten_cache_size();

}  // namespace qdesigns
