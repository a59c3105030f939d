#include "qdesigns/weingarten.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "qdesigns/errors.hpp"
#include "qdesigns/tensor.hpp"

namespace qdesigns {

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || static_cast<std::size_t>(v) >= map_.size() ||
        seen[static_cast<std::size_t>(v)])
      throw DomainError("Permutation: mapping is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int t) {
  std::vector<int> m(static_cast<std::size_t>(t));
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size())
    throw DimensionError("Permutation::compose: size mismatch");
  std::vector<int> m(map_.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i] = map_[static_cast<std::size_t>(other.map_[i])];
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<int> m(map_.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    m[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
  return Permutation(std::move(m));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t start = 0; start < map_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t j = start; !seen[j]; j = static_cast<std::size_t>(map_[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

int Permutation::cycle_count() const {
  return static_cast<int>(cycle_type().size());
}

std::vector<Permutation> enumerate_symmetric_group(int t) {
  if (t < 1) throw DomainError("enumerate_symmetric_group: t must be >= 1");
  if (t > kMaxSymmetricDegree)
    throw CapacityError("enumerate_symmetric_group: t = " + std::to_string(t) +
                        " exceeds the supported maximum of " +
                        std::to_string(kMaxSymmetricDegree));
  std::vector<int> m(static_cast<std::size_t>(t));
  std::iota(m.begin(), m.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

double WeingartenTable::operator()(const Permutation& p) const {
  auto it = values.find(p.cycle_type());
  if (it == values.end())
    throw DimensionError("WeingartenTable: permutation size does not match t");
  return it->second;
}

std::vector<double> weingarten_vector(int t, double D) {
  if (!(D >= t))
    throw DomainError("weingarten: D = " + std::to_string(D) +
                      " is below t = " + std::to_string(t));
  const auto group = enumerate_symmetric_group(t);
  const auto n = static_cast<Eigen::Index>(group.size());
  Eigen::MatrixXd G(n, n);
  for (Eigen::Index s = 0; s < n; ++s) {
    const Permutation s_inv = group[static_cast<std::size_t>(s)].inverse();
    for (Eigen::Index r = 0; r < n; ++r)
      G(s, r) = ipow(D, s_inv.compose(group[static_cast<std::size_t>(r)]).cycle_count());
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs(0) = 1.0;  // identity is first in lexicographic order
  const Eigen::VectorXd w = G.fullPivLu().solve(rhs);
  return {w.data(), w.data() + w.size()};
}

namespace {

struct CacheKey {
  int t;
  double D;
  bool operator<(const CacheKey& o) const {
    return t != o.t ? t < o.t : D < o.D;
  }
};

constexpr std::size_t kCacheCapacity = 4096;

std::shared_mutex& cache_mutex() {
  static std::shared_mutex m;
  return m;
}

std::map<CacheKey, std::shared_ptr<const WeingartenTable>>& cache() {
  static std::map<CacheKey, std::shared_ptr<const WeingartenTable>> c;
  return c;
}

std::shared_ptr<const WeingartenTable> build_table(int t, double D) {
  const auto group = enumerate_symmetric_group(t);
  const auto w = weingarten_vector(t, D);
  auto table = std::make_shared<WeingartenTable>();
  table->t = t;
  table->D = D;
  std::map<std::vector<int>, std::pair<double, int>> acc;
  for (std::size_t i = 0; i < group.size(); ++i) {
    auto& slot = acc[group[i].cycle_type()];
    slot.first += w[i];
    slot.second += 1;
  }
  for (const auto& [type, sum_count] : acc)
    table->values[type] = sum_count.first / sum_count.second;
  return table;
}

}  // namespace

std::shared_ptr<const WeingartenTable> weingarten_table(int t, double D) {
  const CacheKey key{t, D};
  {
    std::shared_lock lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  auto table = build_table(t, D);
  std::unique_lock lock(cache_mutex());
  auto& c = cache();
  if (c.size() >= kCacheCapacity) c.clear();
  auto [it, inserted] = c.emplace(key, std::move(table));
  return it->second;
}

double weingarten_gram_residual(const WeingartenTable& table) {
  const auto group = enumerate_symmetric_group(table.t);
  double worst = 0.0;
  for (const auto& sigma : group) {
    double sum = 0.0;
    for (const auto& tau : group)
      sum += table(sigma.compose(tau.inverse())) * ipow(table.D, tau.cycle_count());
    worst = std::max(worst, std::abs(sum - (sigma.is_identity() ? 1.0 : 0.0)));
  }
  return worst;
}

void clear_weingarten_cache() {
  std::unique_lock lock(cache_mutex());
  cache().clear();
}

std::size_t weingarten_cache_size() {
  std::shared_lock lock(cache_mutex());
  return cache().size();
}

}  // namespace qdesigns
