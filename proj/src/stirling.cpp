#include "fpm/stirling.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace fpm::stirling {

StirlingTable::StirlingTable(int n_max) : n_max_(n_max) {
  if (n_max < 0 || n_max > 20) {
    throw DomainError("StirlingTable: supported range is n_max in [0, 20]");
  }
  s1_.assign(n_max + 1, std::vector<long long>(n_max + 1, 0));
  s2_.assign(n_max + 1, std::vector<long long>(n_max + 1, 0));
  s1_[0][0] = 1;
  s2_[0][0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      // s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k);  S(n,k) = S(n-1,k-1) + k S(n-1,k).
      s1_[n][k] = s1_[n - 1][k - 1] - (n - 1) * s1_[n - 1][k];
      s2_[n][k] = s2_[n - 1][k - 1] + k * s2_[n - 1][k];
    }
  }
}

long long StirlingTable::s1(int n, int k) const {
  if (n < 0 || k < 0) throw DomainError("StirlingTable: negative index");
  if (n > n_max_ || k > n_max_) throw DomainError("StirlingTable: index beyond table");
  return s1_[n][k];
}

long long StirlingTable::s2(int n, int k) const {
  if (n < 0 || k < 0) throw DomainError("StirlingTable: negative index");
  if (n > n_max_ || k > n_max_) throw DomainError("StirlingTable: index beyond table");
  return s2_[n][k];
}

const std::vector<std::vector<int>>& compositions(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;

  std::vector<std::vector<int>> out;
  if (k >= 1 && n >= k) {
    std::vector<int> comp(k);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
      if (pos == k - 1) {
        comp[pos] = remaining;
        out.push_back(comp);
        return;
      }
      for (int v = 1; v <= remaining - (k - 1 - pos); ++v) {
        comp[pos] = v;
        rec(pos + 1, remaining - v);
      }
    };
    rec(0, n);
  }
  return cache.emplace(std::make_pair(n, k), std::move(out)).first->second;
}

}  // namespace fpm::stirling
