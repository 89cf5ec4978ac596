// Test-only oracles, deliberately independent of the engine's
// fundamental-coordinate machinery: the D4 computations run in (half-unit)
// euclidean coordinates with explicit signed permutations.
#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <unordered_map>
#include <vector>

#include "lierep/weight.hpp"

namespace oracles {

using EVec = std::array<int, 4>;  // D4 weight in half-unit euclidean coordinates

struct EVecHash {
  std::size_t operator()(const EVec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

// eta_1 = e1, eta_2 = e1+e2, eta_3 = (e1+e2+e3-e4)/2, eta_4 = (e1+e2+e3+e4)/2
inline EVec d4_to_euclid_half(const lierep::Coords& dynkin) {
  static constexpr int fw[4][4] = {
      {2, 0, 0, 0}, {2, 2, 0, 0}, {1, 1, 1, -1}, {1, 1, 1, 1}};
  EVec v{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v[j] += dynkin[i] * fw[i][j];
  return v;
}

inline const std::vector<EVec>& d4_positive_roots_half() {
  static const std::vector<EVec> roots = [] {
    std::vector<EVec> out;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        EVec diff{0, 0, 0, 0}, sum{0, 0, 0, 0};
        diff[i] = 2;
        diff[j] = -2;
        sum[i] = 2;
        sum[j] = 2;
        out.push_back(diff);
        out.push_back(sum);
      }
    return out;
  }();
  return roots;
}

// strictly positive on every positive root
inline long height_weight(const EVec& v) { return 3L * v[0] + 2L * v[1] + 1L * v[2]; }

/// Kostant partition function: the number of ways to write v as a
/// nonnegative integer combination of the positive roots.
inline long long kostant_partition(const EVec& v) {
  struct Key {
    int idx;
    EVec v;
    bool operator==(const Key& o) const { return idx == o.idx && v == o.v; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return EVecHash{}(k.v) * 31u + static_cast<std::size_t>(k.idx);
    }
  };
  static std::unordered_map<Key, long long, KeyHash> memo;
  const auto& roots = d4_positive_roots_half();

  const std::function<long long(int, EVec)> rec = [&](int idx, EVec rest) -> long long {
    const bool zero = rest == EVec{0, 0, 0, 0};
    if (zero) return 1;
    if (idx == static_cast<int>(roots.size())) return 0;
    if (height_weight(rest) < 0) return 0;
    const Key key{idx, rest};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long total = 0;
    EVec cur = rest;
    for (;;) {
      total += rec(idx + 1, cur);
      for (int j = 0; j < 4; ++j) cur[j] -= roots[idx][j];
      if (height_weight(cur) < 0) break;
    }
    memo.emplace(key, total);
    return total;
  };
  return rec(0, v);
}

/// Weight multiplicity by the alternating Kostant sum over the 192 signed
/// permutations with an even number of sign flips; det(w) is the sign of
/// the underlying permutation.
inline long long kostant_multiplicity(const lierep::Coords& lambda, const lierep::Coords& mu) {
  static const EVec delta{6, 4, 2, 0};  // half-units of (3,2,1,0)
  EVec lam = d4_to_euclid_half(lambda);
  EVec muv = d4_to_euclid_half(mu);
  for (int j = 0; j < 4; ++j) {
    lam[j] += delta[j];
    muv[j] += delta[j];
  }

  std::array<int, 4> perm{0, 1, 2, 3};
  long long total = 0;
  // enumerate permutations with parity tracking
  std::vector<std::pair<std::array<int, 4>, int>> perms;
  {
    const std::function<void(std::array<int, 4>&, int, int)> gen = [&](std::array<int, 4>& p,
                                                                       int k, int parity) {
      if (k == 4) {
        perms.push_back({p, parity});
        return;
      }
      for (int i = k; i < 4; ++i) {
        std::swap(p[k], p[i]);
        gen(p, k + 1, parity ^ (i != k ? 1 : 0));
        std::swap(p[k], p[i]);
      }
    };
    gen(perm, 0, 0);
  }
  for (const auto& [p, parity] : perms) {
    for (int mask = 0; mask < 16; ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
      EVec img;
      for (int j = 0; j < 4; ++j) {
        img[j] = lam[p[j]];
        if (mask & (1 << j)) img[j] = -img[j];
      }
      EVec arg;
      for (int j = 0; j < 4; ++j) arg[j] = img[j] - muv[j];
      const long long part = kostant_partition(arg);
      total += (parity ? -part : part);
    }
  }
  return total;
}

/// Clebsch-Gordan ladder for A1: (m) x (n) = (|m-n|) + ... + (m+n), step 2.
inline std::vector<int> a1_clebsch_gordan(int m, int n) {
  std::vector<int> parts;
  for (int k = std::abs(m - n); k <= m + n; k += 2) parts.push_back(k);
  return parts;
}

}  // namespace oracles
