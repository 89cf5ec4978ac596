#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lierep/numeric.hpp"
#include "lierep/weight.hpp"

namespace lierep {

/// Root-system data for one simply-laced algebra, in the normalization
/// where every root has squared length 2. Weights use fundamental-weight
/// coordinates; each positive root is additionally kept in simple-root
/// coordinates, which makes the pairing <weight, root> a plain integer
/// dot product.
struct RootSystem {
  AlgebraSpec spec;
  std::vector<std::vector<int>> cartan;        // Bourbaki Cartan matrix
  std::vector<Weight> positive_roots;          // fundamental coordinates
  std::vector<Coords> positive_root_coords;    // simple-root coordinates
  Weight weyl_vector;                          // (1,...,1)
  std::vector<std::vector<Rat>> gram;          // inverse Cartan
  std::size_t highest_root_index = 0;
  std::vector<Rat> level_coeffs;               // column sums of gram

  int rank() const { return spec.rank; }

  const Weight& highest_root() const { return positive_roots[highest_root_index]; }

  /// Level of a weight: the sum of its simple-root coordinates. Strictly
  /// positive on positive roots, which makes it a valid peeling order.
  Rat level(const Coords& fund) const {
    Rat s = 0;
    for (std::size_t i = 0; i < fund.size(); ++i) s += level_coeffs[i] * fund[i];
    return s;
  }
};

namespace detail {

inline std::vector<std::pair<int, int>> dynkin_edges(AlgebraSpec spec) {
  std::vector<std::pair<int, int>> edges;
  const int n = spec.rank;
  switch (spec.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i + 1 <= n - 2; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 2, n - 1);
      edges.emplace_back(n - 2, n);
      break;
    case Family::E:
      // chain 1-3-4-...-n with node 2 attached to node 4
      edges.emplace_back(1, 3);
      edges.emplace_back(3, 4);
      edges.emplace_back(2, 4);
      for (int i = 4; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  return edges;
}

/// Exact inverse via Gauss-Jordan over the rationals.
inline std::vector<std::vector<Rat>> invert_matrix(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw error("invert_matrix: singular matrix");
    std::swap(a[piv], a[col]);
    const Rat d = a[col][col];
    for (auto& x : a[col]) x /= d;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rat f = a[row][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace detail

inline RootSystem build_root_system(AlgebraSpec spec) {
  if (!spec.valid())
    throw error("build_root_system: invalid family/rank combination " +
                std::string(1, family_letter(spec.family)) + std::to_string(spec.rank) +
                " (need A_n n>=1, D_n n>=3, or E_6/E_7/E_8)");
  const int n = spec.rank;
  RootSystem rs;
  rs.spec = spec;

  rs.cartan.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) rs.cartan[i][i] = 2;
  for (auto [i, j] : detail::dynkin_edges(spec)) {
    rs.cartan[i - 1][j - 1] = -1;
    rs.cartan[j - 1][i - 1] = -1;
  }

  // Positive roots by height. In simply-laced systems root strings have
  // length at most 2, so alpha + alpha_i is a root iff p - <alpha, alpha_i> >= 1
  // with p = 1 exactly when alpha - alpha_i is a root.
  std::unordered_set<Coords, CoordsHash> seen;
  std::vector<Coords> roots;    // simple-root coordinates
  std::vector<Coords> fund;     // fundamental coordinates
  for (int i = 0; i < n; ++i) {
    Coords rc(static_cast<std::size_t>(n), 0);
    rc[i] = 1;
    Coords fc(rs.cartan[i].begin(), rs.cartan[i].end());
    seen.insert(rc);
    roots.push_back(rc);
    fund.push_back(fc);
  }
  for (std::size_t head = 0; head < roots.size(); ++head) {
    const Coords rc = roots[head];
    const Coords fc = fund[head];
    for (int i = 0; i < n; ++i) {
      Coords down = rc;
      down[i] -= 1;
      const bool down_is_root =
          (down[i] >= 0) && (seen.count(down) > 0);
      const int p = down_is_root ? 1 : 0;
      if (p - fc[i] < 1) continue;
      Coords up = rc;
      up[i] += 1;
      if (seen.count(up)) continue;
      Coords ufc = fc;
      for (int j = 0; j < n; ++j) ufc[j] += rs.cartan[j][i];
      seen.insert(up);
      roots.push_back(up);
      fund.push_back(ufc);
    }
  }

  const auto height = [](const Coords& rc) {
    long h = 0;
    for (int x : rc) h += x;
    return h;
  };
  std::vector<std::size_t> order(roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const long ha = height(roots[a]), hb = height(roots[b]);
    if (ha != hb) return ha < hb;
    return roots[a] < roots[b];
  });
  for (std::size_t idx : order) {
    rs.positive_roots.push_back(Weight{spec, fund[idx]});
    rs.positive_root_coords.push_back(roots[idx]);
  }
  rs.highest_root_index = rs.positive_roots.size() - 1;
  if (!rs.positive_roots[rs.highest_root_index].is_dominant())
    throw error("build_root_system: highest root is not dominant");

  rs.weyl_vector = Weight{spec, Coords(static_cast<std::size_t>(n), 1)};
  rs.gram = detail::invert_matrix(rs.cartan);
  rs.level_coeffs.assign(static_cast<std::size_t>(n), Rat(0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) rs.level_coeffs[j] += rs.gram[i][j];
  return rs;
}

/// <u, v> with respect to the invariant form normalized to <root, root> = 2.
inline Rat inner_product(const RootSystem& rs, const Weight& u, const Weight& v) {
  require_same_algebra(rs.spec, u.algebra, "inner_product");
  require_same_algebra(rs.spec, v.algebra, "inner_product");
  Rat s = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    if (u.coords[i] == 0) continue;
    Rat row = 0;
    for (int j = 0; j < rs.rank(); ++j)
      if (v.coords[j] != 0) row += rs.gram[i][j] * v.coords[j];
    s += row * u.coords[i];
  }
  return s;
}

/// <w, alpha> for a root alpha given in simple-root coordinates; an integer,
/// since <omega_i, alpha_j> = delta_ij in the squared-length-2 normalization.
inline long pairing(const Coords& weight_fund, const Coords& root_coords) {
  long s = 0;
  for (std::size_t i = 0; i < weight_fund.size(); ++i)
    s += static_cast<long>(weight_fund[i]) * root_coords[i];
  return s;
}

/// Simple reflection s_i (1-based node index).
inline Weight reflect(const RootSystem& rs, const Weight& w, int i) {
  require_same_algebra(rs.spec, w.algebra, "reflect");
  if (i < 1 || i > rs.rank()) throw error("reflect: node index out of range");
  const int c = w.coords[i - 1];
  if (c == 0) return w;
  Weight out = w;
  for (int j = 0; j < rs.rank(); ++j) out.coords[j] -= c * rs.cartan[j][i - 1];
  return out;
}

namespace detail {

/// In-place simple reflection on raw coordinates.
inline void reflect_coords(const RootSystem& rs, Coords& c, int i0) {
  const int v = c[i0];
  for (int j = 0; j < rs.rank(); ++j) c[j] -= v * rs.cartan[j][i0];
}

}  // namespace detail

/// Dominant representative of the Weyl orbit of w (no shift).
inline Weight dominant_of(const RootSystem& rs, const Weight& w) {
  require_same_algebra(rs.spec, w.algebra, "dominant_of");
  Coords c = w.coords;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (c[i] < 0) { neg = i; break; }
    if (neg < 0) break;
    detail::reflect_coords(rs, c, neg);
  }
  return Weight{rs.spec, c};
}

/// Shifted dominant conjugate: operates on w + delta, reflecting at negative
/// coordinates and tracking sign parity. Returns sign 0 when w + delta lies
/// on a chamber wall (a coordinate of the dominant representative is 0), in
/// which case the weight carries no Racah-Speiser contribution.
inline std::pair<Weight, int> dominant_conjugate_shifted(const RootSystem& rs, const Weight& w) {
  require_same_algebra(rs.spec, w.algebra, "dominant_conjugate_shifted");
  Coords c = w.coords;
  for (int i = 0; i < rs.rank(); ++i) c[i] += 1;  // + delta
  int sign = 1;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (c[i] < 0) { neg = i; break; }
    if (neg < 0) break;
    detail::reflect_coords(rs, c, neg);
    sign = -sign;
  }
  // a zero coordinate means w + delta is fixed by a reflection: singular
  for (int i = 0; i < rs.rank(); ++i)
    if (c[i] == 0) { sign = 0; break; }
  for (int j = 0; j < rs.rank(); ++j) c[j] -= 1;  // - delta
  return {Weight{rs.spec, c}, sign};
}

/// Streams the Weyl orbit of a dominant weight, each element exactly once.
///
/// Every non-dominant element v has a unique parent s_i(v) at the first
/// negative coordinate i; the orbit is the tree rooted at the dominant
/// element and is walked depth-first without a visited set, so memory stays
/// proportional to the frontier even for orbits with millions of elements.
inline void weyl_orbit(const RootSystem& rs, const Weight& w,
                       const std::function<void(const Weight&)>& visit) {
  require_same_algebra(rs.spec, w.algebra, "weyl_orbit");
  if (!w.is_dominant()) throw error("weyl_orbit: weight is not dominant");
  std::vector<Coords> stack;
  stack.push_back(w.coords);
  while (!stack.empty()) {
    Coords v = std::move(stack.back());
    stack.pop_back();
    visit(Weight{rs.spec, v});
    for (int i = 0; i < rs.rank(); ++i) {
      if (v[i] <= 0) continue;
      Coords child = v;
      detail::reflect_coords(rs, child, i);
      // child's first negative coordinate must be i, else it belongs
      // to a different branch of the tree
      bool mine = true;
      for (int j = 0; j < i; ++j)
        if (child[j] < 0) { mine = false; break; }
      if (mine) stack.push_back(std::move(child));
    }
  }
}

inline std::vector<Weight> weyl_orbit_vec(const RootSystem& rs, const Weight& w) {
  std::vector<Weight> out;
  weyl_orbit(rs, w, [&](const Weight& x) { out.push_back(x); });
  return out;
}

inline Int weyl_group_order(const RootSystem& rs) {
  const int n = rs.rank();
  Int f = 1;
  switch (rs.spec.family) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) f *= i;
      return f;
    case Family::D:
      for (int i = 2; i <= n; ++i) f *= i;
      return f << (n - 1);
    case Family::E:
      if (n == 6) return Int(51840);
      if (n == 7) return Int(2903040);
      return Int(696729600);
  }
  throw error("weyl_group_order: unreachable");
}

/// Process-wide cache of built root systems, keyed by algebra.
inline const RootSystem& root_system(AlgebraSpec spec) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<RootSystem>> cache;
  const std::pair<int, int> key{static_cast<int>(spec.family), spec.rank};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<RootSystem>(build_root_system(spec))).first;
  return *it->second;
}

}  // namespace lierep
