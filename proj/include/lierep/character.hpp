#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lierep/numeric.hpp"
#include "lierep/rootsystem.hpp"
#include "lierep/weight.hpp"

namespace lierep {

/// Formal character: finite multiset of weights with positive multiplicities.
struct Character {
  AlgebraSpec algebra;
  std::unordered_map<Coords, Int, CoordsHash> entries;
  Int total_dim = 0;

  void add(const Coords& w, const Int& m) {
    if (m == 0) return;
    auto it = entries.find(w);
    if (it == entries.end()) {
      entries.emplace(w, m);
    } else {
      it->second += m;
      if (it->second == 0) entries.erase(it);
    }
    total_dim += m;
  }
};

/// Isotypic decomposition: dominant highest weights with multiplicities.
struct Decomposition {
  AlgebraSpec algebra;
  std::map<Coords, Int> parts;

  void add(const Coords& w, const Int& m) {
    if (m == 0) return;
    auto it = parts.find(w);
    if (it == parts.end()) {
      parts.emplace(w, m);
    } else {
      it->second += m;
      if (it->second == 0) parts.erase(it);
    }
  }

  bool contains(const Coords& w) const { return parts.count(w) > 0; }

  Int multiplicity(const Coords& w) const {
    auto it = parts.find(w);
    return it == parts.end() ? Int(0) : it->second;
  }

  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.algebra == b.algebra && a.parts == b.parts;
  }
};

inline void require_dominant(const Weight& w, const char* where) {
  if (!w.is_dominant())
    throw error(std::string(where) + ": weight " + coords_str(w.coords) + " is not dominant");
}

/// Weyl dimension formula.
inline Int dim_irrep(const RootSystem& rs, const Weight& lambda) {
  require_same_algebra(rs.spec, lambda.algebra, "dim_irrep");
  require_dominant(lambda, "dim_irrep");
  Coords shifted = lambda.coords;
  for (auto& x : shifted) x += 1;
  Int num = 1, den = 1;
  for (const auto& rc : rs.positive_root_coords) {
    num *= pairing(shifted, rc);
    den *= pairing(rs.weyl_vector.coords, rc);
  }
  if (num % den != 0) throw error("dim_irrep: non-integer dimension (internal)");
  return num / den;
}

/// Casimir eigenvalue of V_lambda relative to the adjoint representation:
/// <lambda, lambda + 2 delta> / <theta, theta + 2 delta>. Scale-invariant.
inline Rat casimir_ratio(const RootSystem& rs, const Weight& lambda) {
  require_same_algebra(rs.spec, lambda.algebra, "casimir_ratio");
  require_dominant(lambda, "casimir_ratio");
  const auto shifted_norm = [&](const Weight& w) {
    Weight s = w;
    for (auto& x : s.coords) x += 2;  // w + 2 delta in the inner product below
    return inner_product(rs, w, s);
  };
  return shifted_norm(lambda) / shifted_norm(rs.highest_root());
}

namespace detail {

/// Multiplicities of the dominant weights of one irreducible module.
struct DomTable {
  Weight lambda;
  std::vector<Coords> dominant;  // increasing depth below lambda, then lex
  std::unordered_map<Coords, Int, CoordsHash> mult;
  Int dim;
};

/// Dominant representative plus the updated root-coordinate offset from
/// the highest weight; offset entries all >= 0 iff the weight belongs to
/// the module.
inline bool member_offset(const RootSystem& rs, Coords c, Coords& offset) {
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (c[i] < 0) { neg = i; break; }
    if (neg < 0) break;
    offset[neg] += c[neg];
    reflect_coords(rs, c, neg);
  }
  for (int i = 0; i < rs.rank(); ++i)
    if (offset[i] < 0) return false;
  return true;
}

inline Coords dominantize(const RootSystem& rs, Coords c) {
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (c[i] < 0) { neg = i; break; }
    if (neg < 0) return c;
    reflect_coords(rs, c, neg);
  }
}

inline DomTable compute_dom_table(const RootSystem& rs, const Weight& lambda) {
  const int n = rs.rank();
  DomTable table;
  table.lambda = lambda;
  table.dim = dim_irrep(rs, lambda);

  // Walk the full weight diagram from the highest weight by simple-root
  // steps; a candidate belongs to the diagram iff its dominant conjugate
  // still lies below lambda in the root lattice.
  std::unordered_set<Coords, CoordsHash> visited;
  std::vector<std::pair<Coords, Coords>> queue;                // (weight, offset)
  std::vector<std::tuple<long, Coords, Coords>> dominant;      // (depth, weight, offset)
  visited.insert(lambda.coords);
  queue.emplace_back(lambda.coords, Coords(static_cast<std::size_t>(n), 0));
  dominant.emplace_back(0, lambda.coords, Coords(static_cast<std::size_t>(n), 0));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Coords w = queue[head].first;
    const Coords off = queue[head].second;
    for (int i = 0; i < n; ++i) {
      Coords c = w;
      for (int j = 0; j < n; ++j) c[j] -= rs.cartan[j][i];
      if (visited.count(c)) continue;
      Coords o = off;
      o[i] += 1;
      Coords probe_off = o;
      if (!member_offset(rs, c, probe_off)) continue;
      visited.insert(c);
      bool dom = true;
      long depth = 0;
      for (int j = 0; j < n; ++j) {
        if (c[j] < 0) dom = false;
        depth += o[j];
      }
      if (dom) dominant.emplace_back(depth, c, o);
      queue.emplace_back(std::move(c), std::move(o));
    }
  }
  std::sort(dominant.begin(), dominant.end());

  // Freudenthal recursion, top down: every weight mu + k*alpha sits closer
  // to lambda than mu, so its dominant conjugate is already tabulated, and
  // root strings are unbroken so the walk stops at the first non-member.
  table.mult.emplace(lambda.coords, Int(1));
  for (std::size_t d = 1; d < dominant.size(); ++d) {
    const Coords& mu = std::get<1>(dominant[d]);
    Int num = 0;
    for (std::size_t r = 0; r < rs.positive_root_coords.size(); ++r) {
      const Coords& rc = rs.positive_root_coords[r];
      const Coords& rf = rs.positive_roots[r].coords;
      long pair_val = pairing(mu, rc);
      Coords up = mu;
      for (;;) {
        for (int j = 0; j < n; ++j) up[j] += rf[j];
        pair_val += 2;
        auto mit = table.mult.find(dominantize(rs, up));
        if (mit == table.mult.end()) break;
        num += mit->second * pair_val;
      }
    }
    num *= 2;
    // denominator <lambda + mu + 2 delta, lambda - mu>
    Coords sum(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) sum[j] = lambda.coords[j] + mu[j] + 2;
    const long den = pairing(sum, std::get<2>(dominant[d]));
    if (den <= 0 || num % den != 0)
      throw error("freudenthal: non-integral multiplicity (internal)");
    table.mult.emplace(mu, num / den);
  }
  table.dominant.reserve(dominant.size());
  for (auto& [depth, w, off] : dominant) table.dominant.push_back(std::move(w));
  return table;
}

}  // namespace detail

namespace detail {

inline std::string cache_file_name(const Weight& lambda) {
  std::string s = lambda.algebra.name() + "_";
  for (std::size_t i = 0; i < lambda.coords.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(lambda.coords[i]);
  }
  return s + ".char";
}

inline bool load_dom_table(const std::filesystem::path& file, const RootSystem& rs,
                           const Weight& lambda, DomTable& table) {
  std::ifstream in(file);
  if (!in) return false;
  std::string line;
  if (!std::getline(in, line) || line != "lierep-char v1") return false;
  if (!std::getline(in, line) || line != "algebra " + lambda.algebra.name()) return false;
  if (!std::getline(in, line) || line != "weight " + coords_str(lambda.coords)) return false;
  std::size_t count = 0;
  if (!std::getline(in, line) || line.rfind("entries ", 0) != 0) return false;
  try {
    count = std::stoul(line.substr(8));
  } catch (const std::exception&) {
    return false;
  }
  DomTable t;
  t.lambda = lambda;
  t.dim = dim_irrep(rs, lambda);
  std::vector<std::pair<std::pair<Rat, Coords>, Int>> rows;
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) return false;
    const auto sp = line.find(' ');
    if (sp == std::string::npos) return false;
    const auto w = parse_weight(lambda.algebra, line.substr(0, sp));
    if (!w || !w->is_dominant()) return false;
    Int m;
    try {
      m = Int(line.substr(sp + 1));
    } catch (const std::exception&) {
      return false;
    }
    if (m <= 0) return false;
    rows.push_back({{-rs.level(w->coords), w->coords}, m});
  }
  std::sort(rows.begin(), rows.end());
  for (auto& [key, m] : rows) {
    t.dominant.push_back(key.second);
    if (!t.mult.emplace(key.second, m).second) return false;
  }
  if (t.mult.find(lambda.coords) == t.mult.end() || t.mult.at(lambda.coords) != 1) return false;
  // a tampered file with plausible syntax must not be trusted: the orbit
  // expansion has to reproduce the Weyl dimension exactly
  Int expanded = 0;
  for (const auto& dom : t.dominant) {
    std::size_t orbit = 0;
    weyl_orbit(rs, Weight{lambda.algebra, dom}, [&](const Weight&) { ++orbit; });
    expanded += t.mult.at(dom) * orbit;
  }
  if (expanded != t.dim) return false;
  table = std::move(t);
  return true;
}

inline void store_dom_table(const std::filesystem::path& file, const DomTable& table) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  std::ofstream out(file);
  if (!out) return;
  out << "lierep-char v1\n";
  out << "algebra " << table.lambda.algebra.name() << "\n";
  out << "weight " << coords_str(table.lambda.coords) << "\n";
  out << "entries " << table.dominant.size() << "\n";
  for (const auto& w : table.dominant) out << coords_str(w) << ' ' << table.mult.at(w) << "\n";
}

/// Memoized dominant-weight multiplicity tables. Results are exact and
/// schedule-independent, so the cache is a plain synchronized map; the
/// optional on-disk layer is keyed by algebra + weight and activated by
/// the LIEREP_CACHE_DIR environment variable.
inline std::shared_ptr<const DomTable> dominant_character(const RootSystem& rs,
                                                          const Weight& lambda) {
  require_same_algebra(rs.spec, lambda.algebra, "weight_multiplicities");
  require_dominant(lambda, "weight_multiplicities");
  struct Key {
    int fam, rank;
    Coords coords;
    bool operator<(const Key& o) const {
      if (fam != o.fam) return fam < o.fam;
      if (rank != o.rank) return rank < o.rank;
      return coords < o.coords;
    }
  };
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const DomTable>> cache;
  const Key key{static_cast<int>(lambda.algebra.family), lambda.algebra.rank, lambda.coords};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::shared_ptr<DomTable> fresh;
  const char* dir = std::getenv("LIEREP_CACHE_DIR");
  if (dir && *dir) {
    const auto file = std::filesystem::path(dir) / cache_file_name(lambda);
    DomTable t;
    if (load_dom_table(file, rs, lambda, t)) fresh = std::make_shared<DomTable>(std::move(t));
  }
  if (!fresh) {
    fresh = std::make_shared<DomTable>(compute_dom_table(rs, lambda));
    if (dir && *dir)
      store_dom_table(std::filesystem::path(dir) / cache_file_name(lambda), *fresh);
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, fresh);
  return it->second;
}

}  // namespace detail

/// Full formal character of the irreducible with highest weight lambda
/// (Freudenthal multiplicities expanded over Weyl orbits).
inline Character weight_multiplicities(const RootSystem& rs, const Weight& lambda) {
  const auto table = detail::dominant_character(rs, lambda);
  Character ch;
  ch.algebra = rs.spec;
  for (const auto& dom : table->dominant) {
    const Int& m = table->mult.at(dom);
    weyl_orbit(rs, Weight{rs.spec, dom}, [&](const Weight& w) { ch.add(w.coords, m); });
  }
  if (ch.total_dim != table->dim)
    throw error("weight_multiplicities: dimension mismatch between Freudenthal table and " +
                std::string("Weyl dimension formula (internal)"));
  return ch;
}

/// Multiplicity of a single (not necessarily dominant) weight in V_lambda.
inline Int weight_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  const auto table = detail::dominant_character(rs, lambda);
  const Weight dom = dominant_of(rs, mu);
  auto it = table->mult.find(dom.coords);
  return it == table->mult.end() ? Int(0) : it->second;
}

/// Pointwise product of two formal characters (character of the tensor
/// product when both inputs are genuine characters).
inline Character multiply_characters(const Character& a, const Character& b) {
  require_same_algebra(a.algebra, b.algebra, "multiply_characters");
  Character out;
  out.algebra = a.algebra;
  const std::size_t n = a.entries.empty() ? 0 : a.entries.begin()->first.size();
  for (const auto& [wa, ma] : a.entries) {
    for (const auto& [wb, mb] : b.entries) {
      Coords sum(wa);
      for (std::size_t i = 0; i < n; ++i) sum[i] += wb[i];
      out.add(sum, ma * mb);
    }
  }
  return out;
}

inline Int decomposition_dim(const RootSystem& rs, const Decomposition& dec) {
  Int d = 0;
  for (const auto& [w, m] : dec.parts) d += m * dim_irrep(rs, Weight{rs.spec, w});
  return d;
}

/// Re-expands an isotypic decomposition into a full formal character.
inline Character expand_decomposition(const RootSystem& rs, const Decomposition& dec) {
  Character ch;
  ch.algebra = rs.spec;
  for (const auto& [w, m] : dec.parts) {
    const Character part = weight_multiplicities(rs, Weight{rs.spec, w});
    for (const auto& [pw, pm] : part.entries) ch.add(pw, pm * m);
  }
  return ch;
}

/// Peels a genuine character into irreducibles: repeatedly find the maximal
/// remaining weight (by level, ties lexicographic), subtract that full
/// irreducible character. A non-dominant maximum or a negative intermediate
/// multiplicity means the input was not a representation character.
inline Decomposition decompose_character(const RootSystem& rs, const Character& c) {
  require_same_algebra(rs.spec, c.algebra, "decompose_character");
  Decomposition out;
  out.algebra = rs.spec;
  std::unordered_map<Coords, Int, CoordsHash> work;
  for (const auto& [w, m] : c.entries)
    if (m != 0) work.emplace(w, m);
  while (!work.empty()) {
    const Coords* best = nullptr;
    Rat best_level;
    Int mass = 0;  // weights still to be accounted for
    for (const auto& [w, m] : work) {
      if (m > 0) mass += m;
      const Rat lv = rs.level(w);
      if (!best || lv > best_level || (lv == best_level && w < *best)) {
        best = &w;
        best_level = lv;
      }
    }
    const Coords top = *best;
    const Int mult = work.at(top);
    const Weight hw{rs.spec, top};
    if (!hw.is_dominant())
      throw peel_error("decompose_character: maximal weight " + coords_str(top) +
                       " is not dominant; not a representation character");
    if (mult < 0)
      throw peel_error("decompose_character: negative multiplicity " + mult.str() +
                       " at weight " + coords_str(top) + "; not a representation character");
    // an irreducible that cannot fit into the remaining weight mass proves
    // the input is no character, and guards the expansion below
    if (mult * dim_irrep(rs, hw) > mass)
      throw peel_error("decompose_character: " + mult.str() + " x V(" + coords_str(top) +
                       ") exceeds the remaining weight multiset; not a representation character");
    const Character part = weight_multiplicities(rs, hw);
    for (const auto& [pw, pm] : part.entries) {
      auto it = work.find(pw);
      const Int delta = pm * mult;
      if (it == work.end()) {
        if (delta != 0) work.emplace(pw, -delta);
      } else {
        it->second -= delta;
        if (it->second == 0) work.erase(it);
      }
    }
    // anything newly negative will surface as a non-dominant or negative
    // maximum in a later round
    out.add(top, mult);
  }
  return out;
}

/// Racah-Speiser tensor product decomposition; the factor of smaller
/// dimension supplies the weight system.
inline Decomposition tensor_decompose(const RootSystem& rs, const Weight& lambda,
                                      const Weight& mu) {
  require_same_algebra(rs.spec, lambda.algebra, "tensor_decompose");
  require_same_algebra(rs.spec, mu.algebra, "tensor_decompose");
  require_dominant(lambda, "tensor_decompose");
  require_dominant(mu, "tensor_decompose");
  const Weight* big = &lambda;
  const Weight* small = &mu;
  if (dim_irrep(rs, mu) > dim_irrep(rs, lambda)) std::swap(big, small);
  const auto table = detail::dominant_character(rs, *small);
  std::map<Coords, Int> acc;
  const int n = rs.rank();
  for (const auto& dom : table->dominant) {
    const Int& m = table->mult.at(dom);
    weyl_orbit(rs, Weight{rs.spec, dom}, [&](const Weight& nu) {
      Weight shifted{rs.spec, big->coords};
      for (int i = 0; i < n; ++i) shifted.coords[i] += nu.coords[i];
      const auto [rep, sign] = dominant_conjugate_shifted(rs, shifted);
      if (sign == 0) return;
      acc[rep.coords] += sign > 0 ? m : -m;
    });
  }
  Decomposition out;
  out.algebra = rs.spec;
  for (const auto& [w, m] : acc) {
    if (m == 0) continue;
    if (m < 0)
      throw error("tensor_decompose: negative multiplicity (internal)");
    out.add(w, m);
  }
  return out;
}

/// Symmetric square of an arbitrary genuine character (used for reducible
/// modules such as the full isotropy representation), via the weight-pair
/// multiset {nu_i + nu_j : i <= j}.
inline Decomposition sym2_decompose_character(const RootSystem& rs, const Character& ch) {
  require_same_algebra(rs.spec, ch.algebra, "sym2_decompose_character");
  std::vector<std::pair<Coords, Int>> flat(ch.entries.begin(), ch.entries.end());
  std::sort(flat.begin(), flat.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Character sym;
  sym.algebra = rs.spec;
  const std::size_t n = flat.empty() ? 0 : flat[0].first.size();
  for (std::size_t i = 0; i < flat.size(); ++i) {
    for (std::size_t j = i; j < flat.size(); ++j) {
      Coords sum(flat[i].first);
      for (std::size_t k = 0; k < n; ++k) sum[k] += flat[j].first[k];
      const Int count = (i == j) ? Int(flat[i].second * (flat[i].second + 1) / 2)
                                 : Int(flat[i].second * flat[j].second);
      sym.add(sum, count);
    }
  }
  return decompose_character(rs, sym);
}

/// Symmetric square of one irreducible.
inline Decomposition sym2_decompose(const RootSystem& rs, const Weight& lambda) {
  require_same_algebra(rs.spec, lambda.algebra, "sym2_decompose");
  require_dominant(lambda, "sym2_decompose");
  return sym2_decompose_character(rs, weight_multiplicities(rs, lambda));
}

/// Difference of decompositions; throws if any multiplicity would go
/// negative.
inline Decomposition decomposition_sub(const Decomposition& a, const Decomposition& b) {
  require_same_algebra(a.algebra, b.algebra, "decomposition_sub");
  Decomposition out = a;
  for (const auto& [w, m] : b.parts) {
    const Int have = out.multiplicity(w);
    if (have < m)
      throw error("decomposition_sub: part " + coords_str(w) + " would become negative");
    out.add(w, -m);
  }
  return out;
}

/// Exterior square, obtained as the complement of the symmetric square
/// inside the full tensor square.
inline Decomposition alt2_decompose(const RootSystem& rs, const Weight& lambda) {
  return decomposition_sub(tensor_decompose(rs, lambda, lambda), sym2_decompose(rs, lambda));
}

}  // namespace lierep
