#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "lierep/numeric.hpp"

namespace lierep {

enum class Family : std::uint8_t { A, D, E };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

/// Simple Lie algebra of simply-laced type: A_n (n>=1), D_n (n>=3),
/// E_6, E_7, E_8. Bourbaki node numbering throughout.
struct AlgebraSpec {
  Family family;
  int rank;

  bool valid() const {
    switch (family) {
      case Family::A: return rank >= 1;
      case Family::D: return rank >= 3;
      case Family::E: return rank >= 6 && rank <= 8;
    }
    return false;
  }

  std::string name() const { return family_letter(family) + std::to_string(rank); }

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  friend bool operator!=(const AlgebraSpec& a, const AlgebraSpec& b) { return !(a == b); }
};

/// Parses "A7", "D4", "E7", ... Returns nullopt if not a valid spec.
inline std::optional<AlgebraSpec> parse_algebra(const std::string& s) {
  if (s.size() < 2) return std::nullopt;
  Family fam;
  switch (s[0]) {
    case 'A': case 'a': fam = Family::A; break;
    case 'D': case 'd': fam = Family::D; break;
    case 'E': case 'e': fam = Family::E; break;
    default: return std::nullopt;
  }
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
  const int rank = std::stoi(s.substr(1));
  const AlgebraSpec spec{fam, rank};
  if (!spec.valid()) return std::nullopt;
  return spec;
}

/// Coordinate vector; inline storage covers every rank used in practice.
using Coords = boost::container::small_vector<int, 8>;

inline std::size_t coords_hash(const Coords& c) {
  std::size_t h = 1469598103934665603ull;
  for (int x : c) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
    h *= 1099511628211ull;
  }
  return h;
}

struct CoordsHash {
  std::size_t operator()(const Coords& c) const { return coords_hash(c); }
};

/// Integral weight in the fundamental-weight (Dynkin label) basis.
struct Weight {
  AlgebraSpec algebra;
  Coords coords;

  bool is_zero() const {
    for (int x : coords)
      if (x != 0) return false;
    return true;
  }

  bool is_dominant() const {
    for (int x : coords)
      if (x < 0) return false;
    return true;
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.algebra == b.algebra && a.coords == b.coords;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.algebra.family != b.algebra.family) return a.algebra.family < b.algebra.family;
    if (a.algebra.rank != b.algebra.rank) return a.algebra.rank < b.algebra.rank;
    return a.coords < b.coords;
  }
};

inline Weight zero_weight(AlgebraSpec spec) {
  return Weight{spec, Coords(static_cast<std::size_t>(spec.rank), 0)};
}

inline Weight fundamental_weight(AlgebraSpec spec, int node) {
  if (node < 1 || node > spec.rank) throw error("fundamental_weight: node out of range");
  Coords c(static_cast<std::size_t>(spec.rank), 0);
  c[static_cast<std::size_t>(node - 1)] = 1;
  return Weight{spec, c};
}

/// "a,b,c,..." rendering of the Dynkin labels.
inline std::string coords_str(const Coords& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  return os.str();
}

/// Parses comma-separated Dynkin labels. Returns nullopt on malformed input
/// or when the length does not match the rank.
inline std::optional<Weight> parse_weight(AlgebraSpec spec, const std::string& s) {
  Coords c;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) return std::nullopt;
      c.push_back(v);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (static_cast<int>(c.size()) != spec.rank) return std::nullopt;
  return Weight{spec, c};
}

inline void require_same_algebra(const AlgebraSpec& a, const AlgebraSpec& b, const char* where) {
  if (!(a == b))
    throw error(std::string(where) + ": algebra mismatch (" + a.name() + " vs " + b.name() + ")");
}

}  // namespace lierep
