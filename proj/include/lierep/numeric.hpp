#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace lierep {

/// Arbitrary-precision integer used for dimensions and multiplicities.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms by the backend.
using Rat = boost::multiprecision::cpp_rational;

/// Error type for all domain violations (bad input, broken invariants).
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Signals that a weight multiset failed to peel into irreducibles.
class peel_error : public error {
 public:
  explicit peel_error(const std::string& msg) : error(msg) {}
};

/// Canonical "p/q" rendering; integers print without the "/q" part.
inline std::string rat_str(const Rat& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses "p" or "p/q" with q > 0. Returns nullopt on malformed input.
inline std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto slash = s.find('/');
  const auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!is_int(s)) return std::nullopt;
      return Rat(Int(s));
    }
    const std::string p = s.substr(0, slash);
    const std::string q = s.substr(slash + 1);
    if (!is_int(p) || !is_int(q)) return std::nullopt;
    const Int den(q);
    if (den <= 0) return std::nullopt;
    return Rat(Int(p), den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace lierep
