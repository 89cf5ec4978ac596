#include <catch2/catch_amalgamated.hpp>

#include "lierep/normalization.hpp"

using namespace lierep;

namespace {

Weight w(AlgebraSpec spec, std::initializer_list<int> v) {
  return Weight{spec, Coords(v.begin(), v.end())};
}

const ChainConstants& chain() {
  static const ChainConstants cc = compute_chain_constants();
  return cc;
}

}  // namespace

TEST_CASE("adjoint normalization is 1 for the full algebra") {
  for (const AlgebraSpec spec : {kSo8, kSu8, kE7}) {
    const auto& rs = root_system(spec);
    const AmbientDecomposition d{spec, spec, {{rs.highest_root(), Int(1)}}};
    CHECK(normalize_subalgebra_casimir(d).adjoint_value == Rat(1));
  }
}

TEST_CASE("chain normalizations via branched ambient decompositions") {
  CHECK(chain().e7.adjoint_value == Rat(1));
  CHECK(chain().su8.adjoint_value == Rat(4, 9));
  CHECK(chain().so8.adjoint_value == Rat(1, 6));

  // hand route: 28 / (28 * 1 + 105 * 4/3) and 63 / (63 * 1 + 70 * 9/8)
  CHECK(Rat(28) / (Rat(28) + Rat(105) * Rat(4, 3)) == Rat(1, 6));
  CHECK(Rat(63) / (Rat(63) + Rat(70) * Rat(9, 8)) == Rat(4, 9));

  // real-form bookkeeping: dim su(8) + dim W = dim e7
  Int total = 0;
  for (const auto& [part, m] : chain().su8_in_e7.parts)
    total += dim_irrep(root_system(kSu8), part) * m;
  CHECK(total == 133);
}

TEST_CASE("casimir_value examples") {
  CHECK(casimir_value(chain().so8, w(kSo8, {0, 2, 0, 0})) == Rat(7, 18));
  CHECK(casimir_value(chain().su8, w(kSu8, {0, 0, 0, 2, 0, 0, 0})) == Rat(10, 9));
  CHECK(casimir_value(chain().su8, w(kSu8, {0, 1, 0, 0, 0, 1, 0})) == Rat(7, 9));
  CHECK(casimir_value(chain().su8, w(kSu8, {0, 0, 0, 1, 0, 0, 0})) == Rat(1, 2));
  CHECK(casimir_value(chain().e7, w(kE7, {2, 0, 0, 0, 0, 0, 0})) == Rat(19, 9));
  for (const auto& label :
       {w(kSo8, {2, 0, 0, 0}), w(kSo8, {0, 0, 2, 0}), w(kSo8, {0, 0, 0, 2})})
    CHECK(casimir_value(chain().so8, label) == Rat(2, 9));
  CHECK_THROWS_AS(casimir_value(chain().so8, w(kSu8, {1, 0, 0, 0, 0, 0, 0})), error);
}

TEST_CASE("einstein_constant") {
  CHECK(einstein_constant({Rat(2, 9), Rat(2, 9), Rat(2, 9)}) == Rat(13, 36));
  CHECK(einstein_constant({Rat(1, 2)}) == Rat(1, 2));
  CHECK_FALSE(einstein_constant({Rat(2, 9), Rat(1, 3)}).has_value());
  CHECK_THROWS_AS(einstein_constant({}), error);

  // round trip 2E - 1/2 = c, and monotonicity in c
  for (const Rat c : {Rat(2, 9), Rat(1, 2), Rat(7, 3)}) {
    const auto e = einstein_constant({c});
    REQUIRE(e.has_value());
    CHECK(2 * *e - Rat(1, 2) == c);
  }
  CHECK(*einstein_constant({Rat(1, 3)}) > *einstein_constant({Rat(2, 9)}));
}

TEST_CASE("trace identities are exact") {
  const auto trace_of = [](const AmbientDecomposition& d, const NormalizedCasimir& n) {
    Rat t = 0;
    for (const auto& [part, m] : d.parts)
      t += Rat(dim_irrep(root_system(d.sub), part) * m) * casimir_value(n, part);
    return t;
  };
  CHECK(trace_of(chain().so8_in_e7, chain().so8) == Rat(28));
  CHECK(trace_of(chain().su8_in_e7, chain().su8) == Rat(63));
  CHECK(Rat(28) * Rat(1, 6) + Rat(105) * Rat(2, 9) == Rat(28));
  CHECK(Rat(63) * Rat(4, 9) + Rat(70) * Rat(1, 2) == Rat(63));
}

TEST_CASE("normalization is invariant under rescaling the bilinear form") {
  // <.,.> -> c <.,.> rescales <w, w + 2 delta> by c, so the ratio to the
  // adjoint and hence every normalized value is unchanged
  const auto& rd4 = root_system(kSo8);
  const Weight lambda = w(kSo8, {0, 2, 0, 0});
  const Weight theta = rd4.highest_root();
  const auto shifted_norm = [&](const Weight& x, const Rat& scale) {
    Weight s = x;
    for (auto& v : s.coords) v += 2;
    return scale * inner_product(rd4, x, s);
  };
  for (const Rat scale : {Rat(2), Rat(1, 3), Rat(7, 5)}) {
    CHECK(shifted_norm(lambda, scale) / shifted_norm(theta, scale) ==
          casimir_ratio(rd4, lambda));
  }
}

TEST_CASE("invalid ambient decompositions are rejected") {
  const auto& rd4 = root_system(kSo8);
  // wrong total dimension
  AmbientDecomposition wrong{kE7, kSo8, {{rd4.highest_root(), Int(1)}}};
  CHECK_THROWS_AS(normalize_subalgebra_casimir(wrong), error);
  // missing sub-adjoint
  AmbientDecomposition no_adjoint{kE7, kSo8, {}};
  for (const auto& label : {w(kSo8, {2, 0, 0, 0}), w(kSo8, {0, 0, 2, 0}), w(kSo8, {0, 0, 0, 2})})
    no_adjoint.parts.emplace_back(label, Int(1));
  no_adjoint.parts.emplace_back(w(kSo8, {1, 0, 0, 0}), Int(1));
  no_adjoint.parts.emplace_back(w(kSo8, {0, 0, 0, 0}), Int(20));
  CHECK_THROWS_AS(normalize_subalgebra_casimir(no_adjoint), error);
}
