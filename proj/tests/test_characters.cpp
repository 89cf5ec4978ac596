#include <catch2/catch_amalgamated.hpp>

#include <thread>

#include "lierep/character.hpp"
#include "oracles.hpp"

using namespace lierep;

namespace {

Weight w(AlgebraSpec spec, std::initializer_list<int> v) {
  return Weight{spec, Coords(v.begin(), v.end())};
}

Decomposition dec_of(AlgebraSpec spec, std::initializer_list<std::pair<Coords, int>> parts) {
  Decomposition d;
  d.algebra = spec;
  for (const auto& [c, m] : parts) d.add(c, m);
  return d;
}

const AlgebraSpec A1{Family::A, 1};
const AlgebraSpec A2{Family::A, 2};
const AlgebraSpec A7{Family::A, 7};
const AlgebraSpec D4{Family::D, 4};
const AlgebraSpec E7{Family::E, 7};

}  // namespace

TEST_CASE("Weyl dimension formula") {
  const auto& d4 = root_system(D4);
  const auto& e7 = root_system(E7);
  CHECK(dim_irrep(d4, w(D4, {0, 0, 0, 0})) == 1);
  CHECK(dim_irrep(d4, w(D4, {1, 0, 0, 0})) == 8);
  CHECK(dim_irrep(d4, w(D4, {2, 0, 0, 0})) == 35);
  CHECK(dim_irrep(d4, w(D4, {0, 1, 0, 0})) == 28);
  CHECK(dim_irrep(d4, w(D4, {0, 2, 0, 0})) == 300);
  CHECK(dim_irrep(d4, w(D4, {4, 0, 0, 0})) == 294);
  CHECK(dim_irrep(d4, w(D4, {1, 0, 1, 1})) == 350);
  CHECK(dim_irrep(d4, w(D4, {2, 0, 2, 0})) == 840);
  CHECK(dim_irrep(e7, w(E7, {1, 0, 0, 0, 0, 0, 0})) == 133);
  CHECK(dim_irrep(e7, w(E7, {2, 0, 0, 0, 0, 0, 0})) == 7371);
  CHECK(dim_irrep(e7, w(E7, {0, 0, 0, 0, 0, 1, 0})) == 1539);
  CHECK(Int(1) + 1539 + 7371 == Int(133) * 134 / 2);
  CHECK_THROWS_AS(dim_irrep(d4, w(D4, {-1, 0, 0, 0})), error);
}

TEST_CASE("casimir_ratio") {
  const auto& d4 = root_system(D4);
  const auto& a7 = root_system(A7);
  const auto& e7 = root_system(E7);
  CHECK(casimir_ratio(d4, d4.highest_root()) == Rat(1));
  CHECK(casimir_ratio(a7, a7.highest_root()) == Rat(1));
  CHECK(casimir_ratio(e7, e7.highest_root()) == Rat(1));
  CHECK(casimir_ratio(d4, w(D4, {2, 0, 0, 0})) == Rat(4, 3));
  CHECK(casimir_ratio(d4, w(D4, {0, 2, 0, 0})) == Rat(7, 3));
  CHECK(casimir_ratio(a7, w(A7, {0, 0, 0, 1, 0, 0, 0})) == Rat(9, 8));
  CHECK(casimir_ratio(a7, w(A7, {0, 0, 0, 2, 0, 0, 0})) == Rat(5, 2));
  CHECK(casimir_ratio(a7, w(A7, {0, 1, 0, 0, 0, 1, 0})) == Rat(7, 4));
  CHECK(casimir_ratio(e7, w(E7, {2, 0, 0, 0, 0, 0, 0})) == Rat(19, 9));
  CHECK(casimir_ratio(d4, w(D4, {0, 0, 0, 0})) == Rat(0));
  CHECK_THROWS_AS(casimir_ratio(d4, w(D4, {0, -1, 0, 0})), error);

  // gram-matrix evaluation agrees with the integer root-coordinate pairing
  for (std::size_t r = 0; r < d4.positive_roots.size(); ++r) {
    const Weight& root = d4.positive_roots[r];
    Weight shifted = root;
    for (auto& x : shifted.coords) x += 2;
    CHECK(inner_product(d4, root, shifted) ==
          Rat(pairing(shifted.coords, d4.positive_root_coords[r])));
  }
}

TEST_CASE("weight multiplicities via Freudenthal") {
  const auto& d4 = root_system(D4);
  const Character trivial = weight_multiplicities(d4, w(D4, {0, 0, 0, 0}));
  CHECK(trivial.total_dim == 1);
  CHECK(trivial.entries.at(Coords{0, 0, 0, 0}) == 1);

  const Character adj = weight_multiplicities(d4, w(D4, {0, 1, 0, 0}));
  CHECK(adj.total_dim == 28);
  CHECK(adj.entries.at(Coords{0, 0, 0, 0}) == 4);
  CHECK(adj.entries.at(Coords{0, 1, 0, 0}) == 1);

  const Character sym = weight_multiplicities(d4, w(D4, {2, 0, 0, 0}));
  CHECK(sym.total_dim == 35);
  CHECK(sym.entries.at(Coords{0, 0, 0, 0}) == 3);

  // multiplicities are constant along Weyl orbits
  for (const auto& [coords, mult] : sym.entries) {
    for (int i = 1; i <= 4; ++i) {
      const Weight refl = reflect(d4, Weight{D4, coords}, i);
      CHECK(sym.entries.at(refl.coords) == mult);
    }
  }
  CHECK_THROWS_AS(weight_multiplicities(d4, w(D4, {0, 0, -2, 0})), error);
}

TEST_CASE("Freudenthal agrees with the Kostant partition oracle on D4") {
  const auto& d4 = root_system(D4);
  long checked = 0;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d) {
          const Weight lambda = w(D4, {a, b, c, d});
          const auto table = lierep::detail::dominant_character(d4, lambda);
          for (const auto& dom : table->dominant) {
            const long long oracle = oracles::kostant_multiplicity(lambda.coords, dom);
            REQUIRE(Int(oracle) == table->mult.at(dom));
            ++checked;
          }
        }
  CHECK(checked > 1000);
}

TEST_CASE("tensor products: examples and the A1 ladder oracle") {
  const auto& a1 = root_system(A1);
  const auto& d4 = root_system(D4);

  // lambda x trivial = lambda
  CHECK(tensor_decompose(d4, w(D4, {2, 0, 0, 0}), w(D4, {0, 0, 0, 0})) ==
        dec_of(D4, {{Coords{2, 0, 0, 0}, 1}}));

  CHECK(tensor_decompose(a1, w(A1, {1}), w(A1, {1})) ==
        dec_of(A1, {{Coords{0}, 1}, {Coords{2}, 1}}));
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      const Decomposition got = tensor_decompose(a1, w(A1, {m}), w(A1, {n}));
      Decomposition expect;
      expect.algebra = A1;
      for (int k : oracles::a1_clebsch_gordan(m, n)) expect.add(Coords{k}, 1);
      CHECK(got == expect);
    }
  }

  CHECK(tensor_decompose(d4, w(D4, {2, 0, 0, 0}), w(D4, {0, 0, 2, 0})) ==
        dec_of(D4, {{Coords{2, 0, 2, 0}, 1}, {Coords{1, 0, 1, 1}, 1}, {Coords{0, 0, 0, 2}, 1}}));
}

TEST_CASE("tensor products: commutativity and dimension conservation") {
  const auto& d4 = root_system(D4);
  const auto& a2 = root_system(A2);
  const std::vector<Weight> d4_samples = {w(D4, {1, 0, 0, 0}), w(D4, {0, 1, 0, 0}),
                                          w(D4, {2, 0, 0, 0}), w(D4, {1, 0, 1, 1})};
  for (const auto& x : d4_samples) {
    for (const auto& y : d4_samples) {
      const Decomposition xy = tensor_decompose(d4, x, y);
      CHECK(xy == tensor_decompose(d4, y, x));
      CHECK(decomposition_dim(d4, xy) == dim_irrep(d4, x) * dim_irrep(d4, y));
    }
  }
  const Decomposition big = tensor_decompose(a2, w(A2, {2, 1}), w(A2, {1, 2}));
  CHECK(decomposition_dim(a2, big) == dim_irrep(a2, w(A2, {2, 1})) * dim_irrep(a2, w(A2, {1, 2})));
}

TEST_CASE("Racah-Speiser equals character-product peeling on small weights") {
  for (const AlgebraSpec spec : {A1, A2}) {
    const auto& rs = root_system(spec);
    std::vector<Weight> doms;
    if (spec.rank == 1)
      for (int x = 0; x <= 2; ++x) doms.push_back(w(spec, {x}));
    else
      for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 2; ++y) doms.push_back(w(spec, {x, y}));
    for (std::size_t i = 0; i < doms.size(); ++i) {
      for (std::size_t j = i; j < doms.size(); ++j) {
        const Character product = multiply_characters(weight_multiplicities(rs, doms[i]),
                                                      weight_multiplicities(rs, doms[j]));
        CHECK(tensor_decompose(rs, doms[i], doms[j]) == decompose_character(rs, product));
      }
    }
  }
  // spot check on D4 with labels <= 1
  const auto& d4 = root_system(D4);
  const std::vector<Weight> d4_doms = {w(D4, {1, 0, 0, 0}), w(D4, {0, 1, 0, 0}),
                                       w(D4, {1, 0, 1, 0}), w(D4, {1, 1, 0, 1}),
                                       w(D4, {1, 1, 1, 1})};
  for (const auto& x : d4_doms) {
    for (const auto& y : d4_doms) {
      const Character product =
          multiply_characters(weight_multiplicities(d4, x), weight_multiplicities(d4, y));
      CHECK(tensor_decompose(d4, x, y) == decompose_character(d4, product));
    }
  }
}

TEST_CASE("symmetric squares") {
  const auto& a1 = root_system(A1);
  const auto& d4 = root_system(D4);
  const auto& e7 = root_system(E7);

  CHECK(sym2_decompose(a1, w(A1, {0})) == dec_of(A1, {{Coords{0}, 1}}));
  CHECK(sym2_decompose(a1, w(A1, {1})) == dec_of(A1, {{Coords{2}, 1}}));
  CHECK(sym2_decompose(d4, w(D4, {2, 0, 0, 0})) ==
        dec_of(D4, {{Coords{0, 0, 0, 0}, 1},
                    {Coords{4, 0, 0, 0}, 1},
                    {Coords{2, 0, 0, 0}, 1},
                    {Coords{0, 2, 0, 0}, 1}}));
  CHECK(sym2_decompose(e7, w(E7, {1, 0, 0, 0, 0, 0, 0})) ==
        dec_of(E7, {{Coords{0, 0, 0, 0, 0, 0, 0}, 1},
                    {Coords{0, 0, 0, 0, 0, 1, 0}, 1},
                    {Coords{2, 0, 0, 0, 0, 0, 0}, 1}}));
}

TEST_CASE("Sym^2 and Alt^2 rebuild the tensor square") {
  const auto& d4 = root_system(D4);
  for (const auto& label :
       {w(D4, {2, 0, 0, 0}), w(D4, {0, 0, 2, 0}), w(D4, {0, 0, 0, 2})}) {
    const Decomposition sym = sym2_decompose(d4, label);
    const Decomposition alt = alt2_decompose(d4, label);
    Decomposition sum = sym;
    for (const auto& [c, m] : alt.parts) sum.add(c, m);
    CHECK(sum == tensor_decompose(d4, label, label));
    const Int d = dim_irrep(d4, label);
    CHECK(decomposition_dim(d4, sym) == d * (d + 1) / 2);
    CHECK(decomposition_dim(d4, alt) == d * (d - 1) / 2);
  }
}

TEST_CASE("decompose_character: identity, additivity, cross-oracle, failure") {
  const auto& d4 = root_system(D4);

  const Weight lambda = w(D4, {1, 0, 1, 1});
  CHECK(decompose_character(d4, weight_multiplicities(d4, lambda)) ==
        dec_of(D4, {{Coords{1, 0, 1, 1}, 1}}));

  Character sum = weight_multiplicities(d4, w(D4, {1, 0, 0, 0}));
  sum.add(Coords{0, 0, 0, 0}, 1);
  CHECK(decompose_character(d4, sum) ==
        dec_of(D4, {{Coords{1, 0, 0, 0}, 1}, {Coords{0, 0, 0, 0}, 1}}));

  const Character product = multiply_characters(weight_multiplicities(d4, w(D4, {2, 0, 0, 0})),
                                                weight_multiplicities(d4, w(D4, {2, 0, 0, 0})));
  CHECK(decompose_character(d4, product) ==
        tensor_decompose(d4, w(D4, {2, 0, 0, 0}), w(D4, {2, 0, 0, 0})));

  // not a representation character: drop one weight from an irreducible
  Character broken = weight_multiplicities(d4, w(D4, {0, 1, 0, 0}));
  broken.add(Coords{0, 0, 0, 0}, -4);  // delete the zero-weight space
  CHECK_THROWS_AS(decompose_character(d4, broken), peel_error);
}

TEST_CASE("total_dim equals the Weyl dimension for larger modules") {
  const auto& e7 = root_system(E7);
  CHECK(weight_multiplicities(e7, w(E7, {1, 0, 0, 0, 0, 0, 0})).total_dim == 133);
  CHECK(weight_multiplicities(e7, w(E7, {0, 0, 0, 0, 0, 1, 0})).total_dim == 1539);
  CHECK(weight_multiplicities(e7, w(E7, {2, 0, 0, 0, 0, 0, 0})).total_dim == 7371);
  const auto& a7 = root_system(A7);
  CHECK(weight_multiplicities(a7, w(A7, {0, 0, 0, 2, 0, 0, 0})).total_dim == 1764);
  CHECK(weight_multiplicities(a7, w(A7, {0, 1, 0, 0, 0, 1, 0})).total_dim == 720);
  // adjoint zero-weight space is the Cartan subalgebra
  const Character a7adj = weight_multiplicities(a7, a7.highest_root());
  CHECK(a7adj.total_dim == 63);
  CHECK(a7adj.entries.at(Coords{0, 0, 0, 0, 0, 0, 0}) == 7);
}

TEST_CASE("the character cache is safe under concurrent access") {
  const auto& d4 = root_system(D4);
  const Weight lambda = w(D4, {2, 1, 0, 1});
  std::vector<Int> dims(8);
  std::vector<std::thread> workers;
  for (std::size_t i = 0; i < dims.size(); ++i)
    workers.emplace_back([&, i] {
      const Character ch = weight_multiplicities(d4, lambda);
      dims[i] = ch.total_dim;
    });
  for (auto& t : workers) t.join();
  for (const auto& d : dims) CHECK(d == dim_irrep(d4, lambda));
}

TEST_CASE("the remaining exceptional families: E6 and E8") {
  const AlgebraSpec E6{Family::E, 6};
  const AlgebraSpec E8{Family::E, 8};
  const auto& e6 = root_system(E6);
  const auto& e8 = root_system(E8);
  CHECK(dim_irrep(e6, w(E6, {1, 0, 0, 0, 0, 0})) == 27);
  CHECK(dim_irrep(e6, e6.highest_root()) == 78);
  CHECK(e6.highest_root().coords == Coords{0, 1, 0, 0, 0, 0});
  CHECK(dim_irrep(e8, e8.highest_root()) == 248);
  CHECK(casimir_ratio(e6, e6.highest_root()) == Rat(1));
  CHECK(casimir_ratio(e8, e8.highest_root()) == Rat(1));
  // E8: the adjoint is the smallest fundamental module
  CHECK(e8.highest_root().coords == Coords{0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(weight_multiplicities(e6, w(E6, {1, 0, 0, 0, 0, 0})).total_dim == 27);
  // 27 x 27bar = 1 + 78 + 650 (omega_6 is dual to omega_1)
  CHECK(dim_irrep(e6, w(E6, {0, 0, 0, 0, 0, 1})) == 27);
  const Decomposition cube = tensor_decompose(e6, w(E6, {1, 0, 0, 0, 0, 0}),
                                              w(E6, {0, 0, 0, 0, 0, 1}));
  CHECK(cube.parts.size() == 3);
  CHECK(cube.multiplicity(Coords{0, 0, 0, 0, 0, 0}) == 1);
  CHECK(cube.multiplicity(Coords{0, 1, 0, 0, 0, 0}) == 1);
  CHECK(decomposition_dim(e6, cube) == 729);
}
