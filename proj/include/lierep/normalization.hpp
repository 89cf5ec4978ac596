#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lierep/branching.hpp"
#include "lierep/character.hpp"
#include "lierep/numeric.hpp"
#include "lierep/rootsystem.hpp"
#include "lierep/weight.hpp"

namespace lierep {

/// Decomposition of an ambient adjoint representation into irreducible
/// modules of a subalgebra.
struct AmbientDecomposition {
  AlgebraSpec ambient;
  AlgebraSpec sub;
  std::vector<std::pair<Weight, Int>> parts;
};

/// Casimir constant of a subalgebra relative to the ambient Killing-form
/// inner product, pinned down by its value on the subalgebra's adjoint.
struct NormalizedCasimir {
  AlgebraSpec sub;
  Rat adjoint_value;
};

inline Int adjoint_dim(const RootSystem& rs) {
  return Int(2 * rs.positive_roots.size() + static_cast<std::size_t>(rs.rank()));
}

/// Trace identity: the Casimir of h on the ambient adjoint has trace dim(h),
/// so Cas^h_h = dim(h) / sum_i dim(g_i) * c^h(g_i) over the h-irreducible
/// pieces g_i of the ambient adjoint.
inline NormalizedCasimir normalize_subalgebra_casimir(const AmbientDecomposition& d) {
  const auto& sub_rs = root_system(d.sub);
  const auto& amb_rs = root_system(d.ambient);
  if (d.parts.empty()) throw error("normalize_subalgebra_casimir: empty decomposition");
  Int total = 0;
  Rat denom = 0;
  bool has_adjoint = false;
  const Weight sub_adjoint = sub_rs.highest_root();
  for (const auto& [w, m] : d.parts) {
    require_same_algebra(d.sub, w.algebra, "normalize_subalgebra_casimir");
    require_dominant(w, "normalize_subalgebra_casimir");
    if (m <= 0) throw error("normalize_subalgebra_casimir: nonpositive multiplicity");
    const Int dim = dim_irrep(sub_rs, w) * m;
    total += dim;
    denom += Rat(dim) * casimir_ratio(sub_rs, w);
    if (w.coords == sub_adjoint.coords) has_adjoint = true;
  }
  if (total != adjoint_dim(amb_rs))
    throw error("normalize_subalgebra_casimir: parts sum to " + total.str() +
                ", ambient adjoint has dimension " + adjoint_dim(amb_rs).str());
  if (!has_adjoint)
    throw error("normalize_subalgebra_casimir: decomposition misses the sub-adjoint module");
  return NormalizedCasimir{d.sub, Rat(adjoint_dim(sub_rs)) / denom};
}

/// Casimir eigenvalue of V_lambda in the ambient normalization.
inline Rat casimir_value(const NormalizedCasimir& n, const Weight& lambda) {
  require_same_algebra(n.sub, lambda.algebra, "casimir_value");
  return n.adjoint_value * casimir_ratio(root_system(n.sub), lambda);
}

/// Cas^h_m = 2E - 1/2 on a normal homogeneous space: if the isotropy
/// Casimir is a single eigenvalue c the metric is Einstein with constant
/// E = (c + 1/2) / 2, otherwise there is no Einstein constant.
inline std::optional<Rat> einstein_constant(const std::vector<Rat>& isotropy_cas) {
  if (isotropy_cas.empty()) throw error("einstein_constant: empty eigenvalue list");
  for (const auto& c : isotropy_cas)
    if (c != isotropy_cas.front()) return std::nullopt;
  return (isotropy_cas.front() + Rat(1, 2)) / 2;
}

/// The normalization data of the chain so(8) < su(8) < e7, with every
/// ambient decomposition produced by the branching module.
struct ChainConstants {
  NormalizedCasimir e7;
  NormalizedCasimir su8;
  NormalizedCasimir so8;
  AmbientDecomposition su8_in_e7;
  AmbientDecomposition so8_in_e7;
  std::vector<Rat> isotropy_cas;  // Cas^so8 on m_0, m_1, m_2
  Rat einstein;
};

inline AmbientDecomposition branched_ambient(const WeightProjection& proj) {
  AmbientDecomposition d;
  d.ambient = proj.source;
  d.sub = proj.target;
  const Weight adjoint = root_system(proj.source).highest_root();
  for (const auto& [w, m] : branch(proj, adjoint).parts)
    d.parts.emplace_back(Weight{proj.target, w}, m);
  return d;
}

inline ChainConstants compute_chain_constants() {
  ChainConstants cc;
  const auto& re7 = root_system(kE7);
  cc.e7 = normalize_subalgebra_casimir(
      AmbientDecomposition{kE7, kE7, {{re7.highest_root(), Int(1)}}});
  cc.su8_in_e7 = branched_ambient(projection_e7_to_su8());
  cc.so8_in_e7 = branched_ambient(projection_e7_to_so8());
  cc.su8 = normalize_subalgebra_casimir(cc.su8_in_e7);
  cc.so8 = normalize_subalgebra_casimir(cc.so8_in_e7);
  const TrialityMap theta;
  Weight m_label = detail::make_weight(kSo8, {2, 0, 0, 0});
  for (int a = 0; a < 3; ++a) {
    cc.isotropy_cas.push_back(casimir_value(cc.so8, m_label));
    m_label = triality_apply(theta, m_label);
  }
  const auto e = einstein_constant(cc.isotropy_cas);
  if (!e)
    throw error("compute_chain_constants: isotropy Casimir has several eigenvalues, "
                "standard metric is not Einstein (internal)");
  cc.einstein = *e;
  return cc;
}

}  // namespace lierep
