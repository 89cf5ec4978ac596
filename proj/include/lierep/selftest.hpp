#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lierep/branching.hpp"
#include "lierep/character.hpp"
#include "lierep/normalization.hpp"
#include "lierep/numeric.hpp"
#include "lierep/render.hpp"
#include "lierep/stability.hpp"

namespace lierep {

struct SelfTestCheck {
  std::string name;
  bool passed;
  std::string detail;
};

namespace detail {

inline void push_check(std::vector<SelfTestCheck>& out, const std::string& name, bool passed,
                       const std::string& detail) {
  out.push_back(SelfTestCheck{name, passed, detail});
}

/// Racah-Speiser against the independent route: multiply the two full
/// characters pointwise and peel the product.
inline bool tensor_matches_product_route(const RootSystem& rs, const Weight& a, const Weight& b,
                                         std::string& detail) {
  const Decomposition fast = tensor_decompose(rs, a, b);
  const Character product =
      multiply_characters(weight_multiplicities(rs, a), weight_multiplicities(rs, b));
  const Decomposition slow = decompose_character(rs, product);
  if (fast == slow) return true;
  detail = "[" + coords_str(a.coords) + "] x [" + coords_str(b.coords) + "]: Racah-Speiser " +
           decomposition_str(fast) + " vs product route " + decomposition_str(slow);
  return false;
}

}  // namespace detail

/// Consistency battery behind the `selftest` command: trace identities,
/// dimension audits, decomposition cross-oracles and projection validation.
/// When `data_dir` is given the projections are loaded from it instead of
/// the built-in registry, so a corrupted data file fails its check here.
inline std::vector<SelfTestCheck> run_selftest(
    const std::optional<std::filesystem::path>& data_dir = std::nullopt) {
  std::vector<SelfTestCheck> checks;
  const auto& rd4 = root_system(kSo8);
  const auto& ra7 = root_system(kSu8);
  const auto& re7 = root_system(kE7);

  // Trace identities for the two subalgebra embeddings.
  try {
    const ChainConstants cc = compute_chain_constants();
    const auto trace_of = [](const AmbientDecomposition& d, const NormalizedCasimir& n) {
      Rat t = 0;
      for (const auto& [w, m] : d.parts)
        t += Rat(dim_irrep(root_system(d.sub), w) * m) * casimir_value(n, w);
      return t;
    };
    const Rat t_so8 = trace_of(cc.so8_in_e7, cc.so8);
    const Rat t_su8 = trace_of(cc.su8_in_e7, cc.su8);
    detail::push_check(checks, "trace identity so(8) in e7", t_so8 == 28,
                       "sum dim * Cas = " + rat_str(t_so8) + " (dim so(8) = 28)");
    detail::push_check(checks, "trace identity su(8) in e7", t_su8 == 63,
                       "sum dim * Cas = " + rat_str(t_su8) + " (dim su(8) = 63)");
    detail::push_check(
        checks, "normalizations",
        cc.e7.adjoint_value == 1 && cc.su8.adjoint_value == Rat(4, 9) &&
            cc.so8.adjoint_value == Rat(1, 6),
        "Cas(e7) = " + rat_str(cc.e7.adjoint_value) + ", Cas(su(8)) = " +
            rat_str(cc.su8.adjoint_value) + ", Cas(so(8)) = " + rat_str(cc.so8.adjoint_value));
    detail::push_check(checks, "einstein constant", cc.einstein == Rat(13, 36),
                       "isotropy Casimir " + rat_str(cc.isotropy_cas.front()) + ", E = " +
                           rat_str(cc.einstein));
  } catch (const std::exception& e) {
    detail::push_check(checks, "chain constants", false, e.what());
  }

  // Dimension audits along the e7 and su(8) routes.
  try {
    const auto sym2_e7 = sym2_decompose(re7, re7.highest_root());
    const Int d6 = dim_irrep(re7, Weight{kE7, Coords{0, 0, 0, 0, 0, 1, 0}});
    const Int d1 = dim_irrep(re7, Weight{kE7, Coords{2, 0, 0, 0, 0, 0, 0}});
    detail::push_check(checks, "Sym^2 e7 audit",
                       sym2_e7.parts.size() == 3 && d6 == 1539 && d1 == 7371 &&
                           Int(1) + d6 + d1 == Int(133) * 134 / 2,
                       "1 + " + d6.str() + " + " + d1.str() + " = 8911");
    const auto e7su8 = projection_e7_to_su8();
    const Int dim_w = decomposition_dim(
        ra7, decomposition_sub(branch(e7su8, re7.highest_root()),
                               detail::make_dec(kSu8, {{Coords{1, 0, 0, 0, 0, 0, 1}, 1}})));
    detail::push_check(checks, "symmetric pair dimension split", dim_w == 70,
                       "dim e7 = 63 + " + dim_w.str());
  } catch (const std::exception& e) {
    detail::push_check(checks, "dimension audits", false, e.what());
  }

  // Racah-Speiser vs full character products on A1 and A2.
  {
    bool all = true;
    std::string detail_msg = "all dominant weight pairs with labels <= 2";
    for (int fam_rank : {1, 2}) {
      const AlgebraSpec spec{Family::A, fam_rank};
      const auto& rs = root_system(spec);
      std::vector<Weight> doms;
      if (fam_rank == 1) {
        for (int x = 0; x <= 2; ++x) doms.push_back(Weight{spec, Coords{x}});
      } else {
        for (int x = 0; x <= 2; ++x)
          for (int y = 0; y <= 2; ++y) doms.push_back(Weight{spec, Coords{x, y}});
      }
      for (std::size_t i = 0; i < doms.size() && all; ++i)
        for (std::size_t j = i; j < doms.size() && all; ++j)
          all = detail::tensor_matches_product_route(rs, doms[i], doms[j], detail_msg);
    }
    detail::push_check(checks, "tensor product cross-oracle (A1, A2)", all, detail_msg);
  }

  // Symmetric plus exterior squares rebuild the tensor squares of the m_a.
  try {
    bool all = true;
    std::string msg = "Sym^2 (+) Alt^2 = V (x) V for the three isotropy labels";
    for (const auto& m : isotropy_labels()) {
      Decomposition sum = sym2_decompose(rd4, m);
      for (const auto& [w, mm] : alt2_decompose(rd4, m).parts) sum.add(w, mm);
      if (!(sum == tensor_decompose(rd4, m, m))) {
        all = false;
        msg = "mismatch at [" + coords_str(m.coords) + "]";
      }
    }
    detail::push_check(checks, "square reconstruction", all, msg);
  } catch (const std::exception& e) {
    detail::push_check(checks, "square reconstruction", false, e.what());
  }

  // Projection validation, optionally from data files.
  try {
    std::vector<WeightProjection> projections;
    if (data_dir) {
      projections = load_projection_dir(*data_dir);
      if (projections.empty()) throw error("no projection files in " + data_dir->string());
    } else {
      projections = builtin_projections();
    }
    for (const auto& proj : projections) {
      const auto report = validate_projection(proj, proj.fixtures);
      std::string msg;
      for (const auto& c : report.checks)
        if (!c.passed) msg += (msg.empty() ? "" : "; ") + c.name + ": " + c.detail;
      detail::push_check(checks, "projection " + proj.name, report.all_passed(),
                         report.all_passed()
                             ? std::to_string(report.checks.size()) + " checks passed"
                             : msg);
    }
  } catch (const std::exception& e) {
    detail::push_check(checks, "projection validation", false, e.what());
  }

  // Commutator relations of the generalized Wallach structure.
  try {
    for (const auto& c : validate_commutator_relations())
      detail::push_check(checks, c.name, c.passed, c.detail);
  } catch (const std::exception& e) {
    detail::push_check(checks, "commutator relations", false, e.what());
  }

  // Full certificate pipeline with its internal audits.
  try {
    const CertificateData data = run_certificate();
    detail::push_check(checks, "certificate pipeline",
                       data.report.verdict == StabilityReport::Stable &&
                           data.report.lichnerowicz_bound == Rat(5, 6),
                       "bound " + rat_str(data.report.lichnerowicz_bound) + ", verdict " +
                           render::verdict_str(data.report.verdict));
  } catch (const std::exception& e) {
    detail::push_check(checks, "certificate pipeline", false, e.what());
  }

  return checks;
}

inline OutputDocument make_selftest_document(const std::vector<SelfTestCheck>& checks) {
  OutputDocument doc;
  doc.kind = "selftest";
  Json arr = Json::array();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["detail"] = c.detail;
    arr.push_back(std::move(j));
    if (c.passed) ++passed;
  }
  doc.payload["checks"] = std::move(arr);
  doc.payload["passed"] = passed;
  doc.payload["total"] = checks.size();
  doc.provenance["selftest"] = "trace identities, dimension audits, cross-oracles, projections";
  std::ostringstream md;
  md << "## Self-test\n\n";
  for (const auto& c : checks)
    md << "- " << (c.passed ? "PASS" : "FAIL") << " " << c.name << ": " << c.detail << "\n";
  md << "\n" << passed << "/" << checks.size() << " checks passed\n";
  doc.markdown = md.str();
  return doc;
}

}  // namespace lierep
