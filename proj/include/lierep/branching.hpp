#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lierep/character.hpp"
#include "lierep/numeric.hpp"
#include "lierep/rootsystem.hpp"
#include "lierep/weight.hpp"

namespace lierep {

/// Linear weight-lattice map realizing the restriction of weights along a
/// subalgebra embedding. Acts on fundamental-weight coordinates.
struct WeightProjection {
  std::string name;
  AlgebraSpec source;
  AlgebraSpec target;
  std::vector<std::vector<int>> matrix;  // target_rank x source_rank
  std::vector<std::pair<Weight, Decomposition>> fixtures;
};

inline Weight project_weight(const WeightProjection& proj, const Weight& w) {
  require_same_algebra(proj.source, w.algebra, ("project_weight[" + proj.name + "]").c_str());
  Coords out(static_cast<std::size_t>(proj.target.rank), 0);
  for (int i = 0; i < proj.target.rank; ++i) {
    long s = 0;
    for (int j = 0; j < proj.source.rank; ++j)
      s += static_cast<long>(proj.matrix[i][j]) * w.coords[j];
    out[i] = static_cast<int>(s);
  }
  return Weight{proj.target, out};
}

/// Restriction of the irreducible V_lambda along the embedding: the full
/// weight system is pushed through the projection and the resulting target
/// character is peeled into irreducibles. A peeling failure indicates a
/// wrong projection matrix and is reported as such.
inline Decomposition branch(const WeightProjection& proj, const Weight& lambda) {
  require_same_algebra(proj.source, lambda.algebra, ("branch[" + proj.name + "]").c_str());
  require_dominant(lambda, "branch");
  const auto& src = root_system(proj.source);
  const auto& tgt = root_system(proj.target);
  const Character ch = weight_multiplicities(src, lambda);
  Character projected;
  projected.algebra = proj.target;
  for (const auto& [w, m] : ch.entries)
    projected.add(project_weight(proj, Weight{proj.source, w}).coords, m);
  try {
    return decompose_character(tgt, projected);
  } catch (const peel_error& e) {
    throw error("branch[" + proj.name + "]: projected character failed to peel, " +
                "projection matrix is inconsistent with the embedding: " + e.what());
  }
}

/// The order-3 outer automorphism of so(8) as a permutation of D4 Dynkin
/// labels: eta_1 -> eta_3 -> eta_4 -> eta_1, eta_2 fixed.
struct TrialityMap {
  AlgebraSpec algebra{Family::D, 4};
};

inline Weight triality_apply(const TrialityMap& t, const Weight& w) {
  require_same_algebra(t.algebra, w.algebra, "triality_apply");
  // image coordinates: new eta_3 slot takes old eta_1 label, etc.
  return Weight{t.algebra, Coords{w.coords[3], w.coords[1], w.coords[0], w.coords[2]}};
}

inline Decomposition triality_apply(const TrialityMap& t, const Decomposition& dec) {
  require_same_algebra(t.algebra, dec.algebra, "triality_apply");
  Decomposition out;
  out.algebra = dec.algebra;
  for (const auto& [w, m] : dec.parts)
    out.add(triality_apply(t, Weight{t.algebra, w}).coords, m);
  return out;
}

inline Weight triality_pow(const TrialityMap& t, const Weight& w, int k) {
  Weight out = w;
  for (int i = 0; i < ((k % 3) + 3) % 3; ++i) out = triality_apply(t, out);
  return out;
}

/// Per-fixture and dimension-conservation validation of one projection.
struct ValidationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct ValidationReport {
  std::string projection;
  std::vector<ValidationCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

inline std::string decomposition_str(const Decomposition& dec) {
  std::string s;
  for (const auto& [w, m] : dec.parts) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += m.str() + "*";
    s += "[" + coords_str(w) + "]";
  }
  return s.empty() ? "0" : s;
}

inline ValidationReport validate_projection(
    const WeightProjection& proj,
    const std::vector<std::pair<Weight, Decomposition>>& fixtures) {
  ValidationReport report;
  report.projection = proj.name;
  for (const auto& [lambda, expected] : fixtures) {
    ValidationCheck check;
    check.name = "fixture [" + coords_str(lambda.coords) + "]";
    try {
      const Decomposition got = branch(proj, lambda);
      check.passed = (got == expected);
      check.detail = check.passed
                         ? "matches " + decomposition_str(expected)
                         : "got " + decomposition_str(got) + ", expected " +
                               decomposition_str(expected);
    } catch (const std::exception& e) {
      check.passed = false;
      check.detail = e.what();
    }
    report.checks.push_back(std::move(check));
  }
  // dimension conservation on a fixed sample of dominant source weights:
  // the zero weight, the adjoint, the two smallest fundamental weights and
  // the double of the smallest one
  const auto& src = root_system(proj.source);
  const auto& tgt = root_system(proj.target);
  std::vector<Weight> sample;
  sample.push_back(zero_weight(proj.source));
  sample.push_back(src.highest_root());
  {
    std::vector<std::pair<Int, int>> by_dim;
    for (int node = 1; node <= proj.source.rank; ++node)
      by_dim.emplace_back(dim_irrep(src, fundamental_weight(proj.source, node)), node);
    std::sort(by_dim.begin(), by_dim.end());
    sample.push_back(fundamental_weight(proj.source, by_dim[0].second));
    if (by_dim.size() > 1) sample.push_back(fundamental_weight(proj.source, by_dim[1].second));
    Weight doubled = fundamental_weight(proj.source, by_dim[0].second);
    for (auto& x : doubled.coords) x *= 2;
    sample.push_back(doubled);
  }
  for (const auto& lambda : sample) {
    ValidationCheck check;
    check.name = "dimension [" + coords_str(lambda.coords) + "]";
    try {
      const Int want = dim_irrep(src, lambda);
      const Int got = decomposition_dim(tgt, branch(proj, lambda));
      check.passed = (want == got);
      check.detail = "source dim " + want.str() + ", branched dim " + got.str();
    } catch (const std::exception& e) {
      check.passed = false;
      check.detail = e.what();
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

namespace detail {

inline Weight make_weight(AlgebraSpec spec, std::initializer_list<int> v) {
  return Weight{spec, Coords(v.begin(), v.end())};
}

inline Decomposition make_dec(AlgebraSpec spec,
                              std::initializer_list<std::pair<Coords, int>> parts) {
  Decomposition d;
  d.algebra = spec;
  for (const auto& [w, m] : parts) d.add(w, m);
  return d;
}

}  // namespace detail

inline const AlgebraSpec kSo8{Family::D, 4};
inline const AlgebraSpec kSu8{Family::A, 7};
inline const AlgebraSpec kE7{Family::E, 7};

/// so(8) inside su(8) as real matrices inside complex ones: the defining
/// representation restricts to the 8-dimensional vector representation.
/// Rows are images of the A7 fundamental weights in D4 coordinates.
inline WeightProjection projection_su8_to_so8() {
  WeightProjection p;
  p.name = "su8-to-so8";
  p.source = kSu8;
  p.target = kSo8;
  p.matrix = {
      {1, 0, 0, 0, -1, 0, 0},
      {0, 1, 0, 0, 0, -1, 0},
      {0, 0, 1, 0, 0, 0, -1},
      {0, 0, 1, 2, 2, 2, 1},
  };
  p.fixtures = {
      {detail::make_weight(kSu8, {1, 0, 0, 0, 0, 0, 0}),
       detail::make_dec(kSo8, {{Coords{1, 0, 0, 0}, 1}})},
      {detail::make_weight(kSu8, {0, 0, 0, 1, 0, 0, 0}),
       detail::make_dec(kSo8, {{Coords{0, 0, 2, 0}, 1}, {Coords{0, 0, 0, 2}, 1}})},
  };
  return p;
}

/// su(8) inside e7 from the A7 subsystem of the extended E7 diagram: the
/// lowest root together with the simple roots 1,3,4,5,6,7 forms a chain.
inline WeightProjection projection_e7_to_su8() {
  WeightProjection p;
  p.name = "e7-to-su8";
  p.source = kE7;
  p.target = kSu8;
  p.matrix = {
      {-2, -2, -3, -4, -3, -2, -1},  // pairing with the lowest root
      {1, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 1, 0},
      {0, 0, 0, 0, 0, 0, 1},
  };
  p.fixtures = {
      {detail::make_weight(kE7, {1, 0, 0, 0, 0, 0, 0}),
       detail::make_dec(kSu8, {{Coords{1, 0, 0, 0, 0, 0, 1}, 1}, {Coords{0, 0, 0, 1, 0, 0, 0}, 1}})},
  };
  return p;
}

/// Composite so(8) inside e7 through the chain so(8) < su(8) < e7.
inline WeightProjection projection_e7_to_so8() {
  const WeightProjection a = projection_su8_to_so8();
  const WeightProjection b = projection_e7_to_su8();
  WeightProjection p;
  p.name = "e7-to-so8";
  p.source = kE7;
  p.target = kSo8;
  p.matrix.assign(4, std::vector<int>(7, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) p.matrix[i][j] += a.matrix[i][k] * b.matrix[k][j];
  p.fixtures = {
      {detail::make_weight(kE7, {1, 0, 0, 0, 0, 0, 0}),
       detail::make_dec(kSo8, {{Coords{0, 1, 0, 0}, 1},
                               {Coords{2, 0, 0, 0}, 1},
                               {Coords{0, 0, 2, 0}, 1},
                               {Coords{0, 0, 0, 2}, 1}})},
  };
  return p;
}

/// Triality as a registry entry: an isomorphism D4 -> D4, so branching
/// along it relabels V_lambda as V_{Theta(lambda)}.
inline WeightProjection projection_triality() {
  WeightProjection p;
  p.name = "triality";
  p.source = kSo8;
  p.target = kSo8;
  p.matrix = {
      {0, 0, 0, 1},
      {0, 1, 0, 0},
      {1, 0, 0, 0},
      {0, 0, 1, 0},
  };
  p.fixtures = {
      {detail::make_weight(kSo8, {2, 0, 0, 0}),
       detail::make_dec(kSo8, {{Coords{0, 0, 2, 0}, 1}})},
      {detail::make_weight(kSo8, {0, 1, 0, 0}),
       detail::make_dec(kSo8, {{Coords{0, 1, 0, 0}, 1}})},
  };
  return p;
}

inline const std::vector<WeightProjection>& builtin_projections() {
  static const std::vector<WeightProjection> regs = {
      projection_su8_to_so8(),
      projection_e7_to_su8(),
      projection_e7_to_so8(),
      projection_triality(),
  };
  return regs;
}

inline const WeightProjection* find_projection(const std::vector<WeightProjection>& regs,
                                               const std::string& name) {
  for (const auto& p : regs)
    if (p.name == name) return &p;
  return nullptr;
}

inline std::string registered_projection_names(const std::vector<WeightProjection>& regs) {
  std::string s;
  for (const auto& p : regs) {
    if (!s.empty()) s += ", ";
    s += p.name;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Serialization of projections as versioned data files.

inline nlohmann::ordered_json projection_to_json(const WeightProjection& p) {
  nlohmann::ordered_json j;
  j["format"] = "lierep-projection-v1";
  j["name"] = p.name;
  j["source"] = p.source.name();
  j["target"] = p.target.name();
  j["matrix"] = p.matrix;
  auto& fx = j["fixtures"] = nlohmann::ordered_json::array();
  for (const auto& [w, dec] : p.fixtures) {
    nlohmann::ordered_json f;
    f["weight"] = coords_str(w.coords);
    auto& parts = f["parts"] = nlohmann::ordered_json::array();
    for (const auto& [pw, pm] : dec.parts)
      parts.push_back({{"weight", coords_str(pw)}, {"mult", pm.str()}});
    fx.push_back(std::move(f));
  }
  return j;
}

inline WeightProjection projection_from_json(const nlohmann::json& j) {
  WeightProjection p;
  try {
    if (j.value("format", "") != "lierep-projection-v1")
      throw error("projection_from_json: unknown format");
    p.name = j.at("name").get<std::string>();
    const auto src = parse_algebra(j.at("source").get<std::string>());
    const auto tgt = parse_algebra(j.at("target").get<std::string>());
    if (!src || !tgt) throw error("projection_from_json: bad algebra spec");
    p.source = *src;
    p.target = *tgt;
    p.matrix = j.at("matrix").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(p.matrix.size()) != p.target.rank)
      throw error("projection_from_json: matrix row count != target rank");
    for (const auto& row : p.matrix)
      if (static_cast<int>(row.size()) != p.source.rank)
        throw error("projection_from_json: matrix column count != source rank");
    for (const auto& f : j.value("fixtures", nlohmann::json::array())) {
      const auto w = parse_weight(p.source, f.at("weight").get<std::string>());
      if (!w) throw error("projection_from_json: bad fixture weight");
      Decomposition dec;
      dec.algebra = p.target;
      for (const auto& part : f.at("parts")) {
        const auto pw = parse_weight(p.target, part.at("weight").get<std::string>());
        if (!pw) throw error("projection_from_json: bad fixture part");
        dec.add(pw->coords, Int(part.at("mult").get<std::string>()));
      }
      p.fixtures.emplace_back(*w, std::move(dec));
    }
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("projection_from_json: malformed document: ") + e.what());
  }
  return p;
}

inline WeightProjection load_projection(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw error("load_projection: cannot open " + file.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw error("load_projection: " + file.string() + ": " + e.what());
  }
  return projection_from_json(j);
}

inline std::vector<WeightProjection> load_projection_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<WeightProjection> out;
  for (const auto& f : files) out.push_back(load_projection(f));
  return out;
}

}  // namespace lierep
