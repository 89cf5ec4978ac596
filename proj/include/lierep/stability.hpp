#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lierep/branching.hpp"
#include "lierep/character.hpp"
#include "lierep/normalization.hpp"
#include "lierep/numeric.hpp"
#include "lierep/rootsystem.hpp"
#include "lierep/weight.hpp"

namespace lierep {

// ---------------------------------------------------------------------------
// Row model for the isotypic table of Sym^2 m over so(8).

enum class RowKind {
  CartanSquare,  // m_a . m_a, the Cartan product inside Sym^2 m_a
  WeylPiece,     // V(2 eta_2) inside Sym^2 m_a
  CartanMixed,   // m_a . m_b, the Cartan product inside m_a x m_b
  MInSym,        // copy of m_a inside Sym^2 m_a
  MInMixed,      // copy of m_a inside m_b x m_c
  TriplePiece,   // copy of V(eta_1+eta_3+eta_4), indexed by the complementary a
  Invariant,     // invariant trace-free part, two trivial summands
  Trace,         // the trace line spanned by the metric
};

/// su(8)_a-module assignment of one row.
struct SuAssign {
  enum Kind { Trivial, Pure, Ambiguous, MixedWithTrivial } kind = Trivial;
  std::vector<Coords> modules;  // A7 labels; 1 entry for Pure, 2+ for Ambiguous

  friend bool operator==(const SuAssign& x, const SuAssign& y) {
    return x.kind == y.kind && x.modules == y.modules;
  }
};

/// e7-module assignment of one row.
struct E7Assign {
  enum Kind { Pure2Omega1, AmbiguousWithOmega6, MixedWithTrivial } kind = Pure2Omega1;

  friend bool operator==(const E7Assign& x, const E7Assign& y) { return x.kind == y.kind; }
};

/// One row of the isotypic table: an so(8)-isotypic summand of Sym^2 m with
/// its per-column module assignments.
struct SummandRecord {
  RowKind kind;
  int a = -1;      // distinguished index (Invariant/Trace: -1)
  int b = -1;      // second label index (CartanMixed only)
  std::string label;
  Coords so8_type;  // diagonal so(8) type; all-zero = trivial
  int mult = 1;     // 2 on the invariant row
  std::array<SuAssign, 3> su8;
  std::array<Coords, 3> so8a;
  E7Assign e7;
};

// ---------------------------------------------------------------------------

namespace detail {

inline Coords d4_zero() { return Coords{0, 0, 0, 0}; }

inline std::string eta_name(const Coords& w, const char* symbol) {
  if (Weight{kSo8, w}.is_zero()) return "triv";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (w[i] != 1) s += std::to_string(w[i]);
    s += symbol + std::to_string(i + 1);
  }
  return s;
}

inline std::string module_name(AlgebraSpec alg, const Coords& w) {
  bool zero = true;
  for (int x : w)
    if (x != 0) zero = false;
  if (zero) return "triv";
  if (alg == kSo8) return "V(" + eta_name(w, "η") + ")";   // eta
  if (alg == kSu8) return "V(" + eta_name(w, "ζ") + ")";   // zeta
  return "V(" + eta_name(w, "ω") + ")";                    // omega
}

}  // namespace detail

/// The three isotropy labels m_0 = V(2 eta_1), m_1 = V(2 eta_3),
/// m_2 = V(2 eta_4); consecutive labels are triality images.
inline std::array<Weight, 3> isotropy_labels() {
  const TrialityMap theta;
  std::array<Weight, 3> m{detail::make_weight(kSo8, {2, 0, 0, 0}),
                          detail::make_weight(kSo8, {0, 0, 2, 0}),
                          detail::make_weight(kSo8, {0, 0, 0, 2})};
  if (!(triality_apply(theta, m[0]) == m[1]) || !(triality_apply(theta, m[1]) == m[2]))
    throw error("isotropy_labels: triality direction broken (internal)");
  return m;
}

/// Branching data shared by the pipeline stages.
struct Sym2Context {
  std::array<Weight, 3> m;             // isotropy labels
  Coords weyl_type;                    // 2 eta_2
  Coords triple_type;                  // eta_1 + eta_3 + eta_4
  Decomposition su8_2z4_branch;        // so(8) content of V(2 zeta_4)
  Decomposition su8_z26_branch;        // so(8) content of V(zeta_2 + zeta_6)
  std::array<Decomposition, 3> twisted_2z4;  // per-column triality twists
  std::array<Decomposition, 3> twisted_z26;
  Decomposition e7_w6_branch;          // so(8) content of V(omega_6)
  Decomposition e7_2w1_branch;         // so(8) content of V(2 omega_1)
  Coords su8_z4, su8_2z4, su8_z26;     // A7 labels used in assignments
  Coords e7_2w1, e7_w6;
};

inline Sym2Context build_sym2_context() {
  Sym2Context ctx;
  ctx.m = isotropy_labels();
  ctx.weyl_type = Coords{0, 2, 0, 0};
  ctx.triple_type = Coords{1, 0, 1, 1};
  ctx.su8_z4 = Coords{0, 0, 0, 1, 0, 0, 0};
  ctx.su8_2z4 = Coords{0, 0, 0, 2, 0, 0, 0};
  ctx.su8_z26 = Coords{0, 1, 0, 0, 0, 1, 0};
  ctx.e7_2w1 = Coords{2, 0, 0, 0, 0, 0, 0};
  ctx.e7_w6 = Coords{0, 0, 0, 0, 0, 1, 0};
  const auto su8so8 = projection_su8_to_so8();
  const auto e7so8 = projection_e7_to_so8();
  ctx.su8_2z4_branch = branch(su8so8, Weight{kSu8, ctx.su8_2z4});
  ctx.su8_z26_branch = branch(su8so8, Weight{kSu8, ctx.su8_z26});
  const TrialityMap theta;
  ctx.twisted_2z4[0] = ctx.su8_2z4_branch;
  ctx.twisted_z26[0] = ctx.su8_z26_branch;
  for (int a = 1; a < 3; ++a) {
    ctx.twisted_2z4[a] = triality_apply(theta, ctx.twisted_2z4[a - 1]);
    ctx.twisted_z26[a] = triality_apply(theta, ctx.twisted_z26[a - 1]);
  }
  ctx.e7_w6_branch = branch(e7so8, Weight{kE7, ctx.e7_w6});
  ctx.e7_2w1_branch = branch(e7so8, Weight{kE7, ctx.e7_2w1});
  if (ctx.e7_w6_branch.contains(detail::d4_zero()))
    throw error("build_sym2_context: V(omega_6) branch contains a trivial summand, "
                "invariant-row placement rule is violated");
  return ctx;
}

namespace detail {

inline Coords add_coords(const Coords& x, const Coords& y) {
  Coords out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
  return out;
}

}  // namespace detail

/// Builds the 20-row isotypic table of Sym^2 m with all module assignments.
/// Aborts with a diagnostic whenever a computed decomposition disagrees with
/// the structure the assignments rely on.
inline std::vector<SummandRecord> build_sym2_isotypics(const Sym2Context& ctx) {
  const auto& rd4 = root_system(kSo8);
  const auto& m = ctx.m;

  // Blocks of Sym^2 m = (+) Sym^2 m_a (+) m_a x m_b.
  std::array<Decomposition, 3> sym2_block;
  for (int a = 0; a < 3; ++a) {
    sym2_block[a] = sym2_decompose(rd4, m[a]);
    const Coords square = detail::add_coords(m[a].coords, m[a].coords);
    const bool ok = sym2_block[a].parts.size() == 4 &&
                    sym2_block[a].multiplicity(detail::d4_zero()) == 1 &&
                    sym2_block[a].multiplicity(m[a].coords) == 1 &&
                    sym2_block[a].multiplicity(ctx.weyl_type) == 1 &&
                    sym2_block[a].multiplicity(square) == 1;
    if (!ok)
      throw error("build_sym2_isotypics: Sym^2 m_" + std::to_string(a) +
                  " does not have the expected four summands: " +
                  decomposition_str(sym2_block[a]));
  }
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  std::array<Decomposition, 3> mixed_block;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [x, y] = pairs[p];
    const int z = 3 - x - y;
    mixed_block[p] = tensor_decompose(rd4, m[x], m[y]);
    const Coords cartan = detail::add_coords(m[x].coords, m[y].coords);
    const bool ok = mixed_block[p].parts.size() == 3 &&
                    mixed_block[p].multiplicity(cartan) == 1 &&
                    mixed_block[p].multiplicity(ctx.triple_type) == 1 &&
                    mixed_block[p].multiplicity(m[z].coords) == 1;
    if (!ok)
      throw error("build_sym2_isotypics: m_" + std::to_string(x) + " x m_" + std::to_string(y) +
                  " does not have the expected three summands: " +
                  decomposition_str(mixed_block[p]));
  }

  // Row skeletons, in the fixed table order.
  struct Proto {
    RowKind kind;
    int a, b;       // label indices
    int bx, by;     // block indices (bx == by for diagonal blocks)
    Coords so8_type;
    int mult;
  };
  std::vector<Proto> protos;
  for (int a = 0; a < 3; ++a)
    protos.push_back({RowKind::CartanSquare, a, -1, a, a,
                      detail::add_coords(m[a].coords, m[a].coords), 1});
  for (int a = 0; a < 3; ++a)
    protos.push_back({RowKind::WeylPiece, a, -1, a, a, ctx.weyl_type, 1});
  for (auto [x, y] : pairs)
    protos.push_back({RowKind::CartanMixed, x, y, x, y,
                      detail::add_coords(m[x].coords, m[y].coords), 1});
  for (int a = 0; a < 3; ++a)
    protos.push_back({RowKind::MInSym, a, -1, a, a, m[a].coords, 1});
  for (int a = 0; a < 3; ++a) {
    const int bx = (a == 0) ? 1 : 0;
    const int by = (a == 2) ? 1 : 2;
    protos.push_back({RowKind::MInMixed, a, -1, bx, by, m[a].coords, 1});
  }
  for (int a = 0; a < 3; ++a) {
    const int bx = (a == 0) ? 1 : 0;
    const int by = (a == 2) ? 1 : 2;
    protos.push_back({RowKind::TriplePiece, a, -1, bx, by, ctx.triple_type, 1});
  }
  protos.push_back({RowKind::Invariant, -1, -1, -1, -1, detail::d4_zero(), 2});
  protos.push_back({RowKind::Trace, -1, -1, -1, -1, detail::d4_zero(), 1});

  std::vector<SummandRecord> records;
  for (const auto& proto : protos) {
    SummandRecord rec;
    rec.kind = proto.kind;
    rec.a = proto.a;
    rec.b = proto.b;
    rec.so8_type = proto.so8_type;
    rec.mult = proto.mult;
    switch (proto.kind) {
      case RowKind::CartanSquare:
        rec.label = "m" + std::to_string(proto.a) + "⊠m" + std::to_string(proto.a);
        break;
      case RowKind::WeylPiece:
        rec.label = "V(2η2)⊂Sym²m" + std::to_string(proto.a);
        break;
      case RowKind::CartanMixed:
        rec.label = "m" + std::to_string(proto.a) + "⊠m" + std::to_string(proto.b);
        break;
      case RowKind::MInSym:
        rec.label = "m" + std::to_string(proto.a) + "⊂Sym²m" + std::to_string(proto.a);
        break;
      case RowKind::MInMixed:
        rec.label = "m" + std::to_string(proto.a) + "⊂m" + std::to_string(proto.bx) +
                    "⊗m" + std::to_string(proto.by);
        break;
      case RowKind::TriplePiece:
        rec.label = "V(η1+η3+η4)⊂Sym²m" + std::to_string(proto.a);
        break;
      case RowKind::Invariant:
        rec.label = "(Sym²₀m)^so(8)";
        break;
      case RowKind::Trace:
        rec.label = "ℝ·B|m";
        break;
    }

    for (int col = 0; col < 3; ++col) {
      if (proto.kind == RowKind::Invariant || proto.kind == RowKind::Trace) {
        rec.su8[col] = SuAssign{SuAssign::MixedWithTrivial, {ctx.su8_2z4}};
        rec.so8a[col] = detail::d4_zero();
        continue;
      }
      if (proto.bx == col && proto.by == col) {
        // the row lives inside Sym^2 m_col, on which su(8)_col acts trivially
        rec.su8[col] = SuAssign{SuAssign::Trivial, {}};
        rec.so8a[col] = detail::d4_zero();
        continue;
      }
      if (proto.bx == col || proto.by == col) {
        // inside m_col x m_other: zeta_4-isotypic, so(8)_col sees the other factor
        const int other = (proto.bx == col) ? proto.by : proto.bx;
        rec.su8[col] = SuAssign{SuAssign::Pure, {ctx.su8_z4}};
        rec.so8a[col] = m[other].coords;
        continue;
      }
      // inside Sym^2 (m_col complement): so(8)_col acts diagonally; match the
      // type against the triality-twisted branchings of V(2 zeta_4) and
      // V(zeta_2 + zeta_6)
      rec.so8a[col] = proto.so8_type;
      std::vector<Coords> cands;
      if (ctx.twisted_2z4[col].contains(proto.so8_type)) cands.push_back(ctx.su8_2z4);
      if (ctx.twisted_z26[col].contains(proto.so8_type)) cands.push_back(ctx.su8_z26);
      if (cands.empty())
        throw error("build_sym2_isotypics: row " + rec.label + ": so(8) type " +
                    coords_str(proto.so8_type) + " not found in any su(8)_" +
                    std::to_string(col) + " module branching");
      rec.su8[col] = SuAssign{cands.size() == 1 ? SuAssign::Pure : SuAssign::Ambiguous,
                              std::move(cands)};
    }

    // e7 column from the so(8) content of R, V(omega_6), V(2 omega_1)
    if (proto.kind == RowKind::Invariant) {
      // trace-free invariants: the trivial e7-summand is the ambient metric,
      // and V(omega_6) was checked to contain no trivial so(8)-summand
      rec.e7 = E7Assign{E7Assign::Pure2Omega1};
    } else if (proto.kind == RowKind::Trace) {
      rec.e7 = E7Assign{E7Assign::MixedWithTrivial};
    } else {
      const bool in_2w1 = ctx.e7_2w1_branch.contains(proto.so8_type);
      const bool in_w6 = ctx.e7_w6_branch.contains(proto.so8_type);
      if (!in_2w1)
        throw error("build_sym2_isotypics: row " + rec.label + ": so(8) type " +
                    coords_str(proto.so8_type) + " missing from the V(2 omega_1) branching");
      rec.e7 = in_w6 ? E7Assign{E7Assign::AmbiguousWithOmega6} : E7Assign{E7Assign::Pure2Omega1};
    }
    records.push_back(std::move(rec));
  }

  // Dimension audit: the rows must exhaust Sym^2 m.
  Int total = 0;
  for (const auto& rec : records)
    total += Int(rec.mult) * dim_irrep(rd4, Weight{kSo8, rec.so8_type});
  const Int dim_m = 105;
  const Int expect = dim_m * (dim_m + 1) / 2;
  if (total != expect)
    throw error("build_sym2_isotypics: dimension audit failed, rows sum to " + total.str() +
                " instead of " + expect.str());

  // Reconstruction audit along the independent route: decompose Sym^2 of the
  // full isotropy character and compare multiplicities row by row.
  Character chm;
  chm.algebra = kSo8;
  for (int a = 0; a < 3; ++a) {
    const Character part = weight_multiplicities(rd4, m[a]);
    for (const auto& [w, mm] : part.entries) chm.add(w, mm);
  }
  const Decomposition direct = sym2_decompose_character(rd4, chm);
  Decomposition from_rows;
  from_rows.algebra = kSo8;
  for (const auto& rec : records) from_rows.add(rec.so8_type, rec.mult);
  if (!(direct == from_rows))
    throw error("build_sym2_isotypics: rows do not reconstruct Sym^2 m; direct route gives " +
                decomposition_str(direct) + ", rows give " + decomposition_str(from_rows));

  return records;
}

/// Independent triality-coherence assertion: rotating every label index by
/// one and twisting all D4 data by the triality map must permute the record
/// set onto itself.
inline void check_triality_coherence(const std::vector<SummandRecord>& records) {
  const TrialityMap theta;
  const auto rotate = [](int a) { return a < 0 ? a : (a + 1) % 3; };
  for (const auto& rec : records) {
    int ra = rotate(rec.a);
    int rb = rotate(rec.b);
    if (rec.kind == RowKind::CartanMixed && ra > rb) std::swap(ra, rb);
    const SummandRecord* image = nullptr;
    for (const auto& cand : records) {
      if (cand.kind != rec.kind || cand.a != ra || cand.b != rb) continue;
      image = &cand;
      break;
    }
    if (!image)
      throw error("check_triality_coherence: no image row for " + rec.label);
    const Weight mapped_type = triality_apply(theta, Weight{kSo8, rec.so8_type});
    if (!(image->so8_type == mapped_type.coords) || image->mult != rec.mult ||
        !(image->e7 == rec.e7))
      throw error("check_triality_coherence: row data mismatch for " + rec.label);
    for (int col = 0; col < 3; ++col) {
      const int icol = (col + 1) % 3;
      if (!(image->su8[icol] == rec.su8[col]))
        throw error("check_triality_coherence: su(8) column mismatch for " + rec.label);
      const Weight mapped_col = triality_apply(theta, Weight{kSo8, rec.so8a[col]});
      if (!(image->so8a[icol] == mapped_col.coords))
        throw error("check_triality_coherence: so(8)_a column mismatch for " + rec.label);
    }
  }
}

// ---------------------------------------------------------------------------
// Casimir table (Table 2).

/// Exact Casimir values of one row; disengaged (ambiguous or mixed) cells
/// carry no value and render as dashes.
struct CasimirRow {
  const SummandRecord* rec;
  std::array<std::optional<Rat>, 3> su8;
  std::array<Rat, 3> so8a;
  std::optional<Rat> e7;
  Rat so8_diag;
};

inline std::vector<CasimirRow> compute_casimir_table(const std::vector<SummandRecord>& records,
                                                     const ChainConstants& cc) {
  std::vector<CasimirRow> rows;
  for (const auto& rec : records) {
    CasimirRow row;
    row.rec = &rec;
    for (int col = 0; col < 3; ++col) {
      switch (rec.su8[col].kind) {
        case SuAssign::Trivial:
          row.su8[col] = Rat(0);
          break;
        case SuAssign::Pure:
          row.su8[col] = casimir_value(cc.su8, Weight{kSu8, rec.su8[col].modules.front()});
          break;
        default:
          row.su8[col] = std::nullopt;
      }
      row.so8a[col] = casimir_value(cc.so8, Weight{kSo8, rec.so8a[col]});
    }
    row.e7 = (rec.e7.kind == E7Assign::Pure2Omega1)
                 ? std::optional<Rat>(casimir_value(cc.e7, Weight{kE7, Coords{2, 0, 0, 0, 0, 0, 0}}))
                 : std::nullopt;
    row.so8_diag = casimir_value(cc.so8, Weight{kSo8, rec.so8_type});
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// A*A and q(R) (Table 3).

/// Per-record A*A data. Rows that cannot be resolved columnwise (the Weyl
/// pieces and the invariant/trace lines) carry no parts; the Weyl pieces
/// carry no total either and are handled by the block analysis.
struct AARecordEntry {
  const SummandRecord* rec;
  std::optional<std::array<Rat, 3>> parts;
  std::optional<Rat> total;
  Rat q_bar;
  std::optional<Rat> q_r;
};

/// A*A on one unambiguous row via the subalgebra route:
/// (A*A)_a = Cas^{su(8)_a} - Cas^{so(8)_a}.
inline AARecordEntry compute_aa(const CasimirRow& row) {
  const SummandRecord& rec = *row.rec;
  if (rec.kind == RowKind::WeylPiece || rec.kind == RowKind::Invariant ||
      rec.kind == RowKind::Trace)
    throw error("compute_aa: row " + rec.label +
                " has ambiguous or mixed su(8) assignments; it is resolved separately");
  AARecordEntry entry;
  entry.rec = &rec;
  std::array<Rat, 3> parts;
  Rat total = 0;
  for (int col = 0; col < 3; ++col) {
    if (!row.su8[col])
      throw error("compute_aa: row " + rec.label + " has a dash in su(8)_" +
                  std::to_string(col));
    parts[col] = *row.su8[col] - row.so8a[col];
    total += parts[col];
  }
  entry.parts = parts;
  entry.total = total;
  entry.q_bar = row.so8_diag;
  return entry;
}

/// Block analysis of A*A on the three copies of V(2 eta_2): (A*A)_0 has the
/// two eigenvalues coming from V(2 zeta_4) and V(zeta_2+zeta_6) on the
/// off-column copies, giving s and |t|; the sign of t is fixed by requiring
/// the e7-route eigenvalue to occur with multiplicity at least 2.
struct WeylBlock {
  Rat s;
  Rat t;
  int offdiag_sign;
  Rat diag_eigenvalue;     // 2s + 2t, on the diagonal copy
  Rat double_eigenvalue;   // 2s - t, multiplicity 2
  Rat constraint;          // e7-route value that must appear twice
  Rat eig_2z4, eig_z26;    // the two (A*A)_0 eigenvalues
};

inline WeylBlock resolve_weyl_block(const ChainConstants& cc) {
  const Coords weyl_type{0, 2, 0, 0};
  const Rat cas_weyl = casimir_value(cc.so8, Weight{kSo8, weyl_type});
  const Rat eig_2z4 =
      casimir_value(cc.su8, Weight{kSu8, Coords{0, 0, 0, 2, 0, 0, 0}}) - cas_weyl;
  const Rat eig_z26 =
      casimir_value(cc.su8, Weight{kSu8, Coords{0, 1, 0, 0, 0, 1, 0}}) - cas_weyl;
  const Rat cas_m = cc.isotropy_cas.front();
  const Rat constraint =
      casimir_value(cc.e7, Weight{kE7, Coords{2, 0, 0, 0, 0, 0, 0}}) - cas_weyl - 2 * cas_m;

  const Rat s = (eig_2z4 + eig_z26) / 2;
  Rat abs_t = (eig_2z4 - eig_z26) / 2;
  if (abs_t < 0) abs_t = -abs_t;
  std::optional<int> chosen;
  for (int sign : {-1, +1}) {
    const Rat t = sign * abs_t;
    // spectrum of the 3x3 block with diagonal 2s and off-diagonal t:
    // 2s + 2t once, 2s - t twice
    const bool ok = (2 * s - t == constraint) || (abs_t == 0 && 2 * s + 2 * t == constraint);
    if (!ok) continue;
    if (chosen && *chosen != sign) {
      chosen.reset();
      break;
    }
    chosen = sign;
    if (abs_t == 0) break;
  }
  if (!chosen)
    throw error("resolve_weyl_block: no off-diagonal sign matches the multiplicity-2 "
                "constraint value " + rat_str(constraint));
  WeylBlock block;
  block.s = s;
  block.t = *chosen * abs_t;
  block.offdiag_sign = *chosen;
  block.diag_eigenvalue = 2 * block.s + 2 * block.t;
  block.double_eigenvalue = 2 * block.s - block.t;
  block.constraint = constraint;
  block.eig_2z4 = eig_2z4;
  block.eig_z26 = eig_z26;
  return block;
}

/// A*A on the so(8)-invariant rows via the ambient route: the trace-free
/// invariants sit inside V(2 omega_1), and A*A annihilates the metric line
/// because the torsion tensor is totally skew.
inline std::pair<Rat, Rat> aa_on_invariants(const ChainConstants& cc) {
  const Rat cas_m = cc.isotropy_cas.front();
  const Rat invariant =
      casimir_value(cc.e7, Weight{kE7, Coords{2, 0, 0, 0, 0, 0, 0}}) - Rat(0) - 2 * cas_m;
  return {invariant, Rat(0)};
}

inline AARecordEntry& compute_qr(AARecordEntry& entry) {
  if (entry.total) entry.q_r = *entry.total / 4 + entry.q_bar;
  return entry;
}

// ---------------------------------------------------------------------------
// Condensed tables and the final certificate.

/// One row of the condensed eigenvalue table; `part_a` belongs to the
/// distinguished index of the row label, `part_b` to the complementary ones.
struct SpectralRow {
  std::string label;
  std::optional<Rat> part_a;
  std::optional<Rat> part_b;
  Rat aa_total;
  Rat q_bar;
  Rat q_r;
  bool trace_free;
  Int dimension;  // total dimension of the eigenspace rows it condenses
};

struct StabilityReport {
  Rat einstein_constant;
  Rat min_qr_tracefree;
  Rat lichnerowicz_bound;
  Rat two_e;
  Rat ratio_to_e;  // bound / E
  enum Verdict { Stable, LinearlyStableOnly, Inconclusive } verdict;
  std::vector<std::string> equality_rows;
  Rat second_min_qr;
};

/// Verdict over the eigenvalue rows: the Lichnerowicz bound is twice the
/// minimal q(R) on the trace-free part, compared against 2E.
inline StabilityReport stability_verdict(const std::vector<SpectralRow>& rows,
                                         const Rat& einstein) {
  StabilityReport report;
  report.einstein_constant = einstein;
  const SpectralRow* argmin = nullptr;
  for (const auto& row : rows) {
    if (!row.trace_free) continue;
    if (!argmin || row.q_r < argmin->q_r) argmin = &row;
  }
  if (!argmin) throw error("stability_verdict: no trace-free rows");
  report.min_qr_tracefree = argmin->q_r;
  bool have_second = false;
  for (const auto& row : rows) {
    if (!row.trace_free) continue;
    if (row.q_r == report.min_qr_tracefree) {
      report.equality_rows.push_back(row.label);
      continue;
    }
    if (!have_second || row.q_r < report.second_min_qr) {
      report.second_min_qr = row.q_r;
      have_second = true;
    }
  }
  report.lichnerowicz_bound = 2 * report.min_qr_tracefree;
  report.two_e = 2 * report.einstein_constant;
  report.ratio_to_e = report.lichnerowicz_bound / report.einstein_constant;
  report.verdict = report.lichnerowicz_bound > report.two_e
                       ? StabilityReport::Stable
                       : (report.lichnerowicz_bound == report.two_e
                              ? StabilityReport::LinearlyStableOnly
                              : StabilityReport::Inconclusive);
  return report;
}

struct CertificateData {
  Rat scale = 1;
  ChainConstants chain;
  Sym2Context ctx;
  std::vector<SummandRecord> records;
  std::vector<CasimirRow> casimir_rows;       // scaled values
  std::vector<AARecordEntry> aa_records;      // per-record, scaled
  WeylBlock block;                            // scaled
  Rat der_term;                               // 2 Cas(so(8))|m, the rank-2 derivation constant
  std::vector<SpectralRow> spectral_rows;     // Table 3, scaled
  StabilityReport report;
};

namespace detail {

inline const SummandRecord* find_record(const std::vector<SummandRecord>& records, RowKind kind,
                                        int a, int b = -1) {
  for (const auto& r : records)
    if (r.kind == kind && r.a == a && r.b == b) return &r;
  throw error("find_record: missing row (internal)");
}

/// Distinguished and complementary column indices of a record.
inline std::pair<std::vector<int>, std::vector<int>> record_columns(const SummandRecord& rec) {
  switch (rec.kind) {
    case RowKind::CartanMixed:
      return {{rec.a, rec.b}, {3 - rec.a - rec.b}};
    case RowKind::CartanSquare:
    case RowKind::WeylPiece:
    case RowKind::MInSym:
    case RowKind::MInMixed:
    case RowKind::TriplePiece: {
      std::vector<int> comp;
      for (int c = 0; c < 3; ++c)
        if (c != rec.a) comp.push_back(c);
      return {{rec.a}, comp};
    }
    default:
      return {{}, {0, 1, 2}};
  }
}

}  // namespace detail

/// Runs the full certificate pipeline at the given metric scale. All
/// spectral outputs (Casimir eigenvalues, A*A, q(R), the Einstein constant
/// and the bound) are multiplied by the scale; module assignments and the
/// verdict are scale-invariant.
inline CertificateData run_certificate(const Rat& scale = Rat(1)) {
  if (scale <= 0) throw error("run_certificate: scale must be positive");
  CertificateData data;
  data.scale = scale;
  data.chain = compute_chain_constants();
  data.ctx = build_sym2_context();
  data.records = build_sym2_isotypics(data.ctx);
  check_triality_coherence(data.records);
  const ChainConstants& cc = data.chain;

  data.casimir_rows = compute_casimir_table(data.records, cc);
  data.block = resolve_weyl_block(cc);
  const auto [aa_invariant, aa_trace] = aa_on_invariants(cc);

  const Rat cas_m = cc.isotropy_cas.front();
  const Rat cas_2w1 = casimir_value(cc.e7, Weight{kE7, Coords{2, 0, 0, 0, 0, 0, 0}});
  data.der_term = 2 * cas_m;

  // Per-record A*A entries.
  for (const auto& row : data.casimir_rows) {
    const SummandRecord& rec = *row.rec;
    AARecordEntry entry;
    switch (rec.kind) {
      case RowKind::WeylPiece:
        entry.rec = &rec;
        entry.q_bar = row.so8_diag;  // block rows: no per-record total
        break;
      case RowKind::Invariant:
        entry.rec = &rec;
        entry.total = aa_invariant;
        entry.q_bar = row.so8_diag;
        break;
      case RowKind::Trace:
        entry.rec = &rec;
        entry.total = aa_trace;
        entry.q_bar = row.so8_diag;
        break;
      default:
        entry = compute_aa(row);
    }
    compute_qr(entry);
    // Ambient-route agreement on every row fully inside V(2 omega_1).
    if (rec.e7.kind == E7Assign::Pure2Omega1 && entry.total) {
      const Rat ambient = cas_2w1 - row.so8_diag - 2 * cas_m;
      if (*entry.total != ambient)
        throw error("run_certificate: subalgebra and ambient routes disagree on row " +
                    rec.label + ": " + rat_str(*entry.total) + " vs " + rat_str(ambient));
    }
    data.aa_records.push_back(std::move(entry));
  }

  // Condensed eigenvalue rows in the fixed table order.
  const auto& rd4 = root_system(kSo8);
  const auto condensed = [&](RowKind kind, int a, int b,
                             const std::string& label) -> SpectralRow {
    const SummandRecord* rec = detail::find_record(data.records, kind, a, b);
    const AARecordEntry* entry = nullptr;
    for (const auto& e : data.aa_records)
      if (e.rec == rec) entry = &e;
    const auto [dist, comp] = detail::record_columns(*rec);
    SpectralRow row;
    row.label = label;
    const auto& parts = *entry->parts;
    row.part_a = parts[static_cast<std::size_t>(dist.front())];
    for (int c : dist)
      if (parts[static_cast<std::size_t>(c)] != *row.part_a)
        throw error("run_certificate: distinguished parts differ on " + rec->label);
    row.part_b = parts[static_cast<std::size_t>(comp.front())];
    for (int c : comp)
      if (parts[static_cast<std::size_t>(c)] != *row.part_b)
        throw error("run_certificate: complementary parts differ on " + rec->label);
    row.aa_total = *entry->total;
    row.q_bar = entry->q_bar;
    row.q_r = *entry->q_r;
    row.trace_free = true;
    row.dimension = Int(3) * dim_irrep(rd4, Weight{kSo8, rec->so8_type});
    return row;
  };

  const Rat cas_weyl = casimir_value(cc.so8, Weight{kSo8, Coords{0, 2, 0, 0}});
  const Int dim_weyl = dim_irrep(rd4, Weight{kSo8, Coords{0, 2, 0, 0}});
  data.spectral_rows.push_back(condensed(RowKind::CartanSquare, 0, -1, "m_a⊠m_a"));
  data.spectral_rows.push_back(SpectralRow{"diag(V(2η2))⊂W", std::nullopt, std::nullopt,
                                           data.block.diag_eigenvalue, cas_weyl,
                                           data.block.diag_eigenvalue / 4 + cas_weyl, true,
                                           dim_weyl});
  data.spectral_rows.push_back(SpectralRow{"diag(V(2η2))^⊥⊂W", std::nullopt,
                                           std::nullopt, data.block.double_eigenvalue, cas_weyl,
                                           data.block.double_eigenvalue / 4 + cas_weyl, true,
                                           Int(2) * dim_weyl});
  data.spectral_rows.push_back(condensed(RowKind::CartanMixed, 0, 1, "m_a⊠m_c"));
  data.spectral_rows.push_back(condensed(RowKind::MInSym, 0, -1, "m_a⊂Sym²m_a"));
  data.spectral_rows.push_back(condensed(RowKind::MInMixed, 0, -1, "m_a⊂m_b⊗m_c"));
  data.spectral_rows.push_back(
      condensed(RowKind::TriplePiece, 0, -1, "V(η1+η3+η4)⊂Sym²m_a"));
  data.spectral_rows.push_back(SpectralRow{"(Sym²₀m)^so(8)", std::nullopt, std::nullopt,
                                           aa_invariant, Rat(0), aa_invariant / 4, true, Int(2)});
  data.spectral_rows.push_back(SpectralRow{"ℝ·B|m", std::nullopt, std::nullopt, aa_trace,
                                           Rat(0), Rat(0), false, Int(1)});

  // Condensation sanity: the three records of each triality orbit must
  // agree with the representative used above.
  for (const auto& e : data.aa_records) {
    if (!e.parts) continue;
    const auto [dist, comp] = detail::record_columns(*e.rec);
    const SpectralRow* row = nullptr;
    switch (e.rec->kind) {
      case RowKind::CartanSquare: row = &data.spectral_rows[0]; break;
      case RowKind::CartanMixed: row = &data.spectral_rows[3]; break;
      case RowKind::MInSym: row = &data.spectral_rows[4]; break;
      case RowKind::MInMixed: row = &data.spectral_rows[5]; break;
      case RowKind::TriplePiece: row = &data.spectral_rows[6]; break;
      default: break;
    }
    if (!row) continue;
    const auto& parts = *e.parts;
    for (int c : dist)
      if (parts[static_cast<std::size_t>(c)] != *row->part_a)
        throw error("run_certificate: triality orbit disagrees on " + e.rec->label);
    for (int c : comp)
      if (parts[static_cast<std::size_t>(c)] != *row->part_b)
        throw error("run_certificate: triality orbit disagrees on " + e.rec->label);
    if (*e.total != row->aa_total || e.q_bar != row->q_bar || *e.q_r != row->q_r)
      throw error("run_certificate: triality orbit totals disagree on " + e.rec->label);
  }

  data.report = stability_verdict(data.spectral_rows, cc.einstein);

  if (scale != 1) {
    const auto mul = [&](Rat& r) { r *= scale; };
    for (auto& row : data.casimir_rows) {
      for (auto& v : row.su8)
        if (v) mul(*v);
      for (auto& v : row.so8a) mul(v);
      if (row.e7) mul(*row.e7);
      mul(row.so8_diag);
    }
    for (auto& e : data.aa_records) {
      if (e.parts)
        for (auto& p : *e.parts) mul(p);
      if (e.total) mul(*e.total);
      mul(e.q_bar);
      if (e.q_r) mul(*e.q_r);
    }
    mul(data.block.s);
    mul(data.block.t);
    mul(data.block.diag_eigenvalue);
    mul(data.block.double_eigenvalue);
    mul(data.block.constraint);
    mul(data.block.eig_2z4);
    mul(data.block.eig_z26);
    mul(data.der_term);
    for (auto& row : data.spectral_rows) {
      if (row.part_a) mul(*row.part_a);
      if (row.part_b) mul(*row.part_b);
      mul(row.aa_total);
      mul(row.q_bar);
      mul(row.q_r);
    }
    mul(data.report.einstein_constant);
    mul(data.report.min_qr_tracefree);
    mul(data.report.lichnerowicz_bound);
    mul(data.report.two_e);
    mul(data.report.second_min_qr);
  }
  return data;
}

// ---------------------------------------------------------------------------
// Commutator-relation validation.

struct CommutatorCheck {
  std::string name;
  bool passed;
  std::string detail;
};

/// Confirms the bracket constraints [m_a, m_b] in m_c and [m_a, m_a] in
/// so(8) at the level of decompositions: the skew square of m_a shares only
/// the adjoint type with the so(8)-content of e7, and a mixed product
/// m_a x m_b shares only the type of m_c.
inline std::vector<CommutatorCheck> validate_commutator_relations() {
  const auto& rd4 = root_system(kSo8);
  const auto m = isotropy_labels();
  const Decomposition e7_content = branch(projection_e7_to_so8(), root_system(kE7).highest_root());
  const Coords adjoint = rd4.highest_root().coords;
  std::vector<CommutatorCheck> checks;

  const auto shared_types = [&](const Decomposition& dec) {
    std::vector<Coords> out;
    for (const auto& [w, mm] : dec.parts)
      if (e7_content.contains(w)) out.push_back(w);
    return out;
  };

  for (int x = 0; x < 3; ++x) {
    for (int y = x + 1; y < 3; ++y) {
      const int z = 3 - x - y;
      const Decomposition prod = tensor_decompose(rd4, m[x], m[y]);
      const auto shared = shared_types(prod);
      CommutatorCheck check;
      check.name = "[m" + std::to_string(x) + ",m" + std::to_string(y) + "] in m" +
                   std::to_string(z);
      check.passed = (shared.size() == 1 && shared.front() == m[z].coords);
      Int tally = 0;
      std::string dims;
      for (const auto& [w, mm] : prod.parts) {
        const Int d = mm * dim_irrep(rd4, Weight{kSo8, w});
        tally += d;
        if (!dims.empty()) dims += " + ";
        dims += d.str();
      }
      check.detail = "shared types: " +
                     (shared.empty() ? std::string("none") : [&] {
                       std::string s;
                       for (const auto& w : shared) {
                         if (!s.empty()) s += ", ";
                         s += "[" + coords_str(w) + "]";
                       }
                       return s;
                     }()) +
                     "; dims " + tally.str() + " = " + dims;
      checks.push_back(std::move(check));
    }
  }
  for (int a = 0; a < 3; ++a) {
    const Decomposition skew = alt2_decompose(rd4, m[a]);
    const auto shared = shared_types(skew);
    CommutatorCheck check;
    check.name = "[m" + std::to_string(a) + ",m" + std::to_string(a) + "] in so(8)";
    check.passed = (shared.size() == 1 && shared.front() == adjoint);
    check.detail = "skew square " + decomposition_str(skew) + "; shared with e7 content: " +
                   (shared.empty() ? std::string("none") : "[" + coords_str(shared.front()) + "]");
    checks.push_back(std::move(check));
  }
  return checks;
}

}  // namespace lierep
