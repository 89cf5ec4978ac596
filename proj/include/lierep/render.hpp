#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lierep/branching.hpp"
#include "lierep/character.hpp"
#include "lierep/normalization.hpp"
#include "lierep/numeric.hpp"
#include "lierep/stability.hpp"

namespace lierep {

using Json = nlohmann::ordered_json;

/// Structured command output: exact rationals only, renderable as markdown
/// or JSON with byte-identical results across runs.
struct OutputDocument {
  std::string kind;
  Json payload;
  Json provenance;
  std::string markdown;

  Json to_json() const {
    Json j;
    j["kind"] = kind;
    j["payload"] = payload;
    j["provenance"] = provenance;
    return j;
  }
};

/// Rejects any floating-point token anywhere in a JSON document.
inline void assert_no_floats(const Json& j) {
  if (j.is_number_float()) throw error("assert_no_floats: float value in output document");
  if (j.is_object() || j.is_array())
    for (const auto& item : j) assert_no_floats(item);
}

namespace render {

inline std::string opt_rat(const std::optional<Rat>& r) { return r ? rat_str(*r) : "-"; }

inline std::string dec_markdown(const RootSystem& rs, const Decomposition& dec) {
  std::vector<std::pair<Coords, Int>> parts(dec.parts.begin(), dec.parts.end());
  std::stable_sort(parts.begin(), parts.end(), [&](const auto& a, const auto& b) {
    const Rat la = rs.level(a.first), lb = rs.level(b.first);
    if (la != lb) return la > lb;
    return a.first < b.first;
  });
  std::string s;
  for (const auto& [w, m] : parts) {
    if (!s.empty()) s += " ⊕ ";
    if (m != 1) s += m.str() + "·";
    s += detail::module_name(rs.spec, w);
  }
  return s.empty() ? "0" : s;
}

inline Json dec_json(const RootSystem& rs, const Decomposition& dec) {
  std::vector<std::pair<Coords, Int>> parts(dec.parts.begin(), dec.parts.end());
  std::stable_sort(parts.begin(), parts.end(), [&](const auto& a, const auto& b) {
    const Rat la = rs.level(a.first), lb = rs.level(b.first);
    if (la != lb) return la > lb;
    return a.first < b.first;
  });
  Json arr = Json::array();
  for (const auto& [w, m] : parts) {
    Json p;
    p["weight"] = coords_str(w);
    p["mult"] = m.str();
    p["dim"] = dim_irrep(rs, Weight{rs.spec, w}).str();
    arr.push_back(std::move(p));
  }
  return arr;
}

inline std::string su_assign_str(const SuAssign& s) {
  switch (s.kind) {
    case SuAssign::Trivial:
      return "triv";
    case SuAssign::Pure:
      return detail::module_name(kSu8, s.modules.front());
    case SuAssign::Ambiguous: {
      std::string out;
      for (const auto& m : s.modules) {
        if (!out.empty()) out += "⊕";
        out += detail::module_name(kSu8, m);
      }
      return out;
    }
    case SuAssign::MixedWithTrivial:
      return "ℝ⊕" + detail::module_name(kSu8, s.modules.front());
  }
  return "?";
}

inline std::string so8a_str(const Coords& w) {
  return Weight{kSo8, w}.is_zero() ? "triv" : detail::module_name(kSo8, w);
}

inline std::string e7_assign_str(const E7Assign& e) {
  switch (e.kind) {
    case E7Assign::Pure2Omega1:
      return "V(2ω1)";
    case E7Assign::AmbiguousWithOmega6:
      return "V(2ω1)⊕V(ω6)";
    case E7Assign::MixedWithTrivial:
      return "ℝ⊕V(2ω1)";
  }
  return "?";
}

struct MdTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const {
    std::ostringstream os;
    os << "|";
    for (const auto& h : header) os << " " << h << " |";
    os << "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) os << "---|";
    os << "\n";
    for (const auto& row : rows) {
      os << "|";
      for (const auto& cell : row) os << " " << cell << " |";
      os << "\n";
    }
    return os.str();
  }
};

// --- Table 1 ---------------------------------------------------------------

inline MdTable table1_md(const std::vector<SummandRecord>& records) {
  MdTable t;
  t.header = {"summand", "su(8)_0", "so(8)_0", "su(8)_1",
              "so(8)_1", "su(8)_2", "so(8)_2", "e7"};
  for (const auto& rec : records) {
    std::vector<std::string> row{rec.label};
    for (int c = 0; c < 3; ++c) {
      row.push_back(su_assign_str(rec.su8[c]));
      row.push_back(so8a_str(rec.so8a[c]));
    }
    row.push_back(e7_assign_str(rec.e7));
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline Json table1_json(const std::vector<SummandRecord>& records) {
  Json arr = Json::array();
  for (const auto& rec : records) {
    Json row;
    row["summand"] = rec.label;
    row["so8_type"] = coords_str(rec.so8_type);
    row["mult"] = rec.mult;
    for (int c = 0; c < 3; ++c) {
      row["su8_" + std::to_string(c)] = su_assign_str(rec.su8[c]);
      row["so8a_" + std::to_string(c)] = so8a_str(rec.so8a[c]);
    }
    row["e7"] = e7_assign_str(rec.e7);
    arr.push_back(std::move(row));
  }
  return arr;
}

// --- Table 2 ---------------------------------------------------------------

/// Condensed Casimir table in the fixed row order; asserts that the three
/// records of each triality orbit and the complementary columns agree.
struct CondensedCasimirRow {
  std::string label;
  std::optional<Rat> su8_a, so8_a, su8_b, so8_b, e7;
  Rat so8_diag;
};

inline std::vector<CondensedCasimirRow> condense_casimir(const CertificateData& data) {
  const auto row_for = [&](RowKind kind, int a, int b) -> const CasimirRow& {
    for (const auto& row : data.casimir_rows)
      if (row.rec->kind == kind && row.rec->a == a && row.rec->b == b) return row;
    throw error("condense_casimir: missing row (internal)");
  };
  const auto make = [&](RowKind kind, int a, int b, const std::string& label) {
    const CasimirRow& row = row_for(kind, a, b);
    const auto [dist, comp] = detail::record_columns(*row.rec);
    CondensedCasimirRow out;
    out.label = label;
    if (dist.empty()) {
      out.su8_a = std::nullopt;
      out.so8_a = Rat(0);
      out.su8_b = std::nullopt;
      out.so8_b = Rat(0);
    } else {
      out.su8_a = row.su8[static_cast<std::size_t>(dist.front())];
      out.so8_a = row.so8a[static_cast<std::size_t>(dist.front())];
      for (int c : dist)
        if (row.su8[static_cast<std::size_t>(c)] != out.su8_a ||
            Rat(row.so8a[static_cast<std::size_t>(c)]) != *out.so8_a)
          throw error("condense_casimir: distinguished columns differ on " + row.rec->label);
      out.su8_b = row.su8[static_cast<std::size_t>(comp.front())];
      out.so8_b = row.so8a[static_cast<std::size_t>(comp.front())];
      for (int c : comp)
        if (row.su8[static_cast<std::size_t>(c)] != out.su8_b ||
            Rat(row.so8a[static_cast<std::size_t>(c)]) != *out.so8_b)
          throw error("condense_casimir: complementary columns differ on " + row.rec->label);
    }
    out.e7 = row.e7;
    out.so8_diag = row.so8_diag;
    return out;
  };
  std::vector<CondensedCasimirRow> rows;
  rows.push_back(make(RowKind::CartanSquare, 0, -1, "m_a⊠m_a"));
  rows.push_back(make(RowKind::WeylPiece, 0, -1, "V(2η2)⊂Sym²m_a"));
  rows.push_back(make(RowKind::CartanMixed, 0, 1, "m_a⊠m_c"));
  rows.push_back(make(RowKind::MInSym, 0, -1, "m_a⊂Sym²m_a"));
  rows.push_back(make(RowKind::MInMixed, 0, -1, "m_a⊂m_b⊗m_c"));
  rows.push_back(make(RowKind::TriplePiece, 0, -1, "V(η1+η3+η4)⊂Sym²m_a"));
  rows.push_back(make(RowKind::Invariant, -1, -1, "(Sym²₀m)^so(8)"));
  rows.push_back(make(RowKind::Trace, -1, -1, "ℝ·B|m"));
  return rows;
}

inline MdTable table2_md(const std::vector<CondensedCasimirRow>& rows) {
  MdTable t;
  t.header = {"summand",     "Cas su(8)_a", "Cas so(8)_a", "Cas su(8)_b",
              "Cas so(8)_b", "Cas e7",      "Cas so(8)"};
  for (const auto& row : rows)
    t.rows.push_back({row.label, opt_rat(row.su8_a), opt_rat(row.so8_a), opt_rat(row.su8_b),
                      opt_rat(row.so8_b), opt_rat(row.e7), rat_str(row.so8_diag)});
  return t;
}

inline Json table2_json(const std::vector<CondensedCasimirRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["summand"] = row.label;
    r["cas_su8_a"] = opt_rat(row.su8_a);
    r["cas_so8_a"] = opt_rat(row.so8_a);
    r["cas_su8_b"] = opt_rat(row.su8_b);
    r["cas_so8_b"] = opt_rat(row.so8_b);
    r["cas_e7"] = opt_rat(row.e7);
    r["cas_so8"] = rat_str(row.so8_diag);
    arr.push_back(std::move(r));
  }
  return arr;
}

// --- Table 3 ---------------------------------------------------------------

inline MdTable table3_md(const std::vector<SpectralRow>& rows) {
  MdTable t;
  t.header = {"summand", "(A*A)_a", "(A*A)_b", "A*A", "q(Rbar)", "q(R)"};
  for (const auto& row : rows)
    t.rows.push_back({row.label, opt_rat(row.part_a), opt_rat(row.part_b), rat_str(row.aa_total),
                      rat_str(row.q_bar), rat_str(row.q_r)});
  return t;
}

inline Json table3_json(const std::vector<SpectralRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["summand"] = row.label;
    r["aa_a"] = opt_rat(row.part_a);
    r["aa_b"] = opt_rat(row.part_b);
    r["aa_total"] = rat_str(row.aa_total);
    r["q_rbar"] = rat_str(row.q_bar);
    r["q_r"] = rat_str(row.q_r);
    r["dim"] = row.dimension.str();
    arr.push_back(std::move(r));
  }
  return arr;
}

// --- Certificate report -----------------------------------------------------

inline std::string verdict_str(StabilityReport::Verdict v) {
  switch (v) {
    case StabilityReport::Stable: return "stable";
    case StabilityReport::LinearlyStableOnly: return "linearly_stable_only";
    case StabilityReport::Inconclusive: return "inconclusive";
  }
  return "?";
}

inline std::string report_md(const CertificateData& data) {
  const StabilityReport& rep = data.report;
  std::ostringstream os;
  os << "## Stability certificate: standard metric on E7/PSO(8)\n\n";
  os << "- metric scale: " << rat_str(data.scale) << "\n";
  os << "- normalized Casimir constants: Cas(e7) = " << rat_str(data.chain.e7.adjoint_value)
     << ", Cas(su(8)) = " << rat_str(data.chain.su8.adjoint_value)
     << ", Cas(so(8)) = " << rat_str(data.chain.so8.adjoint_value) << "\n";
  os << "- isotropy Casimir eigenvalues: " << rat_str(data.scale * data.chain.isotropy_cas[0])
     << ", " << rat_str(data.scale * data.chain.isotropy_cas[1]) << ", "
     << rat_str(data.scale * data.chain.isotropy_cas[2]) << "\n";
  os << "- Einstein constant E: " << rat_str(rep.einstein_constant) << "\n";
  os << "- rank-2 derivation constant 2 Cas(so(8))|m: " << rat_str(data.der_term) << "\n";
  os << "- Weyl block: s = " << rat_str(data.block.s) << ", t = " << rat_str(data.block.t)
     << ", spectrum " << rat_str(data.block.diag_eigenvalue) << " on diag(V(2η2)), "
     << rat_str(data.block.double_eigenvalue) << " with multiplicity 2\n";
  os << "- min q(R) on trace-free summands: " << rat_str(rep.min_qr_tracefree) << "\n";
  os << "- Lichnerowicz bound on tt-tensors: Delta_L >= 2 min q(R) = "
     << rat_str(rep.lichnerowicz_bound) << "\n";
  os << "- 2E = " << rat_str(rep.two_e) << "\n";
  os << "- bound / E = " << rat_str(rep.ratio_to_e) << "\n";
  os << "- verdict: " << verdict_str(rep.verdict) << " (" << rat_str(rep.lichnerowicz_bound)
     << (rep.verdict == StabilityReport::Stable
             ? " > "
             : (rep.verdict == StabilityReport::LinearlyStableOnly ? " = " : " < "))
     << rat_str(rep.two_e) << ")\n";
  os << "- equality rows:";
  for (const auto& l : rep.equality_rows) os << " " << l;
  os << "\n";
  return os.str();
}

inline Json report_json(const CertificateData& data) {
  const StabilityReport& rep = data.report;
  Json j;
  j["scale"] = rat_str(data.scale);
  j["normalizations"] = {{"e7", rat_str(data.chain.e7.adjoint_value)},
                         {"su8", rat_str(data.chain.su8.adjoint_value)},
                         {"so8", rat_str(data.chain.so8.adjoint_value)}};
  Json iso = Json::array();
  for (const auto& c : data.chain.isotropy_cas) iso.push_back(rat_str(data.scale * c));
  j["isotropy_cas"] = std::move(iso);
  j["einstein_constant"] = rat_str(rep.einstein_constant);
  j["der_term"] = rat_str(data.der_term);
  j["weyl_block"] = {{"s", rat_str(data.block.s)},
                     {"t", rat_str(data.block.t)},
                     {"diag_eigenvalue", rat_str(data.block.diag_eigenvalue)},
                     {"double_eigenvalue", rat_str(data.block.double_eigenvalue)}};
  j["min_qr_tracefree"] = rat_str(rep.min_qr_tracefree);
  j["lichnerowicz_bound"] = rat_str(rep.lichnerowicz_bound);
  j["two_e"] = rat_str(rep.two_e);
  j["ratio_to_e"] = rat_str(rep.ratio_to_e);
  j["verdict"] = verdict_str(rep.verdict);
  j["equality_rows"] = rep.equality_rows;
  return j;
}

inline Json certificate_provenance() {
  Json p;
  p["casimir"] = "eigenvalue <w, w + 2 delta>, normalized by the adjoint";
  p["normalization"] = "trace identity over the branched ambient adjoint";
  p["einstein"] = "isotropy Casimir c gives E = (c + 1/2)/2 when c is a single eigenvalue";
  p["aa_subalgebra_route"] = "(A*A)_a = Cas(su(8)_a) - Cas(so(8)_a) per summand";
  p["aa_ambient_route"] = "A*A = Cas(e7) - Cas(so(8)) - 2 Cas(so(8))|m on V(2ω1) rows";
  p["weyl_block"] = "off-diagonal sign fixed by the multiplicity-2 eigenvalue constraint";
  p["bound"] = "Delta_L >= 2 q(R) on tt-tensors";
  return p;
}

}  // namespace render

// ---------------------------------------------------------------------------
// Document builders used by the command-line surface.

inline OutputDocument make_certificate_document(const CertificateData& data,
                                                const std::string& table) {
  OutputDocument doc;
  doc.kind = table == "report" ? "certificate" : (table == "all" ? "certificate" : "table" + table);
  doc.provenance = render::certificate_provenance();
  const auto condensed = render::condense_casimir(data);
  std::ostringstream md;
  Json payload;
  payload["scale"] = rat_str(data.scale);
  if (table == "1" || table == "all") {
    md << "## Table 1: so(8)-isotypic summands of Sym²m and the modules they embed into\n\n"
       << render::table1_md(data.records).str();
    payload["table1"] = render::table1_json(data.records);
  }
  if (table == "2" || table == "all") {
    if (table == "all") md << "\n";
    md << "## Table 2: Casimir eigenvalues on the summands\n\n"
       << render::table2_md(condensed).str();
    payload["table2"] = render::table2_json(condensed);
  }
  if (table == "3" || table == "all") {
    if (table == "all") md << "\n";
    md << "## Table 3: eigenvalues of A*A, q(Rbar) and q(R)\n\n"
       << render::table3_md(data.spectral_rows).str();
    payload["table3"] = render::table3_json(data.spectral_rows);
  }
  if (table == "report" || table == "all") {
    if (table == "all") md << "\n";
    md << render::report_md(data);
    payload["report"] = render::report_json(data);
  }
  doc.markdown = md.str();
  doc.payload = std::move(payload);
  return doc;
}

inline OutputDocument make_casimir_document(const Weight& w, const Rat& ratio,
                                            const std::optional<Rat>& normalized,
                                            const std::string& chain_name) {
  OutputDocument doc;
  doc.kind = "casimir";
  doc.payload["algebra"] = w.algebra.name();
  doc.payload["weight"] = coords_str(w.coords);
  doc.payload["dim"] = dim_irrep(root_system(w.algebra), w).str();
  doc.payload["ratio"] = rat_str(ratio);
  if (normalized) {
    doc.payload["normalized"] = rat_str(*normalized);
    doc.payload["normalization_chain"] = chain_name;
  }
  doc.provenance["casimir"] = "eigenvalue <w, w + 2 delta>, normalized by the adjoint";
  std::ostringstream md;
  md << "## Casimir: " << w.algebra.name() << " [" << coords_str(w.coords) << "]\n\n";
  md << "- dim: " << dim_irrep(root_system(w.algebra), w) << "\n";
  md << "- ratio to adjoint: " << rat_str(ratio) << "\n";
  if (normalized)
    md << "- normalized (" << chain_name << "): " << rat_str(*normalized) << "\n";
  doc.markdown = md.str();
  return doc;
}

inline OutputDocument make_decomposition_document(const std::string& kind,
                                                  const std::string& title,
                                                  const RootSystem& target,
                                                  const Decomposition& dec) {
  OutputDocument doc;
  doc.kind = "decomposition";
  doc.payload["operation"] = kind;
  doc.payload["algebra"] = target.spec.name();
  doc.payload["parts"] = render::dec_json(target, dec);
  doc.payload["total_dim"] = decomposition_dim(target, dec).str();
  doc.provenance["peeling"] = "highest-weight peeling of the expanded weight multiset";
  std::ostringstream md;
  md << "## " << title << "\n\n";
  md << "- " << render::dec_markdown(target, dec) << "\n";
  md << "- dims:";
  {
    std::vector<std::pair<Coords, Int>> parts(dec.parts.begin(), dec.parts.end());
    std::stable_sort(parts.begin(), parts.end(), [&](const auto& a, const auto& b) {
      const Rat la = target.level(a.first), lb = target.level(b.first);
      if (la != lb) return la > lb;
      return a.first < b.first;
    });
    bool first = true;
    for (const auto& [w, m] : parts) {
      Int d = dim_irrep(target, Weight{target.spec, w}) * m;
      md << (first ? " " : " + ") << d;
      first = false;
    }
  }
  md << " = " << decomposition_dim(target, dec) << "\n";
  doc.markdown = md.str();
  return doc;
}

}  // namespace lierep
