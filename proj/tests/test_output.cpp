#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lierep/lierep.hpp"

using namespace lierep;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path source_dir() { return std::filesystem::path(LIEREP_SOURCE_DIR); }

Weight w(AlgebraSpec spec, std::initializer_list<int> v) {
  return Weight{spec, Coords(v.begin(), v.end())};
}

}  // namespace

TEST_CASE("golden files: tables and certificate match byte for byte") {
  const CertificateData data = run_certificate();
  CHECK(make_certificate_document(data, "1").markdown == read_file(source_dir() / "golden/table1.md"));
  CHECK(make_certificate_document(data, "2").markdown == read_file(source_dir() / "golden/table2.md"));
  CHECK(make_certificate_document(data, "3").markdown == read_file(source_dir() / "golden/table3.md"));
  CHECK(make_certificate_document(data, "report").markdown ==
        read_file(source_dir() / "golden/certificate.md"));
}

TEST_CASE("rendered documents are deterministic") {
  const CertificateData a = run_certificate();
  const CertificateData b = run_certificate();
  const auto doc_a = make_certificate_document(a, "all");
  const auto doc_b = make_certificate_document(b, "all");
  CHECK(doc_a.markdown == doc_b.markdown);
  CHECK(doc_a.to_json().dump(2) == doc_b.to_json().dump(2));
}

TEST_CASE("json documents round-trip losslessly") {
  const CertificateData data = run_certificate();
  for (const std::string table : {"1", "2", "3", "report", "all"}) {
    const std::string dumped = make_certificate_document(data, table).to_json().dump(2);
    const Json reparsed = Json::parse(dumped);
    CHECK(reparsed.dump(2) == dumped);
  }
}

TEST_CASE("json payloads carry exact rationals only") {
  const CertificateData data = run_certificate();
  const auto& rd4 = root_system(kSo8);
  const std::vector<OutputDocument> docs = {
      make_certificate_document(data, "all"),
      make_casimir_document(w(kSo8, {0, 2, 0, 0}), casimir_ratio(rd4, w(kSo8, {0, 2, 0, 0})),
                            Rat(7, 18), "so(8) < su(8) < e7"),
      make_decomposition_document("sym2", "demo", rd4, sym2_decompose(rd4, w(kSo8, {2, 0, 0, 0}))),
      make_selftest_document({{"demo", true, "ok"}}),
  };
  for (const auto& doc : docs) {
    const Json j = doc.to_json();
    CHECK_NOTHROW(assert_no_floats(j));
    // every payload value representing a number is a canonical p/q string
    CHECK(j.contains("payload"));
  }
  Json with_float;
  with_float["x"] = 0.5;
  CHECK_THROWS_AS(assert_no_floats(with_float), error);
}

TEST_CASE("casimir documents expose ratio and chain-normalized value") {
  const auto& rd4 = root_system(kSo8);
  const Weight weyl = w(kSo8, {0, 2, 0, 0});
  const Rat ratio = casimir_ratio(rd4, weyl);
  CHECK(ratio == Rat(7, 3));
  const ChainConstants cc = compute_chain_constants();
  const Rat normalized = casimir_value(cc.so8, weyl);
  CHECK(normalized == Rat(7, 18));
  const auto doc = make_casimir_document(weyl, ratio, normalized, "so(8) < su(8) < e7");
  CHECK(doc.payload["ratio"] == "7/3");
  CHECK(doc.payload["normalized"] == "7/18");

  const auto& re7 = root_system(kE7);
  const Weight big = w(kE7, {2, 0, 0, 0, 0, 0, 0});
  CHECK(casimir_value(cc.e7, big) == Rat(19, 9));

  const auto& ra1 = root_system({Family::A, 1});
  CHECK(casimir_ratio(ra1, w({Family::A, 1}, {0})) == Rat(0));
}

TEST_CASE("selftest passes on the builtin registry") {
  const auto checks = run_selftest();
  for (const auto& c : checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
  const auto doc = make_selftest_document(checks);
  CHECK(doc.payload["passed"] == doc.payload["total"]);
}

TEST_CASE("selftest flags a corrupted projection data file") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "lierep_selftest_data";
  fs::create_directories(dir);
  for (const auto& proj : builtin_projections()) {
    std::ofstream out(dir / (proj.name + ".json"));
    out << projection_to_json(proj).dump(2) << "\n";
  }
  // corrupt one matrix entry: fixtures and dimension conservation must fail
  {
    WeightProjection bad = projection_su8_to_so8();
    bad.matrix[3][3] = 5;
    std::ofstream out(dir / "su8-to-so8.json");
    out << projection_to_json(bad).dump(2) << "\n";
  }
  const auto checks = run_selftest(dir);
  bool su8so8_failed = false;
  bool others_ok = true;
  for (const auto& c : checks) {
    if (c.name == "projection su8-to-so8") {
      su8so8_failed = !c.passed;
    } else if (c.name.rfind("projection ", 0) == 0) {
      others_ok = others_ok && c.passed;
    }
  }
  CHECK(su8so8_failed);
  CHECK(others_ok);
  fs::remove_all(dir);
}

TEST_CASE("repository data files validate against the builtin registry") {
  const auto loaded = load_projection_dir(source_dir() / "data/embeddings");
  REQUIRE(loaded.size() == builtin_projections().size());
  for (const auto& proj : loaded) {
    const auto* builtin = find_projection(builtin_projections(), proj.name);
    REQUIRE(builtin != nullptr);
    CHECK(proj.matrix == builtin->matrix);
    CHECK(validate_projection(proj, proj.fixtures).all_passed());
  }
}

TEST_CASE("character disk cache round-trips through LIEREP_CACHE_DIR") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "lierep_char_cache";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto table = lierep::detail::compute_dom_table(root_system(kSo8), w(kSo8, {2, 0, 0, 0}));
  lierep::detail::store_dom_table(dir / "D4_2.0.0.0.char", table);
  lierep::detail::DomTable loaded;
  REQUIRE(lierep::detail::load_dom_table(dir / "D4_2.0.0.0.char", root_system(kSo8),
                                         w(kSo8, {2, 0, 0, 0}), loaded));
  CHECK(loaded.dominant == table.dominant);
  for (const auto& [c, m] : table.mult) CHECK(loaded.mult.at(c) == m);
  // corrupted cache entries are ignored rather than trusted
  {
    std::ofstream out(dir / "D4_0.1.0.0.char");
    out << "garbage\n";
  }
  lierep::detail::DomTable bad;
  CHECK_FALSE(lierep::detail::load_dom_table(dir / "D4_0.1.0.0.char", root_system(kSo8),
                                             w(kSo8, {0, 1, 0, 0}), bad));
  // well-formed but numerically wrong entries are rejected too
  {
    std::ofstream out(dir / "D4_0.1.0.0.char");
    out << "lierep-char v1\nalgebra D4\nweight 0,1,0,0\nentries 2\n0,1,0,0 1\n0,0,0,0 7\n";
  }
  CHECK_FALSE(lierep::detail::load_dom_table(dir / "D4_0.1.0.0.char", root_system(kSo8),
                                             w(kSo8, {0, 1, 0, 0}), bad));
  fs::remove_all(dir);
}
