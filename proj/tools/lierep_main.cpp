// Command-line surface: representation-theory queries and the one-shot
// stability certificate for the standard metric on E7/PSO(8).

#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lierep/lierep.hpp"

namespace {

using namespace lierep;

void emit(const OutputDocument& doc, const std::string& format) {
  if (format == "json") {
    const Json j = doc.to_json();
    assert_no_floats(j);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << doc.markdown;
  }
}

Weight parse_weight_arg(const std::string& algebra, const std::string& labels) {
  const auto spec = parse_algebra(algebra);
  if (!spec)
    throw error("unknown algebra '" + algebra + "' (expected A<n>, D<n>, E6, E7 or E8)");
  const auto w = parse_weight(*spec, labels);
  if (!w)
    throw error("bad weight '" + labels + "' for " + spec->name() +
                " (expected " + std::to_string(spec->rank) + " comma-separated integers)");
  return *w;
}

int cmd_cas(const std::string& algebra, const std::string& labels, const std::string& format) {
  const Weight w = parse_weight_arg(algebra, labels);
  if (!w.is_dominant()) throw error("weight " + labels + " is not dominant");
  const auto& rs = root_system(w.algebra);
  const Rat ratio = casimir_ratio(rs, w);
  std::optional<Rat> normalized;
  if (w.algebra == kSo8 || w.algebra == kSu8 || w.algebra == kE7) {
    const ChainConstants cc = compute_chain_constants();
    const NormalizedCasimir& n =
        (w.algebra == kSo8) ? cc.so8 : (w.algebra == kSu8 ? cc.su8 : cc.e7);
    normalized = casimir_value(n, w);
  }
  emit(make_casimir_document(w, ratio, normalized, "so(8) < su(8) < e7"), format);
  return 0;
}

int cmd_tensor(const std::string& algebra, const std::string& l1, const std::string& l2,
               const std::string& format) {
  const Weight a = parse_weight_arg(algebra, l1);
  const Weight b = parse_weight_arg(algebra, l2);
  const auto& rs = root_system(a.algebra);
  const Decomposition dec = tensor_decompose(rs, a, b);
  emit(make_decomposition_document("tensor",
                                   "Tensor product: " + rs.spec.name() + " [" + l1 + "] x [" +
                                       l2 + "]",
                                   rs, dec),
       format);
  return 0;
}

int cmd_sym2(const std::string& algebra, const std::string& labels, const std::string& format) {
  const Weight w = parse_weight_arg(algebra, labels);
  const auto& rs = root_system(w.algebra);
  const Decomposition dec = sym2_decompose(rs, w);
  emit(make_decomposition_document(
           "sym2", "Symmetric square: " + rs.spec.name() + " Sym² [" + labels + "]", rs, dec),
       format);
  return 0;
}

int cmd_branch(const std::string& embedding, const std::string& labels,
               const std::string& format) {
  const auto& regs = builtin_projections();
  const WeightProjection* proj = find_projection(regs, embedding);
  if (!proj)
    throw error("unknown embedding '" + embedding + "'; registered embeddings: " +
                registered_projection_names(regs));
  const auto w = parse_weight(proj->source, labels);
  if (!w)
    throw error("bad weight '" + labels + "' for " + proj->source.name() +
                " (expected " + std::to_string(proj->source.rank) +
                " comma-separated integers)");
  const auto& tgt = root_system(proj->target);
  const Decomposition dec = branch(*proj, *w);
  emit(make_decomposition_document("branch",
                                   "Branching " + proj->name + ": [" + labels + "]", tgt, dec),
       format);
  return 0;
}

int cmd_certificate(const std::string& scale_str, const std::string& table,
                    const std::string& format) {
  const auto scale = parse_rat(scale_str);
  if (!scale || *scale <= 0) throw error("bad --scale '" + scale_str + "' (need p/q > 0)");
  const CertificateData data = run_certificate(*scale);
  emit(make_certificate_document(data, table), format);
  return data.report.verdict == StabilityReport::Stable ? 0 : 3;
}

int cmd_selftest(const std::string& data_dir, const std::string& format) {
  std::optional<std::filesystem::path> dir;
  if (!data_dir.empty()) dir = data_dir;
  const auto checks = run_selftest(dir);
  emit(make_selftest_document(checks), format);
  for (const auto& c : checks)
    if (!c.passed) return 4;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lie representation engine with the E7/PSO(8) stability certificate"};
  app.require_subcommand(1);
  std::string format = "md";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"md", "json"}))
      ->capture_default_str();

  std::string algebra, labels, labels2, embedding;
  std::string scale = "1", table = "report", data_dir;

  auto* cas = app.add_subcommand("cas", "Casimir eigenvalue of an irreducible");
  cas->add_option("algebra", algebra, "algebra, e.g. D4 or E7")->required();
  cas->add_option("weight", labels, "dominant weight, comma-separated Dynkin labels")->required();

  auto* tensor = app.add_subcommand("tensor", "tensor product decomposition");
  tensor->add_option("algebra", algebra)->required();
  tensor->add_option("weight1", labels)->required();
  tensor->add_option("weight2", labels2)->required();

  auto* sym2 = app.add_subcommand("sym2", "symmetric square decomposition");
  sym2->add_option("algebra", algebra)->required();
  sym2->add_option("weight", labels)->required();

  auto* br = app.add_subcommand("branch", "restriction along a registered embedding");
  br->add_option("embedding", embedding, "su8-to-so8, e7-to-su8, e7-to-so8 or triality")
      ->required();
  br->add_option("weight", labels)->required();

  auto* cert = app.add_subcommand("certificate", "run the full stability certificate");
  cert->add_option("--scale", scale, "positive rational metric scale")->capture_default_str();
  cert->add_option("--table", table, "1, 2, 3, report or all")
      ->check(CLI::IsMember({"1", "2", "3", "report", "all"}))
      ->capture_default_str();

  auto* st = app.add_subcommand("selftest", "run the consistency battery");
  st->add_option("--data", data_dir, "load projection data files from this directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cas->parsed()) return cmd_cas(algebra, labels, format);
    if (tensor->parsed()) return cmd_tensor(algebra, labels, labels2, format);
    if (sym2->parsed()) return cmd_sym2(algebra, labels, format);
    if (br->parsed()) return cmd_branch(embedding, labels, format);
    if (cert->parsed()) return cmd_certificate(scale, table, format);
    if (st->parsed()) return cmd_selftest(data_dir, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
