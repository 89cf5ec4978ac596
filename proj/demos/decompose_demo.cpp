// Library walkthrough: root data, characters, branching and the certificate
// entry point, printed as plain text.

#include <iostream>

#include "lierep/lierep.hpp"

using namespace lierep;

int main() {
  const auto& so8 = root_system(kSo8);
  const auto& e7 = root_system(kE7);

  std::cout << "so(8): " << so8.positive_roots.size() << " positive roots, |W| = "
            << weyl_group_order(so8) << "\n";
  std::cout << "e7:    " << e7.positive_roots.size() << " positive roots, |W| = "
            << weyl_group_order(e7) << "\n\n";

  const Weight vector_rep{kSo8, Coords{1, 0, 0, 0}};
  std::cout << "dim V(eta1) = " << dim_irrep(so8, vector_rep)
            << ", Casimir ratio = " << rat_str(casimir_ratio(so8, vector_rep)) << "\n";

  const Weight m0{kSo8, Coords{2, 0, 0, 0}};
  std::cout << "Sym^2 V(2 eta1) = " << decomposition_str(sym2_decompose(so8, m0)) << "\n";

  const auto e7so8 = projection_e7_to_so8();
  std::cout << "e7 adjoint restricted to so(8): "
            << decomposition_str(branch(e7so8, e7.highest_root())) << "\n\n";

  const CertificateData cert = run_certificate();
  std::cout << "Einstein constant E = " << rat_str(cert.report.einstein_constant)
            << ", Lichnerowicz bound = " << rat_str(cert.report.lichnerowicz_bound)
            << " (" << render::verdict_str(cert.report.verdict) << ")\n";
  return 0;
}
