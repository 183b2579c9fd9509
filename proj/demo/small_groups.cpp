// Walks every abelian group of order 12, prints the exact min |A-A| per r next
// to the conjectured value, and shows a construction that meets it.

#include <iostream>

#include "sumdiff/sumdiff.hpp"

int main() {
  using namespace sumdiff;
  for (const auto& g : enumerate_abelian_groups(12)) {
    std::cout << "group [" << g.to_string() << "] invariant form [" << invariant_factors(g).to_string() << "]\n";
    for (std::int64_t r = 1; r <= g.order(); ++r) {
      const auto cert = exact_rho(g, r, Objective::diff);
      const auto conj = rho_minus_conjectured(g, r);
      std::cout << "  r=" << r << "  min|A-A|=" << cert.minimum << "  formula=" << conj.value << " ("
                << to_string(conj.status) << ")  A=" << cert.witness.to_string() << '\n';
    }
    const auto w = best_product_construction(g, 5);
    std::cout << "  product construction for r=5: " << w.set.to_string() << " |A-A|=" << w.achieved_size << '\n';
  }
}
