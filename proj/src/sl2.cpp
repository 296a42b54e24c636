#include "arthur/sl2.hpp"

#include <algorithm>
#include <stdexcept>

namespace arthur::sl2 {

std::vector<int> clebsch_gordan(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("clebsch_gordan: dimensions must be positive");
  std::vector<int> out;
  const int pieces = std::min(a, b);
  out.reserve(pieces);
  for (int k = 0; k < pieces; ++k) out.push_back(a + b - 1 - 2 * k);
  return out;
}

void DiagonalRestriction::add(const CuspidalSymbol& rho, int dim, int multiplicity) {
  if (dim <= 0 || multiplicity <= 0) return;
  counts_[{rho, dim}] += multiplicity;
}

DiagonalRestriction diagonal_restriction(const ArthurParameter& a) {
  DiagonalRestriction out;
  for (const auto& s : a.terms())
    for (int d : clebsch_gordan(s.deligne, s.arthur)) out.add(s.rho, d);
  return out;
}

bool tensor_pair_recovery(int a, int b, int c, int d) {
  return clebsch_gordan(a, b) == clebsch_gordan(c, d);
}

}  // namespace arthur::sl2
