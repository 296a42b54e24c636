#pragma once

// Finite-dimensional SL2 combinatorics. V_d is identified with its dimension d;
// V_0 = {0} never appears in any multiset.

#include <map>
#include <utility>
#include <vector>

#include "arthur/types.hpp"

namespace arthur::sl2 {

/// V_a (x) V_b = V_{a+b-1} + V_{a+b-3} + ... + V_{|a-b|+1}, largest first.
/// Throws std::invalid_argument if either dimension is zero or negative.
std::vector<int> clebsch_gordan(int a, int b);

/// Multiset of (cuspidal symbol, V_d) from restricting to W_F x diagonal SL2.
class DiagonalRestriction {
public:
  using Key = std::pair<CuspidalSymbol, int>;

  void add(const CuspidalSymbol& rho, int dim, int multiplicity = 1);
  const std::map<Key, int>& counts() const { return counts_; }

  bool operator==(const DiagonalRestriction&) const = default;

private:
  std::map<Key, int> counts_;
};

DiagonalRestriction diagonal_restriction(const ArthurParameter& a);

/// Whether V_a (x) V_b and V_c (x) V_d decompose identically.
bool tensor_pair_recovery(int a, int b, int c, int d);

}  // namespace arthur::sl2
