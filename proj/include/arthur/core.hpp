#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "arthur/types.hpp"

namespace arthur {

/// Multiset of twisted cuspidals in canonical (id, degree, exponent) order.
class CuspidalMultiset {
public:
  using Entry = std::pair<TwistedCuspidal, std::int64_t>;

  CuspidalMultiset() = default;

  void add(const TwistedCuspidal& t, std::int64_t multiplicity = 1);
  void merge(const CuspidalMultiset& other);

  std::int64_t count(const TwistedCuspidal& t) const;
  // Number of elements counted with multiplicity.
  std::int64_t size() const;
  bool empty() const { return counts_.empty(); }
  // Sum of n(rho) over all elements.
  std::int64_t total_degree() const;

  std::vector<Entry> entries() const { return {counts_.begin(), counts_.end()}; }
  const std::map<TwistedCuspidal, std::int64_t>& counts() const { return counts_; }

  bool operator==(const CuspidalMultiset&) const = default;

private:
  std::map<TwistedCuspidal, std::int64_t> counts_;
};

CuspidalMultiset csupp(const SpehDatum& s);
CuspidalMultiset csupp(const ArthurParameter& a);
CuspidalMultiset csupp(const Segment& s);
inline CuspidalMultiset csupp(const SegmentRep& r) { return csupp(r.segment); }

bool same_cuspidal_line(const TwistedCuspidal& x, const TwistedCuspidal& y);
bool in_cuspidal_lines(const TwistedCuspidal& t, const CuspidalMultiset& m);

/// e(pi) as the degree-weighted mean of the support exponents.
/// Throws std::domain_error on an empty support and std::invalid_argument
/// when total_degree does not match the support.
Rational central_exponent(const CuspidalMultiset& support, std::int64_t total_degree);
Rational central_exponent(const SegmentRep& rep);

}  // namespace arthur
