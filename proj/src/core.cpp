#include "arthur/core.hpp"

#include <algorithm>
#include <numeric>

namespace arthur {

ArthurParameter::ArthurParameter(std::vector<SpehDatum> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end());
}

std::int64_t ArthurParameter::dim() const {
  return std::accumulate(terms_.begin(), terms_.end(), std::int64_t{0},
                         [](std::int64_t acc, const SpehDatum& s) { return acc + s.degree(); });
}

bool ArthurParameter::is_segment_type() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const SpehDatum& s) { return s.is_segment_type(); });
}

ArthurParameter ArthurParameter::operator+(const ArthurParameter& other) const {
  std::vector<SpehDatum> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return ArthurParameter(std::move(all));
}

Segment::Segment(CuspidalSymbol rho_, HalfInt a_, HalfInt b_)
    : rho(std::move(rho_)), a(a_), b(b_) {
  const HalfInt gap = b - a;
  if (!gap.is_integer() || gap.doubled() < 0)
    throw std::invalid_argument("segment endpoints must satisfy b - a in Z>=0");
}

void CuspidalMultiset::add(const TwistedCuspidal& t, std::int64_t multiplicity) {
  if (multiplicity <= 0) return;
  counts_[t] += multiplicity;
}

void CuspidalMultiset::merge(const CuspidalMultiset& other) {
  for (const auto& [t, m] : other.counts_) counts_[t] += m;
}

std::int64_t CuspidalMultiset::count(const TwistedCuspidal& t) const {
  auto it = counts_.find(t);
  return it == counts_.end() ? 0 : it->second;
}

std::int64_t CuspidalMultiset::size() const {
  std::int64_t n = 0;
  for (const auto& [t, m] : counts_) n += m;
  return n;
}

std::int64_t CuspidalMultiset::total_degree() const {
  std::int64_t n = 0;
  for (const auto& [t, m] : counts_) n += m * t.symbol.degree;
  return n;
}

// The rectangle {nu^(i+j) rho} with i over the Deligne segment and j over the
// Arthur segment, both centered at 0. In doubled units i+j runs over
// -(a+b-2) .. (a+b-2) with the Clebsch-Gordan multiplicity profile.
CuspidalMultiset csupp(const SpehDatum& s) {
  CuspidalMultiset out;
  for (int i = 0; i < s.deligne; ++i) {
    for (int j = 0; j < s.arthur; ++j) {
      const std::int64_t doubled = (2 * i - (s.deligne - 1)) + (2 * j - (s.arthur - 1));
      out.add({s.rho, HalfInt::from_doubled(doubled)});
    }
  }
  return out;
}

CuspidalMultiset csupp(const ArthurParameter& a) {
  CuspidalMultiset out;
  for (const auto& s : a.terms()) out.merge(csupp(s));
  return out;
}

CuspidalMultiset csupp(const Segment& s) {
  CuspidalMultiset out;
  for (HalfInt x = s.a; x <= s.b; x += HalfInt::from_int(1)) out.add({s.rho, x});
  return out;
}

bool same_cuspidal_line(const TwistedCuspidal& x, const TwistedCuspidal& y) {
  return x.symbol == y.symbol && (x.exponent - y.exponent).is_integer();
}

bool in_cuspidal_lines(const TwistedCuspidal& t, const CuspidalMultiset& m) {
  return std::any_of(m.counts().begin(), m.counts().end(),
                     [&](const auto& entry) { return same_cuspidal_line(t, entry.first); });
}

Rational central_exponent(const CuspidalMultiset& support, std::int64_t total_degree) {
  if (support.empty()) throw std::domain_error("undefined central exponent");
  if (total_degree != support.total_degree())
    throw std::invalid_argument("total degree does not match the cuspidal support");
  // Exponents are doubled, so the numerator is over 2 * total_degree.
  std::int64_t weighted = 0;
  for (const auto& [t, m] : support.counts())
    weighted += t.exponent.doubled() * t.symbol.degree * m;
  return Rational{weighted, 2 * total_degree};
}

Rational central_exponent(const SegmentRep& rep) {
  return central_exponent(csupp(rep), rep.degree());
}

}  // namespace arthur
