#include "arthur/segment.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace arthur {

namespace {

bool contains(const Segment& outer, const Segment& inner) {
  return outer.a <= inner.a && inner.b <= outer.b;
}

bool same_line(const Segment& x, const Segment& y) {
  return x.rho == y.rho && (x.a - y.a).is_integer();
}

Segment shifted(const CuspidalSymbol& rho, HalfInt base, std::int64_t from, std::int64_t to) {
  return Segment{rho, base + HalfInt::from_int(from), base + HalfInt::from_int(to)};
}

}  // namespace

bool linked(const Segment& x, const Segment& y) {
  if (!same_line(x, y)) return false;
  if (contains(x, y) || contains(y, x)) return false;
  // Union is a segment iff there is no gap between the two ranges.
  const HalfInt one = HalfInt::from_int(1);
  return std::max(x.a, y.a) <= std::min(x.b, y.b) + one;
}

bool precedes(const Segment& x, const Segment& y) {
  return linked(x, y) && x.b < y.b;
}

SpehDatum az_dual(const SpehDatum& s) { return SpehDatum{s.rho, s.arthur, s.deligne}; }

ArthurParameter az_dual(const ArthurParameter& a) {
  std::vector<SpehDatum> out;
  out.reserve(a.size());
  for (const auto& s : a.terms()) out.push_back(az_dual(s));
  return ArthurParameter(std::move(out));
}

std::int64_t speh_level(const SpehDatum& s) {
  return static_cast<std::int64_t>(s.rho.degree) * s.deligne;
}

std::optional<SpehDatum> speh_minus(const SpehDatum& s) {
  if (s.arthur == 1) return std::nullopt;
  return SpehDatum{s.rho, s.deligne, s.arthur - 1};
}

MinusResult speh_minus(const ArthurParameter& a) {
  std::vector<SpehDatum> kept, dropped;
  for (const auto& s : a.terms()) {
    if (auto m = speh_minus(s))
      kept.push_back(*m);
    else
      dropped.push_back(s);
  }
  return {ArthurParameter(std::move(kept)), ArthurParameter(std::move(dropped))};
}

std::optional<SegmentRep> as_segment_rep(const SpehDatum& s) {
  auto centered = [&](int len) {
    return Segment{s.rho, HalfInt::from_doubled(-(len - 1)), HalfInt::from_doubled(len - 1)};
  };
  // u_rho(1,1) is both; report it as Q.
  if (s.arthur == 1) return SegmentRep{SegmentKind::Q, centered(s.deligne)};
  if (s.deligne == 1) return SegmentRep{SegmentKind::Z, centered(s.arthur)};
  return std::nullopt;
}

std::optional<SpehDatum> as_speh(const SegmentRep& r) {
  if (!r.is_unitary()) return std::nullopt;
  const int len = static_cast<int>(r.segment.length());
  if (r.kind == SegmentKind::Z) return SpehDatum{r.segment.rho, 1, len};
  return SpehDatum{r.segment.rho, len, 1};
}

JacquetResult jacquet(SegmentKind kind, JacquetSide side, const Segment& segment, std::int64_t l) {
  const std::int64_t n = segment.degree();
  if (l <= 0 || l >= n) throw std::out_of_range("jacquet: need 0 < l < n");
  const std::int64_t m = segment.rho.degree;
  if (l % m != 0) return std::nullopt;

  const std::int64_t p = l / m;
  const std::int64_t k = segment.length();
  const auto& rho = segment.rho;
  const HalfInt base = segment.a;
  // Offsets below are relative to the lowest twist of the segment.
  auto rep = [&](std::int64_t from, std::int64_t to) {
    return SegmentRep{kind, shifted(rho, base, from, to)};
  };

  const bool top_first = (kind == SegmentKind::Q) == (side == JacquetSide::Standard);
  if (top_first) {
    // Q standard and Z opposite: upper piece of length k-p, then lower piece of length p.
    return std::pair{rep(p, k - 1), rep(0, p - 1)};
  }
  // Q opposite and Z standard: lower piece of length k-p, then upper piece of length p.
  return std::pair{rep(0, k - p - 1), rep(k - p, k - 1)};
}

bool is_generic(const ArthurParameter& a) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [](const SpehDatum& s) { return s.arthur == 1; });
}

int whittaker_dim(const ArthurParameter& a) { return is_generic(a) ? 1 : 0; }

}  // namespace arthur
