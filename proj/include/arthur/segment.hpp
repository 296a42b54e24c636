#pragma once

// Segment-level calculus: linkedness, Aubert-Zelevinsky duals of Speh data,
// highest derivatives, levels, genericity and Jacquet modules of Z(Delta)/Q(Delta).

#include <cstdint>
#include <optional>
#include <utility>

#include "arthur/types.hpp"

namespace arthur {

bool linked(const Segment& x, const Segment& y);
bool precedes(const Segment& x, const Segment& y);

/// D(u_rho(a,b)) = u_rho(b,a).
SpehDatum az_dual(const SpehDatum& s);
ArthurParameter az_dual(const ArthurParameter& a);

/// Level of u_rho(a,b), i.e. n(rho) * a.
std::int64_t speh_level(const SpehDatum& s);

/// u_rho(a,b)^- = u_rho(a,b-1); empty when b = 1.
std::optional<SpehDatum> speh_minus(const SpehDatum& s);

/// Termwise minus of a parameter. Terms with b = 1 vanish and are collected
/// in `dropped`.
struct MinusResult {
  ArthurParameter result;
  ArthurParameter dropped;
};
MinusResult speh_minus(const ArthurParameter& a);

/// Z(Delta) for a = 1 and Q(Delta) for b = 1, with Delta centered.
std::optional<SegmentRep> as_segment_rep(const SpehDatum& s);
/// Inverse of as_segment_rep for unitary Z/Q.
std::optional<SpehDatum> as_speh(const SegmentRep& r);

enum class JacquetSide { Standard, Opposite };

/// Jacquet module r_{(n-l,l)} (Standard) or its opposite (Opposite).
/// Empty optional means the module is zero.
using JacquetResult = std::optional<std::pair<SegmentRep, SegmentRep>>;

/// Throws std::out_of_range unless 0 < l < degree.
JacquetResult jacquet(SegmentKind kind, JacquetSide side, const Segment& segment, std::int64_t l);

bool is_generic(const ArthurParameter& a);
int whittaker_dim(const ArthurParameter& a);

}  // namespace arthur
