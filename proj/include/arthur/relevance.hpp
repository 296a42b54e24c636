#pragma once

// Matching deciders for pairs of Arthur parameters.
//
// A matching pairs terms of the left parameter with terms of the right one
// through one of four moves; every term left unpaired must have Arthur
// dimension 1. Writing a term as (rho, deligne, arthur):
//
//   F1  (c, d)      -> (c, d-1)
//   F2  (c, b-1)    -> (c, b)
//   F3  (f, d)      -> (d-1, f)
//   F4  (e-1, f)    -> (f, e)
//
// GGP relevance allows F1 and F2 only; strong Ext relevance allows all four.

#include <optional>
#include <string_view>
#include <vector>

#include "arthur/types.hpp"

namespace arthur {

enum class MoveFamily { F1_ArthurDown, F2_ArthurUp, F3_DualDown, F4_DualUp };

std::string_view family_name(MoveFamily f);  // "F1".."F4"

/// Whether (left, right) is a pair of the given family.
bool compatible(const SpehDatum& left, const SpehDatum& right, MoveFamily family);

/// Lowest-numbered family among `allowed` relating the two terms, if any.
std::optional<MoveFamily> canonical_family(const SpehDatum& left, const SpehDatum& right,
                                           std::span<const MoveFamily> allowed);

/// A term may stand unmatched iff its Arthur SL2 acts trivially.
inline bool droppable(const SpehDatum& s) { return s.arthur == 1; }

struct MatchedPair {
  SpehDatum left;
  SpehDatum right;
  MoveFamily family;

  auto operator<=>(const MatchedPair&) const = default;
  bool operator==(const MatchedPair&) const = default;
};

/// Value-level certificate; all three lists are kept sorted.
struct Matching {
  std::vector<MatchedPair> pairs;
  std::vector<SpehDatum> dropped_left;
  std::vector<SpehDatum> dropped_right;

  void normalize();

  auto operator<=>(const Matching&) const = default;
  bool operator==(const Matching&) const = default;
};

/// Checks reconstruction of both parameters, the drop rule, and that every
/// pair belongs to its recorded family (and that family is in `allowed`).
bool is_valid_matching(const Matching& m, const ArthurParameter& left,
                       const ArthurParameter& right, std::span<const MoveFamily> allowed);

inline constexpr MoveFamily kGgpFamilies[] = {MoveFamily::F1_ArthurDown, MoveFamily::F2_ArthurUp};
inline constexpr MoveFamily kStrongFamilies[] = {MoveFamily::F1_ArthurDown, MoveFamily::F2_ArthurUp,
                                                 MoveFamily::F3_DualDown, MoveFamily::F4_DualUp};

std::optional<Matching> find_ggp_matching(const ArthurParameter& a1, const ArthurParameter& a2);
std::optional<Matching> find_strong_matching(const ArthurParameter& a1, const ArthurParameter& a2);

bool ggp_relevant(const ArthurParameter& a1, const ArthurParameter& a2);
bool strong_ext_relevant(const ArthurParameter& a1, const ArthurParameter& a2);

/// Complete duplicate-free lists, sorted.
std::vector<Matching> enumerate_ggp_matchings(const ArthurParameter& a1, const ArthurParameter& a2);
std::vector<Matching> enumerate_strong_matchings(const ArthurParameter& a1,
                                                 const ArthurParameter& a2);

/// Equal restrictions to W_F x diagonal SL2.
bool same_cuspidal_support(const ArthurParameter& a1, const ArthurParameter& a2);

}  // namespace arthur
