#pragma once

// Top-level decision APIs for the pair (GL_n, GL_{n-1}) and for two
// representations of the same group. Every entry point validates its
// hypotheses and throws HypothesisError when they fail.

#include <optional>
#include <string_view>

#include "arthur/relevance.hpp"
#include "arthur/types.hpp"

namespace arthur {

enum class Decider { Matcher, Recursive };

std::string_view decider_name(Decider d);

struct BranchingVerdict {
  bool nonvanishing = false;
  std::optional<Matching> certificate;  // present whenever nonvanishing
  Decider decider = Decider::Matcher;
};

/// Hypothesis failure naming the first term that is not of segment type.
class SegmentTypeError : public HypothesisError {
public:
  explicit SegmentTypeError(const SpehDatum& term);
  const SpehDatum& term() const { return term_; }

private:
  SpehDatum term_;
};

/// Hom_{GL_{n-1}}(pi1, pi2) != 0, decided by GGP relevance.
BranchingVerdict hom_branch_arthur(const ArthurParameter& a1, const ArthurParameter& a2);

/// Ext^*_{GL_{n-1}}(pi1, pi2) != 0 for products of unitary segment-type
/// representations, decided by strong Ext relevance.
BranchingVerdict ext_branch_segment_type(const ArthurParameter& a1, const ArthurParameter& a2);

/// Same question, decided by the inductive reduction used in the proof:
/// repeatedly peel off a term of maximal a+b and either drop it (b = 1) or
/// pair u(a,b) with u(a,b-1) or with D(u(a,b-1)) = u(b-1,a) on the other side.
bool ext_branch_recursive(const ArthurParameter& a1, const ArthurParameter& a2);

/// Ext^*_{GL_n}(pi1, pi2) != 0 for products of unitary segment-type
/// representations on the same group.
bool same_group_ext_segment_type(const ArthurParameter& a1, const ArthurParameter& a2);

/// Ext between two Speh representations of the same group is non-zero iff
/// s2 = s1 or s2 = D(s1).
bool speh_pair_same_group(const SpehDatum& s1, const SpehDatum& s2);

/// dim Wh(pi1) * dim Wh(pi2), the Euler-Poincare pairing.
int euler_poincare(const ArthurParameter& a1, const ArthurParameter& a2);

/// Hypothesis checks shared with the CLI.
void require_branching_pair(const ArthurParameter& a1, const ArthurParameter& a2);
void require_same_group(const ArthurParameter& a1, const ArthurParameter& a2);
void require_segment_type(const ArthurParameter& a);

}  // namespace arthur
