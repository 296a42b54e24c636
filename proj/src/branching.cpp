#include "arthur/branching.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "arthur/dsl.hpp"
#include "arthur/segment.hpp"

namespace arthur {

std::string_view decider_name(Decider d) {
  return d == Decider::Matcher ? "matcher" : "recursive";
}

SegmentTypeError::SegmentTypeError(const SpehDatum& term)
    : HypothesisError("term " + dsl::format(term) + " is not of segment type"), term_(term) {}

void require_branching_pair(const ArthurParameter& a1, const ArthurParameter& a2) {
  if (a1.dim() != a2.dim() + 1)
    throw HypothesisError("not a (n, n-1) pair: dimensions " + std::to_string(a1.dim()) + " and " +
                          std::to_string(a2.dim()));
}

void require_same_group(const ArthurParameter& a1, const ArthurParameter& a2) {
  if (a1.dim() != a2.dim())
    throw HypothesisError("not representations of the same group: dimensions " +
                          std::to_string(a1.dim()) + " and " + std::to_string(a2.dim()));
}

void require_segment_type(const ArthurParameter& a) {
  for (const auto& s : a.terms())
    if (!s.is_segment_type()) throw SegmentTypeError(s);
}

BranchingVerdict hom_branch_arthur(const ArthurParameter& a1, const ArthurParameter& a2) {
  require_branching_pair(a1, a2);
  auto m = find_ggp_matching(a1, a2);
  return BranchingVerdict{m.has_value(), std::move(m), Decider::Matcher};
}

BranchingVerdict ext_branch_segment_type(const ArthurParameter& a1, const ArthurParameter& a2) {
  require_branching_pair(a1, a2);
  require_segment_type(a1);
  require_segment_type(a2);
  auto m = find_strong_matching(a1, a2);
  return BranchingVerdict{m.has_value(), std::move(m), Decider::Matcher};
}

namespace {

// State of the reduction: two sorted term lists. The auxiliary cuspidal
// introduced by each reduction step lies outside every cuspidal line in play,
// so it can only ever be dropped and is not stored. Contragredients from the
// transfer step relabel every symbol uniformly and are likewise not stored.
using Terms = std::vector<SpehDatum>;

class Reduction {
public:
  bool solve(const Terms& left, const Terms& right) {
    const auto all_droppable = [](const Terms& t) {
      return std::all_of(t.begin(), t.end(), [](const SpehDatum& s) { return s.arthur == 1; });
    };
    if (all_droppable(left) && all_droppable(right)) return true;

    // Transfer: if the heaviest term sits on the right, exchange the roles.
    if (max_weight(right) > max_weight(left)) return solve(right, left);

    auto key = std::pair{left, right};
    if (dead_.contains(key)) return false;

    const auto top = std::find_if(left.begin(), left.end(), [&](const SpehDatum& s) {
      return s.weight() == max_weight(left);
    });
    const SpehDatum head = *top;
    Terms rest = left;
    rest.erase(rest.begin() + (top - left.begin()));

    bool found = false;
    if (auto minus = speh_minus(head)) {
      // Case A pairs with head^-, Case B with D(head^-).
      Terms candidates{*minus};
      if (az_dual(*minus) != *minus) candidates.push_back(az_dual(*minus));
      for (const auto& c : candidates) {
        auto it = std::lower_bound(right.begin(), right.end(), c);
        if (it == right.end() || *it != c) continue;
        Terms remaining = right;
        remaining.erase(remaining.begin() + (it - right.begin()));
        if (solve(rest, remaining)) {
          found = true;
          break;
        }
      }
    } else {
      found = solve(rest, right);
    }
    if (!found) dead_.insert(std::move(key));
    return found;
  }

private:
  static int max_weight(const Terms& t) {
    int w = 0;
    for (const auto& s : t) w = std::max(w, s.weight());
    return w;
  }

  std::set<std::pair<Terms, Terms>> dead_;
};

}  // namespace

bool ext_branch_recursive(const ArthurParameter& a1, const ArthurParameter& a2) {
  require_branching_pair(a1, a2);
  require_segment_type(a1);
  require_segment_type(a2);
  const Terms left(a1.terms().begin(), a1.terms().end());
  const Terms right(a2.terms().begin(), a2.terms().end());
  return Reduction{}.solve(left, right);
}

bool same_group_ext_segment_type(const ArthurParameter& a1, const ArthurParameter& a2) {
  require_same_group(a1, a2);
  require_segment_type(a1);
  require_segment_type(a2);
  return same_cuspidal_support(a1, a2);
}

bool speh_pair_same_group(const SpehDatum& s1, const SpehDatum& s2) {
  if (s1.degree() != s2.degree())
    throw HypothesisError("Speh data of different degrees " + std::to_string(s1.degree()) +
                          " and " + std::to_string(s2.degree()));
  return s2 == s1 || s2 == az_dual(s1);
}

int euler_poincare(const ArthurParameter& a1, const ArthurParameter& a2) {
  require_branching_pair(a1, a2);
  return whittaker_dim(a1) * whittaker_dim(a2);
}

}  // namespace arthur
