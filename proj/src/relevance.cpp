#include "arthur/relevance.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "arthur/sl2.hpp"

namespace arthur {

std::string_view family_name(MoveFamily f) {
  switch (f) {
    case MoveFamily::F1_ArthurDown: return "F1";
    case MoveFamily::F2_ArthurUp: return "F2";
    case MoveFamily::F3_DualDown: return "F3";
    case MoveFamily::F4_DualUp: return "F4";
  }
  return "?";
}

namespace {

// The unique right-hand partner of `left` under `family`, if it is non-zero.
std::optional<SpehDatum> partner(const SpehDatum& left, MoveFamily family) {
  const int c = left.deligne;
  const int d = left.arthur;
  switch (family) {
    case MoveFamily::F1_ArthurDown:
      if (d < 2) return std::nullopt;
      return SpehDatum{left.rho, c, d - 1};
    case MoveFamily::F2_ArthurUp:
      return SpehDatum{left.rho, c, d + 1};
    case MoveFamily::F3_DualDown:
      if (d < 2) return std::nullopt;
      return SpehDatum{left.rho, d - 1, c};
    case MoveFamily::F4_DualUp:
      return SpehDatum{left.rho, d, c + 1};
  }
  return std::nullopt;
}

// Backtracking exact cover over distinct left values. The right side is held
// as counts over its distinct values so that identical terms are never
// distinguished, which makes enumeration duplicate-free at value level.
class Matcher {
public:
  Matcher(const ArthurParameter& left, const ArthurParameter& right,
          std::span<const MoveFamily> allowed, bool enumerate)
      : enumerate_(enumerate) {
    for (const auto& s : right.terms()) {
      if (right_values_.empty() || right_values_.back() != s) {
        right_values_.push_back(s);
        right_counts_.push_back(0);
      }
      ++right_counts_.back();
    }
    for (const auto& s : left.terms()) {
      if (left_.empty() || left_.back().first != s) left_.emplace_back(s, 0);
      ++left_.back().second;
    }
    // Largest a+b first, then largest Deligne dimension.
    std::stable_sort(left_.begin(), left_.end(), [](const auto& x, const auto& y) {
      return std::pair{x.first.weight(), x.first.deligne} >
             std::pair{y.first.weight(), y.first.deligne};
    });
    options_.resize(left_.size());
    for (std::size_t i = 0; i < left_.size(); ++i) {
      for (MoveFamily f : allowed) {
        auto w = partner(left_[i].first, f);
        if (!w) continue;
        auto it = std::lower_bound(right_values_.begin(), right_values_.end(), *w);
        if (it == right_values_.end() || *it != *w) continue;
        const auto idx = static_cast<std::size_t>(it - right_values_.begin());
        const bool seen = std::any_of(options_[i].begin(), options_[i].end(),
                                      [&](const auto& o) { return o.first == idx; });
        if (!seen) options_[i].emplace_back(idx, f);
      }
    }
  }

  bool run() { return search(0); }
  std::vector<Matching> take_results() { return std::move(results_); }

private:
  bool search(std::size_t i) {
    if (i == left_.size()) return finish();
    auto key = std::pair{i, right_counts_};
    if (dead_.contains(key)) return false;
    const bool found = distribute(i, 0, left_[i].second);
    if (!found) dead_.insert(std::move(key));
    return found;
  }

  bool distribute(std::size_t i, std::size_t opt, int remaining) {
    const auto& term = left_[i].first;
    const auto& opts = options_[i];
    if (opt == opts.size()) {
      if (remaining > 0 && !droppable(term)) return false;
      dropped_left_.insert(dropped_left_.end(), remaining, term);
      const bool found = search(i + 1);
      dropped_left_.resize(dropped_left_.size() - remaining);
      return found;
    }
    const auto [ri, family] = opts[opt];
    const int most = std::min(remaining, right_counts_[ri]);
    bool any = false;
    for (int x = most; x >= 0; --x) {
      right_counts_[ri] -= x;
      pairs_.insert(pairs_.end(), x, MatchedPair{term, right_values_[ri], family});
      const bool found = distribute(i, opt + 1, remaining - x);
      pairs_.resize(pairs_.size() - x);
      right_counts_[ri] += x;
      if (found) {
        any = true;
        if (!enumerate_) return true;
      }
    }
    return any;
  }

  bool finish() {
    for (std::size_t r = 0; r < right_values_.size(); ++r)
      if (right_counts_[r] > 0 && !droppable(right_values_[r])) return false;
    Matching m;
    m.pairs = pairs_;
    m.dropped_left = dropped_left_;
    for (std::size_t r = 0; r < right_values_.size(); ++r)
      m.dropped_right.insert(m.dropped_right.end(), right_counts_[r], right_values_[r]);
    m.normalize();
    results_.push_back(std::move(m));
    return true;
  }

  bool enumerate_;
  std::vector<std::pair<SpehDatum, int>> left_;
  std::vector<SpehDatum> right_values_;
  std::vector<int> right_counts_;
  std::vector<std::vector<std::pair<std::size_t, MoveFamily>>> options_;
  std::set<std::pair<std::size_t, std::vector<int>>> dead_;

  std::vector<MatchedPair> pairs_;
  std::vector<SpehDatum> dropped_left_;
  std::vector<Matching> results_;
};

std::optional<Matching> find_matching(const ArthurParameter& a1, const ArthurParameter& a2,
                                      std::span<const MoveFamily> allowed) {
  Matcher m(a1, a2, allowed, false);
  if (!m.run()) return std::nullopt;
  return std::move(m.take_results().front());
}

std::vector<Matching> enumerate(const ArthurParameter& a1, const ArthurParameter& a2,
                                std::span<const MoveFamily> allowed) {
  Matcher m(a1, a2, allowed, true);
  m.run();
  auto out = m.take_results();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool compatible(const SpehDatum& left, const SpehDatum& right, MoveFamily family) {
  auto w = partner(left, family);
  return w && *w == right;
}

std::optional<MoveFamily> canonical_family(const SpehDatum& left, const SpehDatum& right,
                                           std::span<const MoveFamily> allowed) {
  std::optional<MoveFamily> best;
  for (MoveFamily f : allowed)
    if (compatible(left, right, f) && (!best || f < *best)) best = f;
  return best;
}

void Matching::normalize() {
  std::sort(pairs.begin(), pairs.end());
  std::sort(dropped_left.begin(), dropped_left.end());
  std::sort(dropped_right.begin(), dropped_right.end());
}

bool is_valid_matching(const Matching& m, const ArthurParameter& left,
                       const ArthurParameter& right, std::span<const MoveFamily> allowed) {
  std::vector<SpehDatum> l = m.dropped_left;
  std::vector<SpehDatum> r = m.dropped_right;
  for (const auto& p : m.pairs) {
    if (std::find(allowed.begin(), allowed.end(), p.family) == allowed.end()) return false;
    if (!compatible(p.left, p.right, p.family)) return false;
    l.push_back(p.left);
    r.push_back(p.right);
  }
  if (!std::all_of(m.dropped_left.begin(), m.dropped_left.end(), droppable)) return false;
  if (!std::all_of(m.dropped_right.begin(), m.dropped_right.end(), droppable)) return false;
  return ArthurParameter(std::move(l)) == left && ArthurParameter(std::move(r)) == right;
}

std::optional<Matching> find_ggp_matching(const ArthurParameter& a1, const ArthurParameter& a2) {
  return find_matching(a1, a2, kGgpFamilies);
}

std::optional<Matching> find_strong_matching(const ArthurParameter& a1,
                                             const ArthurParameter& a2) {
  return find_matching(a1, a2, kStrongFamilies);
}

bool ggp_relevant(const ArthurParameter& a1, const ArthurParameter& a2) {
  return find_ggp_matching(a1, a2).has_value();
}

bool strong_ext_relevant(const ArthurParameter& a1, const ArthurParameter& a2) {
  return find_strong_matching(a1, a2).has_value();
}

std::vector<Matching> enumerate_ggp_matchings(const ArthurParameter& a1,
                                              const ArthurParameter& a2) {
  return enumerate(a1, a2, kGgpFamilies);
}

std::vector<Matching> enumerate_strong_matchings(const ArthurParameter& a1,
                                                 const ArthurParameter& a2) {
  return enumerate(a1, a2, kStrongFamilies);
}

bool same_cuspidal_support(const ArthurParameter& a1, const ArthurParameter& a2) {
  return sl2::diagonal_restriction(a1) == sl2::diagonal_restriction(a2);
}

}  // namespace arthur
