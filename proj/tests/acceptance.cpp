// Acceptance run: one PASS/FAIL line per criterion, with its runtime bound.
//
//   acceptance        run all criteria
//   acceptance N...   run only the listed criteria
//
// Exits non-zero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arthur/branching.hpp"
#include "arthur/core.hpp"
#include "arthur/dsl.hpp"
#include "arthur/relevance.hpp"
#include "arthur/segment.hpp"
#include "arthur/sl2.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace arthur;

namespace {

const CuspidalSymbol one{"one", 1};
const CuspidalSymbol rho{"rho", 1};
const CuspidalSymbol chi{"chi", 1};

ArthurParameter triv(int n) { return ArthurParameter{SpehDatum{one, 1, n}}; }
ArthurParameter st(int n) { return ArthurParameter{SpehDatum{one, n, 1}}; }

/// Collects named sub-checks; a criterion passes when every check holds.
class Report {
public:
  void check(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  /// Records a property checked over many samples.
  void count(const std::string& property, long violations, long samples) {
    std::ostringstream s;
    s << property << ": " << violations << " violations / " << samples;
    if (violations != 0) failures_.push_back(s.str());
    notes_.push_back(s.str());
  }
  void note(const std::string& s) { notes_.push_back(s); }

  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Criterion {
  int id;
  std::string title;
  double limit_ms;
  std::function<void(Report&)> body;
};

// ------------------------------------------------------------------ 1-4

void fixture_triv3_st2(Report& r) {
  r.check(strong_ext_relevant(triv(3), st(2)), "strong_ext_relevant(triv(3), st(2)) is true");
  r.check(!ggp_relevant(triv(3), st(2)), "ggp_relevant(triv(3), st(2)) is false");
  const auto all = enumerate_strong_matchings(triv(3), st(2));
  r.check(all.size() == 1, "exactly one strong matching");
  r.check(all.size() == 1 && all[0].pairs.size() == 1 &&
              all[0].pairs[0].family == MoveFamily::F3_DualDown,
          "the matching is a single F3 pair");
}

void fixture_st_triv(Report& r) {
  for (int n = 3; n <= 12; ++n) {
    const auto tag = "n = " + std::to_string(n);
    r.check(!strong_ext_relevant(st(n), triv(n - 1)), tag + ": not strongly relevant");
    r.check(euler_poincare(st(n), triv(n - 1)) == 0, tag + ": Euler-Poincare pairing is 0");
  }
}

void fixture_speh(Report& r) {
  const ArthurParameter a1{SpehDatum{rho, 2, 3}};
  const ArthurParameter a2{SpehDatum{rho, 3, 1}, SpehDatum{rho, 1, 1}, SpehDatum{rho, 1, 1}};
  r.check(!strong_ext_relevant(a1, a2), "not strongly relevant");
  bool raised = false;
  try {
    ext_branch_segment_type(a1, a2);
  } catch (const SegmentTypeError& e) {
    raised = e.term() == SpehDatum{rho, 2, 3} &&
             std::string(e.what()).find("u(rho;2,3)") != std::string::npos;
  }
  r.check(raised, "ext_branch_segment_type raises a segment-type error naming (rho,2,3)");
}

void fixture_gl13(Report& r) {
  const ArthurParameter a1{SpehDatum{one, 1, 7}, SpehDatum{one, 5, 1}, SpehDatum{chi, 1, 1}};
  const ArthurParameter a2{SpehDatum{one, 1, 6}, SpehDatum{one, 6, 1}};
  const auto all = enumerate_strong_matchings(a1, a2);

  Matching arthur_only;
  arthur_only.pairs = {{SpehDatum{one, 1, 7}, SpehDatum{one, 1, 6}, MoveFamily::F1_ArthurDown}};
  arthur_only.dropped_left = {SpehDatum{one, 5, 1}, SpehDatum{chi, 1, 1}};
  arthur_only.dropped_right = {SpehDatum{one, 6, 1}};
  arthur_only.normalize();
  Matching dual;
  dual.pairs = {{SpehDatum{one, 1, 7}, SpehDatum{one, 6, 1}, MoveFamily::F3_DualDown},
                {SpehDatum{one, 5, 1}, SpehDatum{one, 1, 6}, MoveFamily::F4_DualUp}};
  dual.dropped_left = {SpehDatum{chi, 1, 1}};
  dual.normalize();
  std::vector<Matching> expected{arthur_only, dual};
  std::sort(expected.begin(), expected.end());

  r.check(all.size() == 2, "exactly two matchings");
  r.check(all == expected, "the F1-only matching and the F3+F4 matching");
  r.check(oracle::brute_force_matchings(a1, a2, kStrongFamilies) == all,
          "brute-force enumeration agrees");
}

// ------------------------------------------------------------------ 5-9

void decider_equivalence(Report& r) {
  std::mt19937_64 rng(20240501);
  long disagreements = 0, positive = 0;
  const long samples = 10000;
  for (long i = 0; i < samples; ++i) {
    const auto [a1, a2] = oracle::random_branching_pair(rng, 30);
    const bool m = ext_branch_segment_type(a1, a2).nonvanishing;
    disagreements += m != ext_branch_recursive(a1, a2);
    positive += m;
  }
  r.count("matcher vs recursive", disagreements, samples);
  r.note(std::to_string(positive) + " non-vanishing pairs");
}

void symmetry_properties(Report& r) {
  std::mt19937_64 rng(20240502);
  const long samples = 10000;
  long swap_strong = 0, swap_ggp = 0, inclusion = 0, duality = 0, uniqueness = 0;
  for (long i = 0; i < samples; ++i) {
    const auto [a1, a2] = oracle::random_general_pair(rng, 5, 5);
    const bool strong = strong_ext_relevant(a1, a2);
    const bool ggp = ggp_relevant(a1, a2);
    swap_strong += strong != strong_ext_relevant(a2, a1);
    swap_ggp += ggp != ggp_relevant(a2, a1);
    inclusion += ggp && !strong;
    duality += strong != strong_ext_relevant(az_dual(a1), az_dual(a2));
    uniqueness += enumerate_ggp_matchings(a1, a2).size() > 1;
  }
  r.count("strong relevance symmetric under swap", swap_strong, samples);
  r.count("GGP relevance symmetric under swap", swap_ggp, samples);
  r.count("GGP implies strong", inclusion, samples);
  r.count("strong relevance invariant under (D, D)", duality, samples);
  r.count("at most one GGP matching", uniqueness, samples);
  r.note("(D, D) counterexample: strong(triv(3), st(2)) = " +
         std::string(strong_ext_relevant(triv(3), st(2)) ? "true" : "false") +
         ", strong(D triv(3), D st(2)) = strong(st(3), triv(2)) = " +
         std::string(strong_ext_relevant(st(3), triv(2)) ? "true" : "false"));
}

void sl2_suite(Report& r) {
  long cg = 0, recovery = 0;
  for (int a = 1; a <= 20; ++a)
    for (int b = 1; b <= 20; ++b) {
      const auto d = sl2::clebsch_gordan(a, b);
      long total = 0;
      for (int x : d) total += x;
      cg += total != a * b || d != oracle::tensor_decomposition(a, b);
      for (int c = 1; c <= 20; ++c)
        for (int e = 1; e <= 20; ++e) {
          const bool same = (a == c && b == e) || (a == e && b == c);
          recovery += sl2::tensor_pair_recovery(a, b, c, e) != same;
        }
    }
  r.count("Clebsch-Gordan dimension conservation (a, b <= 20)", cg, 400);
  r.count("tensor-pair uniqueness (a, b, c, d <= 20)", recovery, 160000);

  std::mt19937_64 rng(20240503);
  const long samples = 10000;
  long mismatch = 0, equal = 0;
  for (long i = 0; i < samples; ++i) {
    const auto a1 = oracle::random_param(rng, 3, 5);
    ArthurParameter a2;
    if (i % 2 == 0) {
      std::vector<SpehDatum> terms;
      for (const auto& s : a1.terms())
        for (int m : oracle::tensor_decomposition(s.deligne, s.arthur)) terms.push_back({s.rho, m, 1});
      a2 = ArthurParameter{terms};
    } else {
      a2 = oracle::random_param(rng, 3, 5);
    }
    const bool same = csupp(a1) == csupp(a2);
    equal += same;
    mismatch += (sl2::diagonal_restriction(a1) == sl2::diagonal_restriction(a2)) != same;
  }
  r.count("diagonal restriction equality <=> csupp equality", mismatch, samples);
  r.note(std::to_string(equal) + " pairs with equal support");
}

void jacquet_suite(Report& r) {
  long zeros = 0, degree = 0, support = 0, signs = 0, cases = 0;
  for (int m = 1; m <= 3; ++m) {
    const CuspidalSymbol s{"rho", m};
    for (int k = 1; k <= 10; ++k) {
      const Segment d{s, HalfInt::from_doubled(-(k - 1)), HalfInt::from_doubled(k - 1)};
      for (int l = 1; l < m * k; ++l) {
        for (SegmentKind kind : {SegmentKind::Z, SegmentKind::Q}) {
          for (JacquetSide side : {JacquetSide::Standard, JacquetSide::Opposite}) {
            ++cases;
            const auto res = jacquet(kind, side, d, l);
            zeros += res.has_value() != (l % m == 0);
            if (!res) continue;
            const auto& [w1, w2] = *res;
            degree += w1.degree() + w2.degree() != m * k || w2.degree() != l;
            auto both = csupp(w1);
            both.merge(csupp(w2));
            support += both != csupp(d);
            // Q standard and Z opposite: e(w1) > 0 > e(w2); the other two reversed.
            const int sign = (kind == SegmentKind::Q) == (side == JacquetSide::Standard) ? 1 : -1;
            const Rational e1 = central_exponent(w1), e2 = central_exponent(w2);
            signs += !(sign * e1 > 0 && sign * e2 < 0);
          }
        }
      }
    }
  }
  r.count("zero exactly when n(rho) does not divide l", zeros, cases);
  r.count("degree conservation", degree, cases);
  r.count("csupp conservation", support, cases);
  r.count("central exponent sign pattern", signs, cases);
}

void generic_base(Report& r) {
  std::mt19937_64 rng(20240504);
  const long samples = 1000;
  long hom = 0, ext = 0, ep = 0;
  for (long i = 0; i < samples; ++i) {
    const int n = oracle::uniform(rng, 2, 30);
    const auto a1 = oracle::random_segment_type(rng, n, true);
    const auto a2 = oracle::random_segment_type(rng, n - 1, true);
    hom += !hom_branch_arthur(a1, a2).nonvanishing;
    ext += !ext_branch_segment_type(a1, a2).nonvanishing;
    ep += euler_poincare(a1, a2) != 1;
  }
  r.count("hom_branch_arthur true", hom, samples);
  r.count("ext_branch_segment_type true", ext, samples);
  r.count("euler_poincare = 1", ep, samples);
}

// ------------------------------------------------------------------ 10

void dsl_and_golden(Report& r) {
  std::mt19937_64 rng(20240505);
  const long samples = 10000;
  long params = 0, segments = 0, supports = 0;
  for (long i = 0; i < samples; ++i) {
    const auto a = oracle::random_param(rng, 5, 9);
    params += dsl::parse_param(dsl::format(a)) != a;
    const auto m = csupp(a);
    supports += !(dsl::parse_multiset(dsl::format(m)) == m);
    const int k = oracle::uniform(rng, 1, 9);
    const int lo = oracle::uniform(rng, -9, 9);
    const Segment s{oracle::symbol_pool()[static_cast<std::size_t>(i % 3)],
                    HalfInt::from_doubled(lo), HalfInt::from_doubled(lo + 2 * (k - 1))};
    const SegmentRep rep{i % 2 ? SegmentKind::Z : SegmentKind::Q, s};
    const auto back = dsl::parse_rep(dsl::format(rep));
    segments += !(std::holds_alternative<SegmentRep>(back) && std::get<SegmentRep>(back) == rep);
  }
  r.count("parse(format(parameter))", params, samples);
  r.count("parse(format(cuspidal support))", supports, samples);
  r.count("parse(format(segment representation))", segments, samples);

  long mismatched = 0;
  for (const auto& c : golden::cases()) {
    std::string expected;
    const bool present = golden::read(golden::path(GOLDEN_DIR, c), expected);
    const bool same = present && golden::render(golden::run(c)) == expected;
    if (!same) r.check(false, "golden file " + c.name);
    mismatched += !same;
  }
  r.count("CLI golden files byte-exact", mismatched, static_cast<long>(golden::cases().size()));
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "triv(3) vs st(2): strong, not GGP, one F3 matching", 10, fixture_triv3_st2},
      {2, "st(n) vs triv(n-1), 3 <= n <= 12: not relevant, EP = 0", 10, fixture_st_triv},
      {3, "u(rho;2,3) vs u(rho;3,1)+rho+rho: not relevant, segment-type error", 10, fixture_speh},
      {4, "GL_13 vs GL_12: exactly the two described matchings", 50, fixture_gl13},
      {5, "matcher and recursive deciders agree on 10^4 pairs", 60000, decider_equivalence},
      {6, "swap symmetry, GGP => strong, duality covariance, GGP uniqueness", 60000,
       symmetry_properties},
      {7, "SL2: Clebsch-Gordan, tensor-pair uniqueness, diagonal restriction", 30000, sl2_suite},
      {8, "Jacquet modules of Z/Q: zeros, conservation, sign patterns", 10000, jacquet_suite},
      {9, "generic pairs: Hom, Ext non-zero and EP = 1", 10000, generic_base},
      {10, "DSL round trip and CLI golden files", 30000, dsl_and_golden},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  bool all_ok = true;
  for (const auto& c : criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end())
      continue;
    Report report;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(report);
    } catch (const std::exception& e) {
      report.check(false, std::string("unexpected exception: ") + e.what());
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = ms < c.limit_ms;
    const bool ok = report.ok() && in_time;
    all_ok = all_ok && ok;

    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  ("
              << ms << " ms, limit " << c.limit_ms << " ms)\n";
    for (const auto& n : report.notes()) std::cout << "    " << n << "\n";
    for (const auto& f : report.failures()) std::cout << "    failed: " << f << "\n";
    if (!in_time) std::cout << "    failed: runtime bound exceeded\n";
  }
  return all_ok ? 0 : 1;
}
