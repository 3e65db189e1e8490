// Acceptance gate: runs every acceptance criterion and prints one PASS/FAIL
// line per criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "megs/lemmas.hpp"
#include "megs/ramification.hpp"
#include "property_checks.hpp"

using namespace megs;
using namespace megs::testing;

namespace {

int failures = 0;

void line(int n, bool pass, const std::string& desc) {
  std::printf("criterion %2d: %s -- %s\n", n, pass ? "PASS" : "FAIL", desc.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

bool all_disjoint(const DisjointnessReport& report) {
  for (const auto& pr : report.pairs)
    if (pr.verdict != PairVerdict::Disjoint) return false;
  return true;
}

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  DisjointnessReport ladder = verify_ramification(p3_constant(), 3);
  VerifyOptions c4;
  c4.rung_mask = 1u << static_cast<unsigned>(Rung::OrbitExact);
  DisjointnessReport exact = verify_ramification(p3_constant(), 3, c4);
  double secs = seconds_since(t0);
  bool pass = ladder.verdict == DisjointnessReport::Verdict::Verified &&
              exact.verdict == ladder.verdict && all_disjoint(ladder) &&
              all_disjoint(exact) && secs < 10.0;
  line(1, pass,
       "p=3 one-vector non-periodic, k=3: ladder " + to_string(ladder.verdict) +
           ", exact-orbits " + to_string(exact.verdict) + ", " + fmt_secs(secs));
}

void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  DisjointnessReport report = verify_ramification(p5_nonperiodic_multi(), 3);
  double secs = seconds_since(t0);
  bool pass = report.verdict == DisjointnessReport::Verdict::Verified &&
              all_disjoint(report) && secs < 300.0;
  line(2, pass,
       "p=5 one-family non-periodic, k=3: " + to_string(report.verdict) + ", " +
           fmt_secs(secs));
}

void criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  DisjointnessReport report = verify_ramification(p5_periodic_multi(), 3);
  double secs = seconds_since(t0);
  bool pass = report.verdict == DisjointnessReport::Verdict::Verified &&
              all_disjoint(report) && secs < 900.0;
  int exact_pairs = 0;
  for (const auto& pr : report.pairs) {
    if (pr.rung == Rung::OrbitExact) {
      ++exact_pairs;
      // only the (a b1, a b1^2)-type pair may need the exact orbit
      if (!(pr.x == "a b1.1" && pr.y == "a b1.1^2")) pass = false;
    }
  }
  line(3, pass,
       "p=5 one-family periodic, k=3: " + to_string(report.verdict) + ", " +
           std::to_string(exact_pairs) + " pair(s) at the exact-orbit rung, " +
           fmt_secs(secs));
}

void criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  VerifyOptions opts;
  opts.cap = 2'000'000;
  opts.threads = 4;
  DisjointnessReport report = verify_ramification(p5_symmetric_pair(), 4, opts);
  double secs = seconds_since(t0);
  // the two (b_n^-1 a, b_n^lambda a) pairs have matching invariants at every
  // rung below the exact orbit and may stay undecided at the cap
  const std::set<std::pair<std::string, std::string>> allowed_undecided{
      {"b2.1^-1 a", "b2.1^3 a"}, {"b2.1^-1 a", "b2.1^2 a"}};
  bool pass = secs < 3600.0;
  int undecided = 0;
  for (const auto& pr : report.pairs) {
    if (pr.verdict == PairVerdict::Intersect) pass = false;
    if (pr.verdict == PairVerdict::Undecided) {
      ++undecided;
      if (!allowed_undecided.contains({pr.x, pr.y})) pass = false;
    }
  }
  pass = pass && (report.verdict == DisjointnessReport::Verdict::Verified ||
                  report.verdict == DisjointnessReport::Verdict::Undecided);
  line(4, pass,
       "p=5 one-vector periodic, k=4: " + to_string(report.verdict) + ", " +
           std::to_string(undecided) + " undecided pair(s), max orbit " +
           std::to_string(report.max_orbit) + ", " + fmt_secs(secs));
}

void criterion5() {
  auto gs = gupta_sidki();
  long long o1 = eval_word(gs, parse_word("a b1.1"), 3).order();
  DefiningDatum single;
  single.p = 5;
  single.families[1] = {{1, 4, 4, 1}};
  long long o2 = eval_word(single, parse_word("a^2 b1.1"), 3).order();
  bool pass = o1 == 9 && o2 == 25;
  line(5, pass,
       "orders in the depth-3 quotients: " + std::to_string(o1) + " and " +
           std::to_string(o2) + " (want 9 and 25)");
}

void criterion6() {
  auto reports = check_product_order(p5_symmetric_pair(), 1);
  bool pass = reports.size() == 3;
  std::string summary;
  for (const auto& r : reports) {
    pass = pass && r.pass;
    summary += (summary.empty() ? "" : "; ") + r.details;
  }
  line(6, pass, "depth-4 product orders: " + summary);
}

void criterion7() {
  bool pass = true;
  std::string summary;
  struct Case {
    DefiningDatum datum;
    int k;
  };
  for (const auto& [datum, k] : {Case{p5_nonperiodic_multi(), 3},
                                 Case{p5_periodic_multi(), 3},
                                 Case{p5_symmetric_pair(), 4}}) {
    GroupContext ctx(datum, k);
    BigInt index = ctx.order() / ctx.derived_chain().order();
    pass = pass && index == 125;
    std::ostringstream os;
    os << index;
    summary += (summary.empty() ? "" : ", ") + os.str();
  }
  line(7, pass, "abelianization indices: " + summary + " (want 125 each)");
}

void criterion8() {
  std::vector<int> ranks;
  for (int n = 1; n <= 3; ++n) {
    GroupContext ctx(p5_periodic_multi(), n);
    ranks.push_back(ctx.frattini_rank());
  }
  bool pass = ranks == std::vector<int>{1, 2, 3};
  line(8, pass,
       "rank tower: " + std::to_string(ranks[0]) + ", " + std::to_string(ranks[1]) +
           ", " + std::to_string(ranks[2]) + " (want 1, 2, 3)");
}

void criterion9() {
  struct Case {
    const char* name;
    DefiningDatum datum;
    int depth;
  };
  const Case corpus[] = {
      {"gs@2", gupta_sidki(), 2},       {"gs@3", gupta_sidki(), 3},
      {"p3c@2", p3_constant(), 2},      {"p3c@3", p3_constant(), 3},
      {"p5p@2", p5_periodic_multi(), 2}, {"p5n@2", p5_nonperiodic_multi(), 2},
      {"p5s@2", p5_symmetric_pair(), 2}};
  bool pass = true;
  std::string summary;
  for (const auto& c : corpus) {
    GroupContext ctx(c.datum, c.depth);
    auto gens = ctx.generator_perms();
    auto elems = closure_oracle(gens, ctx.degree());
    bool ok = ctx.order() == static_cast<long>(elems.size());
    for (size_t i = 0; i < elems.size(); i += 11)
      ok = ok && ctx.contains(elems[i]);

    std::vector<Perm> comms;
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j)
        comms.push_back(
            gens[i].inverse().then(gens[j].inverse()).then(gens[i]).then(gens[j]));
    auto derived_oracle = normal_closure_oracle(gens, comms, ctx.degree());
    ok = ok && ctx.derived_chain().order() == static_cast<long>(derived_oracle.size());

    for (const auto& f : ctx.generator_portraits()) {
      ConjOrbit orbit = ctx.conj_orbit_bfs(f, elems.size() + 1);
      ok = ok && orbit.complete &&
           orbit.size() == class_size_oracle(gens, f.leaf_perm());
    }
    pass = pass && ok;
    summary += std::string(summary.empty() ? "" : ", ") + c.name +
               (ok ? " ok" : " MISMATCH");
  }
  line(9, pass, "engine vs brute-force oracle: " + summary);
}

void criterion10() {
  auto t0 = std::chrono::steady_clock::now();
  PropertyResult results[] = {
      prop_portrait_algebra(1000, 0xA11CE),   prop_section_law(1000, 0xB0B),
      prop_leaf_homomorphism(1000, 0xC0FFEE), prop_conjugation_invariants(1000, 0xD00D),
      prop_abelianization_invariance(1000, 0xE66),
      prop_rotation_class_invariance(1000, 0xF00)};
  double secs = seconds_since(t0);
  bool pass = secs < 120.0;
  int total = 0, bad = 0;
  for (const auto& r : results) {
    total += r.cases;
    bad += r.failures;
    pass = pass && r.pass();
  }
  line(10, pass,
       "property suites: " + std::to_string(total) + " cases, " +
           std::to_string(bad) + " failures, " + fmt_secs(secs));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion/criteria FAILED\n", failures);
  return 1;
}
