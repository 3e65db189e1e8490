#include "megs/report.hpp"

#include <sstream>

#include <json.hpp>

namespace megs {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json datum_json(const DefiningDatum& datum) {
  ordered_json fams = ordered_json::object();
  for (const auto& [j, vecs] : datum.families) {
    if (vecs.empty()) continue;
    fams[std::to_string(j)] = vecs;
  }
  return ordered_json{{"p", datum.p}, {"families", fams}};
}

ordered_json classification_obj(const Classification& cls) {
  return ordered_json{{"kind", to_string(cls.kind)},
                      {"branch", to_string(cls.branch)},
                      {"periodic", cls.periodic},
                      {"r", cls.r},
                      {"families", cls.n_families},
                      {"dim_span", cls.dim_span},
                      {"threshold_k", cls.threshold_k}};
}

}  // namespace

std::string p_power_form(const BigInt& value, int p) {
  std::ostringstream os;
  os << value;
  if (value >= p) {
    BigInt v = value;
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (v == 1) os << " = " << p << '^' << e;
  }
  return os.str();
}

std::string classification_json(const DefiningDatum& datum,
                                const Classification& cls) {
  ordered_json doc{{"datum", datum_json(datum)},
                   {"classification", classification_obj(cls)}};
  return doc.dump(2) + "\n";
}

std::string classification_text(const DefiningDatum& datum,
                                const Classification& cls) {
  std::ostringstream os;
  os << "p = " << datum.p << ", r = " << cls.r << ", families = " << cls.n_families
     << ", dim span = " << cls.dim_span << '\n';
  os << "kind:      " << to_string(cls.kind) << '\n';
  os << "branch:    " << to_string(cls.branch) << '\n';
  os << "periodic:  " << (cls.periodic ? "yes" : "no") << '\n';
  if (cls.threshold_k > 0)
    os << "threshold: k >= " << cls.threshold_k << '\n';
  return os.str();
}

std::string report_json(const DisjointnessReport& report) {
  ordered_json pairs = ordered_json::array();
  for (const auto& pr : report.pairs) {
    ordered_json entry{{"x", pr.x},
                       {"y", pr.y},
                       {"verdict", to_string(pr.verdict)}};
    if (pr.rung) entry["certificate"] = to_string(*pr.rung);
    if (!pr.details.empty()) entry["details"] = pr.details;
    if (pr.orbit_explored > 0) entry["orbit_explored"] = pr.orbit_explored;
    pairs.push_back(std::move(entry));
  }
  ordered_json doc{{"datum", datum_json(report.datum)},
                   {"k", report.k},
                   {"classification", classification_obj(report.classification)},
                   {"case", report.tuple_case},
                   {"t1", report.t1_words},
                   {"t2", report.t2_words},
                   {"pairs", pairs},
                   {"totals",
                    ordered_json{{"pairs", report.pairs.size()},
                                 {"cap", report.cap},
                                 {"max_orbit", report.max_orbit}}},
                   {"verdict", to_string(report.verdict)}};
  return doc.dump(2) + "\n";
}

std::string report_text(const DisjointnessReport& report) {
  std::ostringstream os;
  os << "case: " << report.tuple_case << " (k = " << report.k << ")\n";
  auto show = [&](const char* name, const std::vector<std::string>& words) {
    os << name << " = {";
    for (size_t i = 0; i < words.size(); ++i) os << (i ? ", " : " ") << words[i];
    os << " }\n";
  };
  show("T1", report.t1_words);
  show("T2", report.t2_words);
  for (const auto& pr : report.pairs) {
    os << "  (" << pr.x << ") x (" << pr.y << "): " << to_string(pr.verdict);
    if (pr.rung) os << " [" << to_string(*pr.rung) << "]";
    if (!pr.details.empty()) os << " -- " << pr.details;
    os << '\n';
  }
  os << "pairs: " << report.pairs.size() << ", cap: " << report.cap
     << ", max orbit: " << report.max_orbit << '\n';
  os << "wall time: " << report.wall_seconds << " s\n";
  os << "verdict: " << to_string(report.verdict) << '\n';
  return os.str();
}

std::string lemmas_json(const std::vector<LemmaReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports)
    arr.push_back(ordered_json{{"name", r.name}, {"pass", r.pass}, {"details", r.details}});
  return ordered_json{{"checks", arr}}.dump(2) + "\n";
}

std::string lemmas_text(const std::vector<LemmaReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports)
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " -- " << r.details << '\n';
  if (reports.empty()) os << "no applicable checks for this datum\n";
  return os.str();
}

}  // namespace megs
