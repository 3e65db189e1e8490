#include "megs/lemmas.hpp"

#include <sstream>
#include <stdexcept>

namespace megs {

namespace {

long vector_sum(const FVector& v) {
  long s = 0;
  for (int e : v) s += e;
  return s;
}

/// Exponent sum of the combined defining vector of a directed word.
int combined_sum(const DefiningDatum& datum, const Word& d) {
  const int p = datum.p;
  long total = 0;
  for (const auto& [sym, e] : d.factors) {
    if (sym.is_rooted())
      throw std::invalid_argument("expected a word in the directed generators");
    auto it = datum.families.find(sym.family);
    if (it == datum.families.end() || sym.index < 1 ||
        sym.index > static_cast<int>(it->second.size()))
      throw std::invalid_argument("directed generator not in the datum");
    total += e * vector_sum(it->second[sym.index - 1]);
  }
  return static_cast<int>(((total % p) + p) % p);
}

struct OneVectorShape {
  std::vector<int> families;
};

OneVectorShape one_vector_shape(const DefiningDatum& datum) {
  OneVectorShape shape;
  const FVector* shared = nullptr;
  for (const auto& [j, vecs] : datum.families) {
    if (vecs.empty()) continue;
    if (vecs.size() != 1 || (shared && vecs[0] != *shared))
      throw std::invalid_argument("datum is not a one-vector-per-family datum");
    shared = &vecs[0];
    shape.families.push_back(j);
  }
  if (shape.families.size() < 2)
    throw std::invalid_argument("one-vector check needs at least two families");
  return shape;
}

std::string order_depth_details(long long order, int depth) {
  return "order " + std::to_string(order) + ", p-th power fixes " +
         std::to_string(depth) + " levels";
}

}  // namespace

LemmaReport check_order_p2(const DefiningDatum& datum, int family, const Word& d,
                           int j) {
  require_valid(datum);
  const int p = datum.p;
  if (j % p == 0) throw std::invalid_argument("check_order_p2: j must be nonzero mod p");
  if (d.empty()) throw std::invalid_argument("check_order_p2: d must be nontrivial");
  for (const auto& [sym, e] : d.factors)
    if (sym.is_rooted() || sym.family != family)
      throw std::invalid_argument("check_order_p2: d must use only the given family");
  if (combined_sum(datum, d) != 0)
    throw std::invalid_argument(
        "check_order_p2: the combined defining vector must have zero exponent sum");

  GroupContext ctx(datum, 3);
  Word w = Word{{GenSymbol::rooted(), j}}.then(d).normalized();
  Portrait x = ctx.eval(w);
  long long o = x.order();
  int depth = x.pow(p).stabilizer_depth();
  LemmaReport report;
  report.name = "order-p2(" + w.to_string() + ")";
  report.pass = o == static_cast<long long>(p) * p && depth == 2;
  report.details = order_depth_details(o, depth);
  return report;
}

std::vector<LemmaReport> check_product_order(const DefiningDatum& datum, int i) {
  require_valid(datum);
  if (!is_periodic(datum))
    throw std::invalid_argument("check_product_order: datum must be periodic");
  OneVectorShape shape = one_vector_shape(datum);
  const int p = datum.p;
  const int n = static_cast<int>(shape.families.size());
  if (i < 1 || i >= n)
    throw std::invalid_argument("check_product_order: i out of 1..n-1");

  GroupContext ctx(datum, 4);
  Word bi{{GenSymbol::directed(shape.families[i - 1], 1), 1}};
  Word bj{{GenSymbol::directed(shape.families[i], 1), 1}};
  std::vector<Word> forms{bi.then(bj), bi.inverse().then(bj),
                          bi.inverse().then(bj.inverse())};
  std::vector<LemmaReport> reports;
  for (const Word& w : forms) {
    Portrait x = ctx.eval(w);
    long long o = x.order();
    int depth = x.pow(p).stabilizer_depth();
    LemmaReport report;
    report.name = "product-order(" + w.to_string() + ")";
    report.pass = o == static_cast<long long>(p) * p && depth == 3;
    report.details = order_depth_details(o, depth);
    reports.push_back(std::move(report));
  }
  return reports;
}

LemmaReport check_socle_separation(const DefiningDatum& datum, int k,
                                   const Word& d1, const Word& d2, size_t cap) {
  require_valid(datum);
  if (k < 3) throw std::invalid_argument("check_socle_separation: k must be >= 3");
  if (combined_sum(datum, d1) != 0 || combined_sum(datum, d2) != 0)
    throw std::invalid_argument(
        "check_socle_separation: both words must have zero-sum combined vectors");

  LemmaReport report;
  report.name = "socle-separation(a " + d1.to_string() + " | a " + d2.to_string() + ")";
  Word w1 = Word{{GenSymbol::rooted(), 1}}.then(d1).normalized();
  Word w2 = Word{{GenSymbol::rooted(), 1}}.then(d2).normalized();
  if (w1.to_string() == w2.to_string()) {
    report.pass = true;
    report.details = "equal words: socles coincide, no separation claim";
    return report;
  }

  GroupContext ctx(datum, k);
  GroupContext sub(datum, k - 1);
  CertifyOptions opts;
  opts.cap = cap;
  opts.rung_mask =
      (1u << static_cast<unsigned>(Rung::SectionProfile)) |
      (1u << static_cast<unsigned>(Rung::OrbitExact));
  PairOutcome out = certify_pair(ctx, sub, ctx.eval(w1), ctx.eval(w2), opts);
  report.pass = out.verdict == PairVerdict::Disjoint;
  report.details = to_string(out.verdict) +
                   (out.rung ? " via " + to_string(*out.rung) : "") +
                   (out.details.empty() ? "" : ": " + out.details);
  return report;
}

std::vector<LemmaReport> run_lemma_suite(const DefiningDatum& datum, size_t cap) {
  require_valid(datum);
  const int p = datum.p;
  std::vector<LemmaReport> reports;

  // First zero-sum directed generator: order-p^2 fact and, with its square,
  // the socle-separation fact.
  for (const auto& [j, vecs] : datum.families) {
    bool done = false;
    for (size_t i = 0; i < vecs.size(); ++i) {
      if (vector_sum(vecs[i]) % p != 0) continue;
      Word d{{GenSymbol::directed(j, static_cast<int>(i) + 1), 1}};
      reports.push_back(check_order_p2(datum, j, d, 1));
      reports.push_back(check_socle_separation(datum, 3, d, d.then(d), cap));
      done = true;
      break;
    }
    if (done) break;
  }

  // One-vector periodic data: the depth-4 product-order facts and the
  // cross-family socle separation.
  bool one_vector = true;
  const FVector* shared = nullptr;
  std::vector<int> fams;
  for (const auto& [j, vecs] : datum.families) {
    if (vecs.empty()) continue;
    if (vecs.size() != 1 || (shared && vecs[0] != *shared)) {
      one_vector = false;
      break;
    }
    shared = &vecs[0];
    fams.push_back(j);
  }
  if (one_vector && fams.size() >= 2 && is_periodic(datum)) {
    for (int i = 1; i < static_cast<int>(fams.size()); ++i)
      for (auto& r : check_product_order(datum, i)) reports.push_back(std::move(r));
    Word d1{{GenSymbol::directed(fams[0], 1), 1}};
    Word d2{{GenSymbol::directed(fams[1], 1), 2}};
    reports.push_back(check_socle_separation(datum, 3, d1, d2, cap));
  }
  return reports;
}

}  // namespace megs
