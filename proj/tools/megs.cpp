#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "megs/group_context.hpp"
#include "megs/lemmas.hpp"
#include "megs/ramification.hpp"
#include "megs/report.hpp"

namespace {

constexpr int kExitInvalid = 3;

struct RunConfig {
  std::string input;
  int k = 1;
  size_t cap = 2'000'000;
  std::string format = "text";
  long max_leaves = 2'500;
  int threads = 1;
  bool c4_only = false;
  std::string word;
};

megs::DefiningDatum load_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  megs::DefiningDatum datum = megs::parse_datum(buf.str());
  auto errors = megs::validate(datum);
  if (!errors.empty()) {
    std::string msg = "invalid datum:";
    for (const auto& e : errors) msg += " " + e + ";";
    throw std::invalid_argument(msg);
  }
  return datum;
}

void guard_leaves(const megs::DefiningDatum& datum, const RunConfig& cfg) {
  long leaves = 1;
  for (int i = 0; i < cfg.k; ++i) {
    leaves *= datum.p;
    if (leaves > cfg.max_leaves)
      throw std::invalid_argument(
          "p^k exceeds the leaf guard of " + std::to_string(cfg.max_leaves) +
          "; raise --max-leaves to proceed");
  }
}

int cmd_classify(const RunConfig& cfg) {
  auto datum = load_datum(cfg.input);
  auto cls = megs::classify(datum);
  std::cout << (cfg.format == "json" ? megs::classification_json(datum, cls)
                                     : megs::classification_text(datum, cls));
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  auto datum = load_datum(cfg.input);
  guard_leaves(datum, cfg);
  megs::VerifyOptions opts;
  opts.cap = cfg.cap;
  opts.threads = cfg.threads;
  if (cfg.c4_only)
    opts.rung_mask = 1u << static_cast<unsigned>(megs::Rung::OrbitExact);
  auto report = megs::verify_ramification(datum, cfg.k, opts);
  std::cout << (cfg.format == "json" ? megs::report_json(report)
                                     : megs::report_text(report));
  switch (report.verdict) {
    case megs::DisjointnessReport::Verdict::Verified: return 0;
    case megs::DisjointnessReport::Verdict::Refuted: return 1;
    case megs::DisjointnessReport::Verdict::Undecided: return 2;
  }
  return kExitInvalid;
}

int cmd_lemmas(const RunConfig& cfg) {
  auto datum = load_datum(cfg.input);
  auto reports = megs::run_lemma_suite(datum, cfg.cap);
  std::cout << (cfg.format == "json" ? megs::lemmas_json(reports)
                                     : megs::lemmas_text(reports));
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

int cmd_tower(const RunConfig& cfg) {
  auto datum = load_datum(cfg.input);
  guard_leaves(datum, cfg);
  for (int n = 1; n <= cfg.k; ++n) {
    megs::GroupContext ctx(datum, n);
    std::cout << "|G_" << n << "| = " << megs::p_power_form(ctx.order(), datum.p)
              << ", d(G_" << n << ") = " << ctx.frattini_rank() << '\n';
  }
  return 0;
}

int cmd_order(const RunConfig& cfg) {
  auto datum = load_datum(cfg.input);
  guard_leaves(datum, cfg);
  megs::GroupContext ctx(datum, cfg.k);
  std::cout << megs::p_power_form(ctx.order(), datum.p) << '\n';
  return 0;
}

int cmd_rank(const RunConfig& cfg) {
  auto datum = load_datum(cfg.input);
  guard_leaves(datum, cfg);
  megs::GroupContext ctx(datum, cfg.k);
  std::cout << ctx.frattini_rank() << '\n';
  return 0;
}

int cmd_element(const RunConfig& cfg) {
  auto datum = load_datum(cfg.input);
  guard_leaves(datum, cfg);
  megs::Word w = megs::parse_word(cfg.word);
  megs::Portrait f = megs::eval_word(datum, w, cfg.k);
  std::cout << "word:      " << w.to_string() << '\n';
  std::cout << "portrait:  " << f.to_text() << '\n';
  megs::Perm perm = f.leaf_perm();
  std::cout << "leaves:   ";
  for (int i = 0; i < perm.degree(); ++i) std::cout << ' ' << perm[i];
  std::cout << '\n';
  std::cout << "order:     " << f.order() << '\n';
  std::cout << "st-depth:  " << f.stabilizer_depth() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "finite level-quotients of groups acting on the p-adic rooted tree, "
      "with certified ramification-structure verification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool needs_k) {
    sub->add_option("-i,--input", cfg.input, "datum JSON file")->required();
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-leaves", cfg.max_leaves, "refuse p^k beyond this");
    if (needs_k)
      sub->add_option("-k,--k", cfg.k, "tree depth of the quotient")
          ->required()
          ->check(CLI::PositiveNumber);
  };

  add_common(app.add_subcommand("classify", "classify the defining datum"), false);

  auto* verify = app.add_subcommand("verify", "verify the ramification structure");
  add_common(verify, true);
  verify->add_option("--cap", cfg.cap, "conjugation-orbit cap");
  verify->add_option("--threads", cfg.threads, "parallel pair certifications")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--c4-only", cfg.c4_only, "decide every pair by exact orbits");

  auto* lemmas = app.add_subcommand("lemmas", "run the applicable instance checks");
  lemmas->add_option("-i,--input", cfg.input, "datum JSON file")->required();
  lemmas->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  lemmas->add_option("--cap", cfg.cap, "conjugation-orbit cap");

  add_common(app.add_subcommand("tower", "orders and ranks of G_1..G_k"), true);
  add_common(app.add_subcommand("order", "order of G_k"), true);
  add_common(app.add_subcommand("rank", "minimal generator count of G_k"), true);

  auto* element = app.add_subcommand("element", "evaluate a word in G_k");
  add_common(element, true);
  element->add_option("-w,--word", cfg.word, "word, e.g. \"a b1.1^2 a^-1\"")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("classify")) return cmd_classify(cfg);
    if (app.got_subcommand("verify")) return cmd_verify(cfg);
    if (app.got_subcommand("lemmas")) return cmd_lemmas(cfg);
    if (app.got_subcommand("tower")) return cmd_tower(cfg);
    if (app.got_subcommand("order")) return cmd_order(cfg);
    if (app.got_subcommand("rank")) return cmd_rank(cfg);
    if (app.got_subcommand("element")) return cmd_element(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
