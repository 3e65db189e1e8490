#pragma once

#include <string>
#include <vector>

#include "megs/ramification.hpp"

namespace megs {

struct LemmaReport {
  std::string name;
  bool pass = false;
  std::string details;
};

/// In the depth-3 quotient: a^j * d has order p^2 and its p-th power fixes
/// exactly two levels, for d a zero-sum word in one family's directed
/// generators and j in F_p^*.
LemmaReport check_order_p2(const DefiningDatum& datum, int family, const Word& d,
                           int j);

/// For a periodic one-vector datum with families j_1 < ... < j_n and
/// 1 <= i <= n-1: each of b_i b_{i+1}, b_i^{-1} b_{i+1}, b_i^{-1} b_{i+1}^{-1}
/// has order p^2 in the depth-4 quotient, with the p-th power fixing exactly
/// three levels.
std::vector<LemmaReport> check_product_order(const DefiningDatum& datum, int i);

/// Certify that the socles of a*d1 and a*d2 (both d zero-sum directed words)
/// are non-conjugate in the depth-k quotient, via the section-profile or
/// exact-orbit rung. Equal words are reported as trivially conjugate with no
/// separation claim.
LemmaReport check_socle_separation(const DefiningDatum& datum, int k,
                                   const Word& d1, const Word& d2,
                                   size_t cap = 2'000'000);

/// The checks applicable to the datum, each reported pass/fail.
std::vector<LemmaReport> run_lemma_suite(const DefiningDatum& datum,
                                         size_t cap = 2'000'000);

}  // namespace megs
