#pragma once

#include <string>
#include <vector>

#include "megs/lemmas.hpp"
#include "megs/ramification.hpp"

namespace megs {

/// JSON renderings are deterministic: identical inputs give byte-identical
/// output (timing is therefore reported only in the text renderings).
std::string classification_json(const DefiningDatum& datum,
                                const Classification& cls);
std::string classification_text(const DefiningDatum& datum,
                                const Classification& cls);

std::string report_json(const DisjointnessReport& report);
std::string report_text(const DisjointnessReport& report);

std::string lemmas_json(const std::vector<LemmaReport>& reports);
std::string lemmas_text(const std::vector<LemmaReport>& reports);

/// "p^e" when the value is a perfect power of p (e >= 1), else the decimal.
std::string p_power_form(const BigInt& value, int p);

}  // namespace megs
