#include "megs/groupdata.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace megs {

namespace {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// Rank of a set of vectors over F_p by Gaussian elimination.
int rank_mod_p(std::vector<FVector> rows, int p) {
  int rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (size_t i = rank; i < rows.size(); ++i)
      if (rows[i][c] % p != 0) { pivot = static_cast<int>(i); break; }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    // normalise pivot row
    int inv = 1;
    for (int t = 1; t < p; ++t)
      if (rows[rank][c] * t % p == 1) { inv = t; break; }
    for (auto& v : rows[rank]) v = v * inv % p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == rank || rows[i][c] % p == 0) continue;
      int f = rows[i][c] % p;
      for (size_t cc = 0; cc < cols; ++cc)
        rows[i][cc] = ((rows[i][cc] - f * rows[rank][cc]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

bool is_zero(const FVector& v, int p) {
  return std::all_of(v.begin(), v.end(), [p](int x) { return x % p == 0; });
}

bool is_symmetric(const FVector& v, int p) {
  size_t n = v.size();
  for (size_t i = 0; i < n; ++i)
    if ((v[i] - v[n - 1 - i]) % p != 0) return false;
  return true;
}

bool is_constant(const FVector& v, int p) {
  for (size_t i = 1; i < v.size(); ++i)
    if ((v[i] - v[0]) % p != 0) return false;
  return true;
}

}  // namespace

int DefiningDatum::r() const {
  int total = 0;
  for (const auto& [j, vecs] : families) total += static_cast<int>(vecs.size());
  return total;
}

int DefiningDatum::n_families() const {
  int n = 0;
  for (const auto& [j, vecs] : families)
    if (!vecs.empty()) ++n;
  return n;
}

int DefiningDatum::dim_span() const {
  std::vector<FVector> all;
  for (const auto& [j, vecs] : families)
    all.insert(all.end(), vecs.begin(), vecs.end());
  return rank_mod_p(std::move(all), p);
}

std::vector<std::string> validate(const DefiningDatum& datum) {
  std::vector<std::string> errors;
  const int p = datum.p;
  if (!is_odd_prime(p)) {
    errors.push_back("p must be an odd prime");
    return errors;  // nothing else is well-defined
  }
  bool any = false;
  for (const auto& [j, vecs] : datum.families) {
    if (j < 1 || j > p) {
      errors.push_back("family index " + std::to_string(j) + " out of 1..p");
      continue;
    }
    if (vecs.empty()) continue;
    any = true;
    if (static_cast<int>(vecs.size()) > p - 1)
      errors.push_back("family " + std::to_string(j) + " has more than p-1 vectors");
    for (const auto& v : vecs) {
      if (static_cast<int>(v.size()) != p - 1)
        errors.push_back("family " + std::to_string(j) + ": vector length != p-1");
      else if (is_zero(v, p))
        errors.push_back("family " + std::to_string(j) + ": zero vector");
    }
    bool shapes_ok = std::all_of(vecs.begin(), vecs.end(), [&](const FVector& v) {
      return static_cast<int>(v.size()) == p - 1;
    });
    if (shapes_ok && rank_mod_p(vecs, p) < static_cast<int>(vecs.size()))
      errors.push_back("family " + std::to_string(j) + ": vectors are linearly dependent");
  }
  if (!any) errors.push_back("all families empty");
  return errors;
}

void require_valid(const DefiningDatum& datum) {
  auto errors = validate(datum);
  if (errors.empty()) return;
  std::string msg = "invalid defining datum:";
  for (const auto& e : errors) msg += " " + e + ";";
  throw std::invalid_argument(msg);
}

bool is_periodic(const DefiningDatum& datum) {
  for (const auto& [j, vecs] : datum.families)
    for (const auto& v : vecs) {
      long s = 0;
      for (int x : v) s += x;
      if (s % datum.p != 0) return false;
    }
  return true;
}

BranchClass branch_class(const DefiningDatum& datum) {
  const int p = datum.p;
  for (const auto& [j, vecs] : datum.families)
    for (const auto& v : vecs)
      if (!is_symmetric(v, p)) return BranchClass::RegularBranchOverDerived;
  if (datum.dim_span() >= 2) return BranchClass::RegularBranchOverDerived;
  // one symmetric direction shared by everyone
  for (const auto& [j, vecs] : datum.families)
    for (const auto& v : vecs)
      return is_constant(v, p) ? BranchClass::WeaklyBranchOnly
                               : BranchClass::RegularBranchOverGamma3;
  throw std::logic_error("branch_class: empty datum");
}

int threshold_k(const DefiningDatum& datum) {
  require_valid(datum);
  if (datum.r() == 1)
    throw std::invalid_argument(
        "threshold_k: GGS datum (a single directed generator) is out of scope");
  if (branch_class(datum) == BranchClass::RegularBranchOverDerived)
    return datum.r() + 1;
  return is_periodic(datum) ? 4 : 3;
}

Classification classify(const DefiningDatum& datum) {
  require_valid(datum);
  Classification c{};
  c.r = datum.r();
  c.n_families = datum.n_families();
  c.dim_span = datum.dim_span();
  c.periodic = is_periodic(datum);
  c.branch = branch_class(datum);
  if (c.r == 1) {
    c.kind = GroupKind::GGS;
    c.threshold_k = -1;
    return c;
  }
  if (c.n_families == 1) {
    c.kind = GroupKind::MultiGGS;
  } else if (c.branch == BranchClass::WeaklyBranchOnly) {
    c.kind = GroupKind::ConstantVectorG;
  } else if (c.branch == BranchClass::RegularBranchOverGamma3) {
    c.kind = GroupKind::SingleSymmetricVector;
  } else {
    c.kind = GroupKind::MultiEGSGeneral;
  }
  c.threshold_k = threshold_k(datum);
  return c;
}

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::GGS: return "GGS";
    case GroupKind::MultiGGS: return "multi-GGS";
    case GroupKind::MultiEGSGeneral: return "multi-EGS-general";
    case GroupKind::SingleSymmetricVector: return "single-symmetric-vector";
    case GroupKind::ConstantVectorG: return "constant-vector-G";
  }
  return "?";
}

std::string to_string(BranchClass branch) {
  switch (branch) {
    case BranchClass::RegularBranchOverDerived: return "regular-branch-over-G'";
    case BranchClass::RegularBranchOverGamma3: return "regular-branch-over-gamma3";
    case BranchClass::WeaklyBranchOnly: return "weakly-branch-only-label";
  }
  return "?";
}

DefiningDatum parse_datum(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("parse_datum: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("p") || !doc["p"].is_number_integer())
    throw std::invalid_argument("parse_datum: expected object with integer \"p\"");
  DefiningDatum datum;
  datum.p = doc["p"].get<int>();
  if (!is_odd_prime(datum.p))
    throw std::invalid_argument("parse_datum: p must be an odd prime");

  auto read_vectors = [&](const nlohmann::json& arr) {
    std::vector<FVector> vecs;
    for (const auto& v : arr) {
      if (!v.is_array())
        throw std::invalid_argument("parse_datum: vector must be an array");
      FVector fv;
      for (const auto& x : v) {
        if (!x.is_number_integer())
          throw std::invalid_argument("parse_datum: vector entries must be integers");
        fv.push_back(((x.get<long>() % datum.p) + datum.p) % datum.p);
      }
      if (static_cast<int>(fv.size()) != datum.p - 1)
        throw std::invalid_argument("parse_datum: vector length must be p-1");
      vecs.push_back(std::move(fv));
    }
    return vecs;
  };

  if (doc.contains("families")) {
    for (const auto& [key, arr] : doc["families"].items()) {
      int j;
      try {
        j = std::stoi(key);
      } catch (...) {
        throw std::invalid_argument("parse_datum: family key must be an integer");
      }
      if (j < 1 || j > datum.p)
        throw std::invalid_argument("parse_datum: family index out of 1..p");
      datum.families[j] = read_vectors(arr);
    }
  } else if (doc.contains("vectors")) {
    datum.families[1] = read_vectors(doc["vectors"]);
  } else {
    throw std::invalid_argument("parse_datum: need \"families\" or \"vectors\"");
  }
  return datum;
}

std::string serialize_datum(const DefiningDatum& datum) {
  nlohmann::json fams = nlohmann::json::object();
  for (const auto& [j, vecs] : datum.families) {
    if (vecs.empty()) continue;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : vecs) arr.push_back(v);
    fams[std::to_string(j)] = arr;
  }
  nlohmann::json doc{{"p", datum.p}, {"families", fams}};
  return doc.dump();
}

}  // namespace megs
