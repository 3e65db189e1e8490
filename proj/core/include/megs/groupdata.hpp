#pragma once

#include <map>
#include <string>
#include <vector>

namespace megs {

/// One defining vector in (Z/pZ)^(p-1).
using FVector = std::vector<int>;

/// The numerical datum of a multi-EGS group: p together with, per family
/// index j in 1..p, an ordered list of defining vectors.
struct DefiningDatum {
  int p = 3;
  std::map<int, std::vector<FVector>> families;

  /// Total number of directed generators (sum of family sizes).
  int r() const;
  int n_families() const;
  /// Dimension of the span of all defining vectors over F_p.
  int dim_span() const;
};

enum class GroupKind {
  GGS,                   // one family, one vector
  MultiGGS,              // one family, several vectors
  MultiEGSGeneral,       // several families, not the single-vector case
  SingleSymmetricVector, // every family one generator, one symmetric direction
  ConstantVectorG,       // the constant-vector group (script G)
};

enum class BranchClass {
  RegularBranchOverDerived,
  RegularBranchOverGamma3,
  WeaklyBranchOnly,  // constant-vector label; carried but never proven here
};

struct Classification {
  GroupKind kind;
  bool periodic;
  BranchClass branch;
  int threshold_k;   // -1 when no tuple construction applies (GGS data)
  int n_families;
  int r;
  int dim_span;
};

/// All invariant violations of the datum; empty means valid.
std::vector<std::string> validate(const DefiningDatum& datum);
/// Throws std::invalid_argument listing every violation.
void require_valid(const DefiningDatum& datum);

bool is_periodic(const DefiningDatum& datum);
BranchClass branch_class(const DefiningDatum& datum);
/// Smallest k from the main classification: r+1, 4, or 3 by case.
/// Throws for GGS data (one family with a single vector).
int threshold_k(const DefiningDatum& datum);
Classification classify(const DefiningDatum& datum);

std::string to_string(GroupKind kind);
std::string to_string(BranchClass branch);

/// JSON document: {"p": 5, "families": {"1": [[1,4,0,0]], ...}} or the
/// multi-GGS shorthand {"p": 5, "vectors": [[1,4,0,0]]} meaning family 1.
/// Entries are reduced mod p on input.
DefiningDatum parse_datum(const std::string& text);
std::string serialize_datum(const DefiningDatum& datum);

}  // namespace megs
