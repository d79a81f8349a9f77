#pragma once

#include <optional>
#include <string>
#include <vector>

#include "carpet/extendability.hpp"

namespace carpet {

struct FanoQuery {
  Int r;  // index, >= 2
  Int g;  // genus, >= 3
};

struct MukaiQuery {
  Int n;  // dimension, >= 4
  Int r;
  Int g;
};

enum class FamilyStatus { Empty, NonemptyIrreducible };

struct ClassificationRecord {
  FamilyStatus status;
  std::string reason;
  std::optional<Int> tangent_dim_at_cone;  // present only when nonempty
  std::optional<BoundValue> alpha;
  std::optional<bool> unique_fano_through_general_k3;
  std::vector<std::string> anchors;
};

// One row of the low-genus alpha table: the (r, g) pair, the value (an
// equality except at (3, 3), where only the upper bound is certified), and
// the carpet tuple that produces it.
struct LowGenusAlpha {
  Int r;
  Int g;
  BoundValue alpha;
  Int carpet_a;
  Int carpet_b;
  int carpet_e;
};

// The seven low-genus rows, with alpha computed through the estimators on
// the carpet tuples (never hard-coded).
const std::vector<LowGenusAlpha>& low_genus_alpha_table();

// Hilbert-scheme tangent dimension at the cone over a K3 of index r and
// genus g: 18 + (2+r^2(g-1))^2 + alpha + (2+r^2(g-1)) + correction, where
// correction accounts for h0(N(-2)) <= 1 (nonzero only at (r, g) = (2, 3)).
Int cone_tangent_dim(const Int& r, const Int& g, const Int& alpha, int correction);

// Tangent dimension at the triple cone for the dimension-5 Mukai case:
// 18 + (2+r^2(g-1))^2 + 3(alpha + 2 + r^2(g-1)).
Int mukai_triple_cone_dim(const Int& r, const Int& g, const Int& alpha);

// Emptiness / irreducibility of the locus of Picard-rank-one Fano threefolds
// of index r and genus g, anticanonically embedded.
ClassificationRecord classify_fano(const FanoQuery& q);

// Same for Mukai n-folds (n >= 4) with index r(n-2) and genus g.
ClassificationRecord classify_mukai(const MukaiQuery& q);

}  // namespace carpet
