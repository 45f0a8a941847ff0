#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermhull/code.hpp"
#include "hermhull/report.hpp"

namespace hermhull {

/// GRS_k(b, a): rows (a_1 b_1^j, ..., a_n b_n^j) for j < k.
struct GrsSpec {
  std::vector<Gf> b;
  std::vector<Gf> a;
  int k = 0;

  GrsSpec with_dimension(int dim) const { return {b, a, dim}; }
};

/// The Vandermonde-with-scaling generator (not reduced).
MatrixGF grs_generator(const GrsSpec& spec);
LinearCode grs_code(const GrsSpec& spec);

enum class Family { CON1, CON2, CON3, CON4, CON1E, CON2E, CON3E, CON4E };

std::string to_string(Family f);
std::optional<Family> parse_family(const std::string& s);

struct FamilyParams {
  std::uint32_t q = 0;
  int k = 0;
  int z = 0;
  int f = 0;
  int m = 0;
};

/// Empty when the parameters are in range, otherwise the violated constraint.
/// `relaxed` admits z equal to the floor bound of the enlarged families.
std::optional<std::string> range_violation(Family fam, const FamilyParams& p, bool relaxed = false);
/// Every in-range parameter tuple for the family at this q.
std::vector<FamilyParams> in_range_params(Family fam, std::uint32_t q, bool relaxed = false);

struct GrsHullClaim {
  Family family;
  FamilyParams params;
  int s = 0;  // gcd parameter of CON3/CON4/CON3E/CON4E, 0 otherwise
  GrsSpec spec;
  int hull_dim = 0;
  int gram_rank = 0;
  /// Hull equals `subcode` (CON1-CON4) or merely contains it (enlarged families).
  bool hull_equality = false;
  GrsSpec subcode;
  bool relaxed = false;
};

struct Construction {
  LinearCode code;
  GrsHullClaim claim;
};

/// Builds the family member; throws std::invalid_argument when out of range.
Construction construct_family(Family fam, const FamilyParams& p, bool allow_relaxed = false);

struct VerifyOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Enumerate the hull distance when within budget.
  bool enumerate_hull = true;
  /// Enumerate the code distance when within budget.
  bool enumerate_code = false;
};

ConstructionReport verify_claim(const LinearCode& code, const GrsHullClaim& claim, const VerifyOptions& opt = {});

/// (GRS_k(b^, a^), GRS_l(b^, a^)) from a codeword x of E(D_{k,l}) over GF(q), with the
/// coordinates of x indexed like b = (alpha^0, ..., alpha^{q^2-2}, 0).
std::pair<GrsSpec, GrsSpec> puncture_from_p_codeword(const FieldContext& gfq2, const RowVectorGF& x, int k, int l);

/// The evaluation vector (alpha^0, ..., alpha^{q^2-2}, 0).
std::vector<Gf> full_evaluation_vector(const FieldContext& gfq2);

/// Rains' code of the pair (GRS_l(b, 1), GRS_k(b, 1)) of length q^2, over GF(q).
LinearCode rains_grs_pair(std::uint32_t q, int k, int l);

}  // namespace hermhull
