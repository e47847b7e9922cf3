#pragma once

#include <map>
#include <vector>

#include "alcovewalks/root_datum.hpp"

namespace aw {

/**
 * Classical character algorithms for the Langlands dual group of R. The
 * duality is realized entirely by bookkeeping: weights of the dual group
 * are cocharacters of R, roots of the dual group are the positive coroots
 * of R, and its coroots are the positive roots of R. All arithmetic is
 * exact; half-sums are carried doubled.
 *
 * These are the ground truth for differential testing of the walk model
 * and deliberately share no code with it.
 */

struct CharacterTable {
  std::map<Vec, Int> mult;  // weight of the dual group -> multiplicity

  Int at(const Vec& v) const {
    auto it = mult.find(v);
    return it == mult.end() ? 0 : it->second;
  }
};

// Full weight support {nu : dominant representative of nu <= mu} of the
// irreducible dual-group representation with highest weight mu.
std::vector<Vec> weight_support(const RootDatum& R, const Vec& mu);
std::vector<Vec> dominant_weights_below(const RootDatum& R, const Vec& mu);

// Weight multiplicities by the Freudenthal recursion.
CharacterTable freudenthal_character(const RootDatum& R, const Vec& mu);

// Same multiplicity by Kostant's alternating partition-function formula;
// capped at <2rho, mu> <= 12 (CapExceeded beyond).
Int kostant_multiplicity(const RootDatum& R, const Vec& mu, const Vec& lambda);

// Multiplicity of the dual Levi representation of highest weight lambda in
// the restriction of the dual-group representation of highest weight mu.
Int branching_oracle(const RootDatum& R, const std::vector<int>& J, const Vec& mu, const Vec& lambda);
Int branching_oracle(const RootDatum& R, const std::vector<int>& J, const CharacterTable& table,
                     const Vec& lambda);

// Multiplicity of V_nu in V_mu (x) V_lambda for the dual group.
Int tensor_oracle(const RootDatum& R, const Vec& mu, const Vec& lambda, const Vec& nu);
Int tensor_oracle(const RootDatum& R, const CharacterTable& mu_table, const Vec& lambda, const Vec& nu);

Int weyl_dimension(const RootDatum& R, const Vec& mu);

// Dimension of the dual Levi representation of highest weight lambda.
Int weyl_dimension_levi(const RootDatum& R, const std::vector<int>& J, const Vec& lambda);

}  // namespace aw
