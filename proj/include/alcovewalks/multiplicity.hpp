#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alcovewalks/walks.hpp"

namespace aw {

/**
 * Walk families behind the three multiplicity theorems. All multiplicities
 * reported here are statements about representations of the Langlands dual
 * group: its weights are the cocharacters of R.
 *
 * For a dominant mu and an M-dominant lambda, the branching family collects,
 * for each minimal coset representative w of W0/Stab(mu), the positively
 * folded walks of type (t_{-w(mu)})_0 from the base alcove to the vertex
 * -lambda_w, under the orientation attached to the Levi subset. Walks of the
 * maximal dimension <rho, mu + lambda> count the branching multiplicity.
 */
struct FamilyEntry {
  int w = 0;               // W0 index of the coset representative
  Vec w_mu;                // w(mu) (w(mu*) for tensor families)
  AffElt type_elt;         // right W0-minimal element of t_{-w(mu)} W0
  ReducedWord word;        // the reduced word used for enumeration
  Vec lambda_w;            // endpoint vertex is -lambda_w (branching)
  std::vector<Vec> target_orbit;  // tensor families: allowed endpoint vertices
  std::vector<LabeledWalk> walks;
};

struct WalkFamily {
  std::string kind;  // "branch" or "convolution"
  Vec mu, lambda, nu;
  std::vector<int> levi;
  Int dim_bound = 0;
  std::vector<FamilyEntry> entries;

  std::size_t total_walks() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.walks.size();
    return n;
  }
};

// <rho, mu + lambda>, asserting integrality (NonIntegral if <2rho, mu+lambda>
// is odd, which signals mu - lambda outside the coroot lattice).
Int dimension_bound(const RootDatum& R, const Vec& mu, const Vec& lambda);

// The W_M-conjugate lambda_w of lambda such that -lambda_w lies weakly in
// the same closed M-Weyl chamber as -w_mu. Throws AmbiguousChamber if more
// than one distinct conjugate passes the chamber test.
Vec lambda_w_conjugate(const RootDatum& R, const std::vector<int>& J, const Vec& lambda, const Vec& w_mu);

// All conjugates passing the weak chamber test (distinct values, minimal-u
// candidate first). Used to tolerate wall cases whose walk sets are empty.
std::vector<Vec> lambda_w_candidates(const RootDatum& R, const std::vector<int>& J, const Vec& lambda,
                                     const Vec& w_mu);

// The full family P of positively folded walks for a branching query: per
// representative w, the walks of type (t_{-w(mu)})_0 from the base alcove to
// any vertex in the W_M-orbit of -lambda (for M-regular -w(mu) only the
// chamber-aligned vertex -lambda_w is ever reached). With prune=true,
// representatives w with no orbit vertex below -w(mu) in dominance order are
// skipped; this cannot change the family, since no walk of the type reaches
// those vertices.
WalkFamily build_P_family(const RootDatum& R, const std::vector<int>& J, const Vec& mu, const Vec& lambda,
                          bool prune = true);

// Subfamily of walks of dimension exactly <rho, mu + lambda>; also checks
// the equivalent characterization c- = l(type) - <rho, mu + lambda>.
WalkFamily maximal_family(const RootDatum& R, const WalkFamily& family);

Int branching_multiplicity(const RootDatum& R, const std::vector<int>& J, const Vec& mu, const Vec& lambda);
Int weight_multiplicity(const RootDatum& R, const Vec& mu, const Vec& lambda);
Int tensor_multiplicity(const RootDatum& R, const Vec& mu, const Vec& lambda, const Vec& nu);

// Unfiltered walk family of the convolution fiber Conv(lambda, mu; nu):
// base-alcove orientation, walks of type (t_{-w(mu*)})_0 from t_{-nu}(a) to
// a vertex in the orbit of -lambda.
WalkFamily convolution_walk_family(const RootDatum& R, const Vec& lambda, const Vec& mu, const Vec& nu);

// lambda_d-weighted length of w2 (in W0^{lambda_d}): both formulas
// sum_{alpha>0, w2(alpha)<0} <alpha, lambda_d> and <rho, lambda_d - w2(lambda_d)>
// are evaluated and must agree; the result dominates l(w2).
Int weighted_length(const RootDatum& R, const Vec& lambda_d, int w2);

struct AppendixReport {
  Int rho_mu_lambda;    // <rho, mu + lambda>
  Int len_t_mu;         // l(t_mu)
  Int ht_mu_lambda_d;   // ht(mu - lambda_d)
  Int weighted_len;     // l^{lambda_d}(w'')
  Int len_w2;           // l(w'')
  Int separation;       // hyperplanes separating (t_{-w''(lambda_d)})_0 a from the chamber
  Int len_type;         // l((t_{-w(mu)})_0)
  Int len_w;            // l(w)
  Int cminus_min;       // l(type) - <rho, mu + lambda>
};

// Evaluates both identity chains relating the above quantities and asserts
// them; PreconditionViolated if lambda is outside the weight support of mu.
AppendixReport appendix_identities(const RootDatum& R, const Vec& mu, const Vec& lambda, int w);

}  // namespace aw
