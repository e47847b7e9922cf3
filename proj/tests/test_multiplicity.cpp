#include <doctest.h>

#include "alcovewalks/multiplicity.hpp"
#include "alcovewalks/oracle.hpp"
#include "test_util.hpp"

using namespace aw;
using awtest::datum;

TEST_CASE("dimension bound") {
  const RootDatum& R = datum("GL3");
  CHECK(dimension_bound(R, Vec{3, 1, 0}, Vec{1, 1, 2}) == 2);
  CHECK(dimension_bound(R, Vec{3, 1, 0}, Vec{2, 1, 1}) == 4);
  CHECK(dimension_bound(R, Vec{3, 1, 0}, Vec{1, 2, 1}) == 3);
  CHECK(dimension_bound(R, Vec{0, 0, 0}, Vec{0, 0, 0}) == 0);
  const RootDatum& A1 = datum("A1");
  CHECK_THROWS_AS(dimension_bound(A1, Vec{1}, Vec{0}), Error);  // odd pairing
}

TEST_CASE("chamber-aligned conjugates of lambda") {
  const RootDatum& R = datum("GL3");
  // M = T: lambda_w is always lambda.
  CHECK(lambda_w_conjugate(R, {}, Vec{2, 1, 1}, Vec{0, 1, 3}) == Vec{2, 1, 1});
  // J = {1}, -w(mu) = -(0,1,3): lambda_w = (1,2,1).
  CHECK(lambda_w_conjugate(R, {0}, Vec{2, 1, 1}, Vec{0, 1, 3}) == Vec{1, 2, 1});
  // Full Levi, w = e: -lambda must be antidominant alongside -mu.
  CHECK(lambda_w_conjugate(R, R.full_levi(), Vec{2, 1, 1}, Vec{3, 1, 0}) == Vec{2, 1, 1});
  // A wall case with genuinely distinct candidates is ambiguous.
  auto cands = lambda_w_candidates(R, {0}, Vec{1, 0, 0}, Vec{0, 0, 1});
  CHECK(cands.size() == 2);
  CHECK_THROWS_AS(lambda_w_conjugate(R, {0}, Vec{1, 0, 0}, Vec{0, 0, 1}), Error);
}

TEST_CASE("GL3 weight multiplicity and the printed maximal walks") {
  const RootDatum& R = datum("GL3");
  Vec mu{3, 1, 0};
  CHECK(weight_multiplicity(R, mu, Vec{1, 1, 2}) == 2);
  CHECK(weight_multiplicity(R, mu, Vec{2, 1, 1}) == 2);
  CHECK(weight_multiplicity(R, mu, Vec{1, 2, 1}) == 2);
  CHECK(weight_multiplicity(R, mu, mu) == 1);           // highest weight
  CHECK(weight_multiplicity(R, mu, Vec{3, 0, 1}) == 1); // orbit of the highest weight
  CHECK(weight_multiplicity(R, mu, Vec{4, 0, 0}) == 0);
  CHECK(weight_multiplicity(R, mu, Vec{1, 1, 1}) == 0); // wrong coroot-lattice class

  WalkFamily fam = build_P_family(R, {}, mu, Vec{2, 1, 1});
  WalkFamily maxfam = maximal_family(R, fam);
  CHECK(maxfam.total_walks() == 2);
  for (const FamilyEntry& e : maxfam.entries) {
    for (const LabeledWalk& w : e.walks) {
      CHECK(w.dimension() == 4);
      CHECK(w.end_vertex() == Vec{-2, -1, -1});
      // c- is pinned by the dimension: l(type) - <rho, mu+lambda>.
      CHECK(w.stats.cminus == static_cast<int>(w.letters.size()) - 4);
    }
  }
}

TEST_CASE("empty and trivial families") {
  const RootDatum& R = datum("GL3");
  WalkFamily fam = build_P_family(R, {}, Vec{0, 0, 0}, Vec{0, 0, 0});
  REQUIRE(fam.entries.size() == 1);
  REQUIRE(fam.entries[0].walks.size() == 1);
  CHECK(fam.entries[0].walks[0].labels.empty());
  CHECK(fam.entries[0].walks[0].dimension() == 0);
  CHECK(branching_multiplicity(R, {}, Vec{0, 0, 0}, Vec{0, 0, 0}) == 1);
}

TEST_CASE("Sp4 branching fixture") {
  const RootDatum& R = datum("B2sc");
  Vec mu{1, 1};
  std::vector<int> J{0};
  CHECK(branching_multiplicity(R, J, mu, Vec{0, 0}) == 0);
  CHECK(weight_multiplicity(R, mu, Vec{0, 0}) == 1);
  WalkFamily fam = build_P_family(R, J, mu, Vec{0, 0});
  CHECK(fam.total_walks() > 0);
  CHECK(maximal_family(R, fam).total_walks() == 0);
  // The other Levi constituents are found by the walk model too.
  CHECK(branching_multiplicity(R, J, mu, Vec{1, 1}) == 1);
  CHECK(branching_multiplicity(R, J, mu, Vec{-1, -1}) == 1);
  CHECK(branching_multiplicity(R, J, mu, Vec{1, -1}) == 1);
}

TEST_CASE("PRV for Levi branching") {
  for (const char* name : {"A2", "B2", "B2sc", "GL3"}) {
    const RootDatum& R = datum(name);
    for (const Vec& mu : awtest::dominant_grid(R, 6)) {
      for (const auto& J : awtest::all_levi_subsets(R)) {
        for (int w = 0; w < static_cast<int>(R.weyl.size()); ++w) {
          Vec lam = R.act(w, mu);
          if (!R.is_dominant(lam, J)) continue;
          INFO(name, " mu=", vec_to_string(mu), " lam=", vec_to_string(lam));
          CHECK(branching_multiplicity(R, J, mu, lam) == 1);
        }
      }
    }
  }
}

TEST_CASE("M = G degeneration") {
  for (const char* name : {"A2", "B2sc"}) {
    const RootDatum& R = datum(name);
    auto grid = awtest::dominant_grid(R, 6);
    for (const Vec& mu : grid) {
      for (const Vec& lam : grid) {
        Int expected = (lam == mu) ? 1 : 0;
        CHECK(branching_multiplicity(R, R.full_levi(), mu, lam) == expected);
      }
      // The single contributing walk has no negative crossings.
      WalkFamily maxfam = maximal_family(R, build_P_family(R, R.full_levi(), mu, mu));
      REQUIRE(maxfam.total_walks() == 1);
      for (const FamilyEntry& e : maxfam.entries)
        for (const LabeledWalk& w : e.walks) CHECK(w.stats.cminus == 0);
    }
  }
}

TEST_CASE("the dominance prune never changes a family") {
  for (const char* name : {"A2", "B2sc", "GL3"}) {
    const RootDatum& R = datum(name);
    for (const Vec& mu : awtest::dominant_grid(R, 5)) {
      for (const auto& J : awtest::all_levi_subsets(R)) {
        for (const Vec& lam : weight_support(R, mu)) {
          if (!R.is_dominant(lam, J)) continue;
          WalkFamily pruned = build_P_family(R, J, mu, lam, true);
          WalkFamily full = build_P_family(R, J, mu, lam, false);
          CHECK(pruned.total_walks() == full.total_walks());
          std::size_t nonempty = 0;
          for (const FamilyEntry& e : full.entries) nonempty += e.walks.empty() ? 0 : 1;
          std::size_t nonempty_pruned = 0;
          for (const FamilyEntry& e : pruned.entries) nonempty_pruned += e.walks.empty() ? 0 : 1;
          CHECK(nonempty == nonempty_pruned);
        }
      }
    }
  }
}

TEST_CASE("tensor multiplicities against Clebsch-Gordan") {
  const RootDatum& R = datum("A1");
  CHECK(tensor_multiplicity(R, Vec{1}, Vec{1}, Vec{2}) == 1);
  CHECK(tensor_multiplicity(R, Vec{1}, Vec{1}, Vec{0}) == 1);
  CHECK(tensor_multiplicity(R, Vec{1}, Vec{1}, Vec{1}) == 0);
  CHECK(tensor_multiplicity(R, Vec{2}, Vec{2}, Vec{2}) == 1);
  CHECK(tensor_multiplicity(R, Vec{2}, Vec{2}, Vec{0}) == 1);
  CHECK(tensor_multiplicity(R, Vec{2}, Vec{2}, Vec{6}) == 0);  // nu not <= mu+lambda
}

TEST_CASE("convolution families") {
  const RootDatum& R = datum("A2");
  // mu = lambda = nu = 0: the single empty walk, total polynomial 1.
  WalkFamily fam0 = convolution_walk_family(R, Vec{0, 0}, Vec{0, 0}, Vec{0, 0});
  CHECK(fam0.total_walks() == 1);
  std::vector<LabeledWalk> all;
  for (const auto& e : fam0.entries) all.insert(all.end(), e.walks.begin(), e.walks.end());
  CHECK(cell_polynomial(all) == CellPolynomial::one());

  // Cartan component: the fiber is a point, so the family is a single
  // zero-dimensional cell.
  Vec mu{1, 1}, lam{1, 0};
  WalkFamily fam = convolution_walk_family(R, lam, mu, vec_add(mu, lam));
  CHECK(fam.total_walks() == 1);
  all.clear();
  for (const auto& e : fam.entries) all.insert(all.end(), e.walks.begin(), e.walks.end());
  REQUIRE(all.size() == 1);
  CHECK(all[0].dimension() == 0);
  CHECK(cell_polynomial(all) == CellPolynomial::one());

  // No walk in any convolution family exceeds the dimension bound, and
  // cell counts at prime powers match the maximal count at leading order.
  for (const Vec& nu : dominant_weights_below(R, vec_add(mu, lam))) {
    WalkFamily f = convolution_walk_family(R, lam, mu, nu);
    for (const auto& e : f.entries)
      for (const LabeledWalk& w : e.walks) CHECK(w.dimension() <= f.dim_bound);
  }
}

TEST_CASE("weighted length") {
  const RootDatum& R = datum("GL3");
  CHECK(weighted_length(R, Vec{3, 1, 0}, 0) == 0);
  int s1 = R.w(0).right_mult[0];
  CHECK(weighted_length(R, Vec{3, 1, 0}, s1) == 2);
  CHECK(R.w(s1).length == 1);
  // The weighted length dominates the length, with equality exactly when
  // every inversion pairs to 1 (so for every simple reflection, and for all
  // elements only in rank one).
  Vec rho_like{1, 0, -1};
  for (int w = 0; w < static_cast<int>(R.weyl.size()); ++w) {
    Int wl = weighted_length(R, rho_like, w);
    CHECK(wl >= R.w(w).length);
    if (R.w(w).length <= 1) CHECK(wl == R.w(w).length);
  }
  const RootDatum& A1 = datum("A1");
  for (int w = 0; w < 2; ++w) CHECK(weighted_length(A1, Vec{1}, w) == A1.w(w).length);
  // w2 must be minimal modulo the stabilizer of lambda_d.
  CHECK_THROWS_AS(weighted_length(R, Vec{1, 1, 0}, s1), Error);
}

TEST_CASE("appendix identity chains") {
  const RootDatum& R = datum("GL3");
  Vec mu{3, 1, 0};
  AppendixReport rep = appendix_identities(R, mu, Vec{2, 1, 1}, 0);
  CHECK(rep.rho_mu_lambda == 4);
  CHECK(rep.len_t_mu == 6);
  CHECK(rep.ht_mu_lambda_d == 2);
  CHECK(rep.weighted_len == 0);  // lambda_2 is dominant already
  CHECK(rep.separation == 2);    // N = <rho, 2 lambda_d> = <rho, mu+lambda> - ht
  CHECK(rep.cminus_min == 2);

  // lambda = mu, w = e: everything collapses to <rho, 2 mu> = l(t_mu).
  AppendixReport top = appendix_identities(R, mu, mu, 0);
  CHECK(top.rho_mu_lambda == top.len_t_mu);
  CHECK(top.ht_mu_lambda_d == 0);
  CHECK(top.weighted_len == 0);
  CHECK(top.cminus_min == 0);

  CHECK_THROWS_AS(appendix_identities(R, mu, Vec{5, 0, -1}, 0), Error);

  // The chains hold over the sweep grids (asserted inside the call).
  for (const char* name : {"A1", "A2", "B2", "GL3"}) {
    const RootDatum& D = datum(name);
    for (const Vec& m : awtest::dominant_grid(D, 6)) {
      auto support = weight_support(D, m);
      for (int w : min_coset_reps_stab(D, m))
        for (const Vec& lam : support) appendix_identities(D, m, lam, w);
    }
  }
}

TEST_CASE("higher rank spot checks") {
  // GL2: a nontrivial central direction in rank 2.
  const RootDatum& GL2 = datum("GL2");
  for (Int k = 0; k <= 3; ++k) CHECK(weight_multiplicity(GL2, Vec{3, 0}, Vec{3 - k, k}) == 1);
  CHECK(weight_multiplicity(GL2, Vec{3, 0}, Vec{4, -1}) == 0);
  CHECK(tensor_multiplicity(GL2, Vec{1, 0}, Vec{1, 0}, Vec{1, 1}) == 1);
  CHECK(tensor_multiplicity(GL2, Vec{1, 0}, Vec{1, 0}, Vec{2, 0}) == 1);

  // A3 and GL4: rank 3 and 4 apartments with larger Weyl groups.
  for (const char* name : {"A3", "GL4"}) {
    const RootDatum& R = datum(name);
    std::vector<Vec> mus;
    if (name == std::string("A3"))
      mus = {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}};
    else
      mus = {{1, 0, 0, 0}, {1, 1, 0, 0}, {2, 1, 1, 0}};
    for (const Vec& mu : mus) {
      CharacterTable table = freudenthal_character(R, mu);
      for (const Vec& lam : weight_support(R, mu)) {
        INFO(name, " mu=", vec_to_string(mu), " lam=", vec_to_string(lam));
        CHECK(weight_multiplicity(R, mu, lam) == table.at(lam));
      }
      std::vector<int> J{0, 2};  // disconnected Levi
      for (const Vec& lam : weight_support(R, mu)) {
        if (!R.is_dominant(lam, J)) continue;
        CHECK(branching_multiplicity(R, J, mu, lam) == branching_oracle(R, J, table, lam));
      }
    }
  }
  // The 6-dimensional representation of the dual of A3 restricts to the
  // middle Levi as 4 + 1 + 1.
  const RootDatum& A3 = datum("A3");
  CHECK(weyl_dimension(A3, Vec{0, 1, 0}) == 6);
}

TEST_CASE("B2 and B2sc are the same datum in different bases") {
  // Coweights translate by v -> (<a1, v>, <a2, v>); multiplicities must
  // agree. The Sp4 fixture in B2 coordinates: mu = (0,1), lambda = 0.
  const RootDatum& E = datum("B2sc");
  const RootDatum& B = datum("B2");
  auto to_b2 = [&](const Vec& v) {
    return Vec{dot(E.spec.simple_roots[0], v), dot(E.spec.simple_roots[1], v)};
  };
  CHECK(to_b2(Vec{1, 1}) == Vec{0, 1});
  CHECK(weyl_dimension(B, Vec{0, 1}) == 5);
  CHECK(branching_multiplicity(B, {0}, Vec{0, 1}, Vec{0, 0}) == 0);
  CHECK(weight_multiplicity(B, Vec{0, 1}, Vec{0, 0}) == 1);
  for (const Vec& mu : awtest::dominant_grid(E, 8)) {
    for (const Vec& lam : weight_support(E, mu)) {
      INFO("mu=", vec_to_string(mu), " lam=", vec_to_string(lam));
      CHECK(weight_multiplicity(E, mu, lam) == weight_multiplicity(B, to_b2(mu), to_b2(lam)));
      if (E.is_dominant(lam, {0}))
        CHECK(branching_multiplicity(E, {0}, mu, lam) ==
              branching_multiplicity(B, {0}, to_b2(mu), to_b2(lam)));
    }
  }
}

TEST_CASE("multi-component data: one affine letter per component") {
  RootDatum R = build_root_datum(parse_datum_config(
      "rank = 4\nsimple_roots = 2,0,0,0;0,1,-1,0;0,0,1,-1\nsimple_coroots = 1,0,0,0;0,1,-1,0;0,0,1,-1\n"));
  CHECK(R.ncomp == 2);
  CHECK(R.highest_root.size() == 2);
  Vec mu{1, 1, 0, 0};
  CharacterTable table = freudenthal_character(R, mu);
  for (const Vec& lam : weight_support(R, mu)) {
    INFO("lam=", vec_to_string(lam));
    CHECK(weight_multiplicity(R, mu, lam) == table.at(lam));
  }
  for (const auto& J : {std::vector<int>{0}, std::vector<int>{1, 2}}) {
    for (const Vec& lam : weight_support(R, mu)) {
      if (!R.is_dominant(lam, J)) continue;
      CHECK(branching_multiplicity(R, J, mu, lam) == branching_oracle(R, J, table, lam));
    }
  }
}

TEST_CASE("walks, Freudenthal and Kostant close the triangle") {
  for (const char* name : {"A2", "B2sc", "GL3"}) {
    const RootDatum& R = datum(name);
    for (const Vec& mu : awtest::dominant_grid(R, 6)) {
      if (dot(R.two_rho, mu) > 12) continue;
      for (const Vec& lam : weight_support(R, mu))
        CHECK(weight_multiplicity(R, mu, lam) == kostant_multiplicity(R, mu, lam));
    }
  }
}

TEST_CASE("lambda-indexed families partition the Iwahori orbit mass") {
  // Summing the family cell polynomials over all M-dominant lambda
  // reproduces sum_w q^{l((t_{-w(mu)})_0)}: every walk of every type lands
  // in exactly one lambda-family.
  for (const char* name : {"A2", "B2sc", "GL3"}) {
    const RootDatum& R = datum(name);
    for (const Vec& mu : awtest::dominant_grid(R, 6)) {
      for (const auto& J : awtest::all_levi_subsets(R)) {
        CellPolynomial total = CellPolynomial::zero();
        for (const Vec& lam : weight_support(R, mu)) {
          if (!R.is_dominant(lam, J)) continue;
          WalkFamily fam = build_P_family(R, J, mu, lam);
          for (const FamilyEntry& e : fam.entries) total.add(cell_polynomial(e.walks));
        }
        CellPolynomial expected = CellPolynomial::zero();
        for (int w : min_coset_reps_stab(R, mu)) {
          AffElt t0 = right_w0_minimal(R, translation_of(R, R.act(w, mu)));
          expected.add(CellPolynomial::q_power(static_cast<int>(aff_length(R, t0))));
        }
        CAPTURE(name);
        CHECK(total == expected);
      }
    }
  }
}

TEST_CASE("walk model against the classical oracles, small grids") {
  for (const char* name : {"A2", "B2sc"}) {
    const RootDatum& R = datum(name);
    for (const Vec& mu : awtest::dominant_grid(R, 6)) {
      CharacterTable table = freudenthal_character(R, mu);
      for (const Vec& lam : weight_support(R, mu)) {
        INFO(name, " mu=", vec_to_string(mu), " lam=", vec_to_string(lam));
        CHECK(weight_multiplicity(R, mu, lam) == table.at(lam));
      }
      for (const auto& J : awtest::all_levi_subsets(R)) {
        for (const Vec& lam : weight_support(R, mu)) {
          if (!R.is_dominant(lam, J)) continue;
          INFO(name, " mu=", vec_to_string(mu), " lam=", vec_to_string(lam));
          CHECK(branching_multiplicity(R, J, mu, lam) == branching_oracle(R, J, table, lam));
        }
      }
    }
  }
}
