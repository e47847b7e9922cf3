#include "alcovewalks/multiplicity.hpp"

#include <algorithm>

namespace aw {

Int dimension_bound(const RootDatum& R, const Vec& mu, const Vec& lambda) {
  Int twice = dot(R.two_rho, vec_add(mu, lambda));
  check(twice % 2 == 0, Errc::NonIntegral, "<2rho, mu+lambda> is odd: mu - lambda not in the coroot lattice");
  return twice / 2;
}

std::vector<Vec> lambda_w_candidates(const RootDatum& R, const std::vector<int>& J, const Vec& lambda,
                                     const Vec& w_mu) {
  std::vector<int> m_roots = R.levi_positive_roots(J);
  Vec neg_lambda = vec_neg(lambda);
  Vec neg_wmu = vec_neg(w_mu);
  std::vector<Vec> out;
  for (int u : R.levi_elements(J)) {
    Vec v = R.act(u, neg_lambda);
    bool same_chamber = true;
    for (int idx : m_roots) {
      const Vec& beta = R.pos_roots[idx];
      if (dot(beta, v) * dot(beta, neg_wmu) < 0) {
        same_chamber = false;
        break;
      }
    }
    if (same_chamber && std::find(out.begin(), out.end(), vec_neg(v)) == out.end()) out.push_back(vec_neg(v));
  }
  check(!out.empty(), Errc::Internal, "no chamber-aligned conjugate found");
  return out;
}

Vec lambda_w_conjugate(const RootDatum& R, const std::vector<int>& J, const Vec& lambda, const Vec& w_mu) {
  std::vector<Vec> cands = lambda_w_candidates(R, J, lambda, w_mu);
  if (cands.size() > 1)
    fail(Errc::AmbiguousChamber, "several W_M-conjugates of -lambda share the closed chamber of -w(mu)");
  return cands.front();
}

namespace {

// Shared enumeration for one family entry. Endpoint constraints are given by
// the caller; min_dim is only a pruning aid and never changes the walk set
// when it comes from the dimension of the walks being asked for.
FamilyEntry make_entry(const RootDatum& R, int w, const Vec& w_mu, const AffElt& start,
                       const Orientation& o, const WalkConstraints& cons) {
  FamilyEntry e;
  e.w = w;
  e.w_mu = w_mu;
  e.type_elt = right_w0_minimal(R, translation_of(R, w_mu));
  e.word = reduced_word(R, e.type_elt);
  e.walks = enumerate_folded_walks(R, start, e.word, o, cons);
  return e;
}

}  // namespace

WalkFamily build_P_family(const RootDatum& R, const std::vector<int>& J, const Vec& mu, const Vec& lambda,
                          bool prune) {
  check(R.is_dominant(mu, R.full_levi()), Errc::NotDominant, "build_P_family: mu is not dominant");
  check(R.is_dominant(lambda, J), Errc::NotDominant, "build_P_family: lambda is not M-dominant");
  WalkFamily fam;
  fam.kind = "branch";
  fam.mu = mu;
  fam.lambda = lambda;
  fam.levi = J;
  fam.dim_bound = dimension_bound(R, mu, lambda);
  if (!coroot_coords(R, vec_sub(mu, lambda))) return fam;  // empty: vertex unreachable

  // Walks are collected per conjugate endpoint vertex -w''(lambda), w'' in
  // W_M. When -w(mu) is M-regular only the chamber-aligned conjugate
  // -lambda_w is reachable; on M-walls other conjugates can carry (lower
  // dimensional) cells, and only the full orbit makes the lambda-indexed
  // families partition the Iwahori orbit of the type.
  Orientation o = orientation_for_levi(R, J);
  AffElt base = aff_identity(R);
  std::vector<int> wm = R.levi_elements(J);
  for (int w : min_coset_reps_stab(R, mu)) {
    Vec w_mu = R.act(w, mu);
    std::vector<Vec> orbit;
    for (int u : wm) {
      Vec v = R.act(u, vec_neg(lambda));
      if (std::find(orbit.begin(), orbit.end(), v) == orbit.end()) orbit.push_back(v);
    }
    std::sort(orbit.begin(), orbit.end());
    if (prune) {
      // Necessary condition for any of the vertices to be reachable.
      bool reachable = false;
      for (const Vec& v : orbit)
        if (dominance_leq(R, v, vec_neg(w_mu))) {
          reachable = true;
          break;
        }
      if (!reachable) continue;
    }
    WalkConstraints cons;
    cons.end_orbit = orbit;
    FamilyEntry e = make_entry(R, w, w_mu, base, o, cons);
    e.lambda_w = lambda_w_candidates(R, J, lambda, w_mu).front();
    e.target_orbit = std::move(orbit);
    fam.entries.push_back(std::move(e));
  }
  return fam;
}

WalkFamily maximal_family(const RootDatum& R, const WalkFamily& family) {
  WalkFamily out = family;
  for (FamilyEntry& e : out.entries) {
    Int type_len = aff_length(R, e.type_elt);
    std::vector<LabeledWalk> keep;
    for (const LabeledWalk& w : e.walks) {
      check(w.dimension() <= family.dim_bound, Errc::Internal, "walk dimension exceeds <rho, mu+lambda>");
      if (w.dimension() == family.dim_bound) {
        check(w.stats.cminus == type_len - family.dim_bound, Errc::Internal,
              "maximal walk violates the c- characterization");
        keep.push_back(w);
      }
    }
    e.walks = std::move(keep);
  }
  return out;
}

Int branching_multiplicity(const RootDatum& R, const std::vector<int>& J, const Vec& mu, const Vec& lambda) {
  check(R.is_dominant(mu, R.full_levi()), Errc::NotDominant, "branching_multiplicity: mu is not dominant");
  check(R.is_dominant(lambda, J), Errc::NotDominant, "branching_multiplicity: lambda is not M-dominant");
  if (!coroot_coords(R, vec_sub(mu, lambda))) return 0;
  WalkFamily fam = build_P_family(R, J, mu, lambda);
  return static_cast<Int>(maximal_family(R, fam).total_walks());
}

Int weight_multiplicity(const RootDatum& R, const Vec& mu, const Vec& lambda) {
  return branching_multiplicity(R, {}, mu, lambda);
}

namespace {

std::vector<Vec> orbit_of(const RootDatum& R, const Vec& v) {
  std::vector<Vec> out;
  for (int w = 0; w < static_cast<int>(R.weyl.size()); ++w) {
    Vec x = R.act(w, v);
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WalkFamily build_convolution_family(const RootDatum& R, const Vec& lambda, const Vec& mu, const Vec& nu,
                                    std::optional<int> min_dim) {
  check(R.is_dominant(mu, R.full_levi()) && R.is_dominant(lambda, R.full_levi()) &&
            R.is_dominant(nu, R.full_levi()),
        Errc::NotDominant, "convolution family requires dominant mu, lambda, nu");
  WalkFamily fam;
  fam.kind = "convolution";
  fam.mu = mu;
  fam.lambda = lambda;
  fam.nu = nu;
  fam.dim_bound = dimension_bound(R, vec_add(mu, lambda), vec_neg(nu));  // <rho, mu+lambda-nu>
  if (!coroot_coords(R, vec_sub(vec_add(mu, lambda), nu))) return fam;

  Vec mu_star = vec_neg(R.act(R.longest, mu));
  Orientation o = orientation_for_levi(R, R.full_levi());
  AffElt start = translation_of(R, nu);  // the alcove t_{-nu}(a)
  std::vector<Vec> orbit = orbit_of(R, vec_neg(lambda));
  for (int w : min_coset_reps_stab(R, mu_star)) {
    Vec w_mu = R.act(w, mu_star);
    AffElt type_elt = right_w0_minimal(R, translation_of(R, w_mu));
    if (min_dim && aff_length(R, type_elt) < *min_dim) continue;  // dim <= word length
    WalkConstraints cons;
    cons.end_orbit = orbit;
    cons.min_dim = min_dim;
    FamilyEntry e = make_entry(R, w, w_mu, start, o, cons);
    e.lambda_w = lambda;
    e.target_orbit = orbit;
    fam.entries.push_back(std::move(e));
  }
  return fam;
}

}  // namespace

Int tensor_multiplicity(const RootDatum& R, const Vec& mu, const Vec& lambda, const Vec& nu) {
  check(R.is_dominant(mu, R.full_levi()) && R.is_dominant(lambda, R.full_levi()) &&
            R.is_dominant(nu, R.full_levi()),
        Errc::NotDominant, "tensor_multiplicity requires dominant mu, lambda, nu");
  if (!coroot_coords(R, vec_sub(vec_add(mu, lambda), nu))) return 0;
  Int bound = dimension_bound(R, vec_add(mu, lambda), vec_neg(nu));
  WalkFamily fam = build_convolution_family(R, lambda, mu, nu, static_cast<int>(bound));
  Int count = 0;
  for (const FamilyEntry& e : fam.entries) {
    Int type_len = aff_length(R, e.type_elt);
    for (const LabeledWalk& w : e.walks) {
      check(w.dimension() <= bound, Errc::Internal, "walk dimension exceeds <rho, mu+lambda-nu>");
      if (w.dimension() == bound) {
        check(w.stats.cminus == type_len - bound, Errc::Internal,
              "maximal walk violates the c- characterization");
        ++count;
      }
    }
  }
  return count;
}

WalkFamily convolution_walk_family(const RootDatum& R, const Vec& lambda, const Vec& mu, const Vec& nu) {
  return build_convolution_family(R, lambda, mu, nu, std::nullopt);
}

Int weighted_length(const RootDatum& R, const Vec& lambda_d, int w2) {
  check(R.is_dominant(lambda_d, R.full_levi()), Errc::NotDominant, "weighted_length: lambda_d not dominant");
  for (int i = 0; i < R.nsimple; ++i) {
    if (dot(R.spec.simple_roots[i], lambda_d) != 0) continue;
    int ws = R.w(w2).right_mult[i];
    check(R.w(ws).length > R.w(w2).length, Errc::PreconditionViolated,
          "weighted_length: w2 is not minimal in its coset modulo the stabilizer");
  }
  // sum over positive alpha with w2(alpha) < 0 of <alpha, lambda_d>.
  Int by_inversions = 0;
  int inversions = 0;
  for (const Vec& alpha : R.pos_roots) {
    Vec wa = R.act_weight(w2, alpha);
    if (dot(wa, R.two_rho_check) < 0) {
      by_inversions += dot(alpha, lambda_d);
      ++inversions;
    }
  }
  check(inversions == R.w(w2).length, Errc::Internal, "inversion count differs from stored length");
  Int twice = dot(R.two_rho, vec_sub(lambda_d, R.act(w2, lambda_d)));
  check(twice % 2 == 0, Errc::Internal, "odd <2rho, lambda_d - w2(lambda_d)>");
  check(twice / 2 == by_inversions, Errc::Internal, "weighted length formulas disagree");
  check(by_inversions >= R.w(w2).length, Errc::Internal, "weighted length below Coxeter length");
  return by_inversions;
}

AppendixReport appendix_identities(const RootDatum& R, const Vec& mu, const Vec& lambda, int w) {
  check(R.is_dominant(mu, R.full_levi()), Errc::NotDominant, "appendix_identities: mu not dominant");
  Vec lambda_d = dominant_rep(R, lambda, R.full_levi()).first;
  check(dominance_leq(R, lambda_d, mu).has_value(), Errc::PreconditionViolated,
        "appendix_identities: lambda outside the weight support of mu");
  for (int i = 0; i < R.nsimple; ++i) {
    if (dot(R.spec.simple_roots[i], mu) != 0) continue;
    int ws = R.w(w).right_mult[i];
    check(R.w(ws).length > R.w(w).length, Errc::PreconditionViolated,
          "appendix_identities: w is not minimal in its coset modulo the stabilizer of mu");
  }

  // w'' in W0^{lambda_d} with w''(lambda_d) = lambda: smallest such element.
  int w2 = -1;
  for (int cand = 0; cand < static_cast<int>(R.weyl.size()); ++cand) {
    if (R.act(cand, lambda_d) != lambda) continue;
    if (w2 < 0 || R.w(cand).length < R.w(w2).length) w2 = cand;
  }
  check(w2 >= 0, Errc::Internal, "lambda is not in the orbit of its dominant representative");

  AppendixReport rep{};
  rep.rho_mu_lambda = dimension_bound(R, mu, lambda);
  rep.len_t_mu = aff_length(R, translation_of(R, mu));
  rep.ht_mu_lambda_d = *dominance_leq(R, lambda_d, mu);
  rep.weighted_len = weighted_length(R, lambda_d, w2);
  rep.len_w2 = R.w(w2).length;
  rep.separation = separating_count_from_chamber(R, right_w0_minimal(R, translation_of(R, lambda)));
  rep.len_type = aff_length(R, right_w0_minimal(R, translation_of(R, R.act(w, mu))));
  rep.len_w = R.w(w).length;
  rep.cminus_min = rep.len_type - rep.rho_mu_lambda;

  check(rep.rho_mu_lambda == rep.len_t_mu - rep.ht_mu_lambda_d - rep.weighted_len, Errc::Internal,
        "identity <rho,mu+lambda> = l(t_mu) - ht(mu-lambda_d) - weighted length failed");
  check(rep.rho_mu_lambda == rep.ht_mu_lambda_d + rep.separation, Errc::Internal,
        "identity <rho,mu+lambda> = ht(mu-lambda_d) + N failed");
  check(rep.cminus_min == rep.ht_mu_lambda_d + rep.weighted_len - rep.len_w, Errc::Internal,
        "identity l(type) - <rho,mu+lambda> = ht + weighted length - l(w) failed");
  return rep;
}

}  // namespace aw
