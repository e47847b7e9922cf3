#include "alcovewalks/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace aw {

namespace {

void require_dual_dominant(const RootDatum& R, const Vec& mu, const char* who) {
  check(R.is_dominant(mu, R.full_levi()), Errc::NotDominant, std::string(who) + ": weight is not dominant");
}

// W-invariant form on the dual weight space: Q(x, y) = sum over positive
// roots alpha of <alpha, x><alpha, y>. Only differences and ratios enter
// downstream, so the overall scale is irrelevant.
Int q_form(const RootDatum& R, const Vec& x, const Vec& y) {
  Int s = 0;
  for (const Vec& alpha : R.pos_roots) s += dot(alpha, x) * dot(alpha, y);
  return s;
}

// Halve a doubled weight, asserting integrality.
Vec halved(const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    check(v[i] % 2 == 0, Errc::Internal, "non-integral weight in doubled arithmetic");
    r[i] = v[i] / 2;
  }
  return r;
}

}  // namespace

std::vector<Vec> weight_support(const RootDatum& R, const Vec& mu) {
  require_dual_dominant(R, mu, "weight_support");
  // Everything <= mu within bounded height, filtered by dominant-rep <= mu.
  Vec w0mu = R.act(R.longest, mu);
  Int hmax_twice = dot(R.two_rho, vec_sub(mu, w0mu));
  check(hmax_twice % 2 == 0, Errc::Internal, "odd height bound");
  Int hmax = hmax_twice / 2;

  std::unordered_set<Vec, VecHash> visited;
  std::deque<std::pair<Vec, Int>> queue;
  visited.insert(mu);
  queue.emplace_back(mu, 0);
  while (!queue.empty()) {
    auto [v, h] = queue.front();
    queue.pop_front();
    if (h == hmax) continue;
    for (int i = 0; i < R.nsimple; ++i) {
      Vec nv = vec_sub(v, R.spec.simple_coroots[i]);
      if (visited.insert(nv).second) queue.emplace_back(nv, h + 1);
    }
  }
  std::vector<Vec> out;
  for (const Vec& v : visited) {
    Vec vd = dominant_rep(R, v, R.full_levi()).first;
    if (dominance_leq(R, vd, mu)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec> dominant_weights_below(const RootDatum& R, const Vec& mu) {
  std::vector<Vec> out;
  for (const Vec& v : weight_support(R, mu))
    if (R.is_dominant(v, R.full_levi())) out.push_back(v);
  return out;
}

CharacterTable freudenthal_character(const RootDatum& R, const Vec& mu) {
  require_dual_dominant(R, mu, "freudenthal_character");
  std::vector<Vec> support = weight_support(R, mu);
  std::unordered_set<Vec, VecHash> in_support(support.begin(), support.end());

  std::vector<Vec> dominants;
  for (const Vec& v : support)
    if (R.is_dominant(v, R.full_levi())) dominants.push_back(v);
  // Process top-down in dominance: sort by height of mu - v.
  std::sort(dominants.begin(), dominants.end(), [&](const Vec& a, const Vec& b) {
    return dot(R.two_rho, vec_sub(mu, a)) < dot(R.two_rho, vec_sub(mu, b));
  });

  std::unordered_map<Vec, Int, VecHash> dom_mult;
  Vec mu2rho = vec_add(vec_add(mu, mu), R.two_rho_check);  // 2(mu + rho^)
  auto full_mult = [&](const Vec& v) -> Int {
    if (!in_support.count(v)) return 0;
    Vec vd = dominant_rep(R, v, R.full_levi()).first;
    auto it = dom_mult.find(vd);
    return it == dom_mult.end() ? 0 : it->second;
  };

  for (const Vec& lam : dominants) {
    if (lam == mu) {
      dom_mult[lam] = 1;
      continue;
    }
    Vec lam2rho = vec_add(vec_add(lam, lam), R.two_rho_check);  // 2(lam + rho^)
    Int denom = q_form(R, mu2rho, mu2rho) - q_form(R, lam2rho, lam2rho);
    check(denom > 0, Errc::Internal, "Freudenthal denominator not positive");
    // denom = 4(|mu+rho^|^2 - |lam+rho^|^2), so
    // m(lam) * denom = 8 * sum over dual positive roots, j >= 1 of
    // m(lam + j alpha^) <lam + j alpha^, alpha^>_Q = 4 * sum m Q(2v, alpha^).
    Int rhs = 0;
    for (const Vec& alphav : R.pos_coroots) {
      for (Int j = 1;; ++j) {
        Vec v = vec_add(lam, vec_scaled(alphav, j));
        if (!in_support.count(v)) break;
        Int m = full_mult(v);
        if (m != 0) rhs += m * q_form(R, vec_add(v, v), alphav);
      }
    }
    rhs *= 4;
    check(rhs % denom == 0, Errc::Internal, "Freudenthal division is not exact");
    dom_mult[lam] = rhs / denom;
  }

  CharacterTable table;
  for (const Vec& v : support) {
    Int m = full_mult(v);
    if (m != 0) table.mult[v] = m;
  }
  return table;
}

namespace {

struct PartitionMemoKey {
  int k;
  Vec v;
  bool operator==(const PartitionMemoKey& o) const { return k == o.k && v == o.v; }
};
struct PartitionMemoHash {
  std::size_t operator()(const PartitionMemoKey& key) const {
    return VecHash{}(key.v) * 31 + static_cast<std::size_t>(key.k);
  }
};

// Number of ways to write v as a nonnegative integer combination of the
// first k positive coroots (the positive roots of the dual group).
Int partition_count(const RootDatum& R, int k, const Vec& v,
                    std::unordered_map<PartitionMemoKey, Int, PartitionMemoHash>& memo) {
  if (vec_is_zero(v)) return 1;
  if (k == 0) return 0;
  // Quick reject: v must be a nonnegative rational combination of coroots;
  // height must be nonnegative.
  if (dot(R.two_rho, v) < 0) return 0;
  PartitionMemoKey key{k, v};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const Vec& beta = R.pos_coroots[k - 1];
  Int total = 0;
  Vec cur = v;
  for (;;) {
    total += partition_count(R, k - 1, cur, memo);
    if (dot(R.two_rho, cur) < dot(R.two_rho, beta)) break;
    cur = vec_sub(cur, beta);
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

Int kostant_multiplicity(const RootDatum& R, const Vec& mu, const Vec& lambda) {
  require_dual_dominant(R, mu, "kostant_multiplicity");
  check(dot(R.two_rho, mu) <= 12, Errc::CapExceeded, "kostant_multiplicity capped at <2rho,mu> <= 12");
  std::unordered_map<PartitionMemoKey, Int, PartitionMemoHash> memo;
  Vec mu2 = vec_add(vec_add(mu, mu), R.two_rho_check);      // 2(mu + rho^)
  Vec lam2 = vec_add(vec_add(lambda, lambda), R.two_rho_check);
  Int total = 0;
  for (int w = 0; w < static_cast<int>(R.weyl.size()); ++w) {
    Vec arg = halved(vec_sub(R.act(w, mu2), lam2));  // w(mu+rho^) - (lambda+rho^)
    Int p = partition_count(R, static_cast<int>(R.pos_coroots.size()), arg, memo);
    total += (R.w(w).length % 2 == 0) ? p : -p;
  }
  return total;
}

Int branching_oracle(const RootDatum& R, const std::vector<int>& J, const CharacterTable& table,
                     const Vec& lambda) {
  check(R.is_dominant(lambda, J), Errc::NotDominant, "branching_oracle: lambda not M-dominant");
  Vec two_rho_m(R.rank, 0);  // doubled half-sum of M's dual positive roots
  for (int idx : R.levi_positive_roots(J)) two_rho_m = vec_add(two_rho_m, R.pos_coroots[idx]);
  Vec lam2 = vec_add(vec_add(lambda, lambda), two_rho_m);  // 2(lambda + rho^_M)
  Int total = 0;
  for (int w : R.levi_elements(J)) {
    Vec arg = halved(vec_sub(R.act(w, lam2), two_rho_m));  // w(lambda+rho^_M) - rho^_M
    Int m = table.at(arg);
    total += (R.w(w).length % 2 == 0) ? m : -m;
  }
  return total;
}

Int branching_oracle(const RootDatum& R, const std::vector<int>& J, const Vec& mu, const Vec& lambda) {
  return branching_oracle(R, J, freudenthal_character(R, mu), lambda);
}

Int tensor_oracle(const RootDatum& R, const Vec& mu, const Vec& lambda, const Vec& nu) {
  require_dual_dominant(R, mu, "tensor_oracle");
  return tensor_oracle(R, freudenthal_character(R, mu), lambda, nu);
}

Int tensor_oracle(const RootDatum& R, const CharacterTable& table, const Vec& lambda, const Vec& nu) {
  require_dual_dominant(R, lambda, "tensor_oracle");
  require_dual_dominant(R, nu, "tensor_oracle");
  Vec nu2 = vec_add(vec_add(nu, nu), R.two_rho_check);
  Vec lam2 = vec_add(vec_add(lambda, lambda), R.two_rho_check);
  Int total = 0;
  for (int w = 0; w < static_cast<int>(R.weyl.size()); ++w) {
    Vec arg = halved(vec_sub(R.act(w, nu2), lam2));  // w(nu+rho^) - (lambda+rho^)
    Int m = table.at(arg);
    total += (R.w(w).length % 2 == 0) ? m : -m;
  }
  return total;
}

Int weyl_dimension(const RootDatum& R, const Vec& mu) {
  require_dual_dominant(R, mu, "weyl_dimension");
  // prod over dual positive roots alpha^ of <mu + rho^, alpha's coroot>,
  // i.e. prod over positive roots alpha of <alpha, mu + rho^> / <alpha, rho^>.
  Vec mu2 = vec_add(vec_add(mu, mu), R.two_rho_check);
  Int num = 1, den = 1;
  for (const Vec& alpha : R.pos_roots) {
    Int a = dot(alpha, mu2);
    Int b = dot(alpha, R.two_rho_check);
    Int g = std::gcd(a, b);
    num *= a / g;
    den *= b / g;
    Int g2 = std::gcd(num, den);
    num /= g2;
    den /= g2;
  }
  check(den == 1 || num % den == 0, Errc::Internal, "Weyl dimension is not integral");
  return num / den;
}

Int weyl_dimension_levi(const RootDatum& R, const std::vector<int>& J, const Vec& lambda) {
  check(R.is_dominant(lambda, J), Errc::NotDominant, "weyl_dimension_levi: lambda not M-dominant");
  Vec two_rho_m(R.rank, 0);
  for (int idx : R.levi_positive_roots(J)) two_rho_m = vec_add(two_rho_m, R.pos_coroots[idx]);
  Vec lam2 = vec_add(vec_add(lambda, lambda), two_rho_m);
  Int num = 1, den = 1;
  for (int idx : R.levi_positive_roots(J)) {
    const Vec& alpha = R.pos_roots[idx];
    Int a = dot(alpha, lam2);
    Int b = dot(alpha, two_rho_m);
    Int g = std::gcd(a, b);
    num *= a / g;
    den *= b / g;
    Int g2 = std::gcd(num, den);
    num /= g2;
    den /= g2;
  }
  check(den == 1 || num % den == 0, Errc::Internal, "Levi Weyl dimension is not integral");
  return num / den;
}

}  // namespace aw
