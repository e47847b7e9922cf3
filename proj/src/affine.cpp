#include "alcovewalks/affine.hpp"

#include <algorithm>
#include <cmath>

namespace aw {

std::string letter_name(const RootDatum& R, int s) {
  if (!is_s0_letter(R, s)) return "s" + std::to_string(s + 1);
  int comp = s - R.nsimple;
  if (R.ncomp == 1) return "s0";
  return "s0@" + std::to_string(comp + 1);
}

int parse_letter(const RootDatum& R, const std::string& name) {
  std::string t = name;
  if (!t.empty() && t[0] == 's') t = t.substr(1);
  std::size_t at = t.find('@');
  try {
    if (at == std::string::npos) {
      int v = std::stoi(t);
      if (v == 0) return s0_letter(R, 0);
      if (1 <= v && v <= R.nsimple) return v - 1;
    } else {
      int v = std::stoi(t.substr(0, at));
      int comp = std::stoi(t.substr(at + 1));
      if (v == 0 && 1 <= comp && comp <= R.ncomp) return s0_letter(R, comp - 1);
    }
  } catch (const std::exception&) {
  }
  fail(Errc::ParseError, "bad simple affine reflection '" + name + "'");
}

AffElt aff_identity(const RootDatum& R) { return AffElt{Vec(R.rank, 0), 0}; }

AffElt translation_of(const RootDatum& R, const Vec& lam) {
  check(static_cast<int>(lam.size()) == R.rank, Errc::RankMismatch, "translation of wrong rank");
  return AffElt{vec_neg(lam), 0};
}

AffElt raw_translation(const RootDatum& R, const Vec& lam) {
  check(static_cast<int>(lam.size()) == R.rank, Errc::RankMismatch, "translation of wrong rank");
  return AffElt{lam, 0};
}

AffElt finite_elt(const RootDatum& R, int w) {
  check(0 <= w && w < static_cast<int>(R.weyl.size()), Errc::InvalidArgument, "Weyl index out of range");
  return AffElt{Vec(R.rank, 0), w};
}

AffElt aff_mul(const RootDatum& R, const AffElt& a, const AffElt& b) {
  return AffElt{vec_add(a.t, R.act(a.w, b.t)), R.mul(a.w, b.w)};
}

AffElt aff_inverse(const RootDatum& R, const AffElt& a) {
  int wi = R.w(a.w).inv;
  return AffElt{vec_neg(R.act(wi, a.t)), wi};
}

AffElt mul_letter_right(const RootDatum& R, const AffElt& a, int s) {
  if (!is_s0_letter(R, s)) return AffElt{a.t, R.w(a.w).right_mult[s]};
  int comp = s - R.nsimple;
  // a * s0 with s0 = (theta^vee, s_theta).
  return AffElt{vec_add(a.t, R.w_theta_check[a.w][comp]),
                R.mul(a.w, R.s_theta[comp])};
}

AffElt mul_letter_left(const RootDatum& R, int s, const AffElt& a) {
  if (!is_s0_letter(R, s)) {
    int sw = R.w(a.w).left_mult[s];
    Vec st = a.t;
    const Vec& alpha = R.spec.simple_roots[s];
    const Vec& alphav = R.spec.simple_coroots[s];
    Int c = dot(alpha, a.t);
    st = vec_sub(st, vec_scaled(alphav, c));
    return AffElt{st, sw};
  }
  int comp = s - R.nsimple;
  int hr = R.highest_root[comp];
  const Vec& th = R.pos_roots[hr];
  const Vec& thv = R.pos_coroots[hr];
  Vec st = vec_sub(a.t, vec_scaled(thv, dot(th, a.t)));  // s_theta(t)
  st = vec_add(st, thv);                                 // + theta^vee
  return AffElt{st, R.mul(R.s_theta[comp], a.w)};
}

Vec aff_apply(const RootDatum& R, const AffElt& a, const Vec& v) { return vec_add(R.act(a.w, v), a.t); }

Vec apply_base_point(const RootDatum& R, const AffElt& a) {
  Vec num = R.w(a.w).mat.apply(R.p0_num);
  for (int i = 0; i < R.rank; ++i) num[i] += R.p0_den * a.t[i];
  return num;
}

Int aff_length(const RootDatum& R, const AffElt& a) {
  Vec p = apply_base_point(R, a);
  Int len = 0;
  for (const Vec& beta : R.pos_roots) len += std::llabs(floor_div(dot(beta, p), R.p0_den));
  return len;
}

ReducedWord reduced_word(const RootDatum& R, AffElt x) {
  ReducedWord out;
  Int len = aff_length(R, x);
  while (len > 0) {
    bool found = false;
    for (int s = 0; s < R.nsimple + R.ncomp && !found; ++s) {
      AffElt y = mul_letter_left(R, s, x);
      Int ylen = aff_length(R, y);
      if (ylen < len) {
        out.letters.push_back(s);
        x = y;
        len = ylen;
        found = true;
      }
    }
    check(found, Errc::Internal, "no descent on an element of positive length");
  }
  out.omega = x;
  return out;
}

AffElt evaluate_word(const RootDatum& R, const std::vector<int>& letters, const AffElt& omega) {
  AffElt x = aff_identity(R);
  for (int s : letters) x = mul_letter_right(R, x, s);
  return aff_mul(R, x, omega);
}

AffElt evaluate_word(const RootDatum& R, const ReducedWord& word) {
  return evaluate_word(R, word.letters, word.omega);
}

AffElt right_w0_minimal(const RootDatum& R, AffElt x) {
  Int len = aff_length(R, x);
  bool descended = true;
  while (descended) {
    descended = false;
    for (int i = 0; i < R.nsimple; ++i) {
      AffElt y = mul_letter_right(R, x, i);
      Int ylen = aff_length(R, y);
      if (ylen < len) {
        x = y;
        len = ylen;
        descended = true;
        break;
      }
    }
  }
  return x;
}

AffineHyperplane wall_hyperplane(const RootDatum& R, const AffElt& x, int s) {
  Vec beta0;
  Int k0;
  if (!is_s0_letter(R, s)) {
    beta0 = R.spec.simple_roots[s];
    k0 = 0;
  } else {
    beta0 = R.pos_roots[R.highest_root[s - R.nsimple]];
    k0 = 1;
  }
  Vec beta = R.act_weight(x.w, beta0);
  Int k = k0 + dot(beta, x.t);
  if (dot(beta, R.two_rho_check) < 0) {
    beta = vec_neg(beta);
    k = -k;
  }
  int idx = R.find_root(beta);
  check(idx >= 0, Errc::Internal, "wall root is not a root");
  return AffineHyperplane{idx, k};
}

Int separating_count_from_chamber(const RootDatum& R, const AffElt& x) {
  Vec p = apply_base_point(R, x);
  Int n = 0;
  for (const Vec& beta : R.pos_roots) {
    Int f = floor_div(dot(beta, p), R.p0_den);
    if (f < 0) n += -f;
  }
  return n;
}

namespace {

void collect_reduced_words(const RootDatum& R, const AffElt& x, Int len, std::vector<int>& prefix,
                           std::vector<std::vector<int>>& out) {
  if (len == 0) {
    out.push_back(prefix);
    return;
  }
  for (int s = 0; s < R.nsimple + R.ncomp; ++s) {
    AffElt y = mul_letter_left(R, s, x);
    if (aff_length(R, y) < len) {
      prefix.push_back(s);
      collect_reduced_words(R, y, len - 1, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<int>> all_reduced_words(const RootDatum& R, const AffElt& x) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  collect_reduced_words(R, x, aff_length(R, x), prefix, out);
  return out;
}

}  // namespace aw
