#pragma once

#include <string>
#include <vector>

#include "alcovewalks/root_datum.hpp"

namespace aw {

/**
 * Element of the extended affine Weyl group W = X_*(T) x| W0, acting on the
 * apartment by v |-> w(v) + t. Composition is (t1,w1)(t2,w2) = (t1+w1(t2), w1w2).
 *
 * Following the Bruhat-Tits convention, the group element usually written
 * t^lam acts as translation by -lam; translation_of() builds exactly that
 * element, raw_translation() the untwisted one.
 */
struct AffElt {
  Vec t;
  int w = 0;

  bool operator==(const AffElt& o) const { return w == o.w && t == o.t; }
  bool operator!=(const AffElt& o) const { return !(*this == o); }
};

// Letters of S_aff: values 0..nsimple-1 are the finite simple reflections
// (walls H(alpha_i, 0)); value nsimple + c is the affine reflection s0 of
// irreducible component c (wall H(theta_c, 1), s0 = t_{theta_c^vee} s_{theta_c}).
inline int s0_letter(const RootDatum& R, int comp = 0) { return R.nsimple + comp; }
inline bool is_s0_letter(const RootDatum& R, int s) { return s >= R.nsimple; }
std::string letter_name(const RootDatum& R, int s);                 // "s1", "s0", "s0@2"
int parse_letter(const RootDatum& R, const std::string& name);

// Wall of an alcove x(a), in the normalized form {v : <beta, v> = level}
// with beta a positive root (stored by index).
struct AffineHyperplane {
  int root = -1;
  Int level = 0;

  bool operator==(const AffineHyperplane& o) const { return root == o.root && level == o.level; }
};

/**
 * Reduced word s_{i1} ... s_{ir} * omega for an element of W: evaluating the
 * letters left-to-right and then omega reproduces the element, and the letter
 * count equals the length. omega is an arbitrary length-zero element.
 */
struct ReducedWord {
  std::vector<int> letters;
  AffElt omega;
};

AffElt aff_identity(const RootDatum& R);
AffElt translation_of(const RootDatum& R, const Vec& lam);   // t^lam = t_{-lam}
AffElt raw_translation(const RootDatum& R, const Vec& lam);  // t_{+lam}
AffElt finite_elt(const RootDatum& R, int w);

AffElt aff_mul(const RootDatum& R, const AffElt& a, const AffElt& b);
AffElt aff_inverse(const RootDatum& R, const AffElt& a);
AffElt mul_letter_right(const RootDatum& R, const AffElt& a, int s);
AffElt mul_letter_left(const RootDatum& R, int s, const AffElt& a);

Vec aff_apply(const RootDatum& R, const AffElt& a, const Vec& v);

// Image of the base point p0 under a, as numerators over R.p0_den.
Vec apply_base_point(const RootDatum& R, const AffElt& a);

// Number of affine hyperplanes separating a(base alcove) from the base
// alcove; equals the Coxeter length of the W_aff part.
Int aff_length(const RootDatum& R, const AffElt& a);

// Greedy left-descent reduced word (lowest letter first, s0 markers after
// the finite indices, components in declaration order).
ReducedWord reduced_word(const RootDatum& R, AffElt x);
AffElt evaluate_word(const RootDatum& R, const std::vector<int>& letters, const AffElt& omega);
AffElt evaluate_word(const RootDatum& R, const ReducedWord& word);

// Unique right W0-minimal element in the coset x W0.
AffElt right_w0_minimal(const RootDatum& R, AffElt x);

// Wall of the alcove x(a) of type s: for H_s = H(beta0, k0) and x = (t, w)
// this is H(w(beta0), k0 + <w(beta0), t>), normalized to a positive root.
AffineHyperplane wall_hyperplane(const RootDatum& R, const AffElt& x, int s);

// Hyperplanes separating x(a) from the dominant Weyl chamber (closures may
// touch the separating hyperplane).
Int separating_count_from_chamber(const RootDatum& R, const AffElt& x);

// All reduced words of x (each as letters; the omega part is shared).
// Exhaustive; intended for small lengths.
std::vector<std::vector<int>> all_reduced_words(const RootDatum& R, const AffElt& x);

}  // namespace aw
