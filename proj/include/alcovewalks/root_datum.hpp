#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "alcovewalks/types.hpp"

namespace aw {

/**
 * Root datum input: simple roots as integer vectors in X^*(T) = Z^rank and
 * simple coroots in X_*(T) = Z^rank, with the canonical pairing realized as
 * the dot product. Presets cover the supported classical data; anything else
 * can be given explicitly (or through the flat key/value config format).
 */
struct RootDatumSpec {
  std::string name;  // optional preset identifier
  int rank = 0;
  std::vector<Vec> simple_roots;
  std::vector<Vec> simple_coroots;
};

// Presets: A1, A2, A3, B2, C2, G2, GL2, GL3, GL4, plus B2sc (the datum of
// SO5 in epsilon coordinates, whose Langlands dual is Sp4 = Spin5).
RootDatumSpec preset_spec(const std::string& name);
std::vector<std::string> preset_names();

// Flat key/value config: either `name = <preset>` or the triple
// `rank = n`, `simple_roots = v;v;...`, `simple_coroots = v;v;...`
// with vectors written as comma-separated decimal integers.
RootDatumSpec parse_datum_config(const std::string& text);
std::string datum_config_text(const RootDatumSpec& spec);

// Swap the two sides of the datum. The dual of the dual is the original.
RootDatumSpec dual_spec(const RootDatumSpec& spec);

/**
 * One element of the finite Weyl group W0, materialized inside RootDatum.
 * `mat` acts on cocharacter coordinates, `costar` is the contragredient
 * action on character coordinates, so that <costar(x), mat(v)> = <x, v>.
 * `word` is the canonical reduced word (lexicographically smallest among
 * the reduced words, 0-based simple reflection indices).
 */
struct FiniteWeylElement {
  Mat mat;
  Mat costar;
  std::vector<int> word;
  int length = 0;
  int inv = 0;
  std::vector<int> right_mult;  // index of (this) * s_i per simple i
  std::vector<int> left_mult;   // index of s_i * (this)
};

struct RootDatum {
  RootDatumSpec spec;
  int rank = 0;
  int nsimple = 0;
  int ncomp = 0;  // irreducible components of the Dynkin diagram

  // Positive roots and coroots, index-aligned, sorted by
  // (component, height, lexicographic root vector).
  std::vector<Vec> pos_roots;
  std::vector<Vec> pos_coroots;
  std::vector<Vec> root_simple_coords;  // expansion in simple roots
  std::vector<int> root_comp;
  std::vector<int> simple_comp;
  std::vector<int> highest_root;  // per component, index into pos_roots

  Vec two_rho;        // sum of positive roots
  Vec two_rho_check;  // sum of positive coroots

  std::vector<FiniteWeylElement> weyl;  // weyl[0] = identity
  int longest = 0;                      // index of the longest element of W0
  std::vector<int> s_theta;             // per component: W0 index of s_{theta}

  // Interior point of the base alcove: p0 = p0_num / p0_den, chosen so that
  // <beta, p0> = ht(beta)/H lies in (0,1) for every positive root beta and
  // vanishes on central directions.
  Vec p0_num;
  Int p0_den = 1;

  // w(theta_c^vee) per element and component (needed when appending s0).
  std::vector<std::vector<Vec>> w_theta_check;

  std::unordered_map<Vec, int, VecHash> root_index;  // positive root -> index

  // -- elementary queries ---------------------------------------------------

  std::size_t weyl_order() const { return weyl.size(); }
  const FiniteWeylElement& w(int i) const { return weyl[static_cast<std::size_t>(i)]; }

  Vec act(int w, const Vec& cov) const;         // on X_*(T)
  Vec act_weight(int w, const Vec& wt) const;   // on X^*(T)
  int mul(int a, int b) const;
  int find_root(const Vec& r) const;            // -1 if not a positive root

  bool is_dominant(const Vec& cov, const std::vector<int>& J) const;
  std::vector<int> full_levi() const;

  // Elements of the standard parabolic subgroup W_J, sorted by
  // (length, lexicographic canonical word).
  std::vector<int> levi_elements(const std::vector<int>& J) const;

  // Positive roots supported on J (the roots of the Levi factor M).
  std::vector<int> levi_positive_roots(const std::vector<int>& J) const;
};

RootDatum build_root_datum(const RootDatumSpec& spec);
RootDatum build_root_datum(const std::string& preset);

// <x, v> for x in X^*(T), v in X_*(T).
Int pair(const RootDatum& R, const Vec& weight, const Vec& coweight);

// J-dominant representative of the W_J-orbit of v, together with the
// minimal-length u in W_J such that u(v) is the representative.
std::pair<Vec, int> dominant_rep(const RootDatum& R, const Vec& v, const std::vector<int>& J);

// Minimal-length coset representatives for W0 / Stab(mu), mu dominant.
std::vector<int> min_coset_reps_stab(const RootDatum& R, const Vec& mu);

// Integer coefficients of v in the simple coroots, if v lies in their span
// over Z; nullopt otherwise.
std::optional<Vec> coroot_coords(const RootDatum& R, const Vec& v);

// v1 <= v2 in dominance order (v2 - v1 a nonnegative integer combination of
// simple coroots); returns ht(v2 - v1) = <rho, v2 - v1> when true.
std::optional<Int> dominance_leq(const RootDatum& R, const Vec& v1, const Vec& v2);

}  // namespace aw
