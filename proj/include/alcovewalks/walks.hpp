#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alcovewalks/affine.hpp"

namespace aw {

/**
 * Per-hyperplane side function of an orientation alcove "at infinity" for a
 * Levi subset J: the limit of nu + a with nu M-central and deeply dominant
 * toward the unipotent radical. Closed form: side(H(beta,k)) = + whenever
 * beta is not a root of M, and + iff k <= 0 when it is. J = all simple
 * indices recovers the base-alcove orientation, J = {} the one used for
 * weight multiplicities.
 */
struct Orientation {
  std::vector<int> levi;
  std::vector<char> in_levi;  // per positive-root index

  int side(const AffineHyperplane& h) const {
    if (!in_levi[static_cast<std::size_t>(h.root)]) return +1;
    return h.level <= 0 ? +1 : -1;
  }
};

Orientation orientation_for_levi(const RootDatum& R, const std::vector<int>& J);

enum class StepKind { PositiveCrossing, NegativeCrossing, PositiveFolding };

const char* step_kind_name(StepKind k);  // "c+", "c-", "f+"
StepKind parse_step_kind(const std::string& s);

struct StepLabel {
  StepKind kind;
  int step_index;
  AffineHyperplane hyperplane;
};

// For one step: the side of the wall the current alcove is on, and whether
// the crossing is forced (a crossing away from the orientation side admits
// no folding).
struct StepOptions {
  int src = 0;
  bool forced = false;
};

StepOptions classify_step(const RootDatum& R, const AffElt& x, int s, const Orientation& o);

struct WalkStats {
  int cplus = 0, cminus = 0, fplus = 0;
};

struct LabeledWalk {
  AffElt start;
  std::vector<int> letters;
  AffElt omega;
  std::vector<StepLabel> labels;
  AffElt end;
  WalkStats stats;

  int dimension() const { return stats.cplus + stats.fplus; }
  const Vec& end_vertex() const { return end.t; }
};

struct WalkConstraints {
  std::optional<Vec> end_vertex;
  std::vector<Vec> end_orbit;  // nonempty: endpoint must lie in this set
  std::optional<int> min_dim;
};

/**
 * Depth-first enumeration of all positively-folded labeled walks of the
 * given type word from `start`. Each orientation-positive step is a forced
 * c+ crossing; at orientation-negative steps the c- branch is explored
 * before the f+ branch, so output order is deterministic. A min_dim
 * constraint prunes prefixes that cannot reach the dimension.
 */
std::vector<LabeledWalk> enumerate_folded_walks(const RootDatum& R, const AffElt& start,
                                                const ReducedWord& word, const Orientation& o,
                                                const WalkConstraints& constraints = {});

// Re-run a recorded label sequence, validating fold legality and crossing
// directions; returns the reconstructed walk.
LabeledWalk replay_walk(const RootDatum& R, const AffElt& start, const std::vector<int>& letters,
                        const AffElt& omega, const std::vector<StepKind>& kinds, const Orientation& o);

/**
 * Integer polynomial in q. The cell attached to one walk contributes
 * q^{c+} (q-1)^{f+}, the F_q-point count of A^{c+} x (A^1 - A^0)^{f+}.
 */
struct CellPolynomial {
  std::vector<Int> coeff;  // ascending degree; empty = zero polynomial

  static CellPolynomial zero() { return {}; }
  static CellPolynomial one() { return CellPolynomial{{1}}; }
  static CellPolynomial q_power(int d);
  static CellPolynomial cell(int cplus, int fplus);

  void add(const CellPolynomial& o);
  Int eval(Int q) const;
  bool operator==(const CellPolynomial& o) const { return coeff == o.coeff; }
  std::string to_string() const;  // human form, e.g. "q^2 + q - 1"
};

CellPolynomial cell_polynomial(const std::vector<LabeledWalk>& walks);

}  // namespace aw
