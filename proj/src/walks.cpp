#include "alcovewalks/walks.hpp"

#include <algorithm>

namespace aw {

Orientation orientation_for_levi(const RootDatum& R, const std::vector<int>& J) {
  Orientation o;
  o.levi = J;
  std::sort(o.levi.begin(), o.levi.end());
  o.in_levi.assign(R.pos_roots.size(), 0);
  for (int idx : R.levi_positive_roots(o.levi)) o.in_levi[idx] = 1;
  return o;
}

const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::PositiveCrossing: return "c+";
    case StepKind::NegativeCrossing: return "c-";
    case StepKind::PositiveFolding: return "f+";
  }
  return "?";
}

StepKind parse_step_kind(const std::string& s) {
  if (s == "c+") return StepKind::PositiveCrossing;
  if (s == "c-") return StepKind::NegativeCrossing;
  if (s == "f+") return StepKind::PositiveFolding;
  fail(Errc::ParseError, "bad step label '" + s + "'");
}

StepOptions classify_step(const RootDatum& R, const AffElt& x, int s, const Orientation& o) {
  AffineHyperplane h = wall_hyperplane(R, x, s);
  Vec p = apply_base_point(R, x);
  Int v = dot(R.pos_roots[h.root], p) - h.level * R.p0_den;
  check(v != 0, Errc::Internal, "degenerate side: alcove center on its own wall");
  StepOptions opt;
  opt.src = sign_of(v);
  opt.forced = (opt.src == o.side(h));
  return opt;
}

namespace {

struct Enumerator {
  const RootDatum& R;
  const ReducedWord& word;
  const Orientation& o;
  const WalkConstraints& cons;
  const AffElt start;
  std::vector<StepLabel> labels;
  WalkStats stats;
  std::vector<LabeledWalk> out;

  bool pruned(int step_i) const {
    if (!cons.min_dim) return false;
    int remaining = static_cast<int>(word.letters.size()) - step_i;
    return stats.cplus + stats.fplus + remaining < *cons.min_dim;
  }

  void finish(const AffElt& x) {
    LabeledWalk w;
    w.start = start;
    w.letters = word.letters;
    w.omega = word.omega;
    w.labels = labels;
    w.end = aff_mul(R, x, word.omega);
    w.stats = stats;
    if (cons.end_vertex && w.end.t != *cons.end_vertex) return;
    if (!cons.end_orbit.empty() &&
        std::find(cons.end_orbit.begin(), cons.end_orbit.end(), w.end.t) == cons.end_orbit.end())
      return;
    if (cons.min_dim && w.dimension() < *cons.min_dim) return;
    out.push_back(std::move(w));
  }

  void step(const AffElt& x, int step_i) {
    if (pruned(step_i)) return;
    if (step_i == static_cast<int>(word.letters.size())) {
      finish(x);
      return;
    }
    int s = word.letters[step_i];
    AffineHyperplane h = wall_hyperplane(R, x, s);
    StepOptions opt = classify_step(R, x, s, o);
    if (opt.forced) {
      labels.push_back({StepKind::PositiveCrossing, step_i, h});
      ++stats.cplus;
      step(mul_letter_right(R, x, s), step_i + 1);
      --stats.cplus;
      labels.pop_back();
      return;
    }
    labels.push_back({StepKind::NegativeCrossing, step_i, h});
    ++stats.cminus;
    step(mul_letter_right(R, x, s), step_i + 1);
    --stats.cminus;
    labels.pop_back();

    labels.push_back({StepKind::PositiveFolding, step_i, h});
    ++stats.fplus;
    step(x, step_i + 1);
    --stats.fplus;
    labels.pop_back();
  }
};

}  // namespace

std::vector<LabeledWalk> enumerate_folded_walks(const RootDatum& R, const AffElt& start,
                                                const ReducedWord& word, const Orientation& o,
                                                const WalkConstraints& constraints) {
  Enumerator e{R, word, o, constraints, start, {}, {}, {}};
  e.step(start, 0);
  return e.out;
}

LabeledWalk replay_walk(const RootDatum& R, const AffElt& start, const std::vector<int>& letters,
                        const AffElt& omega, const std::vector<StepKind>& kinds, const Orientation& o) {
  check(kinds.size() == letters.size(), Errc::PreconditionViolated, "label count differs from word length");
  LabeledWalk w;
  w.start = start;
  w.letters = letters;
  w.omega = omega;
  AffElt x = start;
  for (int i = 0; i < static_cast<int>(letters.size()); ++i) {
    int s = letters[i];
    AffineHyperplane h = wall_hyperplane(R, x, s);
    StepOptions opt = classify_step(R, x, s, o);
    StepKind k = kinds[i];
    switch (k) {
      case StepKind::PositiveCrossing:
        check(opt.forced, Errc::PreconditionViolated, "c+ recorded at an orientation-negative step");
        ++w.stats.cplus;
        x = mul_letter_right(R, x, s);
        break;
      case StepKind::NegativeCrossing:
        check(!opt.forced, Errc::PreconditionViolated, "c- recorded at an orientation-positive step");
        ++w.stats.cminus;
        x = mul_letter_right(R, x, s);
        break;
      case StepKind::PositiveFolding:
        check(!opt.forced, Errc::PreconditionViolated, "fold recorded where crossing is positive");
        ++w.stats.fplus;
        break;
    }
    w.labels.push_back({k, i, h});
  }
  w.end = aff_mul(R, x, omega);
  return w;
}

CellPolynomial CellPolynomial::q_power(int d) {
  CellPolynomial p;
  p.coeff.assign(d + 1, 0);
  p.coeff.back() = 1;
  return p;
}

CellPolynomial CellPolynomial::cell(int cplus, int fplus) {
  // q^{c+} (q-1)^{f+}, expanded by binomials.
  CellPolynomial p;
  p.coeff.assign(static_cast<std::size_t>(cplus + fplus) + 1, 0);
  Int binom = 1;
  for (int j = 0; j <= fplus; ++j) {
    Int sign = ((fplus - j) % 2 == 0) ? 1 : -1;
    p.coeff[cplus + j] += sign * binom;
    binom = binom * (fplus - j) / (j + 1);
  }
  return p;
}

void CellPolynomial::add(const CellPolynomial& o) {
  if (o.coeff.size() > coeff.size()) coeff.resize(o.coeff.size(), 0);
  for (std::size_t i = 0; i < o.coeff.size(); ++i) coeff[i] += o.coeff[i];
  while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
}

Int CellPolynomial::eval(Int q) const {
  Int v = 0;
  for (std::size_t i = coeff.size(); i-- > 0;) v = v * q + coeff[i];
  return v;
}

std::string CellPolynomial::to_string() const {
  if (coeff.empty()) return "0";
  std::string s;
  for (std::size_t i = coeff.size(); i-- > 0;) {
    Int c = coeff[i];
    if (c == 0) continue;
    if (!s.empty()) s += (c > 0) ? " + " : " - ";
    else if (c < 0) s += "-";
    Int a = std::llabs(c);
    std::string term;
    if (i == 0) {
      term = std::to_string(a);
    } else {
      if (a != 1) term = std::to_string(a) + "*";
      term += (i == 1) ? "q" : ("q^" + std::to_string(i));
    }
    s += term;
  }
  return s.empty() ? "0" : s;
}

CellPolynomial cell_polynomial(const std::vector<LabeledWalk>& walks) {
  CellPolynomial total = CellPolynomial::zero();
  for (const LabeledWalk& w : walks) total.add(CellPolynomial::cell(w.stats.cplus, w.stats.fplus));
  return total;
}

}  // namespace aw
