#include "alcovewalks/verify.hpp"

#include <algorithm>
#include <unordered_set>

#include "alcovewalks/json_io.hpp"

namespace aw {

namespace {

struct AffHash {
  std::size_t operator()(const AffElt& a) const {
    return VecHash{}(a.t) * 1315423911u + static_cast<std::size_t>(a.w);
  }
};

}  // namespace

std::vector<AffElt> waff_elements_up_to(const RootDatum& R, int max_len) {
  std::vector<AffElt> out{aff_identity(R)};
  std::unordered_set<AffElt, AffHash> seen;
  seen.insert(out[0]);
  std::size_t head = 0;
  std::vector<Int> lens{0};
  while (head < out.size()) {
    AffElt x = out[head];
    Int len = lens[head];
    ++head;
    if (len == max_len) continue;
    for (int s = 0; s < R.nsimple + R.ncomp; ++s) {
      AffElt y = mul_letter_right(R, x, s);
      if (seen.insert(y).second) {
        out.push_back(y);
        lens.push_back(len + 1);
      }
    }
  }
  return out;
}

bool mass_identity_holds(const RootDatum& R, const AffElt& type_elt, const Orientation& o) {
  ReducedWord word = reduced_word(R, type_elt);
  std::vector<LabeledWalk> walks = enumerate_folded_walks(R, aff_identity(R), word, o);
  return cell_polynomial(walks) == CellPolynomial::q_power(static_cast<int>(word.letters.size()));
}

VerifyResult run_verification(const RootDatum& R, int max_len) {
  VerifyResult res;
  std::vector<AffElt> elements = waff_elements_up_to(R, max_len);
  res.line(true, "enumerated " + std::to_string(elements.size()) + " affine Weyl elements of length <= " +
                     std::to_string(max_len));

  // Length against an independent separation count over explicit hyperplanes.
  {
    bool pass = true;
    for (const AffElt& x : elements) {
      Vec p = apply_base_point(R, x);
      Int count = 0;
      for (const Vec& beta : R.pos_roots) {
        Int here = dot(beta, R.p0_num);
        Int there = dot(beta, p);
        Int klo = std::min(floor_div(here, R.p0_den), floor_div(there, R.p0_den)) - 1;
        Int khi = std::max(floor_div(here, R.p0_den), floor_div(there, R.p0_den)) + 2;
        for (Int k = klo; k <= khi; ++k)
          if ((here - k * R.p0_den > 0) != (there - k * R.p0_den > 0)) ++count;
      }
      if (count != aff_length(R, x)) {
        pass = false;
        break;
      }
    }
    res.line(pass, "length equals the number of separating hyperplanes");
  }

  // Reduced word round trip and letter count.
  {
    bool pass = true;
    for (const AffElt& x : elements) {
      ReducedWord w = reduced_word(R, x);
      if (evaluate_word(R, w) != x || static_cast<Int>(w.letters.size()) != aff_length(R, x) ||
          aff_length(R, w.omega) != 0) {
        pass = false;
        break;
      }
    }
    res.line(pass, "reduced words evaluate back to their elements");
  }

  // l(xs) = l(x) +- 1 for every letter.
  {
    bool pass = true;
    for (const AffElt& x : elements) {
      Int len = aff_length(R, x);
      for (int s = 0; s < R.nsimple + R.ncomp && pass; ++s) {
        Int l2 = aff_length(R, mul_letter_right(R, x, s));
        if (l2 != len + 1 && l2 != len - 1) pass = false;
      }
      if (!pass) break;
    }
    res.line(pass, "every simple affine reflection changes length by one");
  }

  // Mass identity for every Levi orientation.
  {
    std::vector<std::vector<int>> levis;
    for (int mask = 0; mask < (1 << R.nsimple); ++mask) {
      std::vector<int> J;
      for (int i = 0; i < R.nsimple; ++i)
        if (mask & (1 << i)) J.push_back(i);
      levis.push_back(J);
    }
    bool pass = true;
    for (const std::vector<int>& J : levis) {
      Orientation o = orientation_for_levi(R, J);
      for (const AffElt& x : elements)
        if (!mass_identity_holds(R, x, o)) {
          pass = false;
          break;
        }
      if (!pass) break;
    }
    res.line(pass, "mass identity: total cell polynomial of every type is q^length");
  }

  // Walk JSON round trip through replay on a sample type.
  {
    bool pass = true;
    Orientation o = orientation_for_levi(R, {});
    int checked = 0;
    for (const AffElt& x : elements) {
      if (aff_length(R, x) < std::min(3, max_len)) continue;
      ReducedWord word = reduced_word(R, x);
      for (const LabeledWalk& w : enumerate_folded_walks(R, aff_identity(R), word, o)) {
        LabeledWalk back = walk_from_json_replayed(R, walk_to_json(R, w), o);
        if (back.end != w.end || back.stats.cplus != w.stats.cplus ||
            back.stats.cminus != w.stats.cminus || back.stats.fplus != w.stats.fplus) {
          pass = false;
          break;
        }
      }
      if (++checked >= 5 || !pass) break;
    }
    res.line(pass, "walk JSON records replay to identical walks");
  }

  return res;
}

}  // namespace aw
