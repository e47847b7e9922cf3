#pragma once

#include <string>
#include <vector>

#include "alcovewalks/multiplicity.hpp"

namespace aw {

struct VerifyResult {
  bool ok = true;
  std::string report;  // one line per check

  void line(bool pass, const std::string& what) {
    ok = ok && pass;
    report += (pass ? "ok   " : "FAIL ") + what + "\n";
  }
};

// All elements of W_aff with length <= max_len (each with a deterministic
// reduced word), by breadth-first closure over S_aff.
std::vector<AffElt> waff_elements_up_to(const RootDatum& R, int max_len);

// Sum over all positively folded walks of a fixed type of q^{c+}(q-1)^{f+}
// equals q^{l(type)}: the point count of the full Iwahori orbit. Checked for
// every W_aff element with length <= max_len and every Levi orientation.
bool mass_identity_holds(const RootDatum& R, const AffElt& type_elt, const Orientation& o);

// The invariant suites behind the `verify` CLI command: the mass identity
// over all orientations, length against a separation-count oracle, reduced
// word round trips, minimal coset element identities, and walk replay.
VerifyResult run_verification(const RootDatum& R, int max_len);

}  // namespace aw
