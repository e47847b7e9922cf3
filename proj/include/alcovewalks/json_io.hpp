#pragma once

#include <string>

#include "alcovewalks/multiplicity.hpp"

namespace aw {

/**
 * Stable JSON schemas for walks and query reports.
 *
 * Walk record:
 *   { "start": [[t...],[finite word, 1-based]], "type_word": ["s1","s0",...],
 *     "omega": [[t...],[...]], "labels": ["c+","c-","f+",...],
 *     "end_vertex": [...], "cplus": n, "cminus": n, "fplus": n, "dim": n }
 *
 * Query report:
 *   { "query": {...}, "dimension_bound": n, "multiplicity": n,
 *     "per_w": [ { "w_word": [...], "w_mu": [...], "type_word": [...],
 *                  "type_length": n, "lambda_w": [...], "walk_count": n,
 *                  "max_walk_count": n, "cell_polynomial": [c0,c1,...],
 *                  "max_walks": [...] } ],
 *     "cell_polynomial": [c0,c1,...] }
 */

std::string walk_to_json(const RootDatum& R, const LabeledWalk& walk);

// Parse a walk record and replay it step by step under the orientation,
// validating legality; the reconstructed walk must match the record.
LabeledWalk walk_from_json_replayed(const RootDatum& R, const std::string& json_text, const Orientation& o);

// Report for a weight/branching query: family, maximal subfamily, counts.
std::string branching_report_json(const RootDatum& R, const std::string& datum_name,
                                  const std::vector<int>& J, const Vec& mu, const Vec& lambda,
                                  bool weight_kind);

std::string tensor_report_json(const RootDatum& R, const std::string& datum_name, const Vec& mu,
                               const Vec& lambda, const Vec& nu);

// Paving report: the unfiltered family with per-walk cell shapes and the
// total cell polynomial (branching paving, or convolution paving when nu
// is present).
std::string paving_report_json(const RootDatum& R, const std::string& datum_name,
                               const std::vector<int>& J, const Vec& mu, const Vec& lambda,
                               const Vec* nu);

// Enumeration report for one explicit type.
std::string walks_report_json(const RootDatum& R, const std::string& datum_name, const AffElt& start,
                              const ReducedWord& word, const Orientation& o,
                              const WalkConstraints& cons);

}  // namespace aw
