#include "alcovewalks/json_io.hpp"

#include <json.hpp>

namespace aw {

namespace {

using nlohmann::json;

json vec_json(const Vec& v) { return json(v); }

json elt_json(const RootDatum& R, const AffElt& a) {
  json word = json::array();
  for (int i : R.w(a.w).word) word.push_back(i + 1);
  return json::array({vec_json(a.t), word});
}

json letters_json(const RootDatum& R, const std::vector<int>& letters) {
  json out = json::array();
  for (int s : letters) out.push_back(letter_name(R, s));
  return out;
}

json walk_json(const RootDatum& R, const LabeledWalk& w) {
  json j;
  j["start"] = elt_json(R, w.start);
  j["type_word"] = letters_json(R, w.letters);
  j["omega"] = elt_json(R, w.omega);
  json labels = json::array();
  for (const StepLabel& l : w.labels) labels.push_back(step_kind_name(l.kind));
  j["labels"] = labels;
  j["end_vertex"] = vec_json(w.end.t);
  j["cplus"] = w.stats.cplus;
  j["cminus"] = w.stats.cminus;
  j["fplus"] = w.stats.fplus;
  j["dim"] = w.dimension();
  return j;
}

json poly_json(const CellPolynomial& p) { return json(p.coeff); }

AffElt elt_from_json(const RootDatum& R, const json& j) {
  Vec t = j.at(0).get<Vec>();
  int w = 0;
  for (const auto& letter : j.at(1)) {
    int i = letter.get<int>() - 1;
    check(0 <= i && i < R.nsimple, Errc::ParseError, "finite word letter out of range");
    w = R.w(w).right_mult[i];
  }
  return AffElt{t, w};
}

json entry_json(const RootDatum& R, const FamilyEntry& e, const std::vector<LabeledWalk>& max_walks) {
  json j;
  json w_word = json::array();
  for (int i : R.w(e.w).word) w_word.push_back(i + 1);
  j["w_word"] = w_word;
  j["w_mu"] = vec_json(e.w_mu);
  j["type_word"] = letters_json(R, e.word.letters);
  j["type_length"] = static_cast<Int>(e.word.letters.size());
  j["lambda_w"] = vec_json(e.lambda_w);
  j["walk_count"] = e.walks.size();
  j["max_walk_count"] = max_walks.size();
  j["cell_polynomial"] = poly_json(cell_polynomial(e.walks));
  json mw = json::array();
  for (const LabeledWalk& w : max_walks) mw.push_back(walk_json(R, w));
  j["max_walks"] = mw;
  return j;
}

json query_json(const std::string& kind, const std::string& datum_name, const Vec& mu, const Vec* lambda,
                const Vec* nu, const std::vector<int>* J) {
  json q;
  q["kind"] = kind;
  q["datum"] = datum_name;
  q["mu"] = vec_json(mu);
  if (lambda) q["lambda"] = vec_json(*lambda);
  if (nu) q["nu"] = vec_json(*nu);
  if (J) {
    json levi = json::array();
    for (int j : *J) levi.push_back(j + 1);
    q["levi"] = levi;
  }
  return q;
}

json family_report(const RootDatum& R, const WalkFamily& fam, const WalkFamily& maxfam) {
  json j;
  j["dimension_bound"] = fam.dim_bound;
  json per_w = json::array();
  CellPolynomial total = CellPolynomial::zero();
  std::size_t max_count = 0;
  for (std::size_t i = 0; i < fam.entries.size(); ++i) {
    const auto& e = fam.entries[i];
    const auto& m = maxfam.entries[i].walks;
    per_w.push_back(entry_json(R, e, m));
    total.add(cell_polynomial(e.walks));
    max_count += m.size();
  }
  j["per_w"] = per_w;
  j["cell_polynomial"] = poly_json(total);
  j["multiplicity"] = max_count;
  j["family_walk_count"] = fam.total_walks();
  return j;
}

}  // namespace

std::string walk_to_json(const RootDatum& R, const LabeledWalk& walk) { return walk_json(R, walk).dump(); }

LabeledWalk walk_from_json_replayed(const RootDatum& R, const std::string& json_text, const Orientation& o) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("bad walk JSON: ") + e.what());
  }
  AffElt start = elt_from_json(R, j.at("start"));
  AffElt omega = elt_from_json(R, j.at("omega"));
  std::vector<int> letters;
  for (const auto& l : j.at("type_word")) letters.push_back(parse_letter(R, l.get<std::string>()));
  std::vector<StepKind> kinds;
  for (const auto& l : j.at("labels")) kinds.push_back(parse_step_kind(l.get<std::string>()));
  LabeledWalk w = replay_walk(R, start, letters, omega, kinds, o);
  check(w.end.t == j.at("end_vertex").get<Vec>(), Errc::PreconditionViolated,
        "replayed walk ends at a different vertex");
  check(w.stats.cplus == j.at("cplus").get<int>() && w.stats.cminus == j.at("cminus").get<int>() &&
            w.stats.fplus == j.at("fplus").get<int>(),
        Errc::PreconditionViolated, "replayed walk statistics differ");
  return w;
}

std::string branching_report_json(const RootDatum& R, const std::string& datum_name,
                                  const std::vector<int>& J, const Vec& mu, const Vec& lambda,
                                  bool weight_kind) {
  WalkFamily fam = build_P_family(R, J, mu, lambda);
  WalkFamily maxfam = maximal_family(R, fam);
  json j = family_report(R, fam, maxfam);
  j["query"] = query_json(weight_kind ? "weight" : "branch", datum_name, mu, &lambda, nullptr,
                          weight_kind ? nullptr : &J);
  return j.dump(2);
}

std::string tensor_report_json(const RootDatum& R, const std::string& datum_name, const Vec& mu,
                               const Vec& lambda, const Vec& nu) {
  WalkFamily fam = convolution_walk_family(R, lambda, mu, nu);
  json j;
  j["query"] = query_json("tensor", datum_name, mu, &lambda, &nu, nullptr);
  j["dimension_bound"] = fam.dim_bound;
  json per_w = json::array();
  CellPolynomial total = CellPolynomial::zero();
  Int mult = 0;
  for (const auto& e : fam.entries) {
    std::vector<LabeledWalk> max_walks;
    for (const LabeledWalk& w : e.walks)
      if (w.dimension() == fam.dim_bound) max_walks.push_back(w);
    mult += static_cast<Int>(max_walks.size());
    per_w.push_back(entry_json(R, e, max_walks));
    total.add(cell_polynomial(e.walks));
  }
  j["per_w"] = per_w;
  j["cell_polynomial"] = poly_json(total);
  j["multiplicity"] = mult;
  j["family_walk_count"] = fam.total_walks();
  return j.dump(2);
}

std::string paving_report_json(const RootDatum& R, const std::string& datum_name,
                               const std::vector<int>& J, const Vec& mu, const Vec& lambda,
                               const Vec* nu) {
  if (nu) return tensor_report_json(R, datum_name, mu, lambda, *nu);
  return branching_report_json(R, datum_name, J, mu, lambda, false);
}

std::string walks_report_json(const RootDatum& R, const std::string& datum_name, const AffElt& start,
                              const ReducedWord& word, const Orientation& o,
                              const WalkConstraints& cons) {
  std::vector<LabeledWalk> walks = enumerate_folded_walks(R, start, word, o, cons);
  json j;
  j["datum"] = datum_name;
  j["start"] = elt_json(R, start);
  j["type_word"] = letters_json(R, word.letters);
  j["omega"] = elt_json(R, word.omega);
  json levi = json::array();
  for (int idx : o.levi) levi.push_back(idx + 1);
  j["levi"] = levi;
  j["walk_count"] = walks.size();
  j["cell_polynomial"] = poly_json(cell_polynomial(walks));
  json arr = json::array();
  for (const LabeledWalk& w : walks) arr.push_back(walk_json(R, w));
  j["walks"] = arr;
  return j.dump(2);
}

}  // namespace aw
