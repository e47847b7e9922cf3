#include <doctest.h>

#include <map>
#include <set>

#include "alcovewalks/root_datum.hpp"

using namespace aw;

namespace {

const RootDatum& datum(const std::string& name) {
  static std::map<std::string, RootDatum> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build_root_datum(name)).first;
  return it->second;
}

}  // namespace

TEST_CASE("preset classification counts") {
  struct Row {
    const char* name;
    std::size_t pos_roots, weyl;
  };
  for (Row row : {Row{"A1", 1, 2}, Row{"A2", 3, 6}, Row{"A3", 6, 24}, Row{"B2", 4, 8},
                  Row{"B2sc", 4, 8}, Row{"C2", 4, 8}, Row{"G2", 6, 12}, Row{"GL2", 1, 2},
                  Row{"GL3", 3, 6}, Row{"GL4", 6, 24}}) {
    const RootDatum& R = datum(row.name);
    CAPTURE(row.name);
    CHECK(R.pos_roots.size() == row.pos_roots);
    CHECK(R.weyl.size() == row.weyl);
  }
}

TEST_CASE("two_rho presets") {
  CHECK(datum("A2").two_rho == Vec{2, 2});
  CHECK(datum("GL3").two_rho == Vec{2, 0, -2});
  for (const char* name : {"A1", "A2", "A3", "B2", "B2sc", "C2", "G2", "GL2", "GL3", "GL4"}) {
    const RootDatum& R = datum(name);
    for (int i = 0; i < R.nsimple; ++i) {
      CHECK(dot(R.two_rho, R.spec.simple_coroots[i]) == 2);
      CHECK(dot(R.spec.simple_roots[i], R.two_rho_check) == 2);
    }
  }
}

TEST_CASE("every positive root is a nonnegative combination of simple roots") {
  for (const char* name : {"A2", "B2", "C2", "G2", "GL3", "A3"}) {
    const RootDatum& R = datum(name);
    for (std::size_t idx = 0; idx < R.pos_roots.size(); ++idx) {
      Vec recon(R.rank, 0);
      for (int i = 0; i < R.nsimple; ++i) {
        CHECK(R.root_simple_coords[idx][i] >= 0);
        recon = vec_add(recon, vec_scaled(R.spec.simple_roots[i], R.root_simple_coords[idx][i]));
      }
      CHECK(recon == R.pos_roots[idx]);
    }
  }
}

TEST_CASE("pair examples") {
  const RootDatum& R = datum("GL3");
  CHECK(pair(R, R.spec.simple_roots[0], R.spec.simple_coroots[0]) == 2);
  CHECK(pair(R, R.two_rho, Vec{3, 1, 0}) == 6);  // <2rho, mu> = l(t_{-mu}) here
  CHECK(pair(R, Vec{2, 0, -2}, Vec{0, 0, 0}) == 0);
  CHECK_THROWS_AS(pair(R, Vec{1, 0}, Vec{0, 0, 0}), Error);
}

TEST_CASE("action on coweights and contragredient compatibility") {
  const RootDatum& R = datum("GL3");
  int s1 = R.w(0).right_mult[0];  // swaps the first two coordinates
  CHECK(R.act(s1, Vec{3, 1, 0}) == Vec{1, 3, 0});
  CHECK(R.act(0, Vec{3, 1, 0}) == Vec{3, 1, 0});

  const RootDatum& A1 = datum("A1");
  int s = A1.w(0).right_mult[0];
  CHECK(A1.act(s, A1.spec.simple_coroots[0]) == vec_neg(A1.spec.simple_coroots[0]));

  for (const char* name : {"A2", "B2", "G2", "GL3"}) {
    const RootDatum& D = datum(name);
    std::vector<Vec> samples = {D.two_rho_check, D.spec.simple_coroots[0],
                                Vec(static_cast<std::size_t>(D.rank), 1)};
    for (int w = 0; w < static_cast<int>(D.weyl.size()); ++w) {
      int wi = D.w(w).inv;
      for (const Vec& x : {D.two_rho, D.spec.simple_roots[0]})
        for (const Vec& v : samples) CHECK(dot(x, D.act(w, v)) == dot(D.act_weight(wi, x), v));
    }
  }
}

TEST_CASE("stored length equals inversion count") {
  for (const char* name : {"A2", "B2", "G2", "GL3", "A3"}) {
    const RootDatum& R = datum(name);
    for (int w = 0; w < static_cast<int>(R.weyl.size()); ++w) {
      int inversions = 0;
      for (const Vec& alpha : R.pos_roots)
        if (dot(R.act_weight(w, alpha), R.two_rho_check) < 0) ++inversions;
      CHECK(inversions == R.w(w).length);
      CHECK(static_cast<int>(R.w(w).word.size()) == R.w(w).length);
    }
  }
}

TEST_CASE("dominant_rep") {
  const RootDatum& R = datum("GL3");
  auto J = R.full_levi();

  auto [vd, u] = dominant_rep(R, Vec{0, 1, 3}, J);
  CHECK(vd == Vec{3, 1, 0});
  CHECK(R.act(u, Vec{0, 1, 3}) == vd);

  auto [vd2, u2] = dominant_rep(R, Vec{3, 1, 0}, J);
  CHECK(vd2 == Vec{3, 1, 0});
  CHECK(u2 == 0);

  // Idempotence.
  for (const Vec& v : {Vec{0, 1, 3}, Vec{1, 3, 1}, Vec{-1, -2, 5}}) {
    auto [d1, w1] = dominant_rep(R, v, J);
    auto [d2, w2] = dominant_rep(R, d1, J);
    CHECK(d1 == d2);
    CHECK(w2 == 0);
  }

  const RootDatum& A1 = datum("A1");
  auto [ad, au] = dominant_rep(A1, vec_neg(A1.spec.simple_coroots[0]), A1.full_levi());
  CHECK(ad == A1.spec.simple_coroots[0]);
  CHECK(A1.w(au).length == 1);

  // Partial Levi: only the J-walls matter.
  auto [pd, pu] = dominant_rep(R, Vec{0, 1, 3}, std::vector<int>{0});
  CHECK(pd == Vec{1, 0, 3});
  CHECK(R.w(pu).length == 1);
}

TEST_CASE("min_coset_reps_stab") {
  const RootDatum& R = datum("GL3");
  CHECK(min_coset_reps_stab(R, Vec{3, 1, 0}).size() == 6);  // regular orbit
  CHECK(min_coset_reps_stab(R, Vec{0, 0, 0}) == std::vector<int>{0});
  CHECK(min_coset_reps_stab(R, Vec{1, 1, 0}).size() == 3);
  CHECK_THROWS_AS(min_coset_reps_stab(R, Vec{0, 1, 3}), Error);

  // Representative values are pairwise distinct and cover the orbit.
  Vec mu{2, 1, 1};
  auto reps = min_coset_reps_stab(R, mu);
  std::set<Vec> values;
  for (int w : reps) values.insert(R.act(w, mu));
  CHECK(values.size() == reps.size());
  std::set<Vec> orbit;
  for (int w = 0; w < static_cast<int>(R.weyl.size()); ++w) orbit.insert(R.act(w, mu));
  CHECK(values == orbit);
}

TEST_CASE("dominance order and height") {
  const RootDatum& R = datum("GL3");
  CHECK(dominance_leq(R, Vec{1, 1, 2}, Vec{1, 1, 2}) == Int{0});
  // (3,1,0)-(1,1,2) = 2(e1-e3)^vee = 2a1^vee + 2a2^vee, so ht = 4.
  CHECK(dominance_leq(R, Vec{1, 1, 2}, Vec{3, 1, 0}) == Int{4});
  CHECK(dominance_leq(R, Vec{2, 1, 1}, Vec{3, 1, 0}) == Int{2});
  CHECK_FALSE(dominance_leq(R, Vec{0, 0, 0}, Vec{1, 0, 0}).has_value());  // center differs
  CHECK_FALSE(dominance_leq(R, Vec{3, 1, 0}, Vec{1, 1, 2}).has_value());

  const RootDatum& A1 = datum("A1");
  CHECK_FALSE(dominance_leq(A1, A1.spec.simple_coroots[0], Vec{0}).has_value());
  CHECK(dominance_leq(A1, Vec{0}, A1.spec.simple_coroots[0]) == Int{1});
}

TEST_CASE("coroot_coords") {
  const RootDatum& R = datum("B2");
  for (std::size_t idx = 0; idx < R.pos_coroots.size(); ++idx) {
    auto c = coroot_coords(R, R.pos_coroots[idx]);
    REQUIRE(c.has_value());
    Vec recon(R.rank, 0);
    for (int i = 0; i < R.nsimple; ++i) recon = vec_add(recon, vec_scaled(R.spec.simple_coroots[i], (*c)[i]));
    CHECK(recon == R.pos_coroots[idx]);
  }
  // B2 preset coroot lattice = {(x,y) : x even} inside the coweight lattice.
  CHECK_FALSE(coroot_coords(R, Vec{1, 0}).has_value());
  CHECK_FALSE(coroot_coords(R, Vec{1, 1}).has_value());
  CHECK(coroot_coords(R, Vec{2, 0}) == Vec{2, 1});
  CHECK(coroot_coords(R, Vec{0, 1}) == Vec{1, 1});

  const RootDatum& GL3 = datum("GL3");
  CHECK_FALSE(coroot_coords(GL3, Vec{1, 0, 0}).has_value());  // nonzero central part
  CHECK(coroot_coords(GL3, Vec{1, 0, -1}) == Vec{1, 1});
}

TEST_CASE("levi helpers") {
  const RootDatum& R = datum("GL3");
  CHECK(R.levi_elements({}).size() == 1);
  CHECK(R.levi_elements({0}).size() == 2);
  CHECK(R.levi_elements(R.full_levi()).size() == 6);
  CHECK(R.levi_positive_roots({}).empty());
  CHECK(R.levi_positive_roots({0}).size() == 1);
  CHECK(R.levi_positive_roots(R.full_levi()).size() == 3);
}

TEST_CASE("config parsing round trip") {
  RootDatumSpec s1 = parse_datum_config("name = GL3\n");
  CHECK(s1.name == "GL3");
  RootDatumSpec s2 = parse_datum_config(
      "# custom SO5 datum\nrank = 2\nsimple_roots = 1,-1;0,1\nsimple_coroots = 1,-1;0,2\n");
  CHECK(s2.rank == 2);
  CHECK(s2.simple_roots == std::vector<Vec>{{1, -1}, {0, 1}});
  RootDatum R = build_root_datum(s2);
  CHECK(R.pos_roots.size() == 4);
  RootDatumSpec s3 = parse_datum_config(datum_config_text(s2));
  CHECK(s3.simple_roots == s2.simple_roots);
  CHECK(s3.simple_coroots == s2.simple_coroots);
  CHECK_THROWS_AS(parse_datum_config("rank = 2\n"), Error);
  CHECK_THROWS_AS(parse_datum_config("name = Z9\n"), Error);
}

TEST_CASE("bad specs are rejected") {
  RootDatumSpec bad;
  bad.rank = 2;
  bad.simple_roots = {{1, 0}, {0, 1}};
  bad.simple_coroots = {{1, 0}, {0, 2}};  // diagonal pairing 1
  CHECK_THROWS_AS(build_root_datum(bad), Error);

  RootDatumSpec aff;  // affine A1 Cartan, not finite type
  aff.rank = 2;
  aff.simple_roots = {{1, 0}, {0, 1}};
  aff.simple_coroots = {{2, -2}, {-2, 2}};
  CHECK_THROWS_AS(build_root_datum(aff), Error);

  RootDatumSpec dep;  // dependent "simple roots"
  dep.rank = 1;
  dep.simple_roots = {{1}, {1}};
  dep.simple_coroots = {{2}, {2}};
  CHECK_THROWS_AS(build_root_datum(dep), Error);
}

TEST_CASE("dual datum round trip") {
  for (const char* name : {"A2", "B2", "B2sc", "G2", "GL3"}) {
    const RootDatum& R = datum(name);
    RootDatumSpec d = dual_spec(R.spec);
    RootDatum Rd = build_root_datum(d);
    CHECK(Rd.pos_roots.size() == R.pos_coroots.size());
    RootDatumSpec dd = dual_spec(d);
    CHECK(dd.simple_roots == R.spec.simple_roots);
    CHECK(dd.simple_coroots == R.spec.simple_coroots);
  }
}
