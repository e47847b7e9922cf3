#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "alcovewalks/json_io.hpp"
#include "alcovewalks/svg.hpp"
#include "test_util.hpp"

using namespace aw;
using awtest::datum;
using nlohmann::json;

TEST_CASE("walk JSON schema and replay round trip") {
  const RootDatum& R = datum("GL3");
  Orientation torus = orientation_for_levi(R, {});
  ReducedWord word = reduced_word(R, right_w0_minimal(R, translation_of(R, Vec{1, 0, 3})));
  auto walks = enumerate_folded_walks(R, aff_identity(R), word, torus);
  REQUIRE(!walks.empty());
  for (const LabeledWalk& w : walks) {
    std::string text = walk_to_json(R, w);
    json j = json::parse(text);
    for (const char* key : {"start", "type_word", "omega", "labels", "end_vertex", "cplus", "cminus",
                            "fplus", "dim"})
      CHECK(j.contains(key));
    CHECK(j["labels"].size() == word.letters.size());
    LabeledWalk back = walk_from_json_replayed(R, text, torus);
    CHECK(back.end == w.end);
    CHECK(back.dimension() == w.dimension());
  }
  // A tampered record fails the replay check.
  json j = json::parse(walk_to_json(R, walks.front()));
  j["end_vertex"][0] = j["end_vertex"][0].get<long long>() + 1;
  CHECK_THROWS_AS(walk_from_json_replayed(R, j.dump(), torus), Error);

  // Walks from a translated alcove (convolution families) round trip too.
  Orientation base = orientation_for_levi(R, R.full_levi());
  ReducedWord w2 = reduced_word(R, right_w0_minimal(R, translation_of(R, Vec{2, 1, 0})));
  for (const LabeledWalk& w : enumerate_folded_walks(R, translation_of(R, Vec{1, 1, 0}), w2, base)) {
    LabeledWalk back = walk_from_json_replayed(R, walk_to_json(R, w), base);
    CHECK(back.end == w.end);
  }
}

TEST_CASE("branching report schema") {
  const RootDatum& R = datum("GL3");
  std::string text = branching_report_json(R, "GL3", {}, Vec{3, 1, 0}, Vec{1, 1, 2}, true);
  json j = json::parse(text);
  CHECK(j["query"]["kind"] == "weight");
  CHECK(j["query"]["datum"] == "GL3");
  CHECK(j["query"]["mu"] == json::array({3, 1, 0}));
  CHECK(j["multiplicity"] == 2);
  CHECK(j["dimension_bound"] == 2);
  REQUIRE(j["per_w"].is_array());
  long long max_total = 0;
  for (const auto& e : j["per_w"]) {
    for (const char* key :
         {"w_word", "w_mu", "type_word", "type_length", "lambda_w", "walk_count", "max_walk_count",
          "cell_polynomial", "max_walks"})
      CHECK(e.contains(key));
    max_total += e["max_walk_count"].get<long long>();
    CHECK(e["lambda_w"] == json::array({1, 1, 2}));
  }
  CHECK(max_total == 2);

  std::string branch = branching_report_json(R, "GL3", {0}, Vec{3, 1, 0}, Vec{2, 1, 1}, false);
  json jb = json::parse(branch);
  CHECK(jb["query"]["kind"] == "branch");
  CHECK(jb["query"]["levi"] == json::array({1}));
}

TEST_CASE("tensor and paving reports") {
  const RootDatum& R = datum("A1");
  std::string text = tensor_report_json(R, "A1", Vec{1}, Vec{1}, Vec{0});
  json j = json::parse(text);
  CHECK(j["query"]["kind"] == "tensor");
  CHECK(j["multiplicity"] == 1);

  Vec nu{0};
  std::string paving = paving_report_json(R, "A1", {}, Vec{1}, Vec{1}, &nu);
  CHECK(json::parse(paving)["query"]["kind"] == "tensor");
  std::string paving2 = paving_report_json(R, "A1", {}, Vec{2}, Vec{0}, nullptr);
  json j2 = json::parse(paving2);
  CHECK(j2["query"]["kind"] == "branch");
  CHECK(j2.contains("cell_polynomial"));
}

TEST_CASE("walks report") {
  const RootDatum& R = datum("A1");
  ReducedWord word = reduced_word(R, translation_of(R, R.spec.simple_coroots[0]));
  Orientation o = orientation_for_levi(R, {});
  std::string text = walks_report_json(R, "A1", aff_identity(R), word, o, {});
  json j = json::parse(text);
  CHECK(j["walk_count"] == 1);
  CHECK(j["cell_polynomial"] == json::array({0, 0, 1}));
  CHECK(j["walks"][0]["labels"] == json::array({"c+", "c+"}));
}

TEST_CASE("SVG output is well formed") {
  const RootDatum& R = datum("GL3");
  Vec mu{3, 1, 0}, lambda{2, 1, 1};
  std::string svg = render_walks_svg(R, mu, &lambda);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg ") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);  // base alcove
  CHECK(svg.find("marker-end") != std::string::npos);
  CHECK(svg.find("<rect") != std::string::npos);  // endpoint squares
  // Exactly three endpoint squares (one per conjugate of lambda) on top of
  // the background rectangle.
  std::size_t rects = 0;
  for (std::size_t pos = svg.find("<rect"); pos != std::string::npos; pos = svg.find("<rect", pos + 1))
    ++rects;
  CHECK(rects == 4);
  // Six bold orbit vertices plus fold marks drawn as circles.
  CHECK(svg.find("fill=\"#000000\"") != std::string::npos);

  // Deterministic output.
  CHECK(render_walks_svg(R, mu, &lambda) == svg);

  // Works for every rank-2 preset without a lambda; rejects other ranks.
  for (const char* name : {"A2", "B2", "B2sc", "C2", "G2"}) {
    const RootDatum& D = datum(name);
    Vec m(static_cast<std::size_t>(D.rank), 0);
    CHECK(render_walks_svg(D, m, nullptr).find("</svg>") != std::string::npos);
  }
  CHECK_THROWS_AS(render_walks_svg(datum("GL4"), Vec{0, 0, 0, 0}, nullptr), Error);
  CHECK_THROWS_AS(render_walks_svg(datum("A1"), Vec{0}, nullptr), Error);
}

TEST_CASE("SVG matches the golden GL3 picture") {
  const RootDatum& R = datum("GL3");
  Vec mu{3, 1, 0}, lambda{2, 1, 1};
  std::string svg = render_walks_svg(R, mu, &lambda);
  std::ifstream golden(std::string(TEST_DATA_DIR) + "/gl3_mu310_walks.svg", std::ios::binary);
  REQUIRE(golden.good());
  std::stringstream ss;
  ss << golden.rdbuf();
  CHECK(svg == ss.str());
}
