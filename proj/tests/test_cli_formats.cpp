#include "tevtrop/io.hpp"

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

using namespace tevtrop;

TEST_SUITE_BEGIN("cli_formats");

TEST_CASE("exact decimal rendering") {
  CHECK(int_string(BigInt(0)) == "0");
  CHECK(int_string(BigInt(-7)) == "-7");
  CHECK(int_string(BigInt("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
  CHECK(rat_string(BigRat(7, 2)) == "7/2");
  CHECK(rat_string(BigRat(4, 2)) == "2");
  CHECK(rat_string(BigRat(0)) == "0");
  CHECK(rat_string(BigRat(-1, 3)) == "-1/3");
}

TEST_CASE("instance document") {
  Params p(2, 0, {Profile({1, 1}), Profile({1}), Profile({1}), Profile({1})});
  const nlohmann::json j = instance_json(p);
  CHECK(j["g"] == 2);
  CHECK(j["ell"] == 0);
  CHECK(j["mu"].size() == 4);
  CHECK(j["mu"][0] == nlohmann::json::array({1, 1}));
  CHECK(j["mu"][3] == nlohmann::json::array({1}));
}

TEST_CASE("envelope carries version and provenance") {
  Params p = Params::all_simple(1, 0);
  const nlohmann::json doc =
      envelope_json(p, nlohmann::json{{"value", "2"}}, "classical");
  CHECK(doc["meta"]["version"] == "1.0.0");
  CHECK(doc["meta"]["provenance"] == "classical");
  CHECK(doc["result"]["value"] == "2");
  CHECK(doc["instance"]["g"] == 1);
}

TEST_CASE("grid csv freezes header, order, and the empty-word dash") {
  const Grid grid = build_grid(1, 0);
  CHECK(grid_csv(grid) ==
        "word,j,delta,joined_ends,merge_size\n"
        "-,1,2,0,1\n"
        "-,2,2,0,1\n");
  const Grid deficit = build_grid(2, -1);
  CHECK(grid_csv(deficit) ==
        "word,j,delta,joined_ends,merge_size\n"
        "D,1,1,0,1\n");
}

TEST_CASE("grid json lists every cell") {
  const Grid grid = build_grid(3, 0);
  const nlohmann::json j = grid_json(grid);
  REQUIRE(j["cells"].size() == 8);
  CHECK(j["cells"][0]["word"] == "UU");
  CHECK(j["cells"][0]["j"] == 1);
  CHECK(j["cells"][4]["word"] == "UD");
  CHECK(j["cells"][4]["joined_ends"] == 1);
}

TEST_CASE("cover json mirrors the structure counts") {
  Params p = Params::all_simple(1, 1);
  const Grid grid = build_grid(1, 1);
  const TropicalCover c = build_cover(grid.cells[0], p);
  const nlohmann::json j = cover_json(c);
  CHECK(j["target"]["num_vertices"] == c.num_target_vertices);
  CHECK(j["target"]["edges"].size() == c.target_edges.size());
  CHECK(j["target"]["ends"].size() == c.target_ends.size());
  CHECK(j["source"]["vertices"].size() == c.source_vertices.size());
  CHECK(j["source"]["edges"].size() == c.source_edges.size());
  CHECK(j["source"]["ends"].size() == c.source_ends.size());
  // Marked source ends surface their labels.
  int marks = 0;
  for (const auto& e : j["source"]["ends"]) {
    if (e.contains("mark")) ++marks;
  }
  CHECK(marks == c.n);
}

TEST_CASE("multiplicity json carries all four factors and the product") {
  Params p = Params::all_simple(2, -1);
  const Grid grid = build_grid(2, -1);
  const TropicalCover c = build_cover(grid.cells[0], p);
  const nlohmann::json j = multiplicity_json(multiplicity(c));
  CHECK(j["automorphism_factor"] == "1/4");
  CHECK(j["vertex_factor"] == "1");
  CHECK(j["determinant"] == "4");
  CHECK(j["edge_factor"] == "1");
  CHECK(j["value"] == "1");
}

TEST_CASE("matrix json renders exact entries") {
  Params p = Params::all_simple(2, -1);
  const TropicalCover c = build_cover(build_grid(2, -1).cells[0], p);
  const nlohmann::json j = matrix_json(dilation_matrix(c));
  REQUIRE(j["rows"].size() == 6);
  CHECK(j["rows"][0]["label"] == "x1");
  CHECK(j["rows"][0]["entries"][0] == "2");
  CHECK(j["rows"][3]["entries"][2] == "1");
  CHECK(j["rows"][3]["entries"][3] == "2");
}

TEST_CASE("dot export labels factors and marks") {
  Params p = Params::all_simple(1, 1);
  const TropicalCover c = build_cover(build_grid(1, 1).cells[0], p);
  const std::string dot = cover_dot(c, 1);
  CHECK(dot.rfind("graph cover1 {", 0) == 0);
  CHECK(dot.find("}\n") != std::string::npos);
  // One line per source edge.
  std::size_t edge_lines = 0;
  std::size_t pos = 0;
  while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
    ++edge_lines;
    pos += 4;
  }
  CHECK(edge_lines == c.source_edges.size());
  // Every mark appears as a node label.
  for (int mark = 1; mark <= c.n; ++mark) {
    const std::string needle = "label=\"" + std::to_string(mark) + "\"";
    CAPTURE(mark);
    CHECK(dot.find(needle) != std::string::npos);
  }
  // Expansion factor two appears on at least one edge line.
  bool factor_two_edge = false;
  std::istringstream lines(dot);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find(" -- ") != std::string::npos &&
        line.find("label=\"2\"") != std::string::npos) {
      factor_two_edge = true;
    }
  }
  CHECK(factor_two_edge);
}

TEST_CASE("dot output is deterministic") {
  Params p = Params::all_simple(2, 0);
  const TropicalCover a = build_cover(build_grid(2, 0).cells[1], p);
  const TropicalCover b = build_cover(build_grid(2, 0).cells[1], p);
  CHECK(cover_dot(a, 2) == cover_dot(b, 2));
}

TEST_SUITE_END();
