#include <sstream>

#include "derange/elusive.hpp"
#include "derange/specs.hpp"
#include "doctest.h"

using namespace derange;

TEST_CASE("generator files round trip") {
  auto g = parse_group_spec("L2:17");
  std::ostringstream out;
  write_generators(out, g.group.degree(), g.group.generators());
  std::istringstream in("# comment\n\n" + out.str());
  auto f = parse_generators(in);
  CHECK(f.degree == 18);
  REQUIRE(f.gens.size() == g.group.generators().size());
  for (std::size_t i = 0; i < f.gens.size(); ++i) CHECK(f.gens[i] == g.group.generators()[i]);
  CHECK(PermGroup(f.degree, f.gens).order() == 2448);
}

TEST_CASE("generator file errors name the line") {
  auto err = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_generators(in, "g");
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(err("degree 3\n1 2\n").find("g:2") != std::string::npos);
  CHECK(err("degree 3\n# x\n1 1 2\n").find("g:3") != std::string::npos);
  CHECK(err("degree 3\n1 2 4\n").find("out of range") != std::string::npos);
  CHECK(err("degree 3\n1 a 2\n").find("integer") != std::string::npos);
  CHECK(err("deg 3\n").find("g:1") != std::string::npos);
  CHECK(err("degree 3\n# only comments\n").find("no generators") != std::string::npos);
  CHECK(err("").find("missing") != std::string::npos);
}

TEST_CASE("group specs") {
  CHECK(parse_group_spec("S:8").group.order() == 40320);
  CHECK(parse_group_spec("A:10").group.order() == 1814400);
  CHECK(parse_group_spec("L2:17").group.order() == 2448);
  CHECK(parse_group_spec("PGL2:31").group.order() == 31 * 30 * 32);
  CHECK(parse_group_spec("L2:8.phi").group.order() == 504 * 3);
  CHECK(parse_group_spec("PGammaL2:9").group.order() == 1440);
  CHECK(parse_group_spec("M11").group.order() == 7920);
  CHECK(parse_group_spec("U3:3.2").group.order() == 12096);
  CHECK_THROWS_AS(parse_group_spec("X:3"), Error);
  CHECK_THROWS_AS(parse_group_spec("S:"), Error);
  CHECK_THROWS_AS(parse_group_spec("L2:6"), Error);
  CHECK_THROWS_AS(parse_group_spec("S:8x"), Error);
}

TEST_CASE("subgroup specs resolve to the right degree") {
  CHECK(resolve_action("S:8", "kset:3").point_count() == 56);
  CHECK(resolve_action("A:8", "part:4x2").point_count() == 35);
  CHECK(resolve_action("L2:17", "torus-").point_count() == 136);
  CHECK(resolve_action("L2:16", "subfield:4").point_count() == 68);
  CHECK(resolve_action("M11", "stab12").point_count() == 12);
  CHECK(resolve_action("M11", "stab").point_count() == 11);
  CHECK(resolve_action("U3:3", "P1").point_count() == 28);
  CHECK_THROWS_AS(resolve_action("S:8", "P1"), Error);
  CHECK_THROWS_AS(resolve_action("S:8", "kset:8"), Error);
  CHECK_THROWS_AS(resolve_action("M11", "part:2x2"), Error);
}

TEST_CASE("shipped data files") {
  auto m = read_generator_file(DERANGE_DATA_DIR "/m11.gens");
  CHECK(PermGroup(m.degree, m.gens).order() == 7920);
  auto a = resolve_action("L2:17", "file:" DERANGE_DATA_DIR "/17-8.gens");
  CHECK(a.point_count() == 18);
  auto v = classify(a);
  CHECK(v.status == Status::AlmostElusive);
  auto b = resolve_action("file:" DERANGE_DATA_DIR "/m11.gens", "stab");
  CHECK(b.point_count() == 11);
}
