#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "manakov/io.hpp"
#include "manakov/reports.hpp"
#include "manakov/svg.hpp"

using namespace manakov;

TEST_CASE("doubles round-trip through the text format") {
  for (double v : {0.1, -1.0 / 3.0, 1e-300, 12345.678901234567}) CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("spectrum csv layout") {
  JointEigenvalue e;
  e.x = 0.5;
  e.y = -2.0;
  e.irrep = parse_irrep("B2_a");
  e.residual = 1e-13;
  const std::string csv = spectrum_csv({e});
  CHECK(csv == "x,y,irrep,residual\n0.5,-2,B2_a," + format_double(1e-13) + "\n");
}

TEST_CASE("write_text_file creates directories and reports failures") {
  const auto dir = std::filesystem::temp_directory_path() / "manakov_io_test" / "nested";
  std::filesystem::remove_all(dir.parent_path());
  write_text_file(dir / "f.txt", "abc");
  std::ifstream in(dir / "f.txt");
  std::stringstream s;
  s << in.rdbuf();
  CHECK(s.str() == "abc");
  CHECK_THROWS_WITH_AS(write_text_file(dir / "f.txt" / "g.txt", "x"),
                       doctest::Contains("f.txt"), std::runtime_error);
  std::filesystem::remove_all(dir.parent_path());
}

TEST_CASE("diagram json carries the schema and geometry") {
  const json j = diagram_json(build_diagram(4, 3));
  CHECK(j["schema"] == 1);
  CHECK(j["critical_values"].size() == 6);
  CHECK(j["critical_lines"].size() == 4);
  CHECK(j["parabola"].size() == 1024);
  CHECK(j["regions"].size() == 4);
  CHECK(j["regions"]["II"]["component_count"] == 4);
  CHECK(j["critical_values"]["E"][0].get<double>() == 0.0);
  CHECK(j.dump() == diagram_json(build_diagram(4, 3)).dump());
}

TEST_CASE("svg output is well formed") {
  const std::string s = diagram_svg(build_diagram(4, 3));
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("</svg>") != std::string::npos);
  CHECK(s.find(">II<") != std::string::npos);
}
