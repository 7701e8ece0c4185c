#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hqf/io.hpp"
#include "hqf/random_gen.hpp"

#include <cstdio>
#include <filesystem>

using namespace hqf;

namespace {

const Polynomial3 x1 = Polynomial3::variable(0);
const Polynomial3 x2 = Polynomial3::variable(1);

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("polynomial json round-trip") {
  const Polynomial3 p = x1 * x1 - Rational(1, 3) * x2;
  CHECK(poly_from_json(poly_to_json(p)) == p);
  CHECK(poly_from_json(poly_to_json(Polynomial3{})).is_zero());

  Rng rng(501);
  for (int t = 0; t < 10; ++t) {
    Polynomial3 q;
    for (int d = 0; d <= 4; ++d) q += random_harmonic_scalar(rng, d);
    CHECK(poly_from_json(poly_to_json(q)) == q);
  }
}

TEST_CASE("field json round-trip") {
  const QuaternionPolyField p{x1, {{}, {}, x2}};
  CHECK(field_from_json(field_to_json(p)) == p);
}

TEST_CASE("format errors") {
  CHECK_THROWS_AS(poly_from_json(Json::object()), FormatError);
  CHECK_THROWS_AS(poly_from_json(Json::array({Json{{"e", {1, 0}}, {"c", "1"}}})),
                  FormatError);
  CHECK_THROWS_AS(poly_from_json(Json::array({Json{{"e", {1, 0, 0}}, {"c", "1/0"}}})),
                  FormatError);
  CHECK_THROWS_AS(poly_from_json(Json::array({Json{{"e", {1, 0, 0}}, {"c", "zebra"}}})),
                  FormatError);
  CHECK_THROWS_AS(poly_from_json(Json::array({Json{{"e", {-1, 0, 0}}, {"c", "1"}}})),
                  FormatError);
  CHECK_THROWS_AS(vec3_from_json(Json::array({"1", "2"})), FormatError);
  CHECK_THROWS_AS(field_from_json(Json{{"alpha", Json::array()}}), FormatError);

  Json bad_version = field_file_to_json(FieldFile{});
  bad_version["format_version"] = 99;
  CHECK_THROWS_AS(field_file_from_json(bad_version), FormatError);

  CHECK_THROWS_AS(read_field_file("/nonexistent/path/field.json"), FormatError);
}

TEST_CASE("field file round-trip with frame and axes") {
  FieldFile f;
  f.field = QuaternionPolyField{x1, {{}, {}, x2}};
  f.frame.emplace(Frame::standard());
  f.axes = {Axis(make_vec3(0, 0, 1)), Axis(make_vec3(1, 2, 2))};

  const std::string path = temp_path("hqf_io_test.json");
  write_field_file(path, f);
  const FieldFile g = read_field_file(path);
  CHECK(g.field == f.field);
  REQUIRE(g.frame.has_value());
  CHECK(g.frame->w1 == f.frame->w1);
  CHECK(g.frame->w2 == f.frame->w2);
  CHECK(g.frame->w3 == f.frame->w3);
  REQUIRE(g.axes.size() == 2);
  CHECK(g.axes[1].v == f.axes[1].v);
  std::remove(path.c_str());
}

TEST_CASE("invalid embedded frame surfaces as a format error") {
  Json j = field_file_to_json(FieldFile{});
  j["frame"] = Json::array({Json::array({"2", "0", "0"}), Json::array({"0", "1", "0"}),
                            Json::array({"0", "0", "1"})});
  CHECK_THROWS_AS(field_file_from_json(j), FormatError);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
}
