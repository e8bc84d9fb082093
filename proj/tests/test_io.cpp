#include <doctest.h>

#include "bsurf/fixtures.hpp"
#include "bsurf/io.hpp"

using namespace bsurf;
using bsurf::io::json;
namespace fx = bsurf::fixtures;

TEST_CASE("presentation round trip") {
  for (const auto& name : fx::presentation_names()) {
    CAPTURE(name);
    SurfacePresentation p = *fx::find_presentation(name);
    io::ParsedPresentation back = io::parse_presentation(io::presentation_to_json(p));
    json again = io::presentation_to_json(back.p);
    CHECK(io::presentation_to_json(p) == again);
    CHECK(validate(back.p).ok());
    CHECK_FALSE(back.involution);
  }
}

TEST_CASE("form round trip") {
  BmFormData w = fx::sphere_omega2();
  io::ParsedForm back = io::parse_form(io::form_to_json(w));
  CHECK(back.w.m == 2);
  CHECK(back.w.periods.at("c")(1) == w.periods.at("c")(1));
  CHECK(io::form_to_json(back.w) == io::form_to_json(w));
  CHECK_FALSE(back.presentation);
}

TEST_CASE("nambu round trip") {
  NambuData d = nambu_from_surface(fx::sphere_equator(), fx::sphere_form_m1());
  NambuData back = io::parse_nambu(io::nambu_to_json(d));
  CHECK(io::nambu_to_json(back) == io::nambu_to_json(d));
}

TEST_CASE("schema violations are rejected by name") {
  json doc = io::presentation_to_json(fx::sphere_equator());

  SUBCASE("unknown top-level key") {
    doc["extra"] = 1;
    CHECK_THROWS_WITH_AS(io::parse_presentation(doc), doctest::Contains("unknown key 'extra'"),
                         io::ParseError);
  }
  SUBCASE("missing required key") {
    doc.erase("faces");
    CHECK_THROWS_WITH_AS(io::parse_presentation(doc), doctest::Contains("missing key 'faces'"),
                         io::ParseError);
  }
  SUBCASE("bad gluing sign") {
    doc["curves"][0]["sign"] = 2;
    CHECK_THROWS_AS(io::parse_presentation(doc), io::ParseError);
  }
  SUBCASE("bad sidedness string") {
    doc["curves"][0]["sided"] = "sideways";
    CHECK_THROWS_AS(io::parse_presentation(doc), io::ParseError);
  }
  SUBCASE("one-sided curves must not carry a sign") {
    json rp2 = io::presentation_to_json(fx::rp2_equator());
    rp2["curves"][0]["sign"] = 1;
    CHECK_THROWS_WITH_AS(io::parse_presentation(rp2), doctest::Contains("carry no sign"),
                         io::ParseError);
  }
  SUBCASE("unknown key inside a face") {
    doc["faces"][0]["genus"] = 0;
    CHECK_THROWS_AS(io::parse_presentation(doc), io::ParseError);
  }
}

TEST_CASE("involution documents") {
  json doc = io::presentation_to_json(fx::rp2_translated_cover().cover);
  doc["involution"] = {{"faces", {{"D1", "D2"}, {"D2", "D1"}, {"M", "M"}}},
                       {"curves", {{"z1", "z2"}, {"z2", "z1"}}},
                       {"sigma", {{"D1", -1}, {"D2", -1}, {"M", -1}}},
                       {"t", {{"z1", 1}, {"z2", 1}}},
                       {"u", {{"z1", -1}, {"z2", -1}}}};
  io::ParsedPresentation pp = io::parse_presentation(doc);
  REQUIRE(pp.involution);
  CHECK(pp.involution->face_map.at("D1") == "D2");
  CHECK(validate_involution(pp.p, *pp.involution).ok());

  doc["involution"]["t"]["z1"] = 0;
  CHECK_THROWS_AS(io::parse_presentation(doc), io::ParseError);
}

TEST_CASE("form documents resolve presentations") {
  json doc = io::form_to_json(fx::sphere_form_m1());
  doc["presentation"] = "sphere_equator";
  io::ParsedForm pf = io::parse_form(doc);
  REQUIRE(pf.presentation);
  CHECK(check_form(pf.presentation->p, pf.w).ok());

  doc["presentation"] = "no_such_fixture";
  CHECK_THROWS_WITH_AS(io::parse_form(doc), doctest::Contains("unknown fixture"), io::ParseError);

  doc["presentation"] = io::presentation_to_json(fx::sphere_equator());
  pf = io::parse_form(doc);
  REQUIRE(pf.presentation);
  CHECK(validate(pf.presentation->p).ok());
}

TEST_CASE("action documents") {
  json doc;
  doc["elements"] = json::array();
  doc["elements"].push_back({{"name", "e"},
                             {"faces", {{"N", "N"}, {"S", "S"}}},
                             {"curves", {{"c", "c"}}},
                             {"sigma", {{"N", 1}, {"S", 1}}},
                             {"t", {{"c", 1}}},
                             {"u", {{"c", 1}}}});
  doc["elements"].push_back({{"name", "antipodal"},
                             {"faces", {{"N", "S"}, {"S", "N"}}},
                             {"curves", {{"c", "c"}}},
                             {"sigma", {{"N", -1}, {"S", -1}}},
                             {"t", {{"c", -1}}},
                             {"u", {{"c", 1}}}});
  FiniteAction G = io::parse_action(doc);
  CHECK(G.elements.size() == 2);
  CHECK(validate_action(fx::sphere_equator(), G).ok());

  doc["elements"][1].erase("u");
  CHECK_THROWS_AS(io::parse_action(doc), io::ParseError);
}

TEST_CASE("load_file") {
  CHECK_THROWS_WITH_AS(io::load_file("/nonexistent/file.json"),
                       doctest::Contains("cannot open"), io::ParseError);
}
