#include <doctest.h>

#include <algorithm>
#include <random>

#include "bsurf/fixtures.hpp"
#include "bsurf/surface.hpp"

using namespace bsurf;
namespace fx = bsurf::fixtures;

namespace {

bool mentions(const ValidationReport& r, const std::string& needle) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

/// Flip the reference orientation of one face: toggles the gluing sign of
/// every two-sided curve attached to it an odd number of times.
SurfacePresentation flip_face(SurfacePresentation p, const std::string& face) {
  for (auto& c : p.curves) {
    if (c.sided != Sidedness::TwoSided) continue;
    int touches = 0;
    for (const auto& a : c.attachments)
      if (a.face == face) ++touches;
    if (touches % 2 == 1) c.gluing_sign = -c.gluing_sign;
  }
  return p;
}

}  // namespace

TEST_CASE("fixture presentations validate") {
  for (const auto& name : fx::presentation_names()) {
    CAPTURE(name);
    CHECK(validate(*fx::find_presentation(name)).ok());
  }
  CHECK(validate(fx::rp2_translated_cover().cover).ok());
}

TEST_CASE("euler mismatch is reported") {
  SurfacePresentation p = fx::sphere_equator();
  p.declared_euler_char = 3;
  ValidationReport r = validate(p);
  CHECK_FALSE(r.ok());
  CHECK(mentions(r, "euler mismatch"));
}

TEST_CASE("structural violations are reported") {
  SUBCASE("duplicate face id") {
    SurfacePresentation p = fx::sphere_equator();
    p.faces.push_back(p.faces[0]);
    CHECK(mentions(validate(p), "duplicate face id"));
  }
  SUBCASE("dangling face reference") {
    SurfacePresentation p = fx::sphere_equator();
    p.curves[0].attachments[1].face = "missing";
    CHECK(mentions(validate(p), "unknown face"));
  }
  SUBCASE("unreferenced slot") {
    SurfacePresentation p = fx::sphere_equator();
    p.faces[0].boundary_slots.push_back("extra");
    CHECK(mentions(validate(p), "referenced 0 times"));
  }
  SUBCASE("two-sided curve with one attachment") {
    SurfacePresentation p = fx::sphere_equator();
    p.curves[0].attachments.pop_back();
    CHECK_FALSE(validate(p).ok());
  }
  SUBCASE("capping must close up orientably") {
    SurfacePresentation p = fx::sphere_equator();
    p.faces[0].euler_char = 0;  // one boundary circle, chi 0: capped chi = 1
    p.declared_euler_char = 1;
    CHECK(mentions(validate(p), "capped"));
  }
}

TEST_CASE("orientability detection") {
  SUBCASE("sphere: identity certificate") {
    OrientationResult r = is_orientable(fx::sphere_equator());
    REQUIRE(r.certificate);
    CHECK(r.certificate->flip.at("N") == 1);
    CHECK(r.certificate->flip.at("S") == 1);
  }
  SUBCASE("projective plane: one-sided obstruction") {
    OrientationResult r = is_orientable(fx::rp2_equator());
    CHECK_FALSE(r.certificate);
    CHECK(r.obstruction == std::vector<std::string>{"c"});
  }
  SUBCASE("Klein bottle from two annuli: odd-sign cycle") {
    OrientationResult r = is_orientable(fx::klein_two_annuli());
    CHECK_FALSE(r.certificate);
    std::vector<std::string> cyc = r.obstruction;
    std::sort(cyc.begin(), cyc.end());
    CHECK(cyc == std::vector<std::string>{"c1", "c2"});
  }
  SUBCASE("flipped reference orientations do not change the verdict") {
    std::mt19937 rng(7);
    for (const auto& name : fx::presentation_names()) {
      SurfacePresentation p = *fx::find_presentation(name);
      const bool expect = is_orientable(p).certificate.has_value();
      for (int trial = 0; trial < 8; ++trial) {
        SurfacePresentation q = p;
        for (const auto& f : p.faces)
          if (rng() % 2) q = flip_face(q, f.id);
        CAPTURE(name);
        CHECK(is_orientable(q).certificate.has_value() == expect);
      }
    }
  }
}

TEST_CASE("orientation double cover") {
  SUBCASE("projective plane lifts to the sphere") {
    DoubleCover dc = orientation_double_cover(fx::rp2_equator());
    CHECK(dc.cover.faces.size() == 2);
    CHECK(dc.cover.curves.size() == 1);
    CHECK(dc.cover.declared_euler_char == 2);
    CHECK(is_orientable(dc.cover).certificate);
    CHECK(validate(dc.cover).ok());
    CHECK(validate_involution(dc.cover, dc.deck).ok());
  }
  SUBCASE("orientable input gives the trivial double") {
    DoubleCover dc = orientation_double_cover(fx::sphere_equator());
    CHECK(face_components(dc.cover).size() == 2);
    // Idempotence up to isomorphism: the cover of the disjoint double is
    // four copies.
    DoubleCover dc2 = orientation_double_cover(dc.cover);
    CHECK(face_components(dc2.cover).size() == 4);
  }
  SUBCASE("cover is orientable and chi doubles for every fixture") {
    for (const auto& name : fx::presentation_names()) {
      SurfacePresentation p = *fx::find_presentation(name);
      DoubleCover dc = orientation_double_cover(p);
      CAPTURE(name);
      CHECK(validate(dc.cover).ok());
      CHECK(is_orientable(dc.cover).certificate);
      CHECK(dc.cover.declared_euler_char == 2 * p.declared_euler_char);
      // Deck involution free on faces; validate_involution checks curves.
      for (const auto& [a, b] : dc.deck.face_map) CHECK(a != b);
      CHECK(validate_involution(dc.cover, dc.deck).ok());
    }
  }
  SUBCASE("orientable iff the double cover is trivial") {
    for (const auto& name : fx::presentation_names()) {
      SurfacePresentation p = *fx::find_presentation(name);
      const size_t base_comps = face_components(p).size();
      DoubleCover dc = orientation_double_cover(p);
      CAPTURE(name);
      CHECK((is_orientable(p).certificate.has_value()) ==
            (face_components(dc.cover).size() == 2 * base_comps));
    }
  }
}

TEST_CASE("involution validation rejects defects") {
  DoubleCover dc = orientation_double_cover(fx::rp2_equator());
  SUBCASE("non-involutive face map") {
    DeckInvolution bad = dc.deck;
    bad.face_map["D+"] = "D+";
    CHECK_FALSE(validate_involution(dc.cover, bad).ok());
  }
  SUBCASE("fixed curve needs a side swap") {
    DeckInvolution bad = dc.deck;
    bad.curve_t["c"] = +1;
    CHECK_FALSE(validate_involution(dc.cover, bad).ok());
  }
}

TEST_CASE("random small presentations: chi additivity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    // Chain of annuli closed off by two disks: always a valid sphere-like
    // presentation whose chi is the face sum.
    const int n = 1 + static_cast<int>(rng() % 4);
    SurfacePresentation p;
    p.faces.push_back({"D0", 1, {"b"}});
    for (int i = 0; i < n; ++i)
      p.faces.push_back({"A" + std::to_string(i), 0, {"s1", "s2"}});
    p.faces.push_back({"D1", 1, {"b"}});
    std::string prev = "D0", prev_slot = "b";
    for (int i = 0; i < n; ++i) {
      const std::string a = "A" + std::to_string(i);
      p.curves.push_back({"c" + std::to_string(i), Sidedness::TwoSided,
                          {{prev, prev_slot}, {a, "s1"}}, rng() % 2 ? 1 : -1});
      prev = a;
      prev_slot = "s2";
    }
    p.curves.push_back({"cend", Sidedness::TwoSided, {{prev, prev_slot}, {"D1", "b"}}, 1});
    p.declared_euler_char = 2;
    CHECK(validate(p).ok());
    p.declared_euler_char = 3;
    CHECK_FALSE(validate(p).ok());
  }
}
