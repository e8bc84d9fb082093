#include "bsurf/fixtures.hpp"

namespace bsurf::fixtures {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Face face(std::string id, int chi, std::vector<std::string> slots) {
  Face f;
  f.id = std::move(id);
  f.euler_char = chi;
  f.boundary_slots = std::move(slots);
  return f;
}

Curve two_sided(std::string id, Attachment a, Attachment b, int sign) {
  Curve c;
  c.id = std::move(id);
  c.sided = Sidedness::TwoSided;
  c.attachments = {std::move(a), std::move(b)};
  c.gluing_sign = sign;
  return c;
}

Curve one_sided(std::string id, Attachment a) {
  Curve c;
  c.id = std::move(id);
  c.sided = Sidedness::OneSided;
  c.attachments = {std::move(a)};
  return c;
}

Eigen::VectorXd residue(int m, double a0, double a1 = 0) {
  Eigen::VectorXd a = Eigen::VectorXd::Zero(m);
  a(0) = a0;
  if (m > 1) a(1) = a1;
  return a;
}

}  // namespace

SurfacePresentation sphere_equator() {
  SurfacePresentation p;
  p.faces = {face("N", 1, {"b"}), face("S", 1, {"b"})};
  p.curves = {two_sided("c", {"N", "b"}, {"S", "b"}, +1)};
  p.declared_euler_char = 2;
  p.declared_orientable = true;
  return p;
}

SurfacePresentation torus_two_curves() {
  SurfacePresentation p;
  p.faces = {face("A", 0, {"s1", "s2"}), face("B", 0, {"s1", "s2"})};
  p.curves = {two_sided("c1", {"A", "s1"}, {"B", "s1"}, +1),
              two_sided("c2", {"A", "s2"}, {"B", "s2"}, +1)};
  p.declared_euler_char = 0;
  p.declared_orientable = true;
  return p;
}

SurfacePresentation torus_one_curve() {
  SurfacePresentation p;
  p.faces = {face("A", 0, {"s1", "s2"})};
  p.curves = {two_sided("c", {"A", "s1"}, {"A", "s2"}, +1)};
  p.declared_euler_char = 0;
  p.declared_orientable = true;
  return p;
}

SurfacePresentation rp2_equator() {
  SurfacePresentation p;
  p.faces = {face("D", 1, {"b"})};
  p.curves = {one_sided("c", {"D", "b"})};
  p.declared_euler_char = 1;
  p.declared_orientable = false;
  return p;
}

SurfacePresentation klein_two_annuli() {
  SurfacePresentation p;
  p.faces = {face("A", 0, {"s1", "s2"}), face("B", 0, {"s1", "s2"})};
  p.curves = {two_sided("c1", {"A", "s1"}, {"B", "s1"}, +1),
              two_sided("c2", {"A", "s2"}, {"B", "s2"}, -1)};
  p.declared_euler_char = 0;
  p.declared_orientable = false;
  return p;
}

SurfacePresentation klein_mobius() {
  SurfacePresentation p;
  p.faces = {face("A", 0, {"s1", "s2"})};
  p.curves = {one_sided("c1", {"A", "s1"}), one_sided("c2", {"A", "s2"})};
  p.declared_euler_char = 0;
  p.declared_orientable = false;
  return p;
}

SurfacePresentation four_band() {
  SurfacePresentation p;
  p.faces = {face("A", -2, {"s1", "s2", "s3", "s4"}), face("B", -2, {"s1", "s2", "s3", "s4"})};
  for (int i = 1; i <= 4; ++i) {
    const std::string s = "s" + std::to_string(i);
    p.curves.push_back(two_sided("c" + std::to_string(i), {"A", s}, {"B", s}, +1));
  }
  p.declared_euler_char = -4;
  p.declared_orientable = true;
  return p;
}

CoverFixture rp2_translated_cover() {
  CoverFixture cf;
  SurfacePresentation& p = cf.cover;
  p.faces = {face("D1", 1, {"b"}), face("M", 0, {"s1", "s2"}), face("D2", 1, {"b"})};
  p.curves = {two_sided("z1", {"D1", "b"}, {"M", "s1"}, +1),
              two_sided("z2", {"M", "s2"}, {"D2", "b"}, +1)};
  p.declared_euler_char = 2;
  p.declared_orientable = true;

  DeckInvolution& d = cf.deck;
  d.face_map = {{"D1", "D2"}, {"D2", "D1"}, {"M", "M"}};
  d.face_sigma = {{"D1", -1}, {"D2", -1}, {"M", -1}};
  d.curve_map = {{"z1", "z2"}, {"z2", "z1"}};
  d.curve_t = {{"z1", +1}, {"z2", +1}};
  d.curve_u = {{"z1", -1}, {"z2", -1}};
  return cf;
}

std::optional<SurfacePresentation> find_presentation(const std::string& name) {
  if (name == "sphere_equator") return sphere_equator();
  if (name == "torus_two_curves") return torus_two_curves();
  if (name == "torus_one_curve") return torus_one_curve();
  if (name == "rp2_equator") return rp2_equator();
  if (name == "klein_two_annuli") return klein_two_annuli();
  if (name == "klein_mobius") return klein_mobius();
  if (name == "four_band") return four_band();
  return std::nullopt;
}

std::vector<std::string> presentation_names() {
  return {"sphere_equator", "torus_two_curves", "torus_one_curve",   "rp2_equator",
          "klein_two_annuli", "klein_mobius",    "four_band"};
}

BmFormData sphere_form_m1() {
  BmFormData w;
  w.m = 1;
  w.periods["c"] = residue(1, kTwoPi);
  w.volumes = {{"N", 1.0}, {"S", -1.0}};
  return w;
}

BmFormData sphere_omega1() {
  BmFormData w;
  w.m = 2;
  w.periods["c"] = residue(2, kTwoPi, 0.0);
  w.volumes = {{"N", 0.0}, {"S", 0.0}};
  return w;
}

BmFormData sphere_omega2() {
  BmFormData w;
  w.m = 2;
  w.periods["c"] = residue(2, kTwoPi, kTwoPi);
  w.volumes = {{"N", 0.0}, {"S", 0.0}};
  return w;
}

BmFormData torus2_form(int m) {
  BmFormData w;
  w.m = m;
  w.periods["c1"] = residue(m, kTwoPi);
  w.periods["c2"] = residue(m, kTwoPi);
  const double vb = m % 2 == 1 ? -1.0 : 1.0;
  w.volumes = {{"A", 1.0}, {"B", vb}};
  return w;
}

BmFormData torus1_form_m2() {
  BmFormData w;
  w.m = 2;
  w.periods["c"] = residue(2, kTwoPi);
  w.volumes = {{"A", 1.0}};
  return w;
}

BmFormData rp2_form_m3() {
  BmFormData w;
  w.m = 3;
  w.periods["c"] = residue(3, kTwoPi);
  w.volumes = {{"D", 1.0}};
  return w;
}

BmFormData klein_form_m3() {
  BmFormData w;
  w.m = 3;
  w.periods["c1"] = residue(3, kTwoPi);
  w.periods["c2"] = residue(3, kTwoPi);
  w.volumes = {{"A", 1.0}};
  return w;
}

BmFormData torus_cover_form(int m) {
  BmFormData w;
  w.m = m;
  w.periods["c1"] = residue(m, kTwoPi);
  w.periods["c2"] = residue(m, kTwoPi);
  w.volumes = {{"A", 1.0}, {"B", -1.0}};
  return w;
}

BmFormData four_band_form_a() {
  BmFormData w;
  w.m = 1;
  w.periods["c1"] = residue(1, kTwoPi);
  w.periods["c2"] = residue(1, kTwoPi);
  w.periods["c3"] = residue(1, 3 * kTwoPi);
  w.periods["c4"] = residue(1, 3 * kTwoPi);
  w.volumes = {{"A", 1.0}, {"B", -1.0}};
  return w;
}

BmFormData four_band_form_b() {
  BmFormData w;
  w.m = 1;
  w.periods["c1"] = residue(1, 3 * kTwoPi);
  w.periods["c2"] = residue(1, 3 * kTwoPi);
  w.periods["c3"] = residue(1, kTwoPi);
  w.periods["c4"] = residue(1, kTwoPi);
  w.volumes = {{"A", 1.0}, {"B", -1.0}};
  return w;
}

namespace {

ActionElement identity_on(const SurfacePresentation& p) {
  ActionElement e;
  e.name = "e";
  for (const auto& f : p.faces) {
    e.face_map[f.id] = f.id;
    e.sigma[f.id] = 1;
  }
  for (const auto& c : p.curves) {
    e.curve_map[c.id] = c.id;
    e.t[c.id] = 1;
    e.u[c.id] = 1;
  }
  return e;
}

}  // namespace

FiniteAction klein_action() {
  SurfacePresentation p = torus_two_curves();
  ActionElement g;
  g.name = "rho";
  g.face_map = {{"A", "B"}, {"B", "A"}};
  g.sigma = {{"A", -1}, {"B", -1}};
  g.curve_map = {{"c1", "c1"}, {"c2", "c2"}};
  g.t = {{"c1", -1}, {"c2", -1}};
  g.u = {{"c1", +1}, {"c2", +1}};
  return {{identity_on(p), g}};
}

FiniteAction antipodal_action() {
  SurfacePresentation p = sphere_equator();
  ActionElement g;
  g.name = "antipodal";
  g.face_map = {{"N", "S"}, {"S", "N"}};
  g.sigma = {{"N", -1}, {"S", -1}};
  g.curve_map = {{"c", "c"}};
  g.t = {{"c", -1}};
  g.u = {{"c", +1}};
  return {{identity_on(p), g}};
}

FiniteAction four_band_action() {
  SurfacePresentation p = four_band();
  ActionElement g;
  g.name = "swap12";
  g.face_map = {{"A", "A"}, {"B", "B"}};
  g.sigma = {{"A", +1}, {"B", +1}};
  g.curve_map = {{"c1", "c2"}, {"c2", "c1"}, {"c3", "c3"}, {"c4", "c4"}};
  g.t = {{"c1", +1}, {"c2", +1}, {"c3", +1}, {"c4", +1}};
  g.u = {{"c1", +1}, {"c2", +1}, {"c3", +1}, {"c4", +1}};
  return {{identity_on(p), g}};
}

}  // namespace bsurf::fixtures
