#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bsurf/actions.hpp"
#include "bsurf/form.hpp"
#include "bsurf/surface.hpp"

namespace bsurf::fixtures {

// --- presentations -------------------------------------------------------

/// Sphere with the equator as critical set: two disks, one curve.
SurfacePresentation sphere_equator();
/// Torus with two parallel essential circles: two annuli, two curves.
SurfacePresentation torus_two_curves();
/// Torus cut along one essential circle: one annulus, one loop curve.
SurfacePresentation torus_one_curve();
/// Projective plane with a one-sided critical circle: one disk face.
SurfacePresentation rp2_equator();
/// Klein bottle as two annuli glued with signs +1 and -1 (odd-sign cycle).
SurfacePresentation klein_two_annuli();
/// Klein bottle as one annulus closed off by two one-sided circles.
SurfacePresentation klein_mobius();
/// Two 4-holed spheres joined along four parallel curves (action fixtures).
SurfacePresentation four_band();

struct CoverFixture {
  SurfacePresentation cover;
  DeckInvolution deck;
};

/// Projective plane whose critical circle is translated off the one-sided
/// position: handed over as its orientation double cover (sphere with two
/// parallel circles) plus the antipodal deck involution.
CoverFixture rp2_translated_cover();

std::optional<SurfacePresentation> find_presentation(const std::string& name);
std::vector<std::string> presentation_names();

// --- forms ---------------------------------------------------------------

/// Order-1 sphere form: residue 2pi, opposite hemisphere volumes.
BmFormData sphere_form_m1();
/// The order-2 pair with equal volume but distinct index-1 periods.
BmFormData sphere_omega1();  // a = [2pi, 0]
BmFormData sphere_omega2();  // a = [2pi, 2pi]
/// Witness forms on the torus fixtures.
BmFormData torus2_form(int m);
BmFormData torus1_form_m2();
/// Odd-order witnesses on the non-orientable fixtures.
BmFormData rp2_form_m3();
BmFormData klein_form_m3();
/// The deck-invariant form on the torus that descends to the Klein bottle
/// for odd m (and fails to for even m).
BmFormData torus_cover_form(int m);
/// Equal class vectors distributed differently across the action orbits.
BmFormData four_band_form_a();
BmFormData four_band_form_b();

// --- actions -------------------------------------------------------------

/// Z/2 on the torus generated by the free orientation-reversing involution
/// covering the Klein bottle (t = -1, u = +1 on both curves).
FiniteAction klein_action();
/// Z/2 on the sphere generated by the antipodal map.
FiniteAction antipodal_action();
/// Z/2 on four_band swapping the first two curves and fixing the rest.
FiniteAction four_band_action();

}  // namespace bsurf::fixtures
