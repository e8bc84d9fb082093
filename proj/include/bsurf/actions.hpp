#pragma once

#include <map>
#include <string>
#include <vector>

#include "bsurf/form.hpp"
#include "bsurf/report.hpp"
#include "bsurf/surface.hpp"

namespace bsurf {

/// One b-diffeomorphism in combinatorial form: face and curve permutations,
/// per-face orientation sign sigma, and per-curve transverse sign t (side
/// swap across the curve) and tangential sign u (curve reversal). Sign maps
/// are indexed by the source id.
struct ActionElement {
  std::string name;
  std::map<std::string, std::string> face_map;
  std::map<std::string, std::string> curve_map;
  std::map<std::string, int> sigma;  // per face
  std::map<std::string, int> t;      // per curve
  std::map<std::string, int> u;      // per curve

  bool is_identity() const;
};

struct FiniteAction {
  std::vector<ActionElement> elements;
};

/// Composition acting first by h, then by g; signs compose along the orbit:
/// t_{g.h}(c) = t_g(h(c)) t_h(c), and likewise for u and sigma.
ActionElement compose(const ActionElement& g, const ActionElement& h);

/// Checks that every element permutes faces/curves compatibly with the
/// attachment structure, that the identity is present, and that the element
/// list is closed under composition (including the composed signs).
ValidationReport validate_action(const SurfacePresentation& p, const FiniteAction& G);

/// Pullback of Laurent data: (g*a)_{c,i} = t^(m+i+1) u a_{g(c),i} and
/// (g*v)_F = sigma v_{g(F)}, so that pullback(pullback(w,g),h) =
/// pullback(w, compose(g,h)).
BmFormData pullback(const SurfacePresentation& p, const BmFormData& w, const ActionElement& g);

/// Exact invariance test; on failure the obstruction names the violating
/// element and coordinate.
Decision is_invariant(const SurfacePresentation& p, const BmFormData& w, const FiniteAction& G);

/// Uniform (Haar) average of the pullbacks over all elements. The output is
/// G-invariant; it may fail nondegeneracy, which check_form reports.
BmFormData average(const SurfacePresentation& p, const BmFormData& w, const FiniteAction& G);

/// Equivalence through a matching that commutes with the combinatorial
/// action of every element; refuses when either form is not invariant.
Decision equivariantly_equivalent(const SurfacePresentation& p, const BmFormData& w1,
                                  const BmFormData& w2, const FiniteAction& G,
                                  const EquivOptions& opts = {});

/// The Z/2 action generated by an involution (identity plus the involution).
FiniteAction action_from_involution(const SurfacePresentation& p, const DeckInvolution& inv);

}  // namespace bsurf
