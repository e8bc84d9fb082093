#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>

#include "bsurf/graph.hpp"
#include "bsurf/report.hpp"
#include "bsurf/surface.hpp"

namespace bsurf {

/// A b^m-form in Laurent data: per curve the period vector (int_gamma alpha_i,
/// i = 0..m-1, in the tube anchoring that agrees with the curve's first
/// attachment), per face the signed smooth volume relative to the face's
/// reference orientation. Tube radius is normalized to 1.
struct BmFormData {
  int m = 1;
  std::map<std::string, Eigen::VectorXd> periods;
  std::map<std::string, double> volumes;
};

/// Structural id/shape mismatches between a form and its presentation.
class FormStructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ValidationReport check_form(const SurfacePresentation& p, const BmFormData& w);

/// Signs normalizing an orientable presentation to a coherent orientation:
/// `face` is the certificate flip per face (+1 on the smallest face id of
/// each component), `curve` the induced sign on each curve's period anchor.
struct OrientationGauge {
  std::map<std::string, int> face;
  std::map<std::string, int> curve;
};

OrientationGauge orientation_gauge(const SurfacePresentation& p);

/// Closed-form regularized Liouville volume (finite part of the limit
/// integral). Requires an orientable presentation.
double regularized_volume_closed(const SurfacePresentation& p, const BmFormData& w);

struct InvariantVector {
  int m = 1;
  BGraph topology;
  std::map<std::string, Eigen::VectorXd> periods;
  std::map<std::string, double> modular_periods;
  std::optional<double> regularized_volume;  // orientable only
};

InvariantVector invariants(const SurfacePresentation& p, const BmFormData& w);

/// Mazzeo-Melrose shape of the class: volume component (orientable only,
/// the top de Rham group vanishes otherwise) plus m periods per curve.
struct ClassVector {
  int m = 1;
  std::optional<double> volume;
  std::map<std::string, Eigen::VectorXd> periods;
};

ClassVector cohomology_class(const SurfacePresentation& p, const BmFormData& w);

struct EquivOptions {
  bool allow_orientation_reversal = false;
  double tol = 1e-9;
};

/// Global equivalence decision: some labeled graph isomorphism matching the
/// classes curve-by-curve; non-orientable inputs are lifted to their
/// orientation double covers and matched through deck-commuting
/// isomorphisms.
Decision equivalent(const SurfacePresentation& p1, const BmFormData& w1,
                    const SurfacePresentation& p2, const BmFormData& w2,
                    const EquivOptions& opts = {});

struct ConstructResult {
  std::optional<BmFormData> form;
  Decision existence;
};

/// Witness construction for exists_bm: default residues 2pi, unit volumes
/// signed by the coloring; non-orientable witnesses are built on the cover,
/// averaged by the deck action and pushed to base data.
ConstructResult construct_form(const SurfacePresentation& p, int m);

/// Lift of a base form to the orientation double cover (the second face copy
/// carries negated volumes; swapped curve lifts carry negated periods).
BmFormData lift_to_cover(const DoubleCover& dc, const BmFormData& w);

GraphLabels invariant_labels(const SurfacePresentation& p);

}  // namespace bsurf
