#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsurf/form.hpp"
#include "bsurf/report.hpp"
#include "bsurf/surface.hpp"

namespace bsurf {

/// One connected component of the critical hypersurface with its period
/// vector (pairings of the Laurent coefficient classes with the fundamental
/// class of the component).
struct NambuComponent {
  std::string id;
  Eigen::VectorXd w;  // i = 0..m-1; modular period T = w(0)
};

/// A top-degree b^m-Nambu structure on an n-manifold, reduced to its
/// classifying data. `pair_label` is an opaque tag for the diffeomorphism
/// type of the pair (M, Z); two data sets are comparable only when the
/// labels agree.
struct NambuData {
  int n = 2;
  int m = 1;
  bool orientable = true;
  std::string pair_label;
  std::vector<NambuComponent> components;
  std::optional<double> regularized_volume;  // present iff orientable
};

ValidationReport nambu_validate(const NambuData& d);

struct NambuMatchOptions {
  /// Fixed component correspondence; when absent, all bijections between
  /// components are searched.
  std::optional<std::map<std::string, std::string>> correspondence;
  bool allow_orientation_reversal = false;
  double tol = 1e-9;
};

Decision nambu_equivalent(const NambuData& d1, const NambuData& d2,
                          const NambuMatchOptions& opts = {});

/// A finite action at the component level: per element a permutation of the
/// component ids with transverse/tangential signs, plus a volume sign.
struct NambuActionElement {
  std::string name;
  std::map<std::string, std::string> perm;
  std::map<std::string, int> t;
  std::map<std::string, int> u;
  int vol_sign = +1;
};

struct NambuAction {
  std::vector<NambuActionElement> elements;
};

NambuData nambu_average(const NambuData& d, const NambuAction& G);

/// The n = 2 specialization: package a surface form's classifying data as a
/// Nambu structure. Component periods are side-normalized to a positive
/// modular period; the pair label is a canonical form of the labeled
/// associated graph.
NambuData nambu_from_surface(const SurfacePresentation& p, const BmFormData& w);

}  // namespace bsurf
