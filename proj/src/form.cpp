#include "bsurf/form.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

#include "bsurf/quadrature.hpp"

namespace bsurf {

namespace {

void require_structure(const SurfacePresentation& p, const BmFormData& w) {
  if (w.m < 1) throw FormStructureError("order m must be positive");
  std::set<std::string> curve_ids, face_ids;
  for (const auto& c : p.curves) curve_ids.insert(c.id);
  for (const auto& f : p.faces) face_ids.insert(f.id);
  for (const auto& [id, a] : w.periods) {
    if (!curve_ids.count(id)) throw FormStructureError("periods reference unknown curve " + id);
    if (a.size() != w.m)
      throw FormStructureError("curve " + id + ": expected " + std::to_string(w.m) +
                               " periods, got " + std::to_string(a.size()));
  }
  for (const auto& [id, v] : w.volumes) {
    (void)v;
    if (!face_ids.count(id)) throw FormStructureError("volumes reference unknown face " + id);
  }
  for (const auto& c : p.curves)
    if (!w.periods.count(c.id)) throw FormStructureError("curve " + c.id + " has no period data");
  for (const auto& f : p.faces)
    if (!w.volumes.count(f.id)) throw FormStructureError("face " + f.id + " has no volume datum");
}

int sgn(double x) { return x > 0 ? +1 : (x < 0 ? -1 : 0); }

bool close(double x, double y, double tol) {
  return std::abs(x - y) <= tol * (1.0 + std::max(std::abs(x), std::abs(y)));
}

std::string fmt_map(const std::map<std::string, std::string>& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, b] : m) {
    if (!first) os << " ";
    os << a << "->" << b;
    first = false;
  }
  return os.str();
}

}  // namespace

ValidationReport check_form(const SurfacePresentation& p, const BmFormData& w) {
  require_structure(p, w);
  ValidationReport r;
  const int m = w.m;

  for (const auto& c : p.curves) {
    const Eigen::VectorXd& a = w.periods.at(c.id);
    if (a(0) == 0.0) r.add("curve " + c.id + ": leading period a_0 vanishes (degenerate)");
    if (c.sided == Sidedness::OneSided) {
      // A Moebius tube identifies (x, theta) with (-x, theta + pi); the
      // pullback multiplies a_i by (-1)^(m+i+1), so indices of the same
      // parity as m must vanish for the form to be well defined.
      for (int i = 0; i < m; ++i)
        if ((i - m) % 2 == 0 && a(i) != 0.0)
          r.add("curve " + c.id + ": one-sided curve requires a_" + std::to_string(i) + " = 0");
    }
  }

  // Closed components carry a genuine symplectic form, whose volume cannot
  // vanish.
  for (const auto& f : p.faces)
    if (f.boundary_slots.empty() && w.volumes.at(f.id) == 0.0)
      r.add("face " + f.id + ": closed face requires nonzero volume");

  // Sign compatibility: the symplectic orientation sign sigma_F relative to
  // the face's reference orientation must satisfy
  // sigma_F1 * sigma_F2 = (-1)^m * gluing_sign across every two-sided curve.
  // Faces with nonzero volume pin sigma_F = sign(v_F); the rest is a
  // consistency search over each constraint component.
  struct Edge {
    std::string other, curve;
    int rel;  // required sigma product
  };
  std::map<std::string, std::vector<Edge>> adj;
  for (const auto& f : p.faces) adj[f.id];
  const int mpar = (m % 2 == 0) ? +1 : -1;
  for (const auto& c : p.curves) {
    if (c.sided != Sidedness::TwoSided || c.attachments.size() != 2) continue;
    const std::string& f1 = c.attachments[0].face;
    const std::string& f2 = c.attachments[1].face;
    int rel = mpar * c.gluing_sign;
    if (f1 == f2) {
      if (rel != +1)
        r.add("curve " + c.id + ": loop sign incompatible with order " + std::to_string(m));
      continue;
    }
    adj[f1].push_back({f2, c.id, rel});
    adj[f2].push_back({f1, c.id, rel});
  }
  std::map<std::string, int> rel_sign;  // sigma relative to component root
  std::vector<std::string> order;
  for (const auto& f : p.faces) order.push_back(f.id);
  std::sort(order.begin(), order.end());
  for (const auto& root : order) {
    if (rel_sign.count(root)) continue;
    rel_sign[root] = +1;
    std::deque<std::string> queue{root};
    std::vector<std::string> comp{root};
    while (!queue.empty()) {
      std::string u = queue.front();
      queue.pop_front();
      for (const auto& e : adj[u]) {
        int want = rel_sign[u] * e.rel;
        auto it = rel_sign.find(e.other);
        if (it == rel_sign.end()) {
          rel_sign[e.other] = want;
          comp.push_back(e.other);
          queue.push_back(e.other);
        } else if (it->second != want) {
          r.add("curve " + e.curve + ": sign compatibility cycle is inconsistent for order " +
                std::to_string(m));
        }
      }
    }
    // Pinned faces (nonzero volume) must agree on the component's global sign.
    int pinned = 0;
    std::string pin_face;
    for (const auto& f : comp) {
      int s = sgn(w.volumes.at(f));
      if (s == 0) continue;
      int global = s * rel_sign[f];
      if (pinned == 0) {
        pinned = global;
        pin_face = f;
      } else if (pinned != global) {
        r.add("faces " + pin_face + ", " + f + ": volume signs violate sign compatibility");
      }
    }
  }
  return r;
}

OrientationGauge orientation_gauge(const SurfacePresentation& p) {
  OrientationResult res = is_orientable(p);
  if (!res.certificate) throw std::invalid_argument("presentation is not orientable");
  OrientationGauge g;
  g.face = res.certificate->flip;
  for (const auto& c : p.curves) g.curve[c.id] = g.face.at(c.attachments[0].face);
  return g;
}

double regularized_volume_closed(const SurfacePresentation& p, const BmFormData& w) {
  require_structure(p, w);
  OrientationGauge g = orientation_gauge(p);
  double total = 0;
  for (const auto& f : p.faces) total += g.face.at(f.id) * w.volumes.at(f.id);
  for (const auto& c : p.curves) {
    const Eigen::VectorXd& a = w.periods.at(c.id);
    double tube = 0;
    for (int i = 0; i < w.m; ++i) tube += finite_part_power(i, w.m) * a(i);
    total += g.curve.at(c.id) * tube;
  }
  return total;
}

InvariantVector invariants(const SurfacePresentation& p, const BmFormData& w) {
  ValidationReport r = check_form(p, w);
  if (!r.ok()) throw std::invalid_argument("invalid form: " + r.violations.front());
  InvariantVector iv;
  iv.m = w.m;
  iv.topology = build_graph(p);
  iv.periods = w.periods;
  for (const auto& c : p.curves) iv.modular_periods[c.id] = w.periods.at(c.id)(0);
  if (is_orientable(p).certificate) iv.regularized_volume = regularized_volume_closed(p, w);
  return iv;
}

ClassVector cohomology_class(const SurfacePresentation& p, const BmFormData& w) {
  require_structure(p, w);
  ClassVector cv;
  cv.m = w.m;
  if (is_orientable(p).certificate) {
    OrientationGauge g = orientation_gauge(p);
    cv.volume = regularized_volume_closed(p, w);
    for (const auto& c : p.curves) cv.periods[c.id] = g.curve.at(c.id) * w.periods.at(c.id);
  } else {
    // The top de Rham group of a non-orientable compact surface vanishes;
    // the class consists of the period components only.
    cv.periods = w.periods;
  }
  return cv;
}

GraphLabels invariant_labels(const SurfacePresentation& p) {
  GraphLabels l;
  for (const auto& f : p.faces) l.vertex[f.id] = "chi=" + std::to_string(f.euler_char);
  for (const auto& c : p.curves)
    l.edge[c.id] = c.sided == Sidedness::TwoSided ? "two-sided" : "one-sided";
  return l;
}

BmFormData lift_to_cover(const DoubleCover& dc, const BmFormData& w) {
  BmFormData lw;
  lw.m = w.m;
  for (const auto& [f, lifts] : dc.face_lifts) {
    lw.volumes[lifts[0]] = w.volumes.at(f);
    lw.volumes[lifts[1]] = -w.volumes.at(f);
  }
  for (const auto& [c, lifts] : dc.curve_lifts) {
    lw.periods[lifts[0]] = w.periods.at(c);
    // The deck map carries the first lift to the second reversing the curve
    // orientation (t=+1, u=-1), so invariance forces negated periods there.
    if (lifts.size() == 2) lw.periods[lifts[1]] = -w.periods.at(c);
  }
  return lw;
}

namespace {

struct ClassSide {
  ClassVector cls;
  BGraph graph;
  GraphLabels labels;
};

bool class_matches(const ClassSide& s1, const ClassSide& s2, const GraphIso& iso, double tol,
                   bool flip2, std::string* mismatch) {
  double v1 = s1.cls.volume.value_or(0.0);
  double v2 = (flip2 ? -1 : 1) * s2.cls.volume.value_or(0.0);
  if (s1.cls.volume.has_value() != s2.cls.volume.has_value()) {
    if (mismatch) *mismatch = "volume component present on one side only";
    return false;
  }
  if (s1.cls.volume && !close(v1, v2, tol)) {
    std::ostringstream os;
    os << "regularized volume differs: " << v1 << " vs " << v2;
    if (mismatch) *mismatch = os.str();
    return false;
  }
  for (const auto& [c, a1] : s1.cls.periods) {
    const Eigen::VectorXd a2 = (flip2 ? -1 : 1) * s2.cls.periods.at(iso.edge_map.at(c));
    for (int i = 0; i < a1.size(); ++i)
      if (!close(a1(i), a2(i), tol)) {
        std::ostringstream os;
        os << "curve " << c << " -> " << iso.edge_map.at(c) << ": period index " << i
           << " differs: " << a1(i) << " vs " << a2(i);
        if (mismatch) *mismatch = os.str();
        return false;
      }
  }
  return true;
}

bool commutes_with_decks(const GraphIso& iso, const DeckInvolution& d1, const DeckInvolution& d2) {
  for (const auto& [f, g] : iso.vertex_map)
    if (iso.vertex_map.at(d1.face_map.at(f)) != d2.face_map.at(g)) return false;
  for (const auto& [c, e] : iso.edge_map)
    if (iso.edge_map.at(d1.curve_map.at(c)) != d2.curve_map.at(e)) return false;
  return true;
}

}  // namespace

Decision equivalent(const SurfacePresentation& p1, const BmFormData& w1,
                    const SurfacePresentation& p2, const BmFormData& w2,
                    const EquivOptions& opts) {
  if (w1.m != w2.m)
    return Decision::refuse("order mismatch: m=" + std::to_string(w1.m) + " vs m=" +
                            std::to_string(w2.m));
  ValidationReport r1 = check_form(p1, w1);
  if (!r1.ok()) return Decision::refuse("first form invalid: " + r1.violations.front());
  ValidationReport r2 = check_form(p2, w2);
  if (!r2.ok()) return Decision::refuse("second form invalid: " + r2.violations.front());

  const bool o1 = is_orientable(p1).certificate.has_value();
  const bool o2 = is_orientable(p2).certificate.has_value();
  if (o1 != o2) return Decision::make_no("orientability differs between the presentations");

  auto side = [](const SurfacePresentation& p, const BmFormData& w) {
    ClassSide s;
    s.cls = cohomology_class(p, w);
    s.graph = build_graph(p);
    s.labels = invariant_labels(p);
    return s;
  };

  auto decide = [&](const ClassSide& s1, const ClassSide& s2,
                    const DeckInvolution* d1, const DeckInvolution* d2) -> Decision {
    std::vector<GraphIso> isos = graph_isomorphisms(s1.graph, s2.graph, s1.labels, s2.labels);
    if (isos.empty())
      return Decision::make_no("no label-preserving isomorphism of the associated graphs");
    std::string mismatch = "class vectors differ under every isomorphism";
    for (const auto& iso : isos) {
      if (d1 && !commutes_with_decks(iso, *d1, *d2)) continue;
      if (class_matches(s1, s2, iso, opts.tol, false, &mismatch))
        return Decision::make_yes("matching: " + fmt_map(iso.vertex_map) + "; " +
                                  fmt_map(iso.edge_map));
      if (opts.allow_orientation_reversal && class_matches(s1, s2, iso, opts.tol, true, &mismatch))
        return Decision::make_yes("orientation-reversed matching: " + fmt_map(iso.vertex_map) +
                                  "; " + fmt_map(iso.edge_map));
    }
    return Decision::make_no(mismatch);
  };

  if (o1) return decide(side(p1, w1), side(p2, w2), nullptr, nullptr);

  // Non-orientable: compare equivariantly on the orientation double covers.
  DoubleCover dc1 = orientation_double_cover(p1);
  DoubleCover dc2 = orientation_double_cover(p2);
  BmFormData lw1 = lift_to_cover(dc1, w1);
  BmFormData lw2 = lift_to_cover(dc2, w2);
  Decision d = decide(side(dc1.cover, lw1), side(dc2.cover, lw2), &dc1.deck, &dc2.deck);
  if (!d.yes() && d.obstruction.empty())
    d.obstruction = "no deck-commuting isomorphism of the cover graphs";
  return d;
}

ConstructResult construct_form(const SurfacePresentation& p, int m) {
  ConstructResult res;
  res.existence = exists_bm(p, m);
  if (!res.existence.yes()) return res;

  constexpr double two_pi = 6.283185307179586476925286766559;
  BmFormData w;
  w.m = m;
  for (const auto& c : p.curves) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(m);
    a(0) = two_pi;
    w.periods[c.id] = a;
  }

  OrientationResult ores = is_orientable(p);
  if (ores.certificate) {
    // Orientable: sigma = gauge for even m, gauge times a proper 2-coloring
    // for odd m (the coloring exists because exists_bm said yes).
    std::map<std::string, int> color;
    if (m % 2 == 1) {
      TwoColorResult tc = two_colorable(build_graph(p));
      color = tc.coloring->color;
    } else {
      for (const auto& f : p.faces) color[f.id] = +1;
    }
    for (const auto& f : p.faces)
      w.volumes[f.id] = ores.certificate->flip.at(f.id) * color.at(f.id) * 1.0;
  } else {
    // Non-orientable: build a deck-invariant witness on the orientation
    // double cover and push it to base data. The deck-inverted coloring makes
    // the pushed volumes satisfy the base sign rule, and a_0 = 2pi survives
    // the averaging because the one-sided parity slots stay zero.
    DoubleCover dc = orientation_double_cover(p);
    auto col = deck_inverting_coloring(dc.cover, dc.deck);
    for (const auto& f : p.faces) w.volumes[f.id] = col->color.at(dc.face_lifts.at(f.id)[0]) * 1.0;
  }
  res.form = std::move(w);
  return res;
}

}  // namespace bsurf
