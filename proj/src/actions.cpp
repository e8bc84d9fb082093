#include "bsurf/actions.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace bsurf {

bool ActionElement::is_identity() const {
  for (const auto& [a, b] : face_map)
    if (a != b) return false;
  for (const auto& [a, b] : curve_map)
    if (a != b) return false;
  for (const auto& [a, s] : sigma)
    if (s != 1) return false;
  for (const auto& [a, s] : t)
    if (s != 1) return false;
  for (const auto& [a, s] : u)
    if (s != 1) return false;
  return true;
}

ActionElement compose(const ActionElement& g, const ActionElement& h) {
  ActionElement gh;
  gh.name = g.name + "." + h.name;
  for (const auto& [c, hc] : h.curve_map) {
    gh.curve_map[c] = g.curve_map.at(hc);
    gh.t[c] = g.t.at(hc) * h.t.at(c);
    gh.u[c] = g.u.at(hc) * h.u.at(c);
  }
  for (const auto& [f, hf] : h.face_map) {
    gh.face_map[f] = g.face_map.at(hf);
    gh.sigma[f] = g.sigma.at(hf) * h.sigma.at(f);
  }
  return gh;
}

namespace {

bool same_mapping(const ActionElement& a, const ActionElement& b) {
  return a.face_map == b.face_map && a.curve_map == b.curve_map && a.sigma == b.sigma &&
         a.t == b.t && a.u == b.u;
}

bool is_permutation(const std::map<std::string, std::string>& m,
                    const std::set<std::string>& domain) {
  if (m.size() != domain.size()) return false;
  std::set<std::string> image;
  for (const auto& [a, b] : m) {
    if (!domain.count(a) || !domain.count(b)) return false;
    image.insert(b);
  }
  return image.size() == domain.size();
}

}  // namespace

ValidationReport validate_action(const SurfacePresentation& p, const FiniteAction& G) {
  ValidationReport r;
  std::set<std::string> faces, curves;
  for (const auto& f : p.faces) faces.insert(f.id);
  for (const auto& c : p.curves) curves.insert(c.id);

  bool has_identity = false;
  for (const auto& g : G.elements) {
    if (!is_permutation(g.face_map, faces))
      r.add("element " + g.name + ": face map is not a permutation of the faces");
    if (!is_permutation(g.curve_map, curves))
      r.add("element " + g.name + ": curve map is not a permutation of the curves");
    auto check_signs = [&](const std::map<std::string, int>& s, const std::set<std::string>& dom,
                           const char* what) {
      for (const auto& id : dom) {
        auto it = s.find(id);
        if (it == s.end() || (it->second != 1 && it->second != -1))
          r.add("element " + g.name + ": missing or invalid " + what + " sign at " + id);
      }
    };
    check_signs(g.sigma, faces, "sigma");
    check_signs(g.t, curves, "t");
    check_signs(g.u, curves, "u");
    if (!r.ok()) return r;  // structural defects make further checks meaningless

    for (const auto& c : p.curves) {
      const Curve* ic = p.find_curve(g.curve_map.at(c.id));
      if (ic->sided != c.sided) {
        r.add("element " + g.name + ": curve " + c.id + " changes sidedness");
        continue;
      }
      std::multiset<std::string> want, got;
      for (const auto& a : c.attachments) want.insert(g.face_map.at(a.face));
      for (const auto& a : ic->attachments) got.insert(a.face);
      if (want != got)
        r.add("element " + g.name + ": curve " + c.id +
              " is not carried compatibly with the face map");
    }
    if (g.is_identity()) has_identity = true;
  }
  if (!has_identity) r.add("action has no identity element");

  for (const auto& g : G.elements)
    for (const auto& h : G.elements) {
      ActionElement gh = compose(g, h);
      bool found = false;
      for (const auto& e : G.elements)
        if (same_mapping(e, gh)) {
          found = true;
          break;
        }
      if (!found)
        r.add("composition " + g.name + "." + h.name + " is missing from the element list");
    }
  return r;
}

BmFormData pullback(const SurfacePresentation& p, const BmFormData& w, const ActionElement& g) {
  BmFormData out;
  out.m = w.m;
  for (const auto& c : p.curves) {
    const std::string& gc = g.curve_map.at(c.id);
    const Eigen::VectorXd& a = w.periods.at(gc);
    Eigen::VectorXd b(w.m);
    for (int i = 0; i < w.m; ++i) {
      const int te = (w.m + i + 1) % 2 == 0 ? 1 : g.t.at(c.id);
      b(i) = te * g.u.at(c.id) * a(i);
    }
    out.periods[c.id] = b;
  }
  for (const auto& f : p.faces)
    out.volumes[f.id] = g.sigma.at(f.id) * w.volumes.at(g.face_map.at(f.id));
  return out;
}

Decision is_invariant(const SurfacePresentation& p, const BmFormData& w, const FiniteAction& G) {
  for (const auto& g : G.elements) {
    BmFormData gw = pullback(p, w, g);
    for (const auto& c : p.curves) {
      const Eigen::VectorXd& a = w.periods.at(c.id);
      const Eigen::VectorXd& b = gw.periods.at(c.id);
      for (int i = 0; i < w.m; ++i)
        if (a(i) != b(i)) {
          std::ostringstream os;
          os << "element " << g.name << ": curve " << c.id << " period index " << i << ": "
             << a(i) << " vs " << b(i);
          return Decision::make_no(os.str());
        }
    }
    for (const auto& f : p.faces)
      if (w.volumes.at(f.id) != gw.volumes.at(f.id)) {
        std::ostringstream os;
        os << "element " << g.name << ": face " << f.id << " volume: " << w.volumes.at(f.id)
           << " vs " << gw.volumes.at(f.id);
        return Decision::make_no(os.str());
      }
  }
  return Decision::make_yes("invariant under all " + std::to_string(G.elements.size()) +
                            " elements");
}

BmFormData average(const SurfacePresentation& p, const BmFormData& w, const FiniteAction& G) {
  BmFormData acc;
  acc.m = w.m;
  for (const auto& c : p.curves) acc.periods[c.id] = Eigen::VectorXd::Zero(w.m);
  for (const auto& f : p.faces) acc.volumes[f.id] = 0;
  for (const auto& g : G.elements) {
    BmFormData gw = pullback(p, w, g);
    for (auto& [c, a] : acc.periods) a += gw.periods.at(c);
    for (auto& [f, v] : acc.volumes) v += gw.volumes.at(f);
  }
  const double n = static_cast<double>(G.elements.size());
  for (auto& [c, a] : acc.periods) a /= n;
  for (auto& [f, v] : acc.volumes) v /= n;
  return acc;
}

namespace {

bool iso_commutes(const GraphIso& iso, const ActionElement& g) {
  for (const auto& [f, img] : iso.vertex_map)
    if (iso.vertex_map.at(g.face_map.at(f)) != g.face_map.at(img)) return false;
  for (const auto& [c, img] : iso.edge_map)
    if (iso.edge_map.at(g.curve_map.at(c)) != g.curve_map.at(img)) return false;
  return true;
}

bool close(double x, double y, double tol) {
  return std::abs(x - y) <= tol * (1.0 + std::max(std::abs(x), std::abs(y)));
}

}  // namespace

Decision equivariantly_equivalent(const SurfacePresentation& p, const BmFormData& w1,
                                  const BmFormData& w2, const FiniteAction& G,
                                  const EquivOptions& opts) {
  if (w1.m != w2.m) return Decision::refuse("order mismatch");
  Decision i1 = is_invariant(p, w1, G);
  if (!i1.yes()) return Decision::refuse("first form is not invariant: " + i1.obstruction);
  Decision i2 = is_invariant(p, w2, G);
  if (!i2.yes()) return Decision::refuse("second form is not invariant: " + i2.obstruction);

  ClassVector c1 = cohomology_class(p, w1);
  ClassVector c2 = cohomology_class(p, w2);
  BGraph g = build_graph(p);
  GraphLabels labels = invariant_labels(p);
  std::vector<GraphIso> isos = graph_isomorphisms(g, g, labels, labels);
  std::string mismatch = "no action-commuting matching of the class vectors";
  for (const auto& iso : isos) {
    bool comm = true;
    for (const auto& el : G.elements)
      if (!iso_commutes(iso, el)) {
        comm = false;
        break;
      }
    if (!comm) continue;
    for (int flip = 0; flip <= (opts.allow_orientation_reversal ? 1 : 0); ++flip) {
      const double s = flip ? -1.0 : 1.0;
      bool okv = true;
      if (c1.volume.has_value() != c2.volume.has_value()) okv = false;
      if (okv && c1.volume && !close(*c1.volume, s * *c2.volume, opts.tol)) okv = false;
      for (const auto& [c, a1] : c1.periods) {
        if (!okv) break;
        const Eigen::VectorXd a2 = s * c2.periods.at(iso.edge_map.at(c));
        for (int i = 0; i < a1.size(); ++i)
          if (!close(a1(i), a2(i), opts.tol)) {
            okv = false;
            break;
          }
      }
      if (okv) {
        std::ostringstream os;
        for (const auto& [a, b] : iso.edge_map) os << " " << a << "->" << b;
        return Decision::make_yes("equivariant matching:" + os.str());
      }
    }
  }
  return Decision::make_no(mismatch);
}

FiniteAction action_from_involution(const SurfacePresentation& p, const DeckInvolution& inv) {
  FiniteAction G;
  ActionElement id;
  id.name = "e";
  for (const auto& f : p.faces) {
    id.face_map[f.id] = f.id;
    id.sigma[f.id] = 1;
  }
  for (const auto& c : p.curves) {
    id.curve_map[c.id] = c.id;
    id.t[c.id] = 1;
    id.u[c.id] = 1;
  }
  ActionElement rho;
  rho.name = "rho";
  rho.face_map = inv.face_map;
  rho.curve_map = inv.curve_map;
  rho.sigma = inv.face_sigma;
  rho.t = inv.curve_t;
  rho.u = inv.curve_u;
  G.elements = {id, rho};
  return G;
}

}  // namespace bsurf
