#include "bsurf/nambu.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "bsurf/graph.hpp"

namespace bsurf {

namespace {

bool close(double x, double y, double tol) {
  return std::abs(x - y) <= tol * (1.0 + std::max(std::abs(x), std::abs(y)));
}

/// Lexicographically smallest serialization of the labeled graph over all
/// vertex orderings; desk-scale graphs make brute force adequate.
std::string canonical_graph_label(const BGraph& g, const GraphLabels& labels) {
  std::vector<std::string> verts = g.vertices;
  std::sort(verts.begin(), verts.end());
  std::vector<int> perm(verts.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::map<std::string, int> pos;
    for (size_t i = 0; i < verts.size(); ++i) pos[verts[perm[i]]] = static_cast<int>(i);
    std::ostringstream os;
    os << "V:";
    for (size_t i = 0; i < verts.size(); ++i) {
      auto it = labels.vertex.find(verts[perm[i]]);
      os << (it == labels.vertex.end() ? "" : it->second) << ";";
    }
    std::vector<std::string> edges;
    for (const auto& e : g.edges) {
      int a = pos.at(e.u), b = pos.at(e.v);
      if (a > b) std::swap(a, b);
      std::ostringstream eo;
      auto it = labels.edge.find(e.id);
      eo << a << "-" << b << ":" << static_cast<int>(e.kind) << ":"
         << (it == labels.edge.end() ? "" : it->second);
      edges.push_back(eo.str());
    }
    std::sort(edges.begin(), edges.end());
    os << "E:";
    for (const auto& e : edges) os << e << ";";
    std::string s = os.str();
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

ValidationReport nambu_validate(const NambuData& d) {
  ValidationReport r;
  if (d.n < 2) r.add("dimension n must be at least 2");
  if (d.m < 1) r.add("order m must be positive");
  for (const auto& z : d.components) {
    if (d.m < 1 || z.w.size() != d.m)
      r.add("component " + z.id + ": expected " + std::to_string(d.m) + " periods, got " +
            std::to_string(z.w.size()));
    else if (!(z.w(0) > 0))
      r.add("component " + z.id + ": modular period must be positive");
  }
  if (d.m % 2 == 0 && !d.orientable)
    r.add("even order requires an orientable manifold");
  if (d.orientable != d.regularized_volume.has_value())
    r.add("regularized volume must be present exactly for orientable data");
  return r;
}

Decision nambu_equivalent(const NambuData& d1, const NambuData& d2,
                          const NambuMatchOptions& opts) {
  if (d1.n != d2.n || d1.m != d2.m)
    return Decision::refuse("dimension/order mismatch: (n,m)=(" + std::to_string(d1.n) + "," +
                            std::to_string(d1.m) + ") vs (" + std::to_string(d2.n) + "," +
                            std::to_string(d2.m) + ")");
  ValidationReport r1 = nambu_validate(d1);
  if (!r1.ok()) return Decision::refuse("first data invalid: " + r1.violations.front());
  ValidationReport r2 = nambu_validate(d2);
  if (!r2.ok()) return Decision::refuse("second data invalid: " + r2.violations.front());

  if (d1.orientable != d2.orientable) return Decision::make_no("orientability differs");
  if (d1.pair_label != d2.pair_label)
    return Decision::make_no("diffeomorphism types of the pairs differ");
  if (d1.components.size() != d2.components.size())
    return Decision::make_no("number of critical components differs");

  auto match_with = [&](const std::vector<int>& assign, double s) -> bool {
    for (size_t j = 0; j < d1.components.size(); ++j) {
      const Eigen::VectorXd& a = d1.components[j].w;
      const Eigen::VectorXd& b = d2.components[assign[j]].w;
      for (int i = 0; i < d1.m; ++i)
        if (!close(a(i), s * b(i), opts.tol)) return false;
    }
    if (d1.orientable && !close(*d1.regularized_volume, s * *d2.regularized_volume, opts.tol))
      return false;
    return true;
  };
  auto witness = [&](const std::vector<int>& assign) {
    std::ostringstream os;
    for (size_t j = 0; j < assign.size(); ++j)
      os << (j ? " " : "") << d1.components[j].id << "->" << d2.components[assign[j]].id;
    return os.str();
  };

  std::vector<std::vector<int>> candidates;
  if (opts.correspondence) {
    std::vector<int> assign(d1.components.size(), -1);
    for (size_t j = 0; j < d1.components.size(); ++j) {
      auto it = opts.correspondence->find(d1.components[j].id);
      if (it == opts.correspondence->end())
        return Decision::refuse("correspondence misses component " + d1.components[j].id);
      for (size_t k = 0; k < d2.components.size(); ++k)
        if (d2.components[k].id == it->second) assign[j] = static_cast<int>(k);
      if (assign[j] < 0)
        return Decision::refuse("correspondence targets unknown component " + it->second);
    }
    candidates.push_back(assign);
  } else {
    std::vector<int> assign(d1.components.size());
    std::iota(assign.begin(), assign.end(), 0);
    do {
      candidates.push_back(assign);
    } while (std::next_permutation(assign.begin(), assign.end()));
  }

  for (const auto& assign : candidates) {
    if (match_with(assign, 1.0))
      return Decision::make_yes("matching: " + witness(assign));
    if (opts.allow_orientation_reversal && match_with(assign, -1.0))
      return Decision::make_yes("orientation-reversed matching: " + witness(assign));
  }
  return Decision::make_no("no component bijection matches the period data" +
                           std::string(d1.orientable ? " and volume" : ""));
}

NambuData nambu_average(const NambuData& d, const NambuAction& G) {
  NambuData out = d;
  std::map<std::string, int> index;
  for (size_t j = 0; j < d.components.size(); ++j) index[d.components[j].id] = static_cast<int>(j);
  for (auto& z : out.components) z.w.setZero();
  double vol = 0;
  for (const auto& g : G.elements) {
    for (size_t j = 0; j < d.components.size(); ++j) {
      const std::string& id = d.components[j].id;
      const Eigen::VectorXd& src = d.components[index.at(g.perm.at(id))].w;
      for (int i = 0; i < d.m; ++i) {
        const int te = (d.m + i + 1) % 2 == 0 ? 1 : g.t.at(id);
        out.components[j].w(i) += te * g.u.at(id) * src(i);
      }
    }
    if (d.regularized_volume) vol += g.vol_sign * *d.regularized_volume;
  }
  const double n = static_cast<double>(G.elements.size());
  for (auto& z : out.components) z.w /= n;
  if (d.regularized_volume) out.regularized_volume = vol / n;
  return out;
}

NambuData nambu_from_surface(const SurfacePresentation& p, const BmFormData& w) {
  ClassVector cv = cohomology_class(p, w);
  NambuData d;
  d.n = 2;
  d.m = w.m;
  d.orientable = is_orientable(p).certificate.has_value();
  d.pair_label = canonical_graph_label(build_graph(p), invariant_labels(p));
  if (d.orientable) d.regularized_volume = cv.volume;
  for (const auto& c : p.curves) {
    NambuComponent z;
    z.id = c.id;
    z.w = cv.periods.at(c.id);
    // Side-normalize so the modular period is positive (the transverse
    // orientation of the component is not part of the data).
    if (z.w(0) < 0) z.w = -z.w;
    d.components.push_back(z);
  }
  return d;
}

}  // namespace bsurf
