#include "bsurf/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

namespace bsurf {

BGraph build_graph(const SurfacePresentation& p) {
  BGraph g;
  for (const auto& f : p.faces) g.vertices.push_back(f.id);
  for (const auto& c : p.curves) {
    BEdge e;
    e.id = c.id;
    if (c.sided == Sidedness::OneSided) {
      e.kind = EdgeKind::TwistedLoop;
      e.u = e.v = c.attachments[0].face;
    } else {
      e.u = c.attachments[0].face;
      e.v = c.attachments[1].face;
      e.kind = e.u == e.v ? EdgeKind::Loop : EdgeKind::Plain;
    }
    g.edges.push_back(e);
  }
  return g;
}

TwoColorResult two_colorable(const BGraph& g) {
  TwoColorResult res;
  for (const auto& e : g.edges)
    if (e.kind != EdgeKind::Plain) {
      res.bad_edge = e.id;
      return res;
    }

  std::map<std::string, std::vector<std::pair<std::string, std::string>>> adj;  // v -> (other, edge)
  for (const auto& v : g.vertices) adj[v];
  for (const auto& e : g.edges) {
    adj[e.u].push_back({e.v, e.id});
    adj[e.v].push_back({e.u, e.id});
  }

  std::map<std::string, int> color;
  std::map<std::string, std::pair<std::string, std::string>> parent;  // v -> (prev, edge)
  std::vector<std::string> order = g.vertices;
  std::sort(order.begin(), order.end());
  for (const auto& root : order) {
    if (color.count(root)) continue;
    color[root] = +1;
    std::deque<std::string> queue{root};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (const auto& [w, eid] : adj[u]) {
        auto it = color.find(w);
        if (it == color.end()) {
          color[w] = -color[u];
          parent[w] = {u, eid};
          queue.push_back(w);
        } else if (it->second == color[u]) {
          // Recover the odd cycle through the BFS tree.
          std::vector<std::string> cyc{eid};
          std::set<std::string> upath;
          std::string x = u;
          while (parent.count(x)) {
            upath.insert(x);
            x = parent[x].first;
          }
          upath.insert(x);
          std::string y = w;
          while (!upath.count(y)) {
            cyc.push_back(parent[y].second);
            y = parent[y].first;
          }
          x = u;
          while (x != y) {
            cyc.push_back(parent[x].second);
            x = parent[x].first;
          }
          res.odd_cycle = cyc;
          return res;
        }
      }
    }
  }
  TwoColoring tc;
  tc.color = std::move(color);
  res.coloring = std::move(tc);
  return res;
}

std::vector<std::vector<std::string>> graph_components(const BGraph& g) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& v : g.vertices) adj[v];
  for (const auto& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::set<std::string> seen;
  std::vector<std::vector<std::string>> comps;
  std::vector<std::string> order = g.vertices;
  std::sort(order.begin(), order.end());
  for (const auto& root : order) {
    if (seen.count(root)) continue;
    std::vector<std::string> comp;
    std::deque<std::string> queue{root};
    seen.insert(root);
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (const auto& w : adj[u])
        if (seen.insert(w).second) queue.push_back(w);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

std::string coloring_witness(const std::map<std::string, int>& color) {
  std::ostringstream os;
  os << "coloring:";
  for (const auto& [v, c] : color) os << " " << v << "=" << (c > 0 ? "+1" : "-1");
  return os.str();
}

std::string join(const std::vector<std::string>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

std::optional<TwoColoring> deck_inverting_coloring(const SurfacePresentation& cover,
                                                   const DeckInvolution& deck) {
  BGraph g = build_graph(cover);
  TwoColorResult base = two_colorable(g);
  if (!base.coloring) return std::nullopt;

  auto comps = graph_components(g);
  const size_t n = comps.size();
  // Per connected component the coloring is unique up to a global swap, so
  // exactly 2^n candidates need to be examined against the deck action.
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::map<std::string, int> color = base.coloring->color;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i))
        for (const auto& v : comps[i]) color[v] = -color[v];
    bool inverted = true;
    for (const auto& [v, c] : color) {
      auto im = deck.face_map.find(v);
      if (im == deck.face_map.end() || color.at(im->second) != -c) {
        inverted = false;
        break;
      }
    }
    if (inverted) return TwoColoring{color};
  }
  return std::nullopt;
}

Decision exists_bm_cover(const SurfacePresentation& cover, const DeckInvolution& deck, int m) {
  if (m < 1) return Decision::refuse("order m must be positive");
  if (m % 2 == 0)
    return Decision::make_no("non-orientable surface admits no even-order structure");

  BGraph g = build_graph(cover);
  TwoColorResult base = two_colorable(g);
  if (!base.coloring) {
    if (base.bad_edge)
      return Decision::make_no("cover graph not 2-colorable: loop at curve " + *base.bad_edge);
    return Decision::make_no("cover graph not 2-colorable: odd cycle " + join(base.odd_cycle));
  }
  if (auto col = deck_inverting_coloring(cover, deck))
    return Decision::make_yes(coloring_witness(col->color));
  return Decision::make_no("deck transformation fails to invert colors of the cover graph");
}

Decision exists_bm(const SurfacePresentation& p, int m) {
  if (m < 1) return Decision::refuse("order m must be positive");
  auto vr = validate(p);
  if (!vr.ok()) return Decision::refuse("invalid presentation: " + vr.violations.front());

  auto orient = is_orientable(p);
  if (orient.certificate) {
    if (m % 2 == 0)
      return Decision::make_yes("orientable, even order: constant sign pattern");
    TwoColorResult tc = two_colorable(build_graph(p));
    if (tc.coloring) return Decision::make_yes(coloring_witness(tc.coloring->color));
    if (tc.bad_edge)
      return Decision::make_no("associated graph has a loop at curve " + *tc.bad_edge);
    return Decision::make_no("associated graph has odd cycle " + join(tc.odd_cycle));
  }
  if (m % 2 == 0)
    return Decision::make_no("non-orientable surface admits no even-order structure");
  auto dc = orientation_double_cover(p);
  return exists_bm_cover(dc.cover, dc.deck, m);
}

namespace {

struct EdgeGroupKey {
  std::string a, b;  // sorted endpoints
  EdgeKind kind;
  std::string label;
  bool operator<(const EdgeGroupKey& o) const {
    return std::tie(a, b, kind, label) < std::tie(o.a, o.b, o.kind, o.label);
  }
};

std::string vertex_signature(const BGraph& g, const GraphLabels& l, const std::string& v) {
  std::vector<std::string> inc;
  for (const auto& e : g.edges) {
    std::string el;
    if (auto it = l.edge.find(e.id); it != l.edge.end()) el = it->second;
    std::string kind = e.kind == EdgeKind::Plain ? "p" : (e.kind == EdgeKind::Loop ? "l" : "t");
    if (e.u == v && e.v == v)
      inc.push_back("self:" + kind + ":" + el);
    else if (e.u == v || e.v == v)
      inc.push_back("out:" + kind + ":" + el);
  }
  std::sort(inc.begin(), inc.end());
  std::string vl;
  if (auto it = l.vertex.find(v); it != l.vertex.end()) vl = it->second;
  std::string sig = "[" + vl + "]";
  for (const auto& s : inc) sig += ";" + s;
  return sig;
}

void permutations_rec(std::vector<size_t>& perm, std::vector<bool>& used, size_t k,
                      const std::function<void(const std::vector<size_t>&)>& emit) {
  if (k == perm.size()) {
    emit(perm);
    return;
  }
  for (size_t i = 0; i < perm.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    perm[k] = i;
    permutations_rec(perm, used, k + 1, emit);
    used[i] = false;
  }
}

}  // namespace

std::vector<GraphIso> graph_isomorphisms(const BGraph& g1, const BGraph& g2,
                                         const GraphLabels& l1, const GraphLabels& l2) {
  std::vector<GraphIso> out;
  if (g1.vertices.size() != g2.vertices.size() || g1.edges.size() != g2.edges.size()) return out;

  std::map<std::string, std::string> sig1, sig2;
  for (const auto& v : g1.vertices) sig1[v] = vertex_signature(g1, l1, v);
  for (const auto& v : g2.vertices) sig2[v] = vertex_signature(g2, l2, v);

  std::vector<std::string> vs1 = g1.vertices, vs2 = g2.vertices;
  std::sort(vs1.begin(), vs1.end());
  std::sort(vs2.begin(), vs2.end());

  auto edge_groups = [](const BGraph& g, const GraphLabels& l,
                        const std::map<std::string, std::string>* vmap) {
    std::map<EdgeGroupKey, std::vector<std::string>> groups;
    for (const auto& e : g.edges) {
      std::string a = e.u, b = e.v;
      if (vmap) {
        a = vmap->at(a);
        b = vmap->at(b);
      }
      if (b < a) std::swap(a, b);
      std::string el;
      if (auto it = l.edge.find(e.id); it != l.edge.end()) el = it->second;
      groups[{a, b, e.kind, el}].push_back(e.id);
    }
    for (auto& [k, v] : groups) std::sort(v.begin(), v.end());
    return groups;
  };
  auto target_groups = edge_groups(g2, l2, nullptr);

  std::map<std::string, std::string> vmap;
  std::set<std::string> used;

  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == vs1.size()) {
      // Vertex bijection complete; check edge-group correspondence and fan
      // out over the matchings of parallel edges.
      auto mapped = edge_groups(g1, l1, &vmap);
      if (mapped.size() != target_groups.size()) return;
      std::vector<std::pair<const std::vector<std::string>*, const std::vector<std::string>*>> pairs;
      for (const auto& [key, ids] : mapped) {
        auto it = target_groups.find(key);
        if (it == target_groups.end() || it->second.size() != ids.size()) return;
        pairs.push_back({&ids, &it->second});
      }
      std::vector<std::map<std::string, std::string>> emaps{{}};
      for (const auto& [src, dst] : pairs) {
        std::vector<std::map<std::string, std::string>> next;
        std::vector<size_t> perm(src->size());
        std::vector<bool> pused(src->size(), false);
        permutations_rec(perm, pused, 0, [&](const std::vector<size_t>& pi) {
          for (const auto& base : emaps) {
            auto m = base;
            for (size_t i = 0; i < src->size(); ++i) m[(*src)[i]] = (*dst)[pi[i]];
            next.push_back(std::move(m));
          }
        });
        emaps = std::move(next);
      }
      for (auto& em : emaps) out.push_back({vmap, std::move(em)});
      return;
    }
    const std::string& v = vs1[k];
    for (const auto& w : vs2) {
      if (used.count(w) || sig1[v] != sig2[w]) continue;
      vmap[v] = w;
      used.insert(w);
      rec(k + 1);
      used.erase(w);
      vmap.erase(v);
    }
  };
  rec(0);
  return out;
}

std::string to_dot(const BGraph& g, const TwoColoring* coloring) {
  std::ostringstream os;
  os << "graph bgraph {\n";
  std::vector<std::string> vs = g.vertices;
  std::sort(vs.begin(), vs.end());
  for (const auto& v : vs) {
    os << "  \"" << v << "\"";
    if (coloring) {
      auto it = coloring->color.find(v);
      if (it != coloring->color.end())
        os << " [style=filled, fillcolor=" << (it->second > 0 ? "lightblue" : "lightsalmon") << "]";
    }
    os << ";\n";
  }
  for (const auto& e : g.edges) {
    os << "  \"" << e.u << "\" -- \"" << e.v << "\" [label=\"" << e.id << "\"";
    if (e.kind == EdgeKind::TwistedLoop) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace bsurf
