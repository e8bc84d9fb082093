#include "bsurf/surface.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace bsurf {

const Face* SurfacePresentation::find_face(const std::string& id) const {
  for (const auto& f : faces)
    if (f.id == id) return &f;
  return nullptr;
}

const Curve* SurfacePresentation::find_curve(const std::string& id) const {
  for (const auto& c : curves)
    if (c.id == id) return &c;
  return nullptr;
}

ValidationReport validate(const SurfacePresentation& p) {
  ValidationReport r;
  std::set<std::string> face_ids, curve_ids;
  for (const auto& f : p.faces) {
    if (!face_ids.insert(f.id).second) r.add("duplicate face id: " + f.id);
    std::set<std::string> slots(f.boundary_slots.begin(), f.boundary_slots.end());
    if (slots.size() != f.boundary_slots.size())
      r.add("face " + f.id + ": duplicate boundary slot");
    // Capping the boundary circles must yield a closed orientable surface:
    // chi + #slots even and <= 2.
    int capped = f.euler_char + static_cast<int>(f.boundary_slots.size());
    if (capped > 2 || capped % 2 != 0)
      r.add("face " + f.id + ": capped surface is not closed orientable (chi=" +
            std::to_string(f.euler_char) + ", slots=" + std::to_string(f.boundary_slots.size()) + ")");
    if (!f.boundary_slots.empty() && f.euler_char > 1)
      r.add("face " + f.id + ": euler_char > 1 with boundary");
  }
  for (const auto& c : p.curves) {
    if (!curve_ids.insert(c.id).second) r.add("duplicate curve id: " + c.id);
    const size_t want = c.sided == Sidedness::TwoSided ? 2 : 1;
    if (c.attachments.size() != want)
      r.add("curve " + c.id + ": expected " + std::to_string(want) + " attachments, got " +
            std::to_string(c.attachments.size()));
    if (c.sided == Sidedness::TwoSided && c.gluing_sign != 1 && c.gluing_sign != -1)
      r.add("curve " + c.id + ": gluing sign must be +1 or -1");
  }

  // Curve attachments and face boundary slots must form a perfect matching.
  std::map<std::pair<std::string, std::string>, int> slot_use;
  for (const auto& c : p.curves)
    for (const auto& a : c.attachments) {
      const Face* f = p.find_face(a.face);
      if (!f) {
        r.add("curve " + c.id + ": unknown face " + a.face);
        continue;
      }
      if (std::find(f->boundary_slots.begin(), f->boundary_slots.end(), a.slot) ==
          f->boundary_slots.end()) {
        r.add("curve " + c.id + ": face " + a.face + " has no slot " + a.slot);
        continue;
      }
      slot_use[{a.face, a.slot}]++;
    }
  for (const auto& f : p.faces)
    for (const auto& s : f.boundary_slots) {
      int n = 0;
      if (auto it = slot_use.find({f.id, s}); it != slot_use.end()) n = it->second;
      if (n != 1)
        r.add("slot (" + f.id + ", " + s + ") referenced " + std::to_string(n) +
              " times, expected exactly 1");
    }

  // Curves contribute 0 to chi, so chi(S) is the sum over faces.
  int chi = 0;
  for (const auto& f : p.faces) chi += f.euler_char;
  if (chi != p.declared_euler_char)
    r.add("euler mismatch: faces sum to " + std::to_string(chi) + ", declared " +
          std::to_string(p.declared_euler_char));
  return r;
}

namespace {

struct AdjEdge {
  std::string other;
  int sign;
  std::string curve;
};

std::map<std::string, std::vector<AdjEdge>> sign_adjacency(const SurfacePresentation& p) {
  std::map<std::string, std::vector<AdjEdge>> adj;
  for (const auto& f : p.faces) adj[f.id];
  for (const auto& c : p.curves) {
    if (c.sided != Sidedness::TwoSided || c.attachments.size() != 2) continue;
    const auto& a = c.attachments[0];
    const auto& b = c.attachments[1];
    adj[a.face].push_back({b.face, c.gluing_sign, c.id});
    adj[b.face].push_back({a.face, c.gluing_sign, c.id});
  }
  return adj;
}

}  // namespace

OrientationResult is_orientable(const SurfacePresentation& p) {
  OrientationResult res;
  for (const auto& c : p.curves)
    if (c.sided == Sidedness::OneSided) {
      res.obstruction.push_back(c.id);
      return res;
    }

  auto adj = sign_adjacency(p);
  // Solve flip(F1)*flip(F2) = sign(curve) by BFS; record parent curves so an
  // odd-sign cycle can be reported.
  std::map<std::string, int> flip;
  std::map<std::string, std::pair<std::string, std::string>> parent;  // face -> (prev face, curve)
  std::vector<std::string> order;
  for (const auto& f : p.faces) order.push_back(f.id);
  std::sort(order.begin(), order.end());
  for (const auto& root : order) {
    if (flip.count(root)) continue;
    flip[root] = +1;
    std::deque<std::string> queue{root};
    while (!queue.empty()) {
      std::string u = queue.front();
      queue.pop_front();
      for (const auto& e : adj[u]) {
        int want = flip[u] * e.sign;
        auto it = flip.find(e.other);
        if (it == flip.end()) {
          flip[e.other] = want;
          parent[e.other] = {u, e.curve};
          queue.push_back(e.other);
        } else if (it->second != want) {
          // Odd-sign cycle: walk both endpoints to the root.
          std::vector<std::string> cyc{e.curve};
          std::set<std::string> upath;
          std::string x = u;
          while (parent.count(x)) {
            upath.insert(x);
            x = parent[x].first;
          }
          upath.insert(x);
          std::string y = e.other;
          while (!upath.count(y)) {
            cyc.push_back(parent[y].second);
            y = parent[y].first;
          }
          x = u;
          while (x != y) {
            cyc.push_back(parent[x].second);
            x = parent[x].first;
          }
          res.obstruction = cyc;
          return res;
        }
      }
    }
  }
  OrientationCertificate cert;
  cert.flip = std::move(flip);
  res.certificate = std::move(cert);
  return res;
}

ValidationReport validate_involution(const SurfacePresentation& p, const DeckInvolution& inv) {
  ValidationReport r;
  auto check_perm = [&r](const std::map<std::string, std::string>& m, const char* what) {
    for (const auto& [a, b] : m) {
      auto it = m.find(b);
      if (it == m.end() || it->second != a)
        r.add(std::string(what) + " map is not an involution at " + a);
    }
  };
  check_perm(inv.face_map, "face");
  check_perm(inv.curve_map, "curve");
  for (const auto& f : p.faces) {
    if (!inv.face_map.count(f.id)) r.add("face " + f.id + " missing from involution");
    auto it = inv.face_sigma.find(f.id);
    if (it == inv.face_sigma.end() || (it->second != 1 && it->second != -1))
      r.add("face " + f.id + ": missing or invalid sigma");
  }
  for (const auto& c : p.curves) {
    auto im = inv.curve_map.find(c.id);
    if (im == inv.curve_map.end()) {
      r.add("curve " + c.id + " missing from involution");
      continue;
    }
    auto t = inv.curve_t.find(c.id);
    auto u = inv.curve_u.find(c.id);
    if (t == inv.curve_t.end() || u == inv.curve_u.end())
      r.add("curve " + c.id + ": missing t/u signs");
    // A curve mapped to itself must swap sides, otherwise the involution has
    // fixed points on its tube.
    if (im->second == c.id && t != inv.curve_t.end() && t->second != -1)
      r.add("curve " + c.id + ": fixed curve requires transverse sign -1");
  }
  return r;
}

DoubleCover orientation_double_cover(const SurfacePresentation& p) {
  DoubleCover dc;
  SurfacePresentation& q = dc.cover;
  q.declared_euler_char = 2 * p.declared_euler_char;
  q.declared_orientable = true;

  auto plus = [](const std::string& id) { return id + "+"; };
  auto minus = [](const std::string& id) { return id + "-"; };

  for (const auto& f : p.faces) {
    Face a = f, b = f;
    a.id = plus(f.id);
    b.id = minus(f.id);
    q.faces.push_back(a);
    q.faces.push_back(b);
    dc.face_lifts[f.id] = {a.id, b.id};
    dc.deck.face_map[a.id] = b.id;
    dc.deck.face_map[b.id] = a.id;
    dc.deck.face_sigma[a.id] = -1;
    dc.deck.face_sigma[b.id] = -1;
  }

  for (const auto& c : p.curves) {
    if (c.sided == Sidedness::OneSided) {
      // Moebius tube: the unique orientable resolution is one two-sided curve
      // between the two face copies; the deck map swaps sides along it.
      Curve lift;
      lift.id = c.id;
      lift.sided = Sidedness::TwoSided;
      lift.gluing_sign = +1;
      lift.attachments = {{plus(c.attachments[0].face), c.attachments[0].slot},
                          {minus(c.attachments[0].face), c.attachments[0].slot}};
      q.curves.push_back(lift);
      dc.curve_lifts[c.id] = {lift.id};
      dc.deck.curve_map[lift.id] = lift.id;
      dc.deck.curve_t[lift.id] = -1;
      dc.deck.curve_u[lift.id] = +1;
    } else {
      const auto& a0 = c.attachments[0];
      const auto& a1 = c.attachments[1];
      // The second endpoint lands on the copy dictated by the gluing sign.
      auto side = [&](int o) { return o > 0 ? plus(a1.face) : minus(a1.face); };
      Curve la, lb;
      la.id = c.id + "+";
      lb.id = c.id + "-";
      la.sided = lb.sided = Sidedness::TwoSided;
      la.gluing_sign = lb.gluing_sign = +1;
      la.attachments = {{plus(a0.face), a0.slot}, {side(c.gluing_sign), a1.slot}};
      lb.attachments = {{minus(a0.face), a0.slot}, {side(-c.gluing_sign), a1.slot}};
      q.curves.push_back(la);
      q.curves.push_back(lb);
      dc.curve_lifts[c.id] = {la.id, lb.id};
      dc.deck.curve_map[la.id] = lb.id;
      dc.deck.curve_map[lb.id] = la.id;
      dc.deck.curve_t[la.id] = +1;
      dc.deck.curve_t[lb.id] = +1;
      dc.deck.curve_u[la.id] = -1;
      dc.deck.curve_u[lb.id] = -1;
    }
  }
  return dc;
}

std::vector<std::vector<std::string>> face_components(const SurfacePresentation& p) {
  auto adj = sign_adjacency(p);
  // One-sided curves still connect a face to itself; they do not merge
  // components, so the sign adjacency suffices.
  std::set<std::string> seen;
  std::vector<std::vector<std::string>> comps;
  std::vector<std::string> order;
  for (const auto& f : p.faces) order.push_back(f.id);
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
      for (const auto& e : adj[u])
        if (seen.insert(e.other).second) queue.push_back(e.other);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace bsurf
