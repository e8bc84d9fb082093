#include "bsurf/io.hpp"

#include <fstream>
#include <set>

#include "bsurf/fixtures.hpp"

namespace bsurf::io {

namespace {

void reject_unknown(const json& obj, const std::string& where,
                    const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key)) throw ParseError(where + ": unknown key '" + key + "'");
  }
}

const json& require(const json& obj, const std::string& where, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing key '" + key + "'");
  return *it;
}

int require_int(const json& obj, const std::string& where, const std::string& key) {
  const json& v = require(obj, where, key);
  if (!v.is_number_integer()) throw ParseError(where + "." + key + ": expected an integer");
  return v.get<int>();
}

std::string require_string(const json& obj, const std::string& where, const std::string& key) {
  const json& v = require(obj, where, key);
  if (!v.is_string()) throw ParseError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

int require_sign(const json& obj, const std::string& where, const std::string& key) {
  int s = require_int(obj, where, key);
  if (s != 1 && s != -1) throw ParseError(where + "." + key + ": expected 1 or -1");
  return s;
}

std::map<std::string, std::string> string_map(const json& v, const std::string& where) {
  if (!v.is_object()) throw ParseError(where + ": expected an object of strings");
  std::map<std::string, std::string> m;
  for (const auto& [key, val] : v.items()) {
    if (!val.is_string()) throw ParseError(where + "." + key + ": expected a string");
    m[key] = val.get<std::string>();
  }
  return m;
}

std::map<std::string, int> sign_map(const json& v, const std::string& where) {
  if (!v.is_object()) throw ParseError(where + ": expected an object of signs");
  std::map<std::string, int> m;
  for (const auto& [key, val] : v.items()) {
    if (!val.is_number_integer() || (val.get<int>() != 1 && val.get<int>() != -1))
      throw ParseError(where + "." + key + ": expected 1 or -1");
    m[key] = val.get<int>();
  }
  return m;
}

DeckInvolution parse_involution(const json& v, const std::string& where) {
  reject_unknown(v, where, {"faces", "curves", "sigma", "t", "u"});
  DeckInvolution d;
  d.face_map = string_map(require(v, where, "faces"), where + ".faces");
  d.curve_map = string_map(require(v, where, "curves"), where + ".curves");
  d.face_sigma = sign_map(require(v, where, "sigma"), where + ".sigma");
  d.curve_t = sign_map(require(v, where, "t"), where + ".t");
  d.curve_u = sign_map(require(v, where, "u"), where + ".u");
  return d;
}

}  // namespace

ParsedPresentation parse_presentation(const json& doc) {
  reject_unknown(doc, "presentation", {"faces", "curves", "euler_char", "orientable",
                                       "involution"});
  ParsedPresentation out;
  SurfacePresentation& p = out.p;
  const json& faces = require(doc, "presentation", "faces");
  if (!faces.is_array()) throw ParseError("presentation.faces: expected an array");
  for (const auto& fj : faces) {
    reject_unknown(fj, "face", {"id", "euler_char", "slots"});
    Face f;
    f.id = require_string(fj, "face", "id");
    f.euler_char = require_int(fj, "face", "euler_char");
    const json& slots = require(fj, "face " + f.id, "slots");
    if (!slots.is_array()) throw ParseError("face " + f.id + ".slots: expected an array");
    for (const auto& s : slots) {
      if (!s.is_string()) throw ParseError("face " + f.id + ".slots: expected strings");
      f.boundary_slots.push_back(s.get<std::string>());
    }
    p.faces.push_back(std::move(f));
  }
  const json& curves = require(doc, "presentation", "curves");
  if (!curves.is_array()) throw ParseError("presentation.curves: expected an array");
  for (const auto& cj : curves) {
    reject_unknown(cj, "curve", {"id", "sided", "attachments", "sign"});
    Curve c;
    c.id = require_string(cj, "curve", "id");
    const std::string sided = require_string(cj, "curve " + c.id, "sided");
    if (sided == "two_sided")
      c.sided = Sidedness::TwoSided;
    else if (sided == "one_sided")
      c.sided = Sidedness::OneSided;
    else
      throw ParseError("curve " + c.id + ".sided: expected 'two_sided' or 'one_sided'");
    const json& atts = require(cj, "curve " + c.id, "attachments");
    if (!atts.is_array()) throw ParseError("curve " + c.id + ".attachments: expected an array");
    for (const auto& aj : atts) {
      reject_unknown(aj, "curve " + c.id + " attachment", {"face", "slot"});
      c.attachments.push_back({require_string(aj, "attachment", "face"),
                               require_string(aj, "attachment", "slot")});
    }
    if (c.sided == Sidedness::TwoSided)
      c.gluing_sign = require_sign(cj, "curve " + c.id, "sign");
    else if (cj.contains("sign"))
      throw ParseError("curve " + c.id + ": one-sided curves carry no sign");
    p.curves.push_back(std::move(c));
  }
  p.declared_euler_char = require_int(doc, "presentation", "euler_char");
  if (doc.contains("orientable")) {
    if (!doc["orientable"].is_boolean())
      throw ParseError("presentation.orientable: expected a boolean");
    p.declared_orientable = doc["orientable"].get<bool>();
  }
  if (doc.contains("involution"))
    out.involution = parse_involution(doc["involution"], "involution");
  return out;
}

json presentation_to_json(const SurfacePresentation& p) {
  json doc;
  doc["faces"] = json::array();
  for (const auto& f : p.faces) {
    json fj;
    fj["id"] = f.id;
    fj["euler_char"] = f.euler_char;
    fj["slots"] = f.boundary_slots;
    doc["faces"].push_back(fj);
  }
  doc["curves"] = json::array();
  for (const auto& c : p.curves) {
    json cj;
    cj["id"] = c.id;
    cj["sided"] = c.sided == Sidedness::TwoSided ? "two_sided" : "one_sided";
    cj["attachments"] = json::array();
    for (const auto& a : c.attachments) cj["attachments"].push_back({{"face", a.face}, {"slot", a.slot}});
    if (c.sided == Sidedness::TwoSided) cj["sign"] = c.gluing_sign;
    doc["curves"].push_back(cj);
  }
  doc["euler_char"] = p.declared_euler_char;
  if (p.declared_orientable) doc["orientable"] = *p.declared_orientable;
  return doc;
}

ParsedForm parse_form(const json& doc) {
  reject_unknown(doc, "form", {"m", "periods", "volumes", "presentation"});
  ParsedForm out;
  out.w.m = require_int(doc, "form", "m");
  const json& periods = require(doc, "form", "periods");
  if (!periods.is_object()) throw ParseError("form.periods: expected an object");
  for (const auto& [curve, arr] : periods.items()) {
    if (!arr.is_array()) throw ParseError("form.periods." + curve + ": expected an array");
    Eigen::VectorXd a(arr.size());
    for (size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_number())
        throw ParseError("form.periods." + curve + ": expected numbers");
      a(static_cast<int>(i)) = arr[i].get<double>();
    }
    out.w.periods[curve] = std::move(a);
  }
  const json& volumes = require(doc, "form", "volumes");
  if (!volumes.is_object()) throw ParseError("form.volumes: expected an object");
  for (const auto& [f, v] : volumes.items()) {
    if (!v.is_number()) throw ParseError("form.volumes." + f + ": expected a number");
    out.w.volumes[f] = v.get<double>();
  }
  if (doc.contains("presentation")) {
    const json& pj = doc["presentation"];
    if (pj.is_string()) {
      auto fp = fixtures::find_presentation(pj.get<std::string>());
      if (!fp)
        throw ParseError("form.presentation: unknown fixture '" + pj.get<std::string>() + "'");
      out.presentation = ParsedPresentation{*fp, std::nullopt};
    } else {
      out.presentation = parse_presentation(pj);
    }
  }
  return out;
}

json form_to_json(const BmFormData& w) {
  json doc;
  doc["m"] = w.m;
  doc["periods"] = json::object();
  for (const auto& [c, a] : w.periods) {
    json arr = json::array();
    for (int i = 0; i < a.size(); ++i) arr.push_back(a(i));
    doc["periods"][c] = arr;
  }
  doc["volumes"] = json::object();
  for (const auto& [f, v] : w.volumes) doc["volumes"][f] = v;
  return doc;
}

FiniteAction parse_action(const json& doc) {
  reject_unknown(doc, "action", {"elements"});
  const json& els = require(doc, "action", "elements");
  if (!els.is_array()) throw ParseError("action.elements: expected an array");
  FiniteAction G;
  for (const auto& ej : els) {
    reject_unknown(ej, "element", {"name", "faces", "curves", "sigma", "t", "u"});
    ActionElement e;
    e.name = require_string(ej, "element", "name");
    e.face_map = string_map(require(ej, "element " + e.name, "faces"), e.name + ".faces");
    e.curve_map = string_map(require(ej, "element " + e.name, "curves"), e.name + ".curves");
    e.sigma = sign_map(require(ej, "element " + e.name, "sigma"), e.name + ".sigma");
    e.t = sign_map(require(ej, "element " + e.name, "t"), e.name + ".t");
    e.u = sign_map(require(ej, "element " + e.name, "u"), e.name + ".u");
    G.elements.push_back(std::move(e));
  }
  return G;
}

NambuData parse_nambu(const json& doc) {
  reject_unknown(doc, "nambu",
                 {"n", "m", "orientable", "pair_label", "components", "volume"});
  NambuData d;
  d.n = require_int(doc, "nambu", "n");
  d.m = require_int(doc, "nambu", "m");
  const json& ori = require(doc, "nambu", "orientable");
  if (!ori.is_boolean()) throw ParseError("nambu.orientable: expected a boolean");
  d.orientable = ori.get<bool>();
  if (doc.contains("pair_label")) {
    if (!doc["pair_label"].is_string()) throw ParseError("nambu.pair_label: expected a string");
    d.pair_label = doc["pair_label"].get<std::string>();
  }
  const json& comps = require(doc, "nambu", "components");
  if (!comps.is_array()) throw ParseError("nambu.components: expected an array");
  for (const auto& cj : comps) {
    reject_unknown(cj, "component", {"id", "periods"});
    NambuComponent z;
    z.id = require_string(cj, "component", "id");
    const json& arr = require(cj, "component " + z.id, "periods");
    if (!arr.is_array()) throw ParseError("component " + z.id + ".periods: expected an array");
    z.w.resize(arr.size());
    for (size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_number())
        throw ParseError("component " + z.id + ".periods: expected numbers");
      z.w(static_cast<int>(i)) = arr[i].get<double>();
    }
    d.components.push_back(std::move(z));
  }
  if (doc.contains("volume")) {
    if (!doc["volume"].is_number()) throw ParseError("nambu.volume: expected a number");
    d.regularized_volume = doc["volume"].get<double>();
  }
  return d;
}

json nambu_to_json(const NambuData& d) {
  json doc;
  doc["n"] = d.n;
  doc["m"] = d.m;
  doc["orientable"] = d.orientable;
  doc["pair_label"] = d.pair_label;
  doc["components"] = json::array();
  for (const auto& z : d.components) {
    json cj;
    cj["id"] = z.id;
    json arr = json::array();
    for (int i = 0; i < z.w.size(); ++i) arr.push_back(z.w(i));
    cj["periods"] = arr;
    doc["components"].push_back(cj);
  }
  if (d.regularized_volume) doc["volume"] = *d.regularized_volume;
  return doc;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return doc;
}

}  // namespace bsurf::io
