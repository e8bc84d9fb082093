#include <CLI11.hpp>
#include <iostream>
#include <fstream>
#include <sstream>

#include "bsurf/desingularize.hpp"
#include "bsurf/fixtures.hpp"
#include "bsurf/graph.hpp"
#include "bsurf/io.hpp"
#include "bsurf/nambu.hpp"
#include "bsurf/quadrature.hpp"

namespace {

using bsurf::Decision;
using bsurf::Verdict;
using json = bsurf::io::json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Options {
  std::string format = "text";
  double tol = 1e-6;
};

int verdict_exit(const Decision& d) {
  switch (d.verdict) {
    case Verdict::Yes: return kYes;
    case Verdict::No: return kNo;
    default: return kError;
  }
}

void emit_decision(const Options& opt, const std::string& question, const Decision& d) {
  if (opt.format == "json") {
    json doc;
    doc["question"] = question;
    doc["verdict"] = d.verdict == Verdict::Yes ? "yes" : (d.verdict == Verdict::No ? "no" : "refused");
    if (d.yes())
      doc["witness"] = d.witness;
    else
      doc["obstruction"] = d.obstruction;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << question << ": " << (d.yes() ? "yes" : (d.verdict == Verdict::No ? "no" : "refused"))
              << "\n";
    if (d.yes() && !d.witness.empty()) std::cout << "witness: " << d.witness << "\n";
    if (!d.yes() && !d.obstruction.empty()) std::cout << "obstruction: " << d.obstruction << "\n";
  }
}

bsurf::io::ParsedPresentation load_presentation(const std::string& path) {
  return bsurf::io::parse_presentation(bsurf::io::load_file(path));
}

struct LoadedForm {
  bsurf::SurfacePresentation p;
  bsurf::BmFormData w;
};

LoadedForm load_form(const std::string& path) {
  bsurf::io::ParsedForm f = bsurf::io::parse_form(bsurf::io::load_file(path));
  if (!f.presentation)
    throw bsurf::io::ParseError(path + ": form document must embed a 'presentation'");
  bsurf::ValidationReport r = bsurf::validate(f.presentation->p);
  if (!r.ok()) throw bsurf::io::ParseError(path + ": invalid presentation: " + r.violations.front());
  return {f.presentation->p, f.w};
}

int cmd_validate(const Options& opt, const std::string& path) {
  bsurf::io::ParsedPresentation pp = load_presentation(path);
  bsurf::ValidationReport r = bsurf::validate(pp.p);
  if (pp.involution && r.ok()) {
    bsurf::ValidationReport ri = bsurf::validate_involution(pp.p, *pp.involution);
    for (const auto& v : ri.violations) r.add("involution: " + v);
  }
  if (opt.format == "json") {
    json doc;
    doc["ok"] = r.ok();
    doc["violations"] = r.violations;
    std::cout << doc.dump(2) << "\n";
  } else if (r.ok()) {
    std::cout << "ok\n";
  } else {
    for (const auto& v : r.violations) std::cout << "violation: " << v << "\n";
  }
  return r.ok() ? kYes : kError;
}

int cmd_graph(const Options& opt, const std::string& path, const std::string& dot_out) {
  bsurf::io::ParsedPresentation pp = load_presentation(path);
  bsurf::BGraph g = bsurf::build_graph(pp.p);
  bsurf::TwoColorResult tc = bsurf::two_colorable(g);
  if (!dot_out.empty()) {
    std::ofstream out(dot_out);
    if (!out) throw bsurf::io::ParseError("cannot write " + dot_out);
    out << bsurf::to_dot(g, tc.coloring ? &*tc.coloring : nullptr);
  }
  if (opt.format == "json") {
    json doc;
    doc["vertices"] = g.vertices;
    doc["edges"] = json::array();
    for (const auto& e : g.edges) {
      json ej;
      ej["id"] = e.id;
      ej["kind"] = e.kind == bsurf::EdgeKind::Plain
                       ? "plain"
                       : (e.kind == bsurf::EdgeKind::Loop ? "loop" : "twisted_loop");
      ej["endpoints"] = {e.u, e.v};
      doc["edges"].push_back(ej);
    }
    doc["two_colorable"] = tc.coloring.has_value();
    if (tc.coloring) {
      json cj;
      for (const auto& [v, c] : tc.coloring->color) cj[v] = c;
      doc["coloring"] = cj;
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << g.vertices.size() << " vertices, " << g.edges.size() << " edges; 2-colorable: "
              << (tc.coloring ? "yes" : "no") << "\n";
  }
  return kYes;
}

int cmd_exists(const Options& opt, const std::string& path, int m) {
  bsurf::io::ParsedPresentation pp = load_presentation(path);
  bsurf::ValidationReport r = bsurf::validate(pp.p);
  if (!r.ok()) throw bsurf::io::ParseError(path + ": invalid presentation: " + r.violations.front());
  Decision d = pp.involution ? bsurf::exists_bm_cover(pp.p, *pp.involution, m)
                             : bsurf::exists_bm(pp.p, m);
  emit_decision(opt, "exists b^" + std::to_string(m), d);
  return verdict_exit(d);
}

int cmd_invariants(const Options& opt, const std::string& path) {
  LoadedForm f = load_form(path);
  bsurf::InvariantVector iv = bsurf::invariants(f.p, f.w);
  bsurf::ClassVector cv = bsurf::cohomology_class(f.p, f.w);
  json doc;
  doc["m"] = iv.m;
  doc["periods"] = json::object();
  for (const auto& [c, a] : iv.periods) {
    json arr = json::array();
    for (int i = 0; i < a.size(); ++i) arr.push_back(a(i));
    doc["periods"][c] = arr;
  }
  doc["modular_periods"] = json::object();
  for (const auto& [c, t] : iv.modular_periods) doc["modular_periods"][c] = t;
  if (iv.regularized_volume) doc["regularized_volume"] = *iv.regularized_volume;
  doc["class_periods"] = json::object();
  for (const auto& [c, a] : cv.periods) {
    json arr = json::array();
    for (int i = 0; i < a.size(); ++i) arr.push_back(a(i));
    doc["class_periods"][c] = arr;
  }
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "m = " << iv.m << "\n";
    for (const auto& [c, a] : iv.periods) {
      std::cout << "periods[" << c << "] =";
      for (int i = 0; i < a.size(); ++i) std::cout << " " << a(i);
      std::cout << "\n";
    }
    for (const auto& [c, t] : iv.modular_periods)
      std::cout << "modular_period[" << c << "] = " << t << "\n";
    if (iv.regularized_volume)
      std::cout << "regularized_volume = " << *iv.regularized_volume << "\n";
  }
  return kYes;
}

int cmd_equiv(const Options& opt, const std::string& p1, const std::string& p2, bool reversal) {
  LoadedForm f1 = load_form(p1);
  LoadedForm f2 = load_form(p2);
  bsurf::EquivOptions eo;
  eo.allow_orientation_reversal = reversal;
  eo.tol = opt.tol;
  Decision d = bsurf::equivalent(f1.p, f1.w, f2.p, f2.w, eo);
  emit_decision(opt, "globally equivalent", d);
  return verdict_exit(d);
}

int cmd_cover(const Options& opt, const std::string& path) {
  bsurf::io::ParsedPresentation pp = load_presentation(path);
  bsurf::DoubleCover dc = bsurf::orientation_double_cover(pp.p);
  json doc = bsurf::io::presentation_to_json(dc.cover);
  json inv;
  inv["faces"] = dc.deck.face_map;
  inv["curves"] = dc.deck.curve_map;
  inv["sigma"] = dc.deck.face_sigma;
  inv["t"] = dc.deck.curve_t;
  inv["u"] = dc.deck.curve_u;
  doc["involution"] = inv;
  std::cout << doc.dump(2) << "\n";
  (void)opt;
  return kYes;
}

int cmd_action_check(const Options& opt, const std::string& form_path,
                     const std::string& action_path) {
  LoadedForm f = load_form(form_path);
  bsurf::FiniteAction G = bsurf::io::parse_action(bsurf::io::load_file(action_path));
  bsurf::ValidationReport r = bsurf::validate_action(f.p, G);
  if (!r.ok())
    throw bsurf::io::ParseError(action_path + ": invalid action: " + r.violations.front());
  Decision d = bsurf::is_invariant(f.p, f.w, G);
  emit_decision(opt, "invariant", d);
  return verdict_exit(d);
}

int cmd_average(const Options& opt, const std::string& form_path, const std::string& action_path) {
  LoadedForm f = load_form(form_path);
  bsurf::FiniteAction G = bsurf::io::parse_action(bsurf::io::load_file(action_path));
  bsurf::ValidationReport r = bsurf::validate_action(f.p, G);
  if (!r.ok())
    throw bsurf::io::ParseError(action_path + ": invalid action: " + r.violations.front());
  bsurf::BmFormData avg = bsurf::average(f.p, f.w, G);
  bsurf::ValidationReport cr = bsurf::check_form(f.p, avg);
  json doc = bsurf::io::form_to_json(avg);
  doc["valid"] = cr.ok();
  doc["violations"] = cr.violations;
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "averaged form: " << bsurf::io::form_to_json(avg).dump() << "\n";
    std::cout << "valid: " << (cr.ok() ? "yes" : "no") << "\n";
    for (const auto& v : cr.violations) std::cout << "violation: " << v << "\n";
  }
  return cr.ok() ? kYes : kNo;
}

int cmd_desing(const Options& opt, const std::string& form_path, double eps, int match_order) {
  LoadedForm f = load_form(form_path);
  if (f.w.m % 2 != 0) {
    Decision d = Decision::refuse("desingularization requires even order, got m=" +
                                  std::to_string(f.w.m));
    emit_decision(opt, "desingularize", d);
    return kError;
  }
  const int k = f.w.m / 2;
  const int n = match_order > 0 ? match_order : bsurf::default_match_order(k);
  bsurf::DesingProfile pr = bsurf::build_profile(k, n);
  bsurf::DesingVolumeReport rep = bsurf::desing_total_volume_numeric(f.p, f.w, eps, pr);
  if (opt.format == "json") {
    json doc;
    doc["k"] = k;
    doc["match_order"] = n;
    doc["epsilon"] = rep.epsilon;
    doc["closed_form"] = rep.closed_form;
    doc["numeric"] = rep.numeric;
    doc["relative_error"] = rep.relative_error;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "k = " << k << ", match order = " << n << ", eps = " << rep.epsilon << "\n"
              << "closed-form volume = " << rep.closed_form << "\n"
              << "numeric volume     = " << rep.numeric << "\n"
              << "relative error     = " << rep.relative_error << "\n";
  }
  return rep.relative_error <= opt.tol ? kYes : kNo;
}

int cmd_desing_sweep(const Options& opt, int k, int match_order, std::vector<double> eps_list) {
  const int n = match_order > 0 ? match_order : bsurf::default_match_order(k);
  bsurf::DesingProfile pr = bsurf::build_profile(k, n);
  if (eps_list.empty()) eps_list = {0.2, 0.1, 0.05, 0.025};
  bsurf::ConvergenceTable t = bsurf::convergence_report(k, pr, eps_list);
  bool monotone = true;
  for (int c = 0; c < t.sup.cols(); ++c)
    for (int r = 0; r + 1 < t.sup.rows(); ++r)
      if (t.sup(r + 1, c) > t.sup(r, c)) monotone = false;
  if (opt.format == "json") {
    json doc;
    doc["k"] = k;
    doc["match_order"] = n;
    doc["eps"] = t.eps;
    doc["orders"] = t.orders;
    doc["sup_norms"] = json::array();
    for (int r = 0; r < t.sup.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < t.sup.cols(); ++c) row.push_back(t.sup(r, c));
      doc["sup_norms"].push_back(row);
    }
    doc["monotone"] = monotone;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "eps";
    for (int c : t.orders) std::cout << "\torder " << c;
    std::cout << "\n";
    for (int r = 0; r < t.sup.rows(); ++r) {
      std::cout << t.eps[r];
      for (int c = 0; c < t.sup.cols(); ++c) std::cout << "\t" << t.sup(r, c);
      std::cout << "\n";
    }
    std::cout << "monotone non-increasing: " << (monotone ? "yes" : "no") << "\n";
  }
  return monotone ? kYes : kNo;
}

int cmd_nambu_equiv(const Options& opt, const std::string& p1, const std::string& p2,
                    bool reversal) {
  bsurf::NambuData d1 = bsurf::io::parse_nambu(bsurf::io::load_file(p1));
  bsurf::NambuData d2 = bsurf::io::parse_nambu(bsurf::io::load_file(p2));
  bsurf::NambuMatchOptions mo;
  mo.allow_orientation_reversal = reversal;
  mo.tol = opt.tol;
  Decision d = bsurf::nambu_equivalent(d1, d2, mo);
  emit_decision(opt, "Nambu equivalent", d);
  return verdict_exit(d);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision procedures for b^m-symplectic surfaces and b^m-Nambu structures"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tol", opt.tol, "numerical tolerance (default 1e-6)");

  std::string in1, in2, dot_out, action_path;
  int m = 1, k = 1, match_order = 0;
  double eps = 0.1;
  bool reversal = false;
  std::vector<double> eps_list;

  auto* validate = app.add_subcommand("validate", "check a presentation document");
  validate->add_option("input", in1)->required();

  auto* graph = app.add_subcommand("graph", "emit the associated graph");
  graph->add_option("input", in1)->required();
  graph->add_option("--dot", dot_out, "write DOT output to this path");

  auto* exists = app.add_subcommand("exists", "decide b^m existence");
  exists->add_option("input", in1)->required();
  exists->add_option("--m", m, "order of the structure")->required();

  auto* invariants = app.add_subcommand("invariants", "compute the classification invariants");
  invariants->add_option("input", in1)->required();

  auto* equiv = app.add_subcommand("equiv", "decide global equivalence of two forms");
  equiv->add_option("input1", in1)->required();
  equiv->add_option("input2", in2)->required();
  equiv->add_flag("--allow-orientation-reversal", reversal);

  auto* cover = app.add_subcommand("cover", "emit the orientation double cover");
  cover->add_option("input", in1)->required();

  auto* action_check = app.add_subcommand("action-check", "test invariance under a finite action");
  action_check->add_option("input", in1)->required();
  action_check->add_option("--action", action_path)->required();

  auto* average = app.add_subcommand("average", "average a form over a finite action");
  average->add_option("input", in1)->required();
  average->add_option("--action", action_path)->required();

  auto* desing = app.add_subcommand("desing", "desingularized total volume report");
  desing->add_option("input", in1)->required();
  desing->add_option("--eps", eps, "gluing radius")->required();
  desing->add_option("--match-order", match_order, "profile match order (default min(2k,3))");

  auto* sweep = app.add_subcommand("desing-sweep", "convergence table of the dual densities");
  sweep->add_option("--k", k, "half-order (m = 2k)")->required();
  sweep->add_option("--match-order", match_order);
  sweep->add_option("--eps-grid", eps_list, "decreasing epsilon values");

  auto* nambu = app.add_subcommand("nambu-equiv", "decide equivalence of Nambu data");
  nambu->add_option("input1", in1)->required();
  nambu->add_option("input2", in2)->required();
  nambu->add_flag("--allow-orientation-reversal", reversal);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate)) return cmd_validate(opt, in1);
    if (app.got_subcommand(graph)) return cmd_graph(opt, in1, dot_out);
    if (app.got_subcommand(exists)) return cmd_exists(opt, in1, m);
    if (app.got_subcommand(invariants)) return cmd_invariants(opt, in1);
    if (app.got_subcommand(equiv)) return cmd_equiv(opt, in1, in2, reversal);
    if (app.got_subcommand(cover)) return cmd_cover(opt, in1);
    if (app.got_subcommand(action_check)) return cmd_action_check(opt, in1, action_path);
    if (app.got_subcommand(average)) return cmd_average(opt, in1, action_path);
    if (app.got_subcommand(desing)) return cmd_desing(opt, in1, eps, match_order);
    if (app.got_subcommand(sweep)) return cmd_desing_sweep(opt, k, match_order, eps_list);
    if (app.got_subcommand(nambu)) return cmd_nambu_equiv(opt, in1, in2, reversal);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
