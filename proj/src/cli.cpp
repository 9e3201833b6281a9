#include "plotkit/cli.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "plotkit/arrows.hpp"
#include "plotkit/connections.hpp"
#include "plotkit/constructions.hpp"
#include "plotkit/io.hpp"
#include "plotkit/limits.hpp"
#include "plotkit/paren.hpp"
#include "plotkit/punctor.hpp"
#include "plotkit/subplots.hpp"

namespace plotkit {

using nlohmann::json;

namespace {

struct Outputs {
  std::ostream& out;
  std::ostream& err;
  void report(const json& j) { out << j.dump(2) << "\n"; }
  void plot(const Plot& p, const ClassMap& classes = {}) { out << emit_plot(p, classes); }
  void note(const std::string& line) { err << line << "\n"; }
};

json ids(const Plot& p, const std::vector<Index>& fs) { return arrow_ids(p, fs); }

json object_ids(const Plot& p, const std::vector<Index>& as) {
  json j = json::array();
  for (Index a : as) j.push_back(p.object(a));
  return j;
}

json triple(const Plot& p, const ArrowTriple& t) {
  return {p.arrow(t.x), p.arrow(t.y), p.arrow(t.z)};
}

json pair_ids(const Plot& p, std::pair<Index, Index> fg) {
  return {p.arrow(fg.first), p.arrow(fg.second)};
}

json classification_json(const Plot& p, const ClassificationReport& r) {
  json j;
  j["quiver"] = r.is_quiver;
  j["monic_posetal"] = r.is_monic_posetal;
  j["epic"] = r.is_epic;
  j["unital"] = r.is_unital;
  j["saturated"] = r.is_saturated;
  j["magmoid"] = r.is_magmoid;
  j["semigroupoid"] = r.is_semigroupoid;
  j["semicategory"] = r.is_semicategory;
  j["category"] = r.is_category;
  json laws = json::object(), wit = json::object();
  for (std::size_t i = 0; i < kNumLaws; ++i) {
    auto law = static_cast<Law>(i);
    const std::string name(to_string(law));
    laws[name] = r.profile.holds(law);
    if (const auto& w = r.profile.witness(law)) wit[name] = triple(p, *w);
  }
  j["laws"] = laws;
  if (r.composable_pair) wit["composable_pair"] = pair_ids(p, *r.composable_pair);
  if (r.parallel_pair) wit["parallel_pair"] = pair_ids(p, *r.parallel_pair);
  if (r.isolated_object) wit["isolated_object"] = p.object(*r.isolated_object);
  if (r.non_unital_object) wit["non_unital_object"] = p.object(*r.non_unital_object);
  if (r.missing_pair)
    wit["missing_pair"] = {p.object(r.missing_pair->first), p.object(r.missing_pair->second)};
  j["witnesses"] = wit;
  json idm = json::object();
  for (auto [a, e] : r.identity_map) idm[p.object(a)] = p.arrow(e);
  j["identities"] = idm;
  return j;
}

json violations_json(const std::vector<Violation>& vs) {
  json j = json::array();
  for (const auto& v : vs) j.push_back({{"kind", std::string(to_string(v.kind))}, {"detail", v.detail}});
  return j;
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

Cone parse_cone(const Diagram& d, const Plot& flat, const std::string& apex,
                const std::string& legs) {
  Cone c;
  c.apex = flat.object_index(apex);
  for (const auto& id : split_ids(legs)) c.legs.push_back(flat.arrow_index(id));
  if (c.legs.size() != d.shape().num_objects())
    throw DocumentError("--legs needs one arrow per shape object, in sorted object order");
  return c;
}

json cone_json(const Diagram& d, const Plot& flat, const Cone& c) {
  json legs = json::object();
  for (std::size_t a = 0; a < c.legs.size(); ++a)
    legs[d.shape().object(static_cast<Index>(a))] = flat.arrow(c.legs[a]);
  return {{"apex", flat.object(c.apex)}, {"legs", legs}};
}

json tri(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Outputs io{out, err};
  CLI::App app{"plotkit: finite plots, punctors and limits"};
  app.require_subcommand(1);

  std::string file, file2, cls, mode, objects_arg, arrows_arg, arrow, paren_text, zeta_file,
      diagram_file, apex, legs, from, to, parent;
  std::vector<std::string> files;
  std::size_t max_len = 3, count = 0;
  std::optional<std::size_t> max_n, max_p;
  bool identitive = false, fact = false, colimit = false;

  std::map<CLI::App*, std::function<int()>> handlers;
  auto add = [&](const std::string& name, const std::string& help) {
    return app.add_subcommand(name, help);
  };

  auto* c_check = add("check", "validate a plot document");
  c_check->add_option("file", file)->required();
  handlers[c_check] = [&] {
    PlotDocument doc = parse_document(read_file(file));
    auto rep = validate(doc.raw);
    json j{{"valid", rep.ok()}, {"violations", violations_json(rep.violations)}};
    if (rep.ok()) {
      for (const auto& [name, members] : doc.classes)
        for (const auto& id : members)
          if (!rep.plot->find_arrow(id))
            j["violations"].push_back({{"kind", "unknown_arrow"},
                                       {"detail", "class '" + name + "' names '" + id + "'"}});
      j["valid"] = j["violations"].empty();
    }
    io.report(j);
    const bool ok = j["valid"].get<bool>();
    io.note(ok ? "valid plot" : "invalid plot");
    return ok ? kExitOk : kExitFalse;
  };

  auto* c_classify = add("classify", "structural flags and associativity laws");
  c_classify->add_option("file", file)->required();
  handlers[c_classify] = [&] {
    auto lp = load_plot(file);
    io.report(classification_json(lp.plot, classify(lp.plot)));
    return kExitOk;
  };

  auto* c_ident = add("identities", "the identity of every unital object");
  c_ident->add_option("file", file)->required();
  handlers[c_ident] = [&] {
    auto lp = load_plot(file);
    json j = json::object();
    auto e = compute_identities(lp.plot);
    for (Index a = 0; a < static_cast<Index>(e.size()); ++a)
      if (e[a] != kNone) j[lp.plot.object(a)] = lp.plot.arrow(e[a]);
    io.report({{"identities", j}});
    return kExitOk;
  };

  auto* c_arrows = add("arrows", "classify arrows, or list one class");
  c_arrows->add_option("file", file)->required();
  c_arrows->add_option("--class", cls, "class name");
  handlers[c_arrows] = [&] {
    auto lp = load_plot(file);
    const Plot& p = lp.plot;
    if (!cls.empty()) {
      io.report({{"class", cls}, {"arrows", ids(p, resolve_class(p, lp.classes, cls))}});
      return kExitOk;
    }
    json j = json::object();
    auto rep = classify_arrows(p);
    for (Index f = 0; f < static_cast<Index>(p.num_arrows()); ++f) {
      const auto& c = rep.arrows[f];
      json a = json::object();
      for (auto [name, v] : c.flags()) a[std::string(name)] = v;
      a["left_inverses"] = ids(p, c.left_inverses);
      a["right_inverses"] = ids(p, c.right_inverses);
      a["strong_inverse"] = c.strong_inverse ? json(p.arrow(*c.strong_inverse)) : json(nullptr);
      j[p.arrow(f)] = a;
    }
    io.report({{"arrows", j}});
    return kExitOk;
  };

  auto* c_dual = add("dual", "the opposite plot");
  c_dual->add_option("file", file)->required();
  handlers[c_dual] = [&] {
    auto lp = load_plot(file);
    io.plot(dual(lp.plot), lp.classes);
    return kExitOk;
  };

  auto* c_sub = add("subplot", "generate a subplot, or check one against --parent");
  c_sub->add_option("file", file)->required();
  c_sub->add_option("--mode", mode, "smallest|identitive|relative|hom|obj|wide|full")
      ->default_val("smallest");
  c_sub->add_option("--objects", objects_arg, "comma separated object ids");
  c_sub->add_option("--arrows", arrows_arg, "comma separated arrow ids");
  c_sub->add_flag("--identitive", identitive, "derived kinds: also add identities");
  c_sub->add_option("--parent", parent, "check FILE as a subplot of this plot");
  handlers[c_sub] = [&] {
    auto lp = load_plot(file);
    if (!parent.empty()) {
      auto pp = load_plot(parent);
      auto r = is_subplot(lp.plot, pp.plot);
      json j{{"subplot", r.is_subplot}, {"wide", r.is_wide}, {"full", r.is_full},
             {"identitive", r.is_identitive}, {"proper", r.is_proper}};
      if (!r.is_subplot) j["reason"] = r.reason;
      io.report(j);
      return r.is_subplot ? kExitOk : kExitFalse;
    }
    const auto objs = split_ids(objects_arg), arrs = split_ids(arrows_arg);
    Plot q;
    if (mode == "smallest") q = generated_subplot(lp.plot, objs, arrs, GenerationMode::Smallest);
    else if (mode == "identitive") q = generated_subplot(lp.plot, objs, arrs, GenerationMode::Identitive);
    else if (mode == "relative") q = generated_subplot(lp.plot, objs, arrs, GenerationMode::Relative);
    else if (mode == "hom") q = derived_subplot(lp.plot, DerivedKind::Hom, arrs, identitive);
    else if (mode == "obj") q = derived_subplot(lp.plot, DerivedKind::Obj, objs, identitive);
    else if (mode == "wide") q = derived_subplot(lp.plot, DerivedKind::Wide, arrs, identitive);
    else if (mode == "full") q = derived_subplot(lp.plot, DerivedKind::Full, objs, identitive);
    else throw DocumentError("unknown subplot mode '" + mode + "'");
    io.plot(q);
    return kExitOk;
  };

  auto* c_compo = add("compositive", "is the class closed under composition");
  c_compo->add_option("file", file)->required();
  c_compo->add_option("--class", cls)->required();
  handlers[c_compo] = [&] {
    auto lp = load_plot(file);
    auto r = is_compositive(lp.plot, resolve_class(lp.plot, lp.classes, cls));
    json j{{"compositive", r.compositive}};
    if (r.witness) j["witness"] = pair_ids(lp.plot, *r.witness);
    io.report(j);
    return r.compositive ? kExitOk : kExitFalse;
  };

  auto* c_unit = add("unitize", "adjoin identities");
  c_unit->add_option("file", file)->required();
  c_unit->add_option("--mode", mode, "forced|conditional")->default_val("conditional");
  handlers[c_unit] = [&] {
    auto lp = load_plot(file);
    if (mode == "forced") io.plot(force_unitize(lp.plot));
    else if (mode == "conditional") io.plot(conditional_unitize(lp.plot));
    else throw DocumentError("unknown unitize mode '" + mode + "'");
    return kExitOk;
  };

  auto* c_deunit = add("deunitize", "remove identities");
  c_deunit->add_option("file", file)->required();
  handlers[c_deunit] = [&] {
    io.plot(deunitize(load_plot(file).plot));
    return kExitOk;
  };

  auto* c_prod = add("product", "product of plots");
  c_prod->add_option("files", files)->required();
  auto* c_coprod = add("coproduct", "coproduct of plots");
  c_coprod->add_option("files", files)->required();
  auto load_all = [&] {
    std::vector<Plot> ps;
    for (const auto& f : files) ps.push_back(load_plot(f).plot);
    return ps;
  };
  handlers[c_prod] = [&] {
    io.plot(product(load_all()).plot);
    return kExitOk;
  };
  handlers[c_coprod] = [&] {
    io.plot(coproduct(load_all()).plot);
    return kExitOk;
  };

  auto* c_aug = add("augment", "augmentation by an index set and a partial operation");
  c_aug->add_option("file", file)->required();
  c_aug->add_option("--zeta", zeta_file, "{\"index\": [...], \"zeta\": [[i,j,k], ...]}")->required();
  handlers[c_aug] = [&] {
    auto lp = load_plot(file);
    json z;
    try {
      z = json::parse(read_file(zeta_file));
    } catch (const json::parse_error& e) {
      throw DocumentError(std::string("zeta document: ") + e.what());
    }
    if (!z.is_object() || !z.contains("index") || !z["index"].is_array())
      throw DocumentError("zeta document needs an 'index' array");
    std::vector<std::string> index;
    std::map<std::pair<std::string, std::string>, std::string> zeta;
    try {
      index = z["index"].get<std::vector<std::string>>();
      if (z.contains("zeta"))
        for (const auto& t : z["zeta"]) {
          auto xs = t.get<std::vector<std::string>>();
          if (xs.size() != 3) throw DocumentError("zeta entries are [i, j, k]");
          zeta[{xs[0], xs[1]}] = xs[2];
        }
    } catch (const json::exception& e) {
      throw DocumentError(std::string("zeta document: ") + e.what());
    }
    io.plot(augment(lp.plot, index, zeta));
    return kExitOk;
  };

  auto* c_pcheck = add("punctor-check", "validate a punctor document");
  c_pcheck->add_option("file", file)->required();
  handlers[c_pcheck] = [&] {
    auto d = load_punctor_document(file);
    try {
      Punctor f = make_punctor(d.source.plot, d.target.plot, d.objects, d.arrows);
      io.report({{"punctor", true}, {"functor", is_functor(f)}, {"violations", json::array()}});
      io.note("valid punctor");
      return kExitOk;
    } catch (const PunctorError& e) {
      json vs = json::array();
      for (const auto& v : e.violations())
        vs.push_back({{"kind", std::string(to_string(v.kind))}, {"detail", v.detail}});
      io.report({{"punctor", false}, {"violations", vs}});
      io.note("not a punctor");
      return kExitFalse;
    }
  };

  auto* c_pclass = add("punctor-classify", "faithful, full, embedding, ...");
  c_pclass->add_option("file", file)->required();
  c_pclass->add_option("--class", cls, "class of the target for density");
  handlers[c_pclass] = [&] {
    auto d = load_punctor_document(file);
    Punctor f = make_punctor(d.source.plot, d.target.plot, d.objects, d.arrows);
    std::optional<std::vector<Index>> m;
    if (!cls.empty()) m = resolve_class(f.target, d.target.classes, cls);
    auto r = classify_punctor(f, m);
    const Plot& p = f.source;
    const Plot& q = f.target;
    json j{{"unital", r.is_unital},
           {"faithful", r.faithful},
           {"full", r.full},
           {"fully_faithful", r.fully_faithful},
           {"injective_on_objects", r.injective_on_objects},
           {"surjective_on_objects", r.surjective_on_objects},
           {"embedding", r.embedding},
           {"isomorphism", r.isomorphism},
           {"constant", r.constant},
           {"coconstant", r.coconstant},
           {"functor", is_functor(f)}};
    if (m) {
      j["m_dense"] = *r.m_dense;
      j["m_equivalence"] = *r.m_equivalence;
    }
    json w = json::object();
    if (r.non_identity_preserved) w["identity_not_preserved"] = p.object(*r.non_identity_preserved);
    if (r.unfaithful_pair) w["unfaithful_pair"] = pair_ids(p, *r.unfaithful_pair);
    if (r.unfull_witness) {
      auto [xy, g] = *r.unfull_witness;
      w["unfull"] = {{"objects", {p.object(xy.first), p.object(xy.second)}}, {"missed", q.arrow(g)}};
    }
    if (r.object_collision)
      w["object_collision"] = {p.object(r.object_collision->first), p.object(r.object_collision->second)};
    if (r.undense_object) w["undense_object"] = q.object(*r.undense_object);
    j["witnesses"] = w;
    io.report(j);
    return kExitOk;
  };

  auto* c_nt = add("nt-check", "validate a natural transformation document");
  c_nt->add_option("file", file)->required();
  handlers[c_nt] = [&] {
    auto d = load_nt_document(file);
    try {
      make_nt(d.from, d.to, d.components);
    } catch (const NotNatural& e) {
      io.report({{"natural", false}, {"reason", e.what()}});
      io.note("not natural");
      return kExitFalse;
    }
    io.report({{"natural", true}});
    io.note("natural transformation");
    return kExitOk;
  };

  auto* c_comp = add("components", "classes of M-connected objects");
  c_comp->add_option("file", file)->required();
  c_comp->add_option("--class", cls)->required();
  handlers[c_comp] = [&] {
    auto lp = load_plot(file);
    auto r = m_components(lp.plot, resolve_class(lp.plot, lp.classes, cls));
    json j = json::array();
    for (const auto& c : r.classes) j.push_back(object_ids(lp.plot, c));
    io.report({{"components", j}});
    return kExitOk;
  };

  auto* c_skel = add("skeleton", "full subplot on one object per M-equivalence class");
  c_skel->add_option("file", file)->required();
  c_skel->add_option("--class", cls)->required();
  handlers[c_skel] = [&] {
    auto lp = load_plot(file);
    auto m = resolve_class(lp.plot, lp.classes, cls);
    io.plot(skeleton(lp.plot, m));
    io.note(is_m_skeletal(lp.plot, m) ? "input is already skeletal" : "input is not skeletal");
    return kExitOk;
  };

  auto* c_order = add("order", "index, period and order of an endomorphism");
  c_order->add_option("file", file)->required();
  c_order->add_option("--arrow", arrow)->required();
  c_order->add_option("--max-n", max_n, "largest index searched");
  c_order->add_option("--max-p", max_p, "largest period searched");
  handlers[c_order] = [&] {
    auto lp = load_plot(file);
    auto o = order_of(lp.plot, lp.plot.arrow_index(arrow), max_n, max_p);
    if (!o) {
      io.report({{"periodic", nullptr}});
      io.note("no index/period found within the bounds");
      return kExitInconclusive;
    }
    io.report({{"periodic", true},
               {"index", o->index},
               {"period", o->period},
               {"order", o->order},
               {"idempotent", o->idempotent()}});
    return kExitOk;
  };

  auto* c_paths = add("paths", "bounded path plot, or fact plot with --fact");
  c_paths->add_option("file", file)->required();
  c_paths->add_option("--class", cls)->required();
  c_paths->add_option("--max-len", max_len)->default_val(3);
  c_paths->add_flag("--fact", fact);
  handlers[c_paths] = [&] {
    auto lp = load_plot(file);
    auto m = resolve_class(lp.plot, lp.classes, cls);
    io.plot(fact ? bounded_fact_plot(lp.plot, m, max_len).plot : bounded_path_plot(lp.plot, m, max_len));
    return kExitOk;
  };

  auto* c_morph = add("morphic", "is there an M-factorization from A to B");
  c_morph->add_option("file", file)->required();
  c_morph->add_option("--class", cls)->required();
  c_morph->add_option("--from", from)->required();
  c_morph->add_option("--to", to)->required();
  c_morph->add_option("--max-len", max_len)->default_val(3);
  handlers[c_morph] = [&] {
    auto lp = load_plot(file);
    const Plot& p = lp.plot;
    auto r = m_morphic(p, resolve_class(p, lp.classes, cls), p.object_index(from),
                       p.object_index(to), max_len);
    json j{{"verdict", std::string(to_string(r.verdict))}};
    if (r.witness) j["witness"] = to_string(p, *r.witness);
    io.report(j);
    return r.verdict == Verdict::True ? kExitOk
           : r.verdict == Verdict::False ? kExitFalse
                                         : kExitInconclusive;
  };

  auto* c_limit = add("limit", "classify cones of a diagram as limits or colimits");
  c_limit->add_option("--diagram", diagram_file)->required();
  c_limit->add_option("--class", cls)->required();
  c_limit->add_option("--max-len", max_len)->default_val(3);
  c_limit->add_flag("--colimit", colimit);
  c_limit->add_option("--apex", apex, "classify only this cone");
  c_limit->add_option("--legs", legs, "legs of that cone, one per shape object in sorted order");
  handlers[c_limit] = [&] {
    auto doc = load_punctor_document(diagram_file);
    Diagram d = make_diagram(make_punctor(doc.source.plot, doc.target.plot, doc.objects, doc.arrows));
    if (colimit) d = dual_diagram(d);
    const Plot& flat = d.flat;
    auto m = resolve_class(flat, doc.target.classes, cls);
    std::vector<Cone> cones;
    if (!apex.empty()) cones.push_back(parse_cone(d, flat, apex, legs));
    else cones = enumerate_cones(d);
    json list = json::array();
    bool any_strong = false, any_open = false;
    for (const auto& c : cones) {
      auto r = classify_limit(d, c, m, max_len);
      json j = cone_json(d, flat, c);
      j["label"] = std::string(to_string(r.label));
      j["weak"] = tri(r.weak);
      j["sub"] = tri(r.sub);
      any_strong |= r.label == LimitLabel::Strong;
      any_open |= r.label == LimitLabel::Inconclusive;
      list.push_back(j);
    }
    io.report({{"kind", colimit ? "colimit" : "limit"}, {"cones", list}});
    if (any_strong) return kExitOk;
    return any_open ? kExitInconclusive : kExitFalse;
  };

  auto* c_paren = add("paren", "parenthesizations");
  c_paren->require_subcommand(1);
  auto* c_enum = c_paren->add_subcommand("enum", "all parenthesizations of length N");
  c_enum->add_option("n", count)->required();
  handlers[c_enum] = [&] {
    json list = json::array();
    for (const auto& w : enumerate_parens(count)) list.push_back(w.to_string());
    io.report({{"length", count}, {"count", list.size()}, {"parens", list}});
    return kExitOk;
  };
  auto* c_eval = c_paren->add_subcommand("eval", "evaluate a parenthesization on a path");
  c_eval->add_option("file", file)->required();
  c_eval->add_option("--paren", paren_text)->required();
  c_eval->add_option("--arrows", arrows_arg)->required();
  handlers[c_eval] = [&] {
    auto lp = load_plot(file);
    Paren w = Paren::parse(paren_text);
    // a path, so order and repeats matter
    std::vector<Index> fs;
    for (const auto& id : split_ids(arrows_arg)) fs.push_back(lp.plot.arrow_index(id));
    auto v = eval_paren(lp.plot, w, fs);
    io.report({{"defined", v.has_value()}, {"value", v ? json(lp.plot.arrow(*v)) : json(nullptr)}});
    return kExitOk;
  };

  std::vector<const char*> argv{"plotkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    for (auto& [sub, run] : handlers)
      if (sub->parsed()) return run();
    err << "no command given\n";
    return kExitInputError;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    err << "error: invalid plot\n";
    for (const auto& v : e.violations()) err << "  " << to_string(v.kind) << ": " << v.detail << "\n";
  } catch (const PunctorError& e) {
    err << "error: invalid punctor\n";
    for (const auto& v : e.violations()) err << "  " << to_string(v.kind) << ": " << v.detail << "\n";
  } catch (const Overflow& e) {
    err << "search cap exceeded: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace plotkit
