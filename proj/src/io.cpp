#include "plotkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "plotkit/arrows.hpp"

namespace plotkit {

using nlohmann::json;

SyntaxError::SyntaxError(const std::string& what, std::size_t line, std::size_t column)
    : Error("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
            ": " + what),
      line_(line),
      column_(column) {}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points at the offending byte
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find("; "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw SyntaxError(msg, line, column);
  }
}

void allow_keys(const json& j, std::initializer_list<std::string_view> keys, const char* what) {
  if (!j.is_object()) throw DocumentError(std::string(what) + " must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (std::find(keys.begin(), keys.end(), k) == keys.end())
      throw DocumentError(std::string(what) + ": unexpected key '" + k + "'");
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw DocumentError(where + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> as_strings(const json& j, const std::string& where) {
  if (!j.is_array()) throw DocumentError(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(as_string(x, where + " entry"));
  return out;
}

std::map<std::string, std::string> as_string_map(const json& j, const std::string& where) {
  if (!j.is_object()) throw DocumentError(where + " must be an object of strings");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) out[k] = as_string(v, where + "." + k);
  return out;
}

std::filesystem::path sibling(const std::filesystem::path& doc, const std::string& rel) {
  std::filesystem::path p(rel);
  return p.is_absolute() ? p : doc.parent_path() / p;
}

}  // namespace

PlotDocument parse_document(std::string_view text) {
  json j = parse_json(text);
  allow_keys(j, {"objects", "arrows", "comp", "classes"}, "plot document");
  PlotDocument doc;
  if (!j.contains("objects")) throw DocumentError("plot document: missing 'objects'");
  doc.raw.objects = as_strings(j["objects"], "objects");
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) throw DocumentError("arrows must be an array");
    for (const auto& a : j["arrows"]) {
      allow_keys(a, {"id", "src", "tgt"}, "arrow");
      if (!a.contains("id") || !a.contains("src") || !a.contains("tgt"))
        throw DocumentError("arrow needs id, src and tgt");
      doc.raw.arrows.push_back({as_string(a["id"], "arrow id"), as_string(a["src"], "arrow src"),
                                as_string(a["tgt"], "arrow tgt")});
    }
  }
  if (j.contains("comp")) {
    if (!j["comp"].is_array()) throw DocumentError("comp must be an array");
    for (const auto& t : j["comp"]) {
      auto xs = as_strings(t, "comp triple");
      if (xs.size() != 3) throw DocumentError("comp triple must have exactly three ids");
      doc.raw.comp.push_back({xs[0], xs[1], xs[2]});
    }
  }
  if (j.contains("classes")) {
    if (!j["classes"].is_object()) throw DocumentError("classes must be an object");
    for (const auto& [k, v] : j["classes"].items()) doc.classes[k] = as_strings(v, "class " + k);
  }
  return doc;
}

LoadedPlot parse_plot(std::string_view text) {
  PlotDocument doc = parse_document(text);
  Plot p = make_plot(doc.raw);
  for (auto& [name, ids] : doc.classes) {
    for (const auto& id : ids)
      if (!p.find_arrow(id)) throw DocumentError("class '" + name + "' names unknown arrow '" + id + "'");
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  }
  return {p, doc.classes};
}

std::string emit_plot(const Plot& p, const ClassMap& classes) {
  RawPlot r = p.raw();
  json j;
  j["objects"] = r.objects;
  j["arrows"] = json::array();
  for (const auto& a : r.arrows) j["arrows"].push_back({{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}});
  j["comp"] = json::array();
  for (const auto& c : r.comp) j["comp"].push_back({c.f, c.g, c.h});
  if (!classes.empty()) {
    j["classes"] = json::object();
    for (const auto& [name, ids] : classes) {
      std::set<std::string> s(ids.begin(), ids.end());
      j["classes"][name] = std::vector<std::string>(s.begin(), s.end());
    }
  }
  return j.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LoadedPlot load_plot(const std::filesystem::path& path) { return parse_plot(read_file(path)); }

LoadedPunctor load_punctor_document(const std::filesystem::path& path) {
  json j = parse_json(read_file(path));
  allow_keys(j, {"source", "target", "objects", "arrows"}, "punctor document");
  if (!j.contains("source") || !j.contains("target"))
    throw DocumentError("punctor document needs 'source' and 'target'");
  LoadedPunctor out{load_plot(sibling(path, as_string(j["source"], "source"))),
                    load_plot(sibling(path, as_string(j["target"], "target"))),
                    {},
                    {}};
  if (j.contains("objects")) out.objects = as_string_map(j["objects"], "objects");
  if (j.contains("arrows")) out.arrows = as_string_map(j["arrows"], "arrows");
  return out;
}

Punctor load_punctor(const std::filesystem::path& path) {
  auto d = load_punctor_document(path);
  return make_punctor(d.source.plot, d.target.plot, d.objects, d.arrows);
}

std::string emit_punctor(const Punctor& f, const std::string& source_path,
                         const std::string& target_path) {
  json j;
  j["source"] = source_path;
  j["target"] = target_path;
  j["objects"] = json::object();
  j["arrows"] = json::object();
  for (Index a = 0; a < static_cast<Index>(f.obj_map.size()); ++a)
    j["objects"][f.source.object(a)] = f.target.object(f.obj_map[a]);
  for (Index x = 0; x < static_cast<Index>(f.arrow_map.size()); ++x)
    j["arrows"][f.source.arrow(x)] = f.target.arrow(f.arrow_map[x]);
  return j.dump(2) + "\n";
}

LoadedNt load_nt_document(const std::filesystem::path& path) {
  json j = parse_json(read_file(path));
  allow_keys(j, {"from", "to", "components"}, "natural transformation document");
  if (!j.contains("from") || !j.contains("to"))
    throw DocumentError("natural transformation document needs 'from' and 'to'");
  LoadedNt out{load_punctor(sibling(path, as_string(j["from"], "from"))),
               load_punctor(sibling(path, as_string(j["to"], "to"))),
               {}};
  if (j.contains("components")) out.components = as_string_map(j["components"], "components");
  return out;
}

std::vector<Index> resolve_class(const Plot& p, const ClassMap& classes, const std::string& name) {
  if (auto it = classes.find(name); it != classes.end()) {
    std::vector<Index> out;
    for (const auto& id : it->second) {
      auto f = p.find_arrow(id);
      if (!f) throw DocumentError("class '" + name + "' names unknown arrow '" + id + "'");
      out.push_back(*f);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  if (name == "none") return {};
  if (auto kind = parse_arrow_kind(name)) return arrow_class(p, *kind);
  throw DocumentError("unknown class '" + name + "'");
}

}  // namespace plotkit
