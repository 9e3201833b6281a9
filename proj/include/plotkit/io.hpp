#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "plotkit/constructions.hpp"
#include "plotkit/limits.hpp"
#include "plotkit/plot.hpp"
#include "plotkit/punctor.hpp"

namespace plotkit {

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Shape or reference problems in an otherwise well-formed document.
class DocumentError : public Error {
 public:
  using Error::Error;
};

using ClassMap = std::map<std::string, std::vector<std::string>>;

struct PlotDocument {
  RawPlot raw;
  ClassMap classes;
};

// Syntax and shape only; semantic validation is left to validate().
PlotDocument parse_document(std::string_view text);

struct LoadedPlot {
  Plot plot;
  ClassMap classes;
};

// Throws SyntaxError, DocumentError or ValidationError.
LoadedPlot parse_plot(std::string_view text);
std::string emit_plot(const Plot& p, const ClassMap& classes = {});

std::string read_file(const std::filesystem::path& path);
LoadedPlot load_plot(const std::filesystem::path& path);

// Source/target paths are relative to the document's directory.
struct LoadedPunctor {
  LoadedPlot source;
  LoadedPlot target;
  std::map<std::string, std::string> objects;
  std::map<std::string, std::string> arrows;
};

LoadedPunctor load_punctor_document(const std::filesystem::path& path);
Punctor load_punctor(const std::filesystem::path& path);
std::string emit_punctor(const Punctor& f, const std::string& source_path,
                         const std::string& target_path);

struct LoadedNt {
  Punctor from;
  Punctor to;
  std::map<std::string, std::string> components;
};

LoadedNt load_nt_document(const std::filesystem::path& path);

// A class name is either a named class of the document or a built-in arrow
// kind (all, mono, epi, ...) computed on `p`. Ids are looked up in `p`.
std::vector<Index> resolve_class(const Plot& p, const ClassMap& classes, const std::string& name);

}  // namespace plotkit
