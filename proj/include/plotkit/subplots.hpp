#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plotkit/plot.hpp"

namespace plotkit {

struct SubplotCheck {
  bool is_subplot = false;
  std::string reason;  // first failing clause when is_subplot is false
  bool is_wide = false;
  bool is_full = false;
  bool is_identitive = false;
  bool is_proper = false;
};

SubplotCheck is_subplot(const Plot& q, const Plot& p);

// Subplot with the given arrows, the given objects plus all endpoints, and
// every comp triple of p lying inside the arrow set.
Plot relative_subplot(const Plot& p, const std::vector<Index>& objects,
                      const std::vector<Index>& arrows);

enum class GenerationMode { Smallest, Identitive, Relative };

// Ids not present in p are ignored.
Plot generated_subplot(const Plot& p, const std::vector<std::string>& objects,
                       const std::vector<std::string>& arrows, GenerationMode mode);
Plot generated_subplot(const Plot& p, const std::vector<Index>& objects,
                       const std::vector<Index>& arrows, GenerationMode mode);

// Closure of arrows under composition.
std::vector<Index> compositive_closure(const Plot& p, std::vector<Index> arrows);

enum class DerivedKind { Hom, Obj, Wide, Full };

// hom: generated by (endpoints of C, C); obj: by (C, homs between C);
// wide: by (obj(P), C); full: the full subplot on the objects C.
Plot derived_subplot(const Plot& p, DerivedKind kind, const std::vector<std::string>& ids,
                     bool identitive);

Plot restrict_to_relation(const Plot& p, const std::vector<std::pair<Index, Index>>& relation);
Plot restrict_to_class(const Plot& p, const std::vector<Index>& cls);  // cls x cls

struct CompositiveCheck {
  bool compositive = true;
  std::optional<std::pair<Index, Index>> witness;
};

CompositiveCheck is_compositive(const Plot& p, const std::vector<Index>& m);

Plot underlying_quiver(const Plot& p);

struct GraphEdge {
  std::string arrow;
  std::vector<std::string> ends;  // sorted, one entry for a loop
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

std::vector<GraphEdge> underlying_graph(const Plot& p);

}  // namespace plotkit
