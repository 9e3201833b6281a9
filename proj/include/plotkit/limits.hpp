#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plotkit/connections.hpp"
#include "plotkit/plot.hpp"
#include "plotkit/punctor.hpp"

namespace plotkit {

class InvalidDiagram : public Error {
 public:
  using Error::Error;
};

class InvalidCone : public Error {
 public:
  using Error::Error;
};

struct Diagram {
  Punctor functor;  // shape -> into; the shape is a quiver
  Plot flat;        // conditional unitization of `into`, where cones live

  const Plot& shape() const { return functor.source; }
  const Plot& into() const { return functor.target; }
  Index flat_image(Index shape_arrow) const;
};

Diagram make_diagram(const Punctor& d);  // throws InvalidDiagram
Diagram dual_diagram(const Diagram& d);

// Apex is an object of into() (same index in flat); legs are arrows of flat,
// one per shape object. For cocones the legs point into the apex.
struct Cone {
  Index apex = kNone;
  std::vector<Index> legs;
  friend bool operator==(const Cone&, const Cone&) = default;
};

std::optional<std::string> cone_violation(const Diagram& d, const Cone& c);
bool check_cone(const Diagram& d, const Cone& c);
std::vector<Cone> enumerate_cones(const Diagram& d, std::optional<std::size_t> cap = std::nullopt);

enum class LimitLabel { Strong, WeakOnly, SublimitOnly, None, Inconclusive };
std::string_view to_string(LimitLabel label);

struct Competitor {
  Cone cone;
  std::optional<std::size_t> min_length;  // length of the shortest mediators
  std::size_t count = 0;                  // mediators of that length
  bool none_exist = false;                // proven: no mediator of any length
  std::optional<MFactorization> witness;
};

struct LimitReport {
  LimitLabel label = LimitLabel::Inconclusive;
  std::optional<bool> weak;
  std::optional<bool> sub;
  std::vector<Competitor> competitors;
};

// m: arrows of d.flat usable in mediating factorizations.
LimitReport classify_limit(const Diagram& d, const Cone& limit, const std::vector<Index>& m,
                           std::size_t max_len);
LimitReport classify_colimit(const Diagram& d, const Cone& colimit, const std::vector<Index>& m,
                             std::size_t max_len);

}  // namespace plotkit
