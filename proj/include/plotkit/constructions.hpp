#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plotkit/plot.hpp"
#include "plotkit/punctor.hpp"

namespace plotkit {

class NotUnital : public Error {
 public:
  using Error::Error;
};

class FactorMismatch : public Error {
 public:
  using Error::Error;
};

class NotParallel : public Error {
 public:
  using Error::Error;
};

class NotNatural : public Error {
 public:
  using Error::Error;
};

inline constexpr std::string_view kUnitMarker = "1@";

std::string unit_id(std::string_view marker, std::string_view object);

// Shortest marker "1@", "1@1@", ... that names no arrow of p.
std::string fresh_marker(const Plot& p);

// P-natural: a fresh absorbing loop at every object. Throws ValidationError
// on an id collision.
Plot force_unitize(const Plot& p, std::string_view marker = kUnitMarker);
// P-flat: fresh loops only at objects without a local identity.
Plot conditional_unitize(const Plot& p, std::string_view marker = kUnitMarker);
// Drops every local identity together with its comp rows and columns.
Plot deunitize(const Plot& p);

// P -> P-natural.
Punctor unitization_unit(const Plot& p, std::string_view marker = kUnitMarker);
// Q-natural -> Q for unital Q; fresh loops go to the identities of Q.
Punctor unitization_counit(const Plot& q, std::string_view marker = kUnitMarker);
// F-natural: P-natural -> Q-natural.
Punctor unitize_punctor(const Punctor& f, std::string_view source_marker,
                        std::string_view target_marker);

struct AdjunctionCheck {
  bool holds = true;
  std::string failing;  // the equation that failed
};

// Throws NotUnital unless q is unital.
AdjunctionCheck check_unitization_adjunction(const Plot& p, const Plot& q);

struct ProductResult {
  Plot plot;
  std::vector<Punctor> projections;
};

std::string tuple_id(const std::vector<std::string>& parts);

ProductResult product(const std::vector<Plot>& plots);
Punctor pair_into_product(const std::vector<Punctor>& fs);

struct CoproductResult {
  Plot plot;
  std::vector<Punctor> injections;
};

std::string tagged_id(std::string_view id, std::size_t index);

CoproductResult coproduct(const std::vector<Plot>& plots);
Punctor copair_from_coproduct(const std::vector<Punctor>& fs);

// zeta: partial map I x I -> I.
Plot augment(const Plot& p, const std::vector<std::string>& index_set,
             const std::map<std::pair<std::string, std::string>, std::string>& zeta);

struct NaturalTransformation {
  Punctor from;
  Punctor to;
  Plot target_flat;               // conditional unitization of the common target
  std::vector<Index> components;  // per source object, arrows of target_flat

  friend bool operator==(const NaturalTransformation&, const NaturalTransformation&) = default;
};

std::vector<std::string> nt_violations(const Punctor& from, const Punctor& to,
                                       const Plot& target_flat,
                                       const std::vector<Index>& components);

// Throws NotParallel or NotNatural.
NaturalTransformation make_nt(const Punctor& from, const Punctor& to,
                              const std::vector<Index>& components);
NaturalTransformation make_nt(const Punctor& from, const Punctor& to,
                              const std::map<std::string, std::string>& components);
NaturalTransformation identity_nt(const Punctor& f);

// Vertical composite; nullopt when some component pair is not composable or
// the composite is not natural.
std::optional<NaturalTransformation> compose_nt(const NaturalTransformation& e,
                                                const NaturalTransformation& h);

// All natural transformations from -> to.
std::vector<NaturalTransformation> enumerate_nts(const Punctor& from, const Punctor& to,
                                                 std::optional<std::size_t> cap = std::nullopt);

struct PunctorPlot {
  Plot plot;  // objects "F0", "F1", ...; arrows "F0=>F1#k"
  std::vector<Punctor> punctors;
  std::vector<NaturalTransformation> transformations;  // indexed like plot's arrows
};

// Throws Overflow when enumeration exceeds the search cap.
PunctorPlot punctor_plot(const Plot& p, const Plot& q,
                         const std::optional<std::vector<Punctor>>& punctors = std::nullopt,
                         std::optional<std::size_t> cap = std::nullopt);

}  // namespace plotkit
