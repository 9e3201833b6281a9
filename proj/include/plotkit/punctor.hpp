#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plotkit/plot.hpp"

namespace plotkit {

enum class PunctorViolationKind {
  NotTotal,
  EndpointMismatch,
  CompositionNotPreserved,
  UnknownId,
};

std::string_view to_string(PunctorViolationKind kind);

struct PunctorViolation {
  PunctorViolationKind kind;
  std::string detail;
};

class PunctorError : public Error {
 public:
  explicit PunctorError(std::vector<PunctorViolation> violations);
  const std::vector<PunctorViolation>& violations() const { return violations_; }

 private:
  std::vector<PunctorViolation> violations_;
};

class SourceTargetMismatch : public Error {
 public:
  using Error::Error;
};

class NotASubplot : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

struct Punctor {
  Plot source;
  Plot target;
  std::vector<Index> obj_map;    // source object -> target object
  std::vector<Index> arrow_map;  // source arrow -> target arrow

  Index operator()(Index f) const { return arrow_map[f]; }
  Index on_object(Index a) const { return obj_map[a]; }

  friend bool operator==(const Punctor&, const Punctor&) = default;
};

std::vector<PunctorViolation> punctor_violations(const Plot& source, const Plot& target,
                                                 const std::vector<Index>& obj_map,
                                                 const std::vector<Index>& arrow_map);

// Throws PunctorError.
Punctor make_punctor(const Plot& source, const Plot& target, std::vector<Index> obj_map,
                     std::vector<Index> arrow_map);
Punctor make_punctor(const Plot& source, const Plot& target,
                     const std::map<std::string, std::string>& obj_map,
                     const std::map<std::string, std::string>& arrow_map);

Punctor identity_punctor(const Plot& p);

// Local identities go to local identities.
bool is_functor(const Punctor& f);

// g after f.
Punctor compose_punctors(const Punctor& f, const Punctor& g);
Punctor dual_punctor(const Punctor& f);

Plot image(const Punctor& f, const Plot& sub_of_source);
Plot inverse_image(const Punctor& f, const Plot& sub_of_target);
Punctor restrict_punctor(const Punctor& f, const Plot& sub_of_source);
Punctor corestrict_punctor(const Punctor& f, const Plot& sub_of_target);

struct PunctorClassReport {
  bool is_unital = false;
  bool faithful = false;
  bool full = false;
  bool fully_faithful = false;
  bool injective_on_objects = false;
  bool surjective_on_objects = false;
  bool embedding = false;
  bool isomorphism = false;
  bool constant = false;
  bool coconstant = false;
  std::optional<bool> m_dense;
  std::optional<bool> m_equivalence;

  std::optional<Index> non_identity_preserved;               // object whose identity is lost
  std::optional<std::pair<Index, Index>> unfaithful_pair;    // parallel arrows, same image
  std::optional<std::pair<std::pair<Index, Index>, Index>> unfull_witness;  // (X,Y), missed arrow of Q
  std::optional<std::pair<Index, Index>> object_collision;
  std::optional<Index> undense_object;                       // object of Q
};

PunctorClassReport classify_punctor(const Punctor& f,
                                    const std::optional<std::vector<Index>>& m = std::nullopt);

struct ClassWitness {
  bool holds = true;
  std::optional<Index> witness;  // arrow of the source
};

struct PreservesReflects {
  ClassWitness preserves;
  ClassWitness reflects;
};

PreservesReflects preserves_reflects(const Punctor& f, const std::vector<Index>& m,
                                     const std::vector<Index>& n);

// Global enumeration cap: PLOTKIT_SEARCH_CAP, default 1e6.
std::size_t search_cap();

struct PunctorEnumeration {
  std::vector<Punctor> punctors;
  bool overflow = false;
};

// All punctors p -> q. Stops with overflow once the number of visited
// partial maps exceeds cap.
PunctorEnumeration enumerate_punctors(const Plot& p, const Plot& q,
                                      std::optional<std::size_t> cap = std::nullopt);

}  // namespace plotkit
