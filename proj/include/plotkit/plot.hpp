#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plotkit {

// Objects and arrows are addressed by their position in the sorted id list.
using Index = int;
inline constexpr Index kNone = -1;

struct ArrowSpec {
  std::string id;
  std::string src;
  std::string tgt;
  friend bool operator==(const ArrowSpec&, const ArrowSpec&) = default;
};

struct CompSpec {
  std::string f;
  std::string g;
  std::string h;
  friend bool operator==(const CompSpec&, const CompSpec&) = default;
};

struct RawPlot {
  std::vector<std::string> objects;
  std::vector<ArrowSpec> arrows;
  std::vector<CompSpec> comp;
  friend bool operator==(const RawPlot&, const RawPlot&) = default;
};

enum class ViolationKind {
  DanglingEndpoint,
  CompOutsidePullback,
  CompEndpointMismatch,
  DuplicateId,
  UnknownArrow,
  ConflictingComp,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

class UnknownObject : public Error {
 public:
  using Error::Error;
};

class UnknownArrow : public Error {
 public:
  using Error::Error;
};

class Plot {
 public:
  Plot();  // the empty quiver

  std::size_t num_objects() const;
  std::size_t num_arrows() const;

  const std::string& object(Index a) const;
  const std::string& arrow(Index f) const;
  Index src(Index f) const;
  Index tgt(Index f) const;

  // kNone when (f,g) is not in the domain of composition.
  Index comp(Index f, Index g) const;
  bool composable(Index f, Index g) const { return comp(f, g) != kNone; }
  std::size_t comp_size() const;
  std::vector<std::pair<Index, Index>> comp_domain() const;

  // Local identity at a (kNone if a is not unital).
  Index identity(Index a) const;
  bool is_unital_object(Index a) const { return identity(a) != kNone; }

  const std::vector<Index>& out_arrows(Index a) const;  // hom(a,-)
  const std::vector<Index>& in_arrows(Index a) const;   // hom(-,a)

  std::optional<Index> find_object(std::string_view id) const;
  std::optional<Index> find_arrow(std::string_view id) const;
  Index object_index(std::string_view id) const;  // throws UnknownObject
  Index arrow_index(std::string_view id) const;   // throws UnknownArrow

  void check_object(Index a) const;
  void check_arrow(Index f) const;

  RawPlot raw() const;

  friend bool operator==(const Plot& a, const Plot& b);


  struct Data;  // defined in plot.cpp

 private:
  explicit Plot(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;

  friend struct PlotAccess;
};

struct ValidationReport {
  std::optional<Plot> plot;
  std::vector<Violation> violations;
  bool ok() const { return plot.has_value(); }
};

ValidationReport validate(const RawPlot& raw);
Plot make_plot(const RawPlot& raw);  // throws ValidationError

// Per-object local identity, kNone where there is none.
std::vector<Index> compute_identities(const Plot& p);

enum class Law {
  LeftPreAssociative,
  RightPreAssociative,
  PreAssociative,
  StronglyAssociative,
  Associative,
  LeftDissociative,
  RightDissociative,
  Dissociative,
};
inline constexpr std::size_t kNumLaws = 8;
std::string_view to_string(Law law);
Law mirror(Law law);

struct ArrowTriple {
  Index x = kNone;
  Index y = kNone;
  Index z = kNone;
  friend bool operator==(const ArrowTriple&, const ArrowTriple&) = default;
};

struct AssociativityProfile {
  bool left_pre_associative = true;
  bool right_pre_associative = true;
  bool pre_associative = true;
  bool strongly_associative = true;
  bool associative = true;
  bool left_dissociative = true;
  bool right_dissociative = true;
  bool dissociative = true;
  std::array<std::optional<ArrowTriple>, kNumLaws> witnesses{};

  bool holds(Law law) const;
  const std::optional<ArrowTriple>& witness(Law law) const {
    return witnesses[static_cast<std::size_t>(law)];
  }
};

AssociativityProfile associativity_profile(const Plot& p);

struct ClassificationReport {
  bool is_quiver = true;
  bool is_monic_posetal = true;
  bool is_epic = true;
  bool is_unital = true;
  bool is_saturated = true;
  bool is_magmoid = true;
  bool is_semigroupoid = true;
  bool is_semicategory = true;
  bool is_category = true;
  AssociativityProfile profile;
  std::vector<Index> unital_objects;
  std::vector<std::pair<Index, Index>> identity_map;  // (object, arrow)

  std::optional<std::pair<Index, Index>> composable_pair;  // is_quiver false
  std::optional<std::pair<Index, Index>> parallel_pair;    // is_monic_posetal false
  std::optional<Index> isolated_object;                    // is_epic false
  std::optional<Index> non_unital_object;                  // is_unital false
  std::optional<std::pair<Index, Index>> missing_pair;     // is_saturated false
};

ClassificationReport classify(const Plot& p);

Plot dual(const Plot& p);

std::vector<Index> hom(const Plot& p, std::optional<Index> source,
                       std::optional<Index> target);
// {g in hom(-,src f) : (g,f) composable}
std::vector<Index> hom_into_composable(const Plot& p, Index f);
// {g in hom(tgt f,-) : (f,g) composable}
std::vector<Index> hom_from_composable(const Plot& p, Index f);

enum class Side { Left, Right };

struct Representation {
  std::vector<Index> domain;
  std::vector<Index> values;  // values[i] is the image of domain[i]
  std::vector<Index> codomain;

  bool injective() const;
  bool surjective() const;
  bool constant() const;
  std::optional<Index> at(Index g) const;
};

// Right: g |-> g.f on hom(-, src f restricted to f). Left: g |-> f.g.
Representation regular_representation(const Plot& p, Index f, Side side);

struct Degree {
  std::size_t in = 0;
  std::size_t out = 0;
  std::size_t total = 0;
  friend bool operator==(const Degree&, const Degree&) = default;
};

Degree degree(const Plot& p, Index a);

// Helpers for string-facing callers.
std::vector<Index> arrow_indices(const Plot& p, const std::vector<std::string>& ids);
std::vector<std::string> arrow_ids(const Plot& p, const std::vector<Index>& fs);

}  // namespace plotkit
