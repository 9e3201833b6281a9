#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "plotkit/plot.hpp"

namespace plotkit {

class NotEndomorphism : public Error {
 public:
  using Error::Error;
};

struct ArrowClass {
  bool monic = false;
  bool epic = false;
  bool cancellative = false;
  bool left_split = false;
  bool right_split = false;
  bool split = false;
  bool left_invertible = false;
  bool right_invertible = false;
  bool invertible = false;
  bool strongly_invertible = false;
  bool left_iso = false;
  bool right_iso = false;
  bool iso = false;
  bool automorphism = false;
  bool left_neutral = false;
  bool right_neutral = false;
  bool neutral = false;
  bool left_identity = false;
  bool right_identity = false;
  bool local_identity = false;
  bool constant = false;
  bool coconstant = false;
  bool opaque = false;
  bool transparent = false;
  bool singular = false;
  bool regular = false;
  bool endomorphism = false;

  std::vector<Index> left_inverses;
  std::vector<Index> right_inverses;
  std::optional<Index> strong_inverse;

  // Name/value pairs in a fixed order, for reports.
  std::vector<std::pair<std::string_view, bool>> flags() const;
};

// The flag that f has in dual(P) when it has `name` in P.
std::string_view mirror_flag(std::string_view name);

struct ArrowClassReport {
  std::vector<ArrowClass> arrows;  // indexed like the plot's arrows
};

ArrowClass classify_arrow(const Plot& p, Index f);
ArrowClassReport classify_arrows(const Plot& p);

struct Inverses {
  std::vector<Index> left;
  std::vector<Index> right;
  std::optional<Index> strong;
};

Inverses inverses(const Plot& p, Index f);

enum class ArrowKind {
  All,
  Mono,
  Epi,
  Canc,
  Lspl,
  Rspl,
  Spl,
  Linv,
  Rinv,
  Inv,
  Liso,
  Riso,
  Iso,
  Opa,
  Sng,
  End,
};

std::optional<ArrowKind> parse_arrow_kind(std::string_view name);
std::string_view to_string(ArrowKind kind);
std::vector<Index> arrow_class(const Plot& p, ArrowKind kind);

// restrict_to_relation(P, S x S) for the class S.
Plot derived_arrow_plot(const Plot& p, ArrowKind kind);

struct Order {
  std::size_t index = 0;
  std::size_t period = 0;
  std::size_t order = 0;
  bool idempotent() const { return index == 1 && period == 1; }
};

// nullopt: not periodic within the bounds. Bounds default to |arrows| + 1.
std::optional<Order> order_of(const Plot& p, Index f, std::optional<std::size_t> max_n = {},
                              std::optional<std::size_t> max_p = {});

// Values of all parenthesized powers f^k, k = 1..n (entry k-1).
std::vector<std::vector<Index>> power_values(const Plot& p, Index f, std::size_t n);

}  // namespace plotkit
