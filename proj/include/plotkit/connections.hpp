#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plotkit/paren.hpp"
#include "plotkit/plot.hpp"
#include "plotkit/punctor.hpp"

namespace plotkit {

struct Contiguity {
  bool left = false;
  bool right = false;
  bool either = false;
};

// left: s f = s g or t f = s g. right: the same read in the dual.
Contiguity contiguous(const Plot& p, Index f, Index g);

// The recursive, permutation-based definition, verbatim. Exponential; meant
// for short sequences.
bool is_m_connection(const Plot& p, const std::vector<Index>& m, const std::vector<Index>& seq);

// Joined by a walk of length >= 1 through arrows of m, ignoring direction.
bool m_connected(const Plot& p, const std::vector<Index>& m, Index a, Index b);
bool m_equivalent(const Plot& p, const std::vector<Index>& m, Index a, Index b);

struct Components {
  std::vector<std::vector<Index>> classes;  // objects, each class sorted; classes by least member
  std::vector<Plot> subplots;               // full subplot on each class
};

Components m_components(const Plot& p, const std::vector<Index>& m);

struct MFactorization {
  std::vector<Index> path;
  Paren wp;
  friend bool operator==(const MFactorization&, const MFactorization&) = default;
};

std::string to_string(const Plot& p, const MFactorization& phi);

enum class Verdict { True, False, Inconclusive };
std::string_view to_string(Verdict v);

struct MorphicResult {
  Verdict verdict = Verdict::False;
  std::optional<MFactorization> witness;
};

MorphicResult m_morphic(const Plot& p, const std::vector<Index>& m, Index a, Index b,
                        std::size_t max_len);

// All M-paths from a to b (or from a anywhere when b is kNone) of exactly the given length.
std::vector<std::vector<Index>> m_paths(const Plot& p, const std::vector<Index>& m, Index a,
                                        Index b, std::size_t length);

Plot bounded_path_plot(const Plot& p, const std::vector<Index>& m, std::size_t max_len);

struct FactPlot {
  Plot plot;
  std::vector<MFactorization> factorizations;  // indexed like plot's arrows
};

FactPlot bounded_fact_plot(const Plot& p, const std::vector<Index>& m, std::size_t max_len);
Punctor evaluation_punctor(const Plot& p, const std::vector<Index>& m, std::size_t max_len);

Plot skeleton(const Plot& p, const std::vector<Index>& m);
bool is_m_skeletal(const Plot& p, const std::vector<Index>& m);

}  // namespace plotkit
