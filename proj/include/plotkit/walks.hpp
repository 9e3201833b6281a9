#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "plotkit/paren.hpp"
#include "plotkit/plot.hpp"

namespace plotkit {

// For a path f1..fn: value -> number of parenthesizations evaluating to it.
std::map<Index, std::size_t> evaluation_counts(const Plot& p, const std::vector<Index>& path);

// Some parenthesization of the path evaluating to v (the first in canonical order).
std::optional<Paren> paren_with_value(const Plot& p, const std::vector<Index>& path, Index v);

// Longest M-path length from a to b: 0 when there is none, nullopt when
// arbitrarily long ones exist.
std::optional<std::size_t> longest_m_path(const Plot& p, const std::vector<Index>& m, Index a,
                                          Index b);

}  // namespace plotkit
