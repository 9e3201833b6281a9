#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plotkit/plot.hpp"

namespace plotkit {

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class ParenSyntaxError : public Error {
 public:
  using Error::Error;
};

// A full binary tree. Stored as its preorder shape: 1 for an internal node,
// 0 for a leaf.
class Paren {
 public:
  Paren() : code_{0} {}

  static Paren leaf() { return Paren(); }
  static Paren node(const Paren& left, const Paren& right);

  bool is_leaf() const { return code_.size() == 1; }
  std::size_t length() const;  // number of leaves
  std::pair<Paren, Paren> split() const;

  // Leaf is "•", Node(l,r) is "(" l r ")".
  std::string to_string() const;
  static Paren parse(std::string_view text);

  friend bool operator==(const Paren&, const Paren&) = default;
  friend auto operator<=>(const Paren&, const Paren&) = default;

 private:
  explicit Paren(std::vector<std::uint8_t> code) : code_(std::move(code)) {}
  std::vector<std::uint8_t> code_;
};

// All trees with n leaves: left-split length ascending, then recursive.
std::vector<Paren> enumerate_parens(std::size_t n);

Paren substitute(const Paren& wp, std::span<const Paren> inner);

// Undefined is std::nullopt.
std::optional<Index> eval_paren(const Plot& p, const Paren& wp, std::span<const Index> fs);

// All defined evaluations of wp on tuples drawn from the classes.
std::vector<Index> class_product(const Plot& p, std::span<const std::vector<Index>> classes,
                                 const Paren& wp);

}  // namespace plotkit
