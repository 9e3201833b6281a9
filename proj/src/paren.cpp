#include "plotkit/paren.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace plotkit {

namespace {

constexpr std::string_view kBullet = "\xE2\x80\xA2";  // U+2022

// End of the subtree whose preorder code starts at pos.
std::size_t subtree_end(const std::vector<std::uint8_t>& code, std::size_t pos) {
  long need = 1;
  while (need > 0) {
    need += code[pos] == 1 ? 1 : -1;
    ++pos;
  }
  return pos;
}

}  // namespace

Paren Paren::node(const Paren& left, const Paren& right) {
  std::vector<std::uint8_t> code;
  code.reserve(1 + left.code_.size() + right.code_.size());
  code.push_back(1);
  code.insert(code.end(), left.code_.begin(), left.code_.end());
  code.insert(code.end(), right.code_.begin(), right.code_.end());
  return Paren(std::move(code));
}

std::size_t Paren::length() const {
  return static_cast<std::size_t>(std::count(code_.begin(), code_.end(), 0));
}

std::pair<Paren, Paren> Paren::split() const {
  if (is_leaf()) throw ArityMismatch("a leaf has no splitting");
  std::size_t mid = subtree_end(code_, 1);
  return {Paren({code_.begin() + 1, code_.begin() + mid}),
          Paren({code_.begin() + mid, code_.end()})};
}

std::string Paren::to_string() const {
  // Preorder with explicit closing: a node closes after its second child.
  std::string out;
  std::vector<int> pending;  // children still to emit per open node
  for (auto c : code_) {
    if (c == 1) {
      out += '(';
      pending.push_back(2);
      continue;
    }
    out += kBullet;
    while (!pending.empty() && --pending.back() == 0) {
      pending.pop_back();
      out += ')';
    }
  }
  return out;
}

Paren Paren::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> ParenSyntaxError {
    return ParenSyntaxError("paren syntax error at byte " + std::to_string(pos) + ": " + what);
  };
  // tree := bullet | '(' tree tree ')'
  auto rec = [&](auto&& self) -> Paren {
    if (text.substr(pos, kBullet.size()) == kBullet) {
      pos += kBullet.size();
      return Paren::leaf();
    }
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      Paren l = self(self);
      Paren r = self(self);
      if (pos >= text.size() || text[pos] != ')') throw fail("expected ')'");
      ++pos;
      return Paren::node(l, r);
    }
    throw fail("expected '(' or bullet");
  };
  Paren out = rec(rec);
  if (pos != text.size()) throw fail("trailing input");
  return out;
}

std::vector<Paren> enumerate_parens(std::size_t n) {
  if (n == 0) throw ArityMismatch("ZeroLength: parenthesizations have length >= 1");
  static std::mutex mu;
  static std::map<std::size_t, std::vector<Paren>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  std::vector<Paren> out;
  if (n == 1) {
    out.push_back(Paren::leaf());
  } else {
    for (std::size_t k = 1; k < n; ++k) {
      auto lefts = enumerate_parens(k);
      auto rights = enumerate_parens(n - k);
      for (const auto& l : lefts)
        for (const auto& r : rights) out.push_back(Paren::node(l, r));
    }
  }
  std::lock_guard lock(mu);
  memo.emplace(n, out);
  return out;
}

Paren substitute(const Paren& wp, std::span<const Paren> inner) {
  if (inner.size() != wp.length())
    throw ArityMismatch("substitute: " + std::to_string(inner.size()) + " inner trees for length " +
                        std::to_string(wp.length()));
  if (wp.is_leaf()) return inner[0];
  auto [l, r] = wp.split();
  return Paren::node(substitute(l, inner.first(l.length())), substitute(r, inner.subspan(l.length())));
}

std::optional<Index> eval_paren(const Plot& p, const Paren& wp, std::span<const Index> fs) {
  if (fs.size() != wp.length())
    throw ArityMismatch("eval: " + std::to_string(fs.size()) + " arrows for length " +
                        std::to_string(wp.length()));
  for (Index f : fs) p.check_arrow(f);
  auto rec = [&](auto&& self, const Paren& t, std::span<const Index> xs) -> std::optional<Index> {
    if (t.is_leaf()) return xs[0];
    auto [l, r] = t.split();
    auto a = self(self, l, xs.first(l.length()));
    if (!a) return std::nullopt;
    auto b = self(self, r, xs.subspan(l.length()));
    if (!b) return std::nullopt;
    Index h = p.comp(*a, *b);
    if (h == kNone) return std::nullopt;
    return h;
  };
  return rec(rec, wp, fs);
}

std::vector<Index> class_product(const Plot& p, std::span<const std::vector<Index>> classes,
                                 const Paren& wp) {
  if (classes.size() != wp.length())
    throw ArityMismatch("LengthMismatch: " + std::to_string(classes.size()) +
                        " classes for length " + std::to_string(wp.length()));
  // Evaluation is compositional, so the set of values splits along the tree.
  auto rec = [&](auto&& self, const Paren& t,
                 std::span<const std::vector<Index>> cs) -> std::vector<Index> {
    if (t.is_leaf()) {
      std::set<Index> s(cs[0].begin(), cs[0].end());
      for (Index f : s) p.check_arrow(f);
      return {s.begin(), s.end()};
    }
    auto [l, r] = t.split();
    auto a = self(self, l, cs.first(l.length()));
    auto b = self(self, r, cs.subspan(l.length()));
    std::set<Index> s;
    for (Index x : a)
      for (Index y : b)
        if (Index h = p.comp(x, y); h != kNone) s.insert(h);
    return {s.begin(), s.end()};
  };
  return rec(rec, wp, classes);
}

}  // namespace plotkit
