#include <algorithm>

#include "plotkit/plot.hpp"

namespace plotkit {

namespace {

// The composition law, optionally read through the opposite operation
// op(x,y) = c(y,x). Right-handed laws are the left-handed laws of op.
struct Op {
  const Plot& p;
  bool flip;

  Index operator()(Index x, Index y) const {
    if (x == kNone || y == kNone) return kNone;
    return flip ? p.comp(y, x) : p.comp(x, y);
  }

  // All y with op(x,y) defined.
  std::vector<Index> after(Index x) const {
    std::vector<Index> out;
    if (flip) {
      for (Index y : p.in_arrows(p.src(x)))
        if (p.composable(y, x)) out.push_back(y);
    } else {
      for (Index y : p.out_arrows(p.tgt(x)))
        if (p.composable(x, y)) out.push_back(y);
    }
    return out;
  }

  ArrowTriple original(Index x, Index y, Index z) const {
    return flip ? ArrowTriple{z, y, x} : ArrowTriple{x, y, z};
  }
};

std::optional<ArrowTriple> left_pre_violation(const Op& op) {
  const auto n = static_cast<Index>(op.p.num_arrows());
  for (Index x = 0; x < n; ++x)
    for (Index y : op.after(x))
      for (Index z : op.after(y)) {
        Index lhs = op(op(x, y), z);
        if (lhs == kNone) continue;
        if (op(x, op(y, z)) != lhs) return op.original(x, y, z);
      }
  return std::nullopt;
}

std::optional<ArrowTriple> left_dis_violation(const Op& op) {
  const auto n = static_cast<Index>(op.p.num_arrows());
  for (Index x = 0; x < n; ++x)
    for (Index y : op.after(x)) {
      Index xy = op(x, y);
      for (Index z : op.after(xy)) {
        Index lhs = op(xy, z);
        Index yz = op(y, z);
        if (yz == kNone || op(x, yz) != lhs) return op.original(x, y, z);
      }
    }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Law law) {
  switch (law) {
    case Law::LeftPreAssociative: return "left_pre_associative";
    case Law::RightPreAssociative: return "right_pre_associative";
    case Law::PreAssociative: return "pre_associative";
    case Law::StronglyAssociative: return "strongly_associative";
    case Law::Associative: return "associative";
    case Law::LeftDissociative: return "left_dissociative";
    case Law::RightDissociative: return "right_dissociative";
    case Law::Dissociative: return "dissociative";
  }
  return "?";
}

Law mirror(Law law) {
  switch (law) {
    case Law::LeftPreAssociative: return Law::RightPreAssociative;
    case Law::RightPreAssociative: return Law::LeftPreAssociative;
    case Law::LeftDissociative: return Law::RightDissociative;
    case Law::RightDissociative: return Law::LeftDissociative;
    default: return law;
  }
}

bool AssociativityProfile::holds(Law law) const {
  switch (law) {
    case Law::LeftPreAssociative: return left_pre_associative;
    case Law::RightPreAssociative: return right_pre_associative;
    case Law::PreAssociative: return pre_associative;
    case Law::StronglyAssociative: return strongly_associative;
    case Law::Associative: return associative;
    case Law::LeftDissociative: return left_dissociative;
    case Law::RightDissociative: return right_dissociative;
    case Law::Dissociative: return dissociative;
  }
  return false;
}

AssociativityProfile associativity_profile(const Plot& p) {
  AssociativityProfile r;
  auto set = [&](Law law, bool& flag, std::optional<ArrowTriple> w) {
    flag = !w.has_value();
    r.witnesses[static_cast<std::size_t>(law)] = w;
  };
  const Op op{p, false};
  const Op co{p, true};

  auto lpre = left_pre_violation(op);
  auto rpre = left_pre_violation(co);
  set(Law::LeftPreAssociative, r.left_pre_associative, lpre);
  set(Law::RightPreAssociative, r.right_pre_associative, rpre);
  set(Law::PreAssociative, r.pre_associative, lpre ? lpre : rpre);

  std::optional<ArrowTriple> strong = lpre ? lpre : rpre;
  std::optional<ArrowTriple> assoc;
  const auto n = static_cast<Index>(p.num_arrows());
  for (Index x = 0; x < n && !(strong && assoc); ++x)
    for (Index y : op.after(x))
      for (Index z : op.after(y)) {
        Index lhs = op(op(x, y), z);
        Index rhs = op(x, op(y, z));
        if (!strong && lhs == kNone) strong = ArrowTriple{x, y, z};
        if (!assoc && lhs != kNone && rhs != kNone && lhs != rhs) assoc = ArrowTriple{x, y, z};
      }
  set(Law::StronglyAssociative, r.strongly_associative, strong);
  set(Law::Associative, r.associative, assoc);

  auto ldis = left_dis_violation(op);
  auto rdis = left_dis_violation(co);
  set(Law::LeftDissociative, r.left_dissociative, ldis);
  set(Law::RightDissociative, r.right_dissociative, rdis);
  set(Law::Dissociative, r.dissociative, ldis ? ldis : rdis);
  return r;
}

ClassificationReport classify(const Plot& p) {
  ClassificationReport r;
  const auto no = static_cast<Index>(p.num_objects());
  const auto na = static_cast<Index>(p.num_arrows());

  auto dom = p.comp_domain();
  if (!dom.empty()) {
    r.is_quiver = false;
    r.composable_pair = dom.front();
  }

  for (Index a = 0; a < no && !r.parallel_pair; ++a) {
    const auto& out = p.out_arrows(a);
    for (std::size_t i = 0; i < out.size() && !r.parallel_pair; ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (p.tgt(out[i]) == p.tgt(out[j])) {
          r.parallel_pair = std::make_pair(out[i], out[j]);
          break;
        }
  }
  r.is_monic_posetal = !r.parallel_pair;

  for (Index a = 0; a < no; ++a)
    if (p.out_arrows(a).empty() && p.in_arrows(a).empty()) {
      r.isolated_object = a;
      break;
    }
  r.is_epic = !r.isolated_object;

  for (Index a = 0; a < no; ++a) {
    if (p.identity(a) != kNone) {
      r.unital_objects.push_back(a);
      r.identity_map.emplace_back(a, p.identity(a));
    } else if (!r.non_unital_object) {
      r.non_unital_object = a;
    }
  }
  r.is_unital = !r.non_unital_object;

  for (Index f = 0; f < na && !r.missing_pair; ++f)
    for (Index g : p.out_arrows(p.tgt(f)))
      if (!p.composable(f, g)) {
        r.missing_pair = std::make_pair(f, g);
        break;
      }
  r.is_saturated = !r.missing_pair;

  r.profile = associativity_profile(p);
  r.is_magmoid = r.is_saturated;
  r.is_semigroupoid = r.profile.pre_associative;
  r.is_semicategory = r.is_saturated && r.profile.pre_associative;
  r.is_category = r.is_semicategory && r.is_unital;
  return r;
}

}  // namespace plotkit
