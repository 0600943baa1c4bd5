// Copyright 2026 The framepath Authors
// SPDX-License-Identifier: Apache-2.0
//
// Finitely presented sequences in the path space and the two-condition
// convergence criterion of the patch topology, decided symbolically:
//   (i)  every finite prefix of the limit is eventually matched exactly;
//   (ii) past a finite limit, the continuation edge eventually escapes any
//        finite set.
// A sampled window can certify neither condition, so it reports unknown.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "framepath/errors.hpp"
#include "framepath/graph.hpp"

namespace framepath {

// All terms equal `tail` from `from_index` on.
struct EventuallyConstant {
  PathPoint tail;
  std::size_t from_index = 0;
};

// Terms prefix . bundle[start + step*n] (. continuation); the indices are
// strictly increasing, which is what lets the tail escape every finite set.
struct BundleEscape {
  Path prefix;
  std::uint32_t bundle = 0;
  std::uint32_t start = 0;
  std::uint32_t step = 1;
  std::optional<Path> continuation;
};

// A finite observation window; says nothing about the tail.
struct Sampled {
  std::vector<PathPoint> terms;
  std::size_t horizon = 0;
};

using SequencePresentation =
    std::variant<EventuallyConstant, BundleEscape, Sampled>;

enum class Verdict { kYes, kNo, kUnknown };
enum class FailedCondition { kNone, kPrefixCondition, kEscapeCondition };

struct ConvergenceResult {
  Verdict verdict = Verdict::kUnknown;
  FailedCondition failed = FailedCondition::kNone;
  std::size_t horizon = 0;         // meaningful for unknown
  bool window_consistent = false;  // diagnostic for sampled windows
};

namespace detail {

inline ConvergenceResult yes() {
  return {Verdict::kYes, FailedCondition::kNone, 0, true};
}
inline ConvergenceResult no(FailedCondition which) {
  return {Verdict::kNo, which, 0, false};
}

// Does x agree with `word` on the first min-length positions, and is it a
// prefix of it as a word?
inline bool is_word_prefix(const Graph& g, const PathPoint& shorter,
                           const PathPoint& longer) {
  if (shorter.range() != longer.range()) return false;
  const auto sl = shorter.length();
  if (!sl) return false;
  if (auto ll = longer.length(); ll && *ll < *sl) return false;
  for (std::size_t i = 0; i < *sl; ++i)
    if (!(shorter.edge_at(i) == longer.edge_at(i))) return false;
  return true;
}

inline ConvergenceResult eventually_constant(const Graph& g,
                                             const EventuallyConstant& seq,
                                             const PathPoint& x) {
  if (point_equal(g, seq.tail, x)) return yes();
  // Not the limit; name the condition that fails.  A constant tail that
  // properly extends a finite x pins the continuation edge, breaking (ii);
  // every other mismatch already breaks a prefix requirement of (i).
  if (!x.infinite()) {
    const PathPoint& tail = seq.tail;
    const bool extends = is_word_prefix(g, x, tail) &&
                         (tail.infinite() || *tail.length() > *x.length());
    if (extends) return no(FailedCondition::kEscapeCondition);
  }
  return no(FailedCondition::kPrefixCondition);
}

inline ConvergenceResult bundle_escape(const Graph& g, const BundleEscape& seq,
                                       const PathPoint& x) {
  if (seq.step == 0)
    throw DomainError("bundle escape indices must be strictly increasing");
  if (seq.bundle >= g.bundle_count())
    throw DomainError("bundle escape over unknown bundle");
  const auto& b = g.bundle(seq.bundle);
  if (b.r != seq.prefix.domain(g))
    throw DomainError("bundle does not continue the escape prefix");
  if (seq.continuation && seq.continuation->range() != b.d)
    throw DomainError("continuation does not follow the bundle");

  // (i) forces the limit to be a finite prefix of `prefix`: from position
  // |prefix|+1 on, the terms never stabilize.  (ii) then holds only at the
  // full prefix, where the escaping bundle member leaves every finite set.
  if (!x.infinite() && *x.length() == seq.prefix.length()) {
    if (is_word_prefix(g, x, PathPoint(seq.prefix))) return yes();
    return no(FailedCondition::kPrefixCondition);
  }
  if (!x.infinite() && *x.length() < seq.prefix.length() &&
      is_word_prefix(g, x, PathPoint(seq.prefix)))
    return no(FailedCondition::kEscapeCondition);
  return no(FailedCondition::kPrefixCondition);
}

inline ConvergenceResult sampled(const Graph& g, const Sampled& seq,
                                 const PathPoint& x) {
  // Whether the final observed stretch looks like condition (i): the last
  // term carries the full finite prefix of x.  Purely diagnostic.
  ConvergenceResult r;
  r.verdict = Verdict::kUnknown;
  r.horizon = seq.horizon ? seq.horizon : seq.terms.size();
  if (!seq.terms.empty()) {
    const PathPoint& last = seq.terms.back();
    r.window_consistent =
        x.infinite() ? is_word_prefix(g, last, x) || point_equal(g, last, x)
                     : is_word_prefix(g, x, last) || point_equal(g, last, x);
  }
  return r;
}

}  // namespace detail

inline ConvergenceResult converges(const Graph& g,
                                   const SequencePresentation& seq,
                                   const PathPoint& x) {
  return std::visit(
      [&](const auto& s) -> ConvergenceResult {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EventuallyConstant>)
          return detail::eventually_constant(g, s, x);
        else if constexpr (std::is_same_v<T, BundleEscape>)
          return detail::bundle_escape(g, s, x);
        else
          return detail::sampled(g, s, x);
      },
      seq);
}

inline std::string verdict_text(const ConvergenceResult& r) {
  switch (r.verdict) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo:
      return r.failed == FailedCondition::kEscapeCondition
                 ? "no (escape condition fails)"
                 : "no (prefix condition fails)";
    default:
      return "unknown(horizon=" + std::to_string(r.horizon) + ")";
  }
}

}  // namespace framepath
