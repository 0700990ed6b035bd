#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "swapgame/graph.hpp"

namespace swapgame {

struct CanonicalCode {
  enum class Kind : std::uint8_t { Labeled, UnlabeledTree };

  std::string code;  // opaque bytes
  Kind kind = Kind::Labeled;

  auto operator<=>(const CanonicalCode&) const = default;

  /// 64-bit FNV-1a digest rendered as 16 hex digits.
  std::string digest() const;
};

/// Labeled code: equal iff same n and identical edge sets.
CanonicalCode canonical_labeled(const Graph& g);

/// Isomorphism-invariant code for trees, rooted at the centroid(s).
/// Throws std::invalid_argument for non-trees.
CanonicalCode canonical_unlabeled_tree(const Graph& g);

/// Decodes a Prüfer sequence into a labeled tree on seq.size() + 2 vertices.
Graph prufer_decode(std::span<const int> seq);

}  // namespace swapgame
