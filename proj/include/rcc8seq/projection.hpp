#pragma once

#include <stdexcept>
#include <string>

#include "rcc8seq/relation.hpp"

namespace rcc8seq {

/// Projection operators carrying a relation from one time index to another.
/// Neighbour is the transition structure between consecutive instants;
/// DominanceUp carries an open-interval relation to an adjacent instant and
/// DominanceDown an instant relation to an adjacent open interval. Universal
/// is the trivial projection between non-adjacent indices.
enum class ProjectionKind { Neighbour, DominanceUp, DominanceDown, Universal };

namespace detail {

// Rows on the basic relations. The TPPI/NTPPI rows are derived from the
// TPP/NTPP rows via the conjugation law proj(conv r) = conv(proj r).
constexpr std::array<Relation, 8> make_projection_rows(std::array<Relation, 6> printed) {
  std::array<Relation, 8> rows{};
  rows[static_cast<std::size_t>(Basic::DC)] = printed[0];
  rows[static_cast<std::size_t>(Basic::EC)] = printed[1];
  rows[static_cast<std::size_t>(Basic::PO)] = printed[2];
  rows[static_cast<std::size_t>(Basic::TPP)] = printed[3];
  rows[static_cast<std::size_t>(Basic::NTPP)] = printed[4];
  rows[static_cast<std::size_t>(Basic::EQ)] = printed[5];
  rows[static_cast<std::size_t>(Basic::TPPI)] = printed[3].converse();
  rows[static_cast<std::size_t>(Basic::NTPPI)] = printed[4].converse();
  return rows;
}

inline constexpr std::array<Relation, 8> kNeighbourRows = make_projection_rows({
    DC | EC,                                // DC
    DC | EC | PO,                           // EC
    EC | PO | TPP | TPPI | EQ,              // PO
    PO | TPP | NTPP | EQ,                   // TPP
    TPP | NTPP | EQ,                        // NTPP
    PO | TPP | NTPP | TPPI | NTPPI | EQ,    // EQ
});

inline constexpr std::array<Relation, 8> kDominanceUpRows = make_projection_rows({
    DC | EC,                     // DC
    EC,                          // EC
    EC | PO | TPP | TPPI | EQ,   // PO
    TPP | EQ,                    // TPP
    NTPP | TPP | EQ,             // NTPP
    EQ,                          // EQ
});

inline constexpr std::array<Relation, 8> kDominanceDownRows = make_projection_rows({
    DC,                          // DC
    DC | EC | PO,                // EC
    PO,                          // PO
    PO | TPP | NTPP,             // TPP
    NTPP,                        // NTPP
    B_RCC8 - (DC | EC),          // EQ
});

}  // namespace detail

/// Apply a projection to a relation: union of the table rows of its basics.
/// The Universal kind maps every nonempty relation to the universal relation
/// and the empty relation to itself, like every projection does.
constexpr Relation project(ProjectionKind kind, Relation r) {
  if (kind == ProjectionKind::Universal)
    return r.empty() ? Relation::none() : Relation::universal();
  const std::array<Relation, 8>* rows = nullptr;
  switch (kind) {
    case ProjectionKind::Neighbour: rows = &detail::kNeighbourRows; break;
    case ProjectionKind::DominanceUp: rows = &detail::kDominanceUpRows; break;
    case ProjectionKind::DominanceDown: rows = &detail::kDominanceDownRows; break;
    case ProjectionKind::Universal: break;
  }
  Relation out;
  for (Basic b : kAllBasics)
    if (r.contains(b)) out |= (*rows)[static_cast<std::size_t>(b)];
  return out;
}

enum class SemanticsKind {
  /// Sequence of relations at consecutive instants; adjacent indices are
  /// wired with the Neighbour projection.
  NeighbourInstants,
  /// Sequence over a partition of time into instants and open intervals.
  /// Indices are 1-based: odd positions are instants, even positions are the
  /// open intervals between them, so the length must be even.
  TimePartition,
};

/// Sequence semantics: which projection wiring applies, and the length m.
class Semantics {
 public:
  Semantics(SemanticsKind kind, int length) : kind_(kind), length_(length) {
    if (length < 1) throw std::invalid_argument("sequence length must be positive");
    if (kind == SemanticsKind::TimePartition && length % 2 != 0)
      throw std::invalid_argument("time-partition sequences need an even length");
  }

  static Semantics neighbour(int length) {
    return Semantics(SemanticsKind::NeighbourInstants, length);
  }
  static Semantics partition(int length) {
    return Semantics(SemanticsKind::TimePartition, length);
  }

  SemanticsKind kind() const { return kind_; }
  int length() const { return length_; }

  friend bool operator==(const Semantics&, const Semantics&) = default;

 private:
  SemanticsKind kind_;
  int length_;
};

/// The projection prescribed for carrying index i's relation to index j
/// (1-based). Non-adjacent indices get the Universal projection. Under the
/// time-partition wiring the projection out of an even (interval) position is
/// DominanceUp and out of an odd (instant) position DominanceDown; this
/// orientation is pinned by the worked-example tests.
inline ProjectionKind adjacency_projection(const Semantics& sem, int i, int j) {
  if (i < 1 || i > sem.length() || j < 1 || j > sem.length() || i == j)
    throw std::out_of_range("adjacency projection indices out of range: " +
                            std::to_string(i) + "," + std::to_string(j));
  int d = i - j;
  if (d != 1 && d != -1) return ProjectionKind::Universal;
  if (sem.kind() == SemanticsKind::NeighbourInstants) return ProjectionKind::Neighbour;
  return i % 2 == 0 ? ProjectionKind::DominanceUp : ProjectionKind::DominanceDown;
}

}  // namespace rcc8seq
