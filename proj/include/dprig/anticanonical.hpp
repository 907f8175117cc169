#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dprig {

// Decompositions C = sum m_i C_i of an anticanonical member on a del Pezzo
// surface of degree d <= 4. Ampleness bounds sum m_i by d, so the possible
// multiplicity multisets form a finite census; index considerations and
// exact intersection arithmetic then cut the census down to the handful of
// configurations that can actually occur.

struct DecompositionShape {
  int degree = 0;                   // d = (-K)^2
  std::vector<int> multiplicities;  // ascending, each >= 1, sum <= degree

  friend bool operator==(const DecompositionShape& a,
                         const DecompositionShape& b) = default;
};

/// "C1 + C2 + 2C3" style rendering, components named in stored order.
std::string to_string(const DecompositionShape& shape);

/// Census of multiplicity multisets for 1 <= d <= 4, in a fixed order:
/// reduced shapes first (by component count), then mixed shapes containing
/// a multiplicity-1 part, then shapes whose every multiplicity is >= 2.
/// Throws InvalidArgumentError outside [1,4].
std::vector<DecompositionShape> enumerate_shapes(int degree);

struct ShapeFilter {
  std::vector<DecompositionShape> kept;
  std::vector<DecompositionShape> excluded;
};

/// A shape whose multiplicities share a factor g writes -K as g times an
/// integral class, so it is excluded unless g divides the Fano index.
/// Census order is preserved within both output lists.
ShapeFilter filter_fano_index(const std::vector<DecompositionShape>& shapes,
                              int fano_index);

// One numerical realization of a shape: anticanonical degrees for the
// components plus the full symmetric intersection matrix (diagonal =
// self-intersections, which adjunction forces to deg - 2 on rational
// components).
struct Configuration {
  DecompositionShape shape;
  std::vector<int> degrees;
  std::vector<std::int64_t> self_intersections;
  std::vector<std::vector<std::int64_t>> intersections;

  friend bool operator==(const Configuration& a,
                         const Configuration& b) = default;
};

/// (sum m_i C_i)^2 recomputed from the intersection matrix.
std::int64_t member_self_intersection(const Configuration& config);

/// All intersection matrices consistent with the shape: off-diagonal
/// entries in [0,2], every component genus equation satisfied, graph
/// connected, deduplicated up to relabeling of same-multiplicity
/// components. An empty result is a machine re-proof that the shape cannot
/// occur. Deterministic order.
std::vector<Configuration> solve_configurations(const DecompositionShape& shape);

enum class LcVerdict { lc, worse_than_lc };

enum class SingularityLabel {
  normal_crossing,
  concurrent_three,
  tangential_pair,
  cusp,
  other,
};

std::string to_string(LcVerdict verdict);
std::string to_string(SingularityLabel label);

struct LcClassification {
  Configuration configuration;
  LcVerdict verdict = LcVerdict::lc;
  SingularityLabel label = SingularityLabel::normal_crossing;
  // Set when the intersection matrix is consistent at lattice level but is
  // not one of the cataloged geometric degenerations.
  bool lattice_only = false;
};

/// Labels the most degenerate geometric realization a configuration
/// admits. Point coincidence is not visible to the lattice, so this is a
/// catalog fact: a tangency needs an intersection number 2, a common point
/// of three components needs a triangle in the intersection graph, and an
/// irreducible member of arithmetic genus 1 degenerates to a cusp.
LcClassification classify_configuration(const Configuration& config);

/// The worse-than-lc catalog for degree d: every configuration whose
/// degenerate realization fails log canonicity, ordered by descending
/// component count, then by degree multiset. Throws InvalidArgumentError
/// outside [1,4].
std::vector<LcClassification> classify_degenerations(int degree);

}  // namespace dprig
