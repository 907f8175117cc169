#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dprig/picard.hpp"

namespace dprig {

// Enumeration of rational curve classes of small anticanonical degree
// (lines, conics, cubics) on a del Pezzo lattice. A class qualifies when
// C.H = h, p_a(C) = 0 and C.C = h*r - 2; the last value is what adjunction
// forces, so the three conditions are re-verified on every emitted class.

struct CurveClass {
  DivisorClass divisor;
  int h_degree = 0;
  std::int64_t self_intersection = 0;
  int genus = 0;  // rational by construction
};

/// One link in a coefficient-bound derivation. `checked` marks steps that
/// are concrete rational inequalities evaluated in exact arithmetic (as
/// opposed to structural steps such as Cauchy-Schwarz itself).
struct BoundStep {
  std::string statement;
  bool checked = false;
  bool holds = true;
};

struct BoundCertificate {
  std::vector<BoundStep> steps;
  bool verified() const;
};

struct CoefficientBound {
  std::int64_t bound = 0;
  BoundCertificate certificate;
};

/// A box bound outside which no qualifying class can exist, together with
/// the inequality chain that proves it.
CoefficientBound coefficient_bound(const DelPezzoLattice& lattice,
                                   int h_degree);

/// All qualifying classes with every coefficient in [-box, box], in
/// lexicographic coefficient order. Exists so tests can widen the box and
/// confirm the certified bound loses nothing.
std::vector<CurveClass> enumerate_curves_within(const DelPezzoLattice& lattice,
                                                int h_degree,
                                                std::int64_t box);

/// Complete enumeration at the certified bound. h_degree must be 1, 2 or 3.
std::vector<CurveClass> enumerate_curves(const DelPezzoLattice& lattice,
                                         int h_degree);

}  // namespace dprig
