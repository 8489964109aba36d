#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ignatiev/frame.hpp"
#include "ignatiev/ordinal.hpp"
#include "ignatiev/point.hpp"

namespace ign {

// Bounds for the exhaustive desk-scale enumerations. All fields must be >= 1.
//
// max_height selects the exponent pool {0, 1, w, w^w, ...} up to tower height
// max_height - 1; enumerated ordinals are the canonical sums of at most
// max_terms powers of pool exponents with coefficients up to max_coeff. This
// keeps the default sweep exhaustive yet small enough to finish in seconds.
struct EnumerationBound {
  unsigned max_height = 3;
  unsigned max_terms = 3;
  unsigned max_coeff = 3;
  unsigned max_support = 3;
};

// All bounded ordinals, strictly ascending, starting at 0. Deterministic.
std::vector<Ordinal> enumerate_ordinals(const EnumerationBound& b);

// All valid points with support <= max_support and coordinates drawn from
// enumerate_ordinals(b). Includes top; emitted in lexicographic order.
std::vector<IgnatievPoint> enumerate_points(const EnumerationBound& b);

// All canonical suitable sequences with prefix length <= max_support and
// coordinates drawn from the bounded ordinals plus epsilon_0. Includes
// (1,1,...) and the improper filter.
std::vector<SuitableSequence> enumerate_suitable_sequences(const EnumerationBound& b);

// The candidate common lower bounds of p and q have no greatest element
// within the enumeration. Signals an inadequate bound, not a math failure.
struct NoMaximum : std::runtime_error {
  NoMaximum() : std::runtime_error("no greatest common lower bound within the enumeration") {}
};

// Reference meet: the leq-greatest enumerated point below both p and q.
IgnatievPoint brute_glb(const IgnatievPoint& p, const IgnatievPoint& q,
                        std::span<const IgnatievPoint> points);
IgnatievPoint brute_glb(const IgnatievPoint& p, const IgnatievPoint& q,
                        const EnumerationBound& b);

// Reference for sigma: nu[i] = sup{gamma + w^delta + 1 : gamma < F[i],
// delta < nu[i+1]} evaluated over the enumerated ordinals, downward from
// nu[n+1] = 1. A coordinate is left empty when the true supremum is not
// attained within the bound (the range endpoint is a limit, or its
// predecessor is not enumerated); everything below it is then also empty.
struct SigmaOracleResult {
  std::vector<std::optional<ExtOrdinal>> coords;  // indices 0..n
  // Highest index whose supremum was not attained, if any.
  std::optional<std::size_t> first_unattained() const;
  bool complete() const { return !first_unattained().has_value(); }
};

SigmaOracleResult brute_sup_sigma(unsigned n, const SuitableSequence& f,
                                  std::span<const Ordinal> ordinals);
SigmaOracleResult brute_sup_sigma(unsigned n, const SuitableSequence& f,
                                  const EnumerationBound& b);

// Outcome of a closure sweep; detail holds the first counterexample.
struct ClosureReport {
  bool passed = true;
  std::string detail;
};

// Verifies the filter closure conditions of a coordinate sequence over the
// enumerated ordinals: (i) every projection is nonempty, (ii) projections are
// downward closed, (iii) alpha < F[i], beta < F[i+1], ell(alpha) < beta imply
// alpha + w^beta < F[i]. Accepts raw sequences so that broken inputs can be
// exhibited.
ClosureReport check_filter_closure(const std::vector<ExtOrdinal>& prefix, Tail tail,
                                   const EnumerationBound& b);
ClosureReport check_filter_closure(const SuitableSequence& f, const EnumerationBound& b);

}  // namespace ign
