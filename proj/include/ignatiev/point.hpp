#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ignatiev/ordinal.hpp"

namespace ign {

// Raised when a coordinate list breaks the chain condition a[i+1] <= ell(a[i]).
struct ChainViolation : std::runtime_error {
  explicit ChainViolation(std::size_t i)
      : std::runtime_error("chain violation at index " + std::to_string(i)), index(i) {}
  std::size_t index;
};

// A point of the Ignatiev algebra: a finitely supported sequence of ordinals
// (a0, a1, ...) with a[i+1] <= ell(a[i]). Only the nonzero prefix is stored;
// the empty list is the top point (0, 0, ...).
class IgnatievPoint {
 public:
  IgnatievPoint() = default;  // top

  static IgnatievPoint top() { return IgnatievPoint(); }
  // Strips trailing zeros, then validates the chain condition.
  static IgnatievPoint make(std::vector<Ordinal> coords);

  const std::vector<Ordinal>& coords() const { return coords_; }
  const Ordinal& coordinate(std::size_t i) const;
  std::size_t support() const { return coords_.size(); }
  bool is_top() const { return coords_.empty(); }

  bool operator==(const IgnatievPoint&) const = default;

 private:
  std::vector<Ordinal> coords_;
};

// First index i with coords[i+1] > ell(coords[i]), if any. Trailing zeros are
// permitted here; make() strips them first.
std::optional<std::size_t> chain_violation(const std::vector<Ordinal>& coords);

inline IgnatievPoint make_point(std::vector<Ordinal> coords) {
  return IgnatievPoint::make(std::move(coords));
}

// The algebra order: p <= q iff p[i] >= q[i] at every coordinate.
bool leq(const IgnatievPoint& p, const IgnatievPoint& q);

// Greatest lower bound. Computed downward from the joint support:
// gamma[i] = max(p[i], q[i]), then delta[i] = gamma[i] when
// ell(gamma[i]) >= delta[i+1] and gamma[i] + w^delta[i+1] otherwise.
IgnatievPoint glb(const IgnatievPoint& p, const IgnatievPoint& q);

// Diamond operator: coordinates above n become 0, then downward for i = n..0
// delta[i] = p[i] + w^delta[i+1].
IgnatievPoint diamond(unsigned n, const IgnatievPoint& p);

// Truncation at position n: coordinates 0..n survive, the rest become 0.
IgnatievPoint nabla(unsigned n, const IgnatievPoint& p);

// Text format: comma-separated ordinals, trailing zeros omitted, "0" or the
// empty string for the top point.
IgnatievPoint parse_point(std::string_view text);
std::string format_point(const IgnatievPoint& p);

// Lexicographic order on coordinate lists. Not the algebra order; used for
// sorted containers and binary search over enumerations.
bool point_lex_less(const IgnatievPoint& a, const IgnatievPoint& b);

}  // namespace ign
