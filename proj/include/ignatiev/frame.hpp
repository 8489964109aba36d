#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ignatiev/logic.hpp"
#include "ignatiev/ordinal.hpp"
#include "ignatiev/point.hpp"

namespace ign {

// Value taken by every coordinate beyond the stored prefix.
enum class Tail { One, EpsilonZero };

struct NotSuitable : std::runtime_error {
  explicit NotSuitable(std::size_t i)
      : std::runtime_error("sequence is not suitable at index " + std::to_string(i)), index(i) {}
  std::size_t index;
};

// A filter of the algebra in coordinates: an eventually constant sequence of
// positive extended ordinals where at every index either a[i] is a limit and
// a[i+1] <= ell(a[i]), or a[i] = a' + 1 and a[i+1] <= ell(a') + 1.
//
// Tail One is the generic case; tail EpsilonZero (only with an empty prefix,
// by canonicality) is the improper filter. Canonical form never stores the
// tail value at the end of the prefix.
class SuitableSequence {
 public:
  // Canonicalizes (drops trailing tail values), then validates; throws
  // NotSuitable with the first violating index.
  static SuitableSequence make(std::vector<ExtOrdinal> prefix, Tail tail);

  static SuitableSequence all_ones();  // (1, 1, 1, ...), the filter {top}
  static SuitableSequence improper();  // all epsilon_0, the whole algebra

  const std::vector<ExtOrdinal>& prefix() const { return prefix_; }
  Tail tail() const { return tail_; }
  ExtOrdinal at(std::size_t i) const;
  ExtOrdinal tail_value() const;

  bool operator==(const SuitableSequence&) const = default;

 private:
  SuitableSequence() : tail_(Tail::One) {}
  std::vector<ExtOrdinal> prefix_;
  Tail tail_;
};

// First violating index of a raw sequence: a zero coordinate, or a pair
// (a[i], a[i+1]) breaking the condition above (the seam between prefix and
// tail counts). Trailing tail values in the prefix are harmless duplicates.
std::optional<std::size_t> suitability_violation(const std::vector<ExtOrdinal>& prefix, Tail tail);

inline bool is_suitable(const std::vector<ExtOrdinal>& prefix, Tail tail) {
  return !suitability_violation(prefix, tail).has_value();
}

// The condition checked between two adjacent coordinates.
bool inab_pair_ok(const ExtOrdinal& value, const ExtOrdinal& next);

// The sequence of the principal filter of p: p[i] + 1 on the support, tail 1.
SuitableSequence principal_filter_sequence(const IgnatievPoint& p);

// p belongs to the filter of F iff p[i] < F[i] at every coordinate.
bool member(const SuitableSequence& f, const IgnatievPoint& p);

// The sequence of the filter generated by applying diamond n to every member
// of F. Computed by the downward recursion with nu[n+1] = 1 and
//   nu[i] = a[i]                 if ell(a[i]) >= nu[i+1]
//         = a[i] + w^nu[i+1]     if nu[i+1] is a limit
//         = a[i] + w^d + 1       if nu[i+1] = d + 1 and ell(a[i]) < d
//         = a[i] + 1             if nu[i+1] = d + 1 and ell(a[i]) = d.
// Coordinates above n are 1.
SuitableSequence sigma(unsigned n, const SuitableSequence& f);

// F S_n G iff G[i] <= F[i] for all i <= n.
bool rel_S(unsigned n, const SuitableSequence& f, const SuitableSequence& g);

// F R_n G iff sigma(n, G)[i] <= F[i] for all i <= n. Beyond n the sigma
// coordinates are 1, so the finite check is complete.
bool rel_R(unsigned n, const SuitableSequence& f, const SuitableSequence& g);

// F forces A iff eval(A) is a member of F.
bool forces(const SuitableSequence& f, const Formula& a);

// If F forces D<n> A, the principal filter of eval(A) witnesses the
// existential: the result G satisfies rel_R(n, F, G) and member(G, eval(A)).
// Empty otherwise.
std::optional<SuitableSequence> witness_R(unsigned n, const SuitableSequence& f, const Formula& a);

// Text format: comma-separated extended ordinals, then ";1" or ";e0" for the
// tail. ";1" alone is (1, 1, ...), ";e0" alone is the improper filter.
std::pair<std::vector<ExtOrdinal>, Tail> parse_raw_sequence(std::string_view text);
SuitableSequence parse_sequence(std::string_view text);  // validated
std::string format_sequence(const SuitableSequence& f);
std::string format_raw_sequence(const std::vector<ExtOrdinal>& prefix, Tail tail);

}  // namespace ign
