#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ign {

struct OrdinalTerm;

// Syntax error in any of the text grammars. position is a byte offset into
// the input.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// Ordinal below epsilon_0 in Cantor normal form:
//   w^e1*c1 + w^e2*c2 + ... + w^ek*ck   with e1 > e2 > ... > ek, ci >= 1.
// The empty sum is 0. Exponents are themselves canonical ordinals, so every
// value this type can hold is below epsilon_0. Immutable after construction.
class Ordinal {
 public:
  Ordinal();                           // zero
  explicit Ordinal(std::uint64_t n);   // a natural number
  Ordinal(const Ordinal&);
  Ordinal(Ordinal&&) noexcept;
  Ordinal& operator=(const Ordinal&);
  Ordinal& operator=(Ordinal&&) noexcept;
  ~Ordinal();

  static Ordinal omega();
  // Terms must already be in canonical order; checked in debug builds only.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

  const std::vector<OrdinalTerm>& terms() const { return terms_; }
  bool is_zero() const;

  bool operator==(const Ordinal& other) const;
  std::strong_ordering operator<=>(const Ordinal& other) const;

 private:
  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
  bool operator==(const OrdinalTerm&) const = default;
};

inline Ordinal::Ordinal() = default;
inline Ordinal::Ordinal(const Ordinal&) = default;
inline Ordinal::Ordinal(Ordinal&&) noexcept = default;
inline Ordinal& Ordinal::operator=(const Ordinal&) = default;
inline Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;
inline Ordinal::~Ordinal() = default;
inline bool Ordinal::is_zero() const { return terms_.empty(); }

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b);

// Ordinal sum in canonical form. Terms of a below the leading exponent of b
// are absorbed.
Ordinal add(const Ordinal& a, const Ordinal& b);

// w^a; omega_pow(0) = 1.
Ordinal omega_pow(const Ordinal& a);

// Least exponent in the CNF of a; ell(0) = 0.
Ordinal ell(const Ordinal& a);

bool is_limit(const Ordinal& a);
bool is_successor(const Ordinal& a);

// a - 1 for successor a. Throws std::invalid_argument on 0 and on limits.
Ordinal pred(const Ordinal& a);

// Iterated power: omega_tower(0, a) = a, omega_tower(k+1, a) = w^omega_tower(k, a).
Ordinal omega_tower(unsigned height, const Ordinal& base);

// Splits a > 0 as first + w^second with second = ell(a) and first < a.
std::pair<Ordinal, Ordinal> decompose_last(const Ordinal& a);

// Grammar:
//   ordinal := term ('+' term)*
//   term    := 'w' ('^' atom)? ('*' nat)? | nat
//   atom    := 'w' | nat | '(' ordinal ')'
// Whitespace is ignored. Non-canonical sums are canonicalized, never rejected.
Ordinal parse_ordinal(std::string_view text);

// Canonical form in the same grammar, no spaces. parse . format = identity.
std::string format_ordinal(const Ordinal& a);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }

// An Ordinal or the top value epsilon_0. Conventions: e0 is greater than
// every ordinal, ell(e0) = e0, e0 is a limit, w^e0 = e0, a + e0 = e0.
class ExtOrdinal {
 public:
  ExtOrdinal() : eps_(false) {}
  ExtOrdinal(Ordinal v) : value_(std::move(v)), eps_(false) {}  // NOLINT: implicit by design
  static ExtOrdinal epsilon_zero();

  bool is_epsilon_zero() const { return eps_; }
  // The plain ordinal value; throws std::logic_error on epsilon_0.
  const Ordinal& ordinal() const;

  bool operator==(const ExtOrdinal& other) const;
  std::strong_ordering operator<=>(const ExtOrdinal& other) const;

 private:
  Ordinal value_;
  bool eps_;
};

std::strong_ordering cmp(const ExtOrdinal& a, const ExtOrdinal& b);

// Sum under the e0 conventions. e0 + b for b > 0 is not representable and
// throws std::invalid_argument.
ExtOrdinal add(const ExtOrdinal& a, const ExtOrdinal& b);

ExtOrdinal omega_pow(const ExtOrdinal& a);
ExtOrdinal ell(const ExtOrdinal& a);
bool is_limit(const ExtOrdinal& a);
bool is_successor(const ExtOrdinal& a);
Ordinal pred(const ExtOrdinal& a);

// Same grammar as parse_ordinal plus the term 'e0'.
ExtOrdinal parse_ext_ordinal(std::string_view text);
std::string format_ext_ordinal(const ExtOrdinal& a);

}  // namespace ign
