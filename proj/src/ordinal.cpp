#include "ignatiev/ordinal.hpp"

#include <cassert>
#include <limits>

#include "parse_util.hpp"

namespace ign {

namespace {

[[maybe_unused]] bool terms_canonical(const std::vector<OrdinalTerm>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) return false;
    if (i + 1 < terms.size() && cmp(terms[i + 1].exponent, terms[i].exponent) != std::strong_ordering::less)
      return false;
  }
  return true;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw std::overflow_error("ordinal coefficient overflow");
  return a + b;
}

}  // namespace

Ordinal::Ordinal(std::uint64_t n) {
  if (n > 0) terms_.push_back(OrdinalTerm{Ordinal(), n});
}

Ordinal Ordinal::omega() {
  Ordinal w;
  w.terms_.push_back(OrdinalTerm{Ordinal(1), 1});
  return w;
}

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  assert(terms_canonical(terms));
  Ordinal a;
  a.terms_ = std::move(terms);
  return a;
}

bool Ordinal::operator==(const Ordinal& other) const { return terms_ == other.terms_; }

std::strong_ordering Ordinal::operator<=>(const Ordinal& other) const { return cmp(*this, other); }

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = cmp(ta[i].exponent, tb[i].exponent);
    if (c != std::strong_ordering::equal) return c;
    if (ta[i].coefficient != tb[i].coefficient)
      return ta[i].coefficient <=> tb[i].coefficient;
  }
  return ta.size() <=> tb.size();
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.terms().front().exponent;
  std::vector<OrdinalTerm> out;
  out.reserve(a.terms().size() + b.terms().size());
  std::size_t i = 0;
  while (i < a.terms().size() && cmp(a.terms()[i].exponent, lead) == std::strong_ordering::greater) {
    out.push_back(a.terms()[i]);
    ++i;
  }
  std::uint64_t lead_coeff = b.terms().front().coefficient;
  if (i < a.terms().size() && cmp(a.terms()[i].exponent, lead) == std::strong_ordering::equal)
    lead_coeff = checked_add(lead_coeff, a.terms()[i].coefficient);
  out.push_back(OrdinalTerm{lead, lead_coeff});
  out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal omega_pow(const Ordinal& a) {
  return Ordinal::from_terms({OrdinalTerm{a, 1}});
}

Ordinal ell(const Ordinal& a) {
  if (a.is_zero()) return Ordinal();
  return a.terms().back().exponent;
}

bool is_limit(const Ordinal& a) { return !a.is_zero() && !ell(a).is_zero(); }

bool is_successor(const Ordinal& a) { return !a.is_zero() && ell(a).is_zero(); }

Ordinal pred(const Ordinal& a) {
  if (!is_successor(a)) throw std::invalid_argument("pred requires a successor ordinal");
  std::vector<OrdinalTerm> terms = a.terms();
  if (terms.back().coefficient == 1)
    terms.pop_back();
  else
    terms.back().coefficient -= 1;
  return Ordinal::from_terms(std::move(terms));
}

Ordinal omega_tower(unsigned height, const Ordinal& base) {
  Ordinal t = base;
  for (unsigned k = 0; k < height; ++k) t = omega_pow(t);
  return t;
}

std::pair<Ordinal, Ordinal> decompose_last(const Ordinal& a) {
  if (a.is_zero()) throw std::invalid_argument("decompose_last requires a positive ordinal");
  std::vector<OrdinalTerm> terms = a.terms();
  Ordinal e = terms.back().exponent;
  if (terms.back().coefficient == 1)
    terms.pop_back();
  else
    terms.back().coefficient -= 1;
  return {Ordinal::from_terms(std::move(terms)), e};
}

// --- parsing ---------------------------------------------------------------

namespace detail {

namespace {

// atom := 'w' | nat | '(' ordinal ')'
Ordinal parse_atom(Cursor& c) {
  if (c.try_eat('(')) {
    Ordinal inner = parse_ordinal_at(c);
    c.expect(')');
    return inner;
  }
  if (c.peek() == 'w') {
    c.expect('w');
    return Ordinal::omega();
  }
  return Ordinal(c.nat());
}

// term := 'w' ('^' atom)? ('*' nat)? | nat
Ordinal parse_term(Cursor& c) {
  if (c.peek() == 'w') {
    c.expect('w');
    Ordinal exp(1);
    if (c.try_eat('^')) exp = parse_atom(c);
    std::uint64_t coeff = 1;
    if (c.try_eat('*')) coeff = c.nat();
    if (coeff == 0) return Ordinal();
    return Ordinal::from_terms({OrdinalTerm{exp, coeff}});
  }
  return Ordinal(c.nat());
}

}  // namespace

Ordinal parse_ordinal_at(Cursor& c) {
  Ordinal acc = parse_term(c);
  while (c.try_eat('+')) acc = add(acc, parse_term(c));
  return acc;
}

ExtOrdinal parse_ext_ordinal_at(Cursor& c) {
  auto one_term = [&]() -> ExtOrdinal {
    if (c.peek() == 'e') {
      if (!c.try_keyword("e0")) c.fail("expected 'e0'");
      return ExtOrdinal::epsilon_zero();
    }
    return ExtOrdinal(parse_term(c));
  };
  ExtOrdinal acc = one_term();
  while (c.try_eat('+')) {
    std::size_t at = c.pos;
    ExtOrdinal t = one_term();
    if (acc.is_epsilon_zero() && !(t == ExtOrdinal()))
      throw ParseError("sum exceeds epsilon_0", at);
    acc = add(acc, t);
  }
  return acc;
}

}  // namespace detail

Ordinal parse_ordinal(std::string_view text) {
  detail::Cursor c{text};
  Ordinal a = detail::parse_ordinal_at(c);
  c.expect_end();
  return a;
}

ExtOrdinal parse_ext_ordinal(std::string_view text) {
  detail::Cursor c{text};
  ExtOrdinal a = detail::parse_ext_ordinal_at(c);
  c.expect_end();
  return a;
}

// --- formatting ------------------------------------------------------------

namespace {

bool is_natural(const Ordinal& a) {
  return a.is_zero() || (a.terms().size() == 1 && a.terms()[0].exponent.is_zero());
}

void format_atom(const Ordinal& e, std::string& out) {
  if (e == Ordinal::omega()) {
    out += 'w';
  } else if (is_natural(e)) {
    out += std::to_string(e.is_zero() ? 0 : e.terms()[0].coefficient);
  } else {
    out += '(';
    out += format_ordinal(e);
    out += ')';
  }
}

void format_term(const OrdinalTerm& t, std::string& out) {
  if (t.exponent.is_zero()) {
    out += std::to_string(t.coefficient);
    return;
  }
  out += 'w';
  if (!(t.exponent == Ordinal(1))) {
    out += '^';
    format_atom(t.exponent, out);
  }
  if (t.coefficient != 1) {
    out += '*';
    out += std::to_string(t.coefficient);
  }
}

}  // namespace

std::string format_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.terms().size(); ++i) {
    if (i > 0) out += '+';
    format_term(a.terms()[i], out);
  }
  return out;
}

// --- ExtOrdinal ------------------------------------------------------------

ExtOrdinal ExtOrdinal::epsilon_zero() {
  ExtOrdinal e;
  e.eps_ = true;
  return e;
}

const Ordinal& ExtOrdinal::ordinal() const {
  if (eps_) throw std::logic_error("epsilon_0 is not a plain ordinal");
  return value_;
}

bool ExtOrdinal::operator==(const ExtOrdinal& other) const {
  if (eps_ != other.eps_) return false;
  return eps_ || value_ == other.value_;
}

std::strong_ordering ExtOrdinal::operator<=>(const ExtOrdinal& other) const {
  return cmp(*this, other);
}

std::strong_ordering cmp(const ExtOrdinal& a, const ExtOrdinal& b) {
  if (a.is_epsilon_zero() && b.is_epsilon_zero()) return std::strong_ordering::equal;
  if (a.is_epsilon_zero()) return std::strong_ordering::greater;
  if (b.is_epsilon_zero()) return std::strong_ordering::less;
  return cmp(a.ordinal(), b.ordinal());
}

ExtOrdinal add(const ExtOrdinal& a, const ExtOrdinal& b) {
  if (b.is_epsilon_zero()) return ExtOrdinal::epsilon_zero();
  if (a.is_epsilon_zero()) {
    if (b.ordinal().is_zero()) return ExtOrdinal::epsilon_zero();
    throw std::invalid_argument("epsilon_0 + positive ordinal is not representable");
  }
  return ExtOrdinal(add(a.ordinal(), b.ordinal()));
}

ExtOrdinal omega_pow(const ExtOrdinal& a) {
  if (a.is_epsilon_zero()) return ExtOrdinal::epsilon_zero();
  return ExtOrdinal(omega_pow(a.ordinal()));
}

ExtOrdinal ell(const ExtOrdinal& a) {
  if (a.is_epsilon_zero()) return ExtOrdinal::epsilon_zero();
  return ExtOrdinal(ell(a.ordinal()));
}

bool is_limit(const ExtOrdinal& a) { return a.is_epsilon_zero() || is_limit(a.ordinal()); }

bool is_successor(const ExtOrdinal& a) { return !a.is_epsilon_zero() && is_successor(a.ordinal()); }

Ordinal pred(const ExtOrdinal& a) {
  if (a.is_epsilon_zero()) throw std::invalid_argument("pred requires a successor ordinal");
  return pred(a.ordinal());
}

std::string format_ext_ordinal(const ExtOrdinal& a) {
  return a.is_epsilon_zero() ? "e0" : format_ordinal(a.ordinal());
}

}  // namespace ign
