#include "ignatiev/frame.hpp"

#include <algorithm>

#include "parse_util.hpp"

namespace ign {

namespace {

ExtOrdinal tail_as_value(Tail t) {
  return t == Tail::One ? ExtOrdinal(Ordinal(1)) : ExtOrdinal::epsilon_zero();
}

}  // namespace

SuitableSequence SuitableSequence::make(std::vector<ExtOrdinal> prefix, Tail tail) {
  const ExtOrdinal tv = tail_as_value(tail);
  while (!prefix.empty() && prefix.back() == tv) prefix.pop_back();
  if (auto bad = suitability_violation(prefix, tail)) throw NotSuitable(*bad);
  SuitableSequence s;
  s.prefix_ = std::move(prefix);
  s.tail_ = tail;
  return s;
}

SuitableSequence SuitableSequence::all_ones() { return make({}, Tail::One); }

SuitableSequence SuitableSequence::improper() { return make({}, Tail::EpsilonZero); }

ExtOrdinal SuitableSequence::at(std::size_t i) const {
  return i < prefix_.size() ? prefix_[i] : tail_as_value(tail_);
}

ExtOrdinal SuitableSequence::tail_value() const { return tail_as_value(tail_); }

bool inab_pair_ok(const ExtOrdinal& value, const ExtOrdinal& next) {
  if (value.is_epsilon_zero()) return true;  // ell(e0) = e0 bounds everything
  if (is_limit(value)) return cmp(next, ell(value)) != std::strong_ordering::greater;
  // successor case: next <= ell(pred(value)) + 1
  ExtOrdinal bound = ExtOrdinal(add(ell(pred(value)), Ordinal(1)));
  return cmp(next, bound) != std::strong_ordering::greater;
}

std::optional<std::size_t> suitability_violation(const std::vector<ExtOrdinal>& prefix, Tail tail) {
  const ExtOrdinal zero{};
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] == zero) return i;
    const ExtOrdinal& next = i + 1 < prefix.size() ? prefix[i + 1] : tail_as_value(tail);
    if (!inab_pair_ok(prefix[i], next)) return i;
  }
  return std::nullopt;
}

SuitableSequence principal_filter_sequence(const IgnatievPoint& p) {
  std::vector<ExtOrdinal> prefix;
  prefix.reserve(p.support());
  for (const Ordinal& c : p.coords()) prefix.emplace_back(add(c, Ordinal(1)));
  return SuitableSequence::make(std::move(prefix), Tail::One);
}

bool member(const SuitableSequence& f, const IgnatievPoint& p) {
  std::size_t n = std::max(p.support(), f.prefix().size());
  for (std::size_t i = 0; i < n; ++i) {
    if (cmp(ExtOrdinal(p.coordinate(i)), f.at(i)) != std::strong_ordering::less) return false;
  }
  return true;  // beyond both: 0 < 1 and 0 < e0
}

SuitableSequence sigma(unsigned n, const SuitableSequence& f) {
  std::vector<ExtOrdinal> nu(static_cast<std::size_t>(n) + 1);
  ExtOrdinal next{Ordinal(1)};
  for (std::size_t i = static_cast<std::size_t>(n) + 1; i-- > 0;) {
    ExtOrdinal a = f.at(i);
    ExtOrdinal v;
    if (cmp(ell(a), next) != std::strong_ordering::less) {
      v = a;
    } else if (is_limit(next)) {
      v = add(a, omega_pow(next));
    } else {
      Ordinal d = pred(next);
      if (cmp(ell(a.ordinal()), d) == std::strong_ordering::less)
        v = ExtOrdinal(add(add(a.ordinal(), omega_pow(d)), Ordinal(1)));
      else
        v = ExtOrdinal(add(a.ordinal(), Ordinal(1)));
    }
    nu[i] = v;
    next = std::move(v);
  }
  return SuitableSequence::make(std::move(nu), Tail::One);
}

bool rel_S(unsigned n, const SuitableSequence& f, const SuitableSequence& g) {
  for (std::size_t i = 0; i <= n; ++i) {
    if (cmp(g.at(i), f.at(i)) == std::strong_ordering::greater) return false;
  }
  return true;
}

bool rel_R(unsigned n, const SuitableSequence& f, const SuitableSequence& g) {
  SuitableSequence s = sigma(n, g);
  for (std::size_t i = 0; i <= n; ++i) {
    if (cmp(s.at(i), f.at(i)) == std::strong_ordering::greater) return false;
  }
  return true;
}

bool forces(const SuitableSequence& f, const Formula& a) { return member(f, eval(a)); }

std::optional<SuitableSequence> witness_R(unsigned n, const SuitableSequence& f, const Formula& a) {
  IgnatievPoint value = eval(a);
  if (!member(f, diamond(n, value))) return std::nullopt;
  return principal_filter_sequence(value);
}

std::pair<std::vector<ExtOrdinal>, Tail> parse_raw_sequence(std::string_view text) {
  detail::Cursor c{text};
  std::vector<ExtOrdinal> prefix;
  if (c.peek() != ';') {
    prefix.push_back(detail::parse_ext_ordinal_at(c));
    while (c.try_eat(',')) prefix.push_back(detail::parse_ext_ordinal_at(c));
  }
  c.expect(';');
  Tail tail;
  if (c.try_keyword("e0")) {
    tail = Tail::EpsilonZero;
  } else {
    std::size_t at = c.pos;
    if (c.nat() != 1) throw ParseError("tail must be 1 or e0", at);
    tail = Tail::One;
  }
  c.expect_end();
  return {std::move(prefix), tail};
}

SuitableSequence parse_sequence(std::string_view text) {
  auto [prefix, tail] = parse_raw_sequence(text);
  return SuitableSequence::make(std::move(prefix), tail);
}

std::string format_raw_sequence(const std::vector<ExtOrdinal>& prefix, Tail tail) {
  std::string out;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i > 0) out += ',';
    out += format_ext_ordinal(prefix[i]);
  }
  out += ';';
  out += tail == Tail::One ? "1" : "e0";
  return out;
}

std::string format_sequence(const SuitableSequence& f) {
  return format_raw_sequence(f.prefix(), f.tail());
}

}  // namespace ign
