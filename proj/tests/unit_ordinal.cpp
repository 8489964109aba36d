#include <doctest.h>

#include <array>
#include <cstdint>

#include "ignatiev/ordinal.hpp"

using namespace ign;

namespace {

Ordinal o(const char* text) { return parse_ordinal(text); }

// Independent model of the ordinals below w^3 as triples (a, b, c) standing
// for w^2*a + w*b + c. Comparison is lexicographic; addition resets the lower
// components of the left argument.
struct Triple {
  std::uint64_t a = 0, b = 0, c = 0;

  friend Triple add3(Triple x, Triple y) {
    if (y.a > 0) return {x.a + y.a, y.b, y.c};
    if (y.b > 0) return {x.a, x.b + y.b, y.c};
    return {x.a, x.b, x.c + y.c};
  }
  friend std::strong_ordering cmp3(Triple x, Triple y) {
    if (x.a != y.a) return x.a <=> y.a;
    if (x.b != y.b) return x.b <=> y.b;
    return x.c <=> y.c;
  }
  Ordinal to_ordinal() const {
    Ordinal r;
    if (a) r = add(r, Ordinal::from_terms({OrdinalTerm{Ordinal(2), a}}));
    if (b) r = add(r, Ordinal::from_terms({OrdinalTerm{Ordinal(1), b}}));
    if (c) r = add(r, Ordinal(c));
    return r;
  }
};

}  // namespace

TEST_CASE("ordinal comparison basics") {
  CHECK(cmp(o("0"), o("1")) == std::strong_ordering::less);
  CHECK(cmp(o("w^w"), o("w^3*5")) == std::strong_ordering::greater);
  CHECK(cmp(o("w*2+1"), o("w*2+1")) == std::strong_ordering::equal);
  CHECK(o("w") == Ordinal::omega());
}

TEST_CASE("ordinal addition basics") {
  CHECK(add(o("1"), o("w")) == o("w"));
  CHECK(add(o("w+1"), o("w")) == o("w*2"));  // matches the triple model below
  Ordinal a = o("w^2*2+w");
  CHECK(add(a, Ordinal()) == a);
  CHECK(add(Ordinal(), a) == a);
}

TEST_CASE("omega powers and towers") {
  CHECK(omega_pow(Ordinal()) == Ordinal(1));
  CHECK(omega_pow(Ordinal(1)) == Ordinal::omega());
  CHECK(omega_pow(Ordinal::omega()) == o("w^w"));
  CHECK(omega_tower(0, Ordinal(5)) == Ordinal(5));
  CHECK(omega_tower(2, Ordinal(1)) == o("w^w"));
  CHECK(omega_tower(1, Ordinal::omega()) == o("w^w"));
}

TEST_CASE("ell picks the least exponent") {
  CHECK(ell(o("w^2+w")) == Ordinal(1));
  CHECK(ell(o("w+1")) == Ordinal());
  CHECK(ell(o("w^w*3")) == Ordinal::omega());
  CHECK(ell(Ordinal()) == Ordinal());
}

TEST_CASE("limits, successors, pred") {
  CHECK(is_limit(o("w*2")));
  CHECK(!is_limit(o("w+1")));
  CHECK(pred(o("w+1")) == o("w"));
  CHECK(!is_limit(Ordinal()));
  CHECK(!is_successor(Ordinal()));
  CHECK_THROWS_AS(pred(Ordinal()), std::invalid_argument);
  CHECK_THROWS_AS(pred(o("w")), std::invalid_argument);
  CHECK(pred(o("w*2+3")) == o("w*2+2"));
}

TEST_CASE("parsing and formatting") {
  CHECK(format_ordinal(o("w^2+w")) == "w^2+w");
  CHECK(format_ordinal(o("w*3+2")) == "w*3+2");
  CHECK(format_ordinal(o("w^(w+1)")) == "w^(w+1)");
  CHECK(format_ordinal(Ordinal()) == "0");
  CHECK(format_ordinal(o("w^w*2")) == "w^w*2");

  // non-canonical sums canonicalize
  CHECK(o("1+w") == o("w"));
  CHECK(o("w+w") == o("w*2"));
  CHECK(o("2+3") == Ordinal(5));
  CHECK(o("w*0+2") == Ordinal(2));
  CHECK(o(" w ^ 2 + w ") == o("w^2+w"));

  CHECK_THROWS_AS(o("w^"), ParseError);
  CHECK_THROWS_AS(o("e0"), ParseError);
  CHECK_THROWS_AS(o("w+"), ParseError);
  CHECK_THROWS_AS(o("5x"), ParseError);
  bool threw = false;
  try {
    o("w^ +1");
  } catch (const ParseError& e) {
    threw = true;
    CHECK(e.position == 3);
  }
  CHECK(threw);
}

TEST_CASE("decompose_last splits off the final power") {
  for (const char* text : {"1", "w", "w+1", "w^2*3+w*2", "w^w", "w^(w+1)+w^2"}) {
    Ordinal a = o(text);
    auto [rest, e] = decompose_last(a);
    CHECK(e == ell(a));
    CHECK(add(rest, omega_pow(e)) == a);
    CHECK(cmp(rest, a) == std::strong_ordering::less);
  }
  CHECK_THROWS_AS(decompose_last(Ordinal()), std::invalid_argument);
}

TEST_CASE("agreement with the small-ordinal model below w^3") {
  constexpr std::uint64_t kMax = 4;
  std::vector<Triple> all;
  for (std::uint64_t a = 0; a <= kMax; ++a)
    for (std::uint64_t b = 0; b <= kMax; ++b)
      for (std::uint64_t c = 0; c <= kMax; ++c) all.push_back({a, b, c});
  for (const Triple& x : all) {
    for (const Triple& y : all) {
      CHECK(cmp(x.to_ordinal(), y.to_ordinal()) == cmp3(x, y));
      CHECK(add(x.to_ordinal(), y.to_ordinal()) == add3(x, y).to_ordinal());
    }
  }
}

TEST_CASE("arithmetic laws") {
  const std::array<Ordinal, 8> sample = {o("0"),     o("1"),      o("w"),       o("w+1"),
                                         o("w*2+3"), o("w^2"),    o("w^w+w^2*2"), o("w^(w+1)+1")};
  for (const Ordinal& a : sample) {
    CHECK(add(a, Ordinal()) == a);
    CHECK(add(Ordinal(), a) == a);
    if (!a.is_zero()) {
      // a >= w^ell(a)
      CHECK(cmp(a, omega_pow(ell(a))) != std::strong_ordering::less);
    }
    for (const Ordinal& b : sample) {
      // ell(a + b) = ell(b) for b > 0
      if (!b.is_zero()) CHECK(ell(add(a, b)) == ell(b));
      for (const Ordinal& c : sample) {
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        // strict right monotonicity, weak left monotonicity
        if (cmp(b, c) == std::strong_ordering::less) {
          CHECK(cmp(add(a, b), add(a, c)) == std::strong_ordering::less);
          CHECK(cmp(add(b, a), add(c, a)) != std::strong_ordering::greater);
        }
      }
    }
  }
}

TEST_CASE("extended ordinals honor the epsilon_0 conventions") {
  ExtOrdinal e0 = ExtOrdinal::epsilon_zero();
  CHECK(cmp(e0, ExtOrdinal(o("w^(w^w)"))) == std::strong_ordering::greater);
  CHECK(ell(e0) == e0);
  CHECK(is_limit(e0));
  CHECK(!is_successor(e0));
  CHECK(omega_pow(e0) == e0);
  CHECK(add(ExtOrdinal(o("w*7")), e0) == e0);
  CHECK(add(e0, ExtOrdinal()) == e0);
  CHECK_THROWS_AS(add(e0, ExtOrdinal(Ordinal(1))), std::invalid_argument);
  CHECK_THROWS_AS(pred(e0), std::invalid_argument);
  CHECK_THROWS_AS(e0.ordinal(), std::logic_error);

  CHECK(parse_ext_ordinal("e0") == e0);
  CHECK(parse_ext_ordinal("1+e0") == e0);
  CHECK(parse_ext_ordinal("w+1") == ExtOrdinal(o("w+1")));
  CHECK(format_ext_ordinal(e0) == "e0");
  CHECK(format_ext_ordinal(ExtOrdinal(o("w*2"))) == "w*2");
  CHECK_THROWS_AS(parse_ext_ordinal("e0+1"), ParseError);
  CHECK_THROWS_AS(parse_ext_ordinal("e1"), ParseError);
}
