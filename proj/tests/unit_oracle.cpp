#include <doctest.h>

#include <algorithm>
#include <set>

#include "ignatiev/oracle.hpp"
#include "ignatiev/verify.hpp"

using namespace ign;

namespace {

Ordinal o(const char* text) { return parse_ordinal(text); }
IgnatievPoint pt(const char* text) { return parse_point(text); }
SuitableSequence seq(const char* text) { return parse_sequence(text); }

// Count formula for the generator: sums of at most max_terms powers with
// exponents from a pool of max_height + 1 towers and coefficients up to
// max_coeff.
std::size_t expected_count(const EnumerationBound& b) {
  std::size_t pool = b.max_height + 1;
  std::size_t total = 0;
  auto choose = [](std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };
  for (std::size_t j = 0; j <= std::min<std::size_t>(b.max_terms, pool); ++j) {
    std::size_t c = choose(pool, j);
    for (std::size_t i = 0; i < j; ++i) c *= b.max_coeff;
    total += c;
  }
  return total;
}

}  // namespace

TEST_CASE("ordinal enumeration at a tiny bound") {
  EnumerationBound b{1, 1, 2, 1};
  auto ords = enumerate_ordinals(b);
  REQUIRE(ords.size() == 5);
  CHECK(ords[0] == Ordinal());
  CHECK(ords[1] == Ordinal(1));
  CHECK(ords[2] == Ordinal(2));
  CHECK(ords[3] == o("w"));
  CHECK(ords[4] == o("w*2"));
}

TEST_CASE("ordinal enumeration is sorted, canonical, and counted") {
  for (EnumerationBound b : {EnumerationBound{1, 1, 2, 1}, EnumerationBound{2, 2, 2, 2},
                             EnumerationBound{3, 3, 3, 3}}) {
    auto ords = enumerate_ordinals(b);
    CHECK(ords.size() == expected_count(b));
    CHECK(ords.front() == Ordinal());
    for (std::size_t i = 0; i + 1 < ords.size(); ++i) {
      CHECK(cmp(ords[i], ords[i + 1]) == std::strong_ordering::less);
    }
    for (const Ordinal& a : ords) CHECK(parse_ordinal(format_ordinal(a)) == a);
  }
  // frozen size at the default bound
  CHECK(enumerate_ordinals(EnumerationBound{}).size() == 175);
  CHECK_THROWS_AS(enumerate_ordinals(EnumerationBound{0, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("point enumeration") {
  EnumerationBound small{1, 1, 2, 1};
  auto pts = enumerate_points(small);
  std::set<std::string> names;
  for (const IgnatievPoint& p : pts) names.insert(format_point(p));
  CHECK(names.count("0"));
  CHECK(names.count("1"));
  CHECK(names.count("2"));
  CHECK(names.count("w"));
  CHECK(names.count("w*2"));
  CHECK(!names.count("1,1"));

  auto all = enumerate_points(EnumerationBound{});
  CHECK(all.size() == 352);  // frozen from the generator at the default bound
  for (const IgnatievPoint& p : all) {
    CHECK_NOTHROW(IgnatievPoint::make(p.coords()));
  }
  CHECK(std::is_sorted(all.begin(), all.end(), point_lex_less));
  // (1,1) violates the chain condition and never appears
  const std::vector<Ordinal> bad{Ordinal(1), Ordinal(1)};
  for (const IgnatievPoint& p : all) CHECK(p.coords() != bad);
}

TEST_CASE("suitable sequence enumeration") {
  auto seqs = enumerate_suitable_sequences(EnumerationBound{2, 2, 2, 2});
  std::set<std::string> names;
  for (const SuitableSequence& s : seqs) {
    // each is canonical and suitable by construction; formats round-trip
    CHECK(parse_sequence(format_sequence(s)) == s);
    names.insert(format_sequence(s));
  }
  CHECK(names.size() == seqs.size());
  CHECK(names.count(";1"));
  CHECK(names.count(";e0"));
  CHECK(names.count("w;1"));
  CHECK(names.count("e0;1"));
  CHECK(names.count("e0,e0;1"));
  CHECK(!names.count("1;1"));
}

TEST_CASE("brute force glb agrees with the formula") {
  EnumerationBound b{3, 3, 3, 3};
  auto points = enumerate_points(b);
  CHECK(brute_glb(pt("w,1"), pt("w+1"), points) == pt("w*2,1"));
  CHECK(brute_glb(pt("w,1"), pt("w+1"), points) == glb(pt("w,1"), pt("w+1")));
  CHECK(brute_glb(pt("w"), IgnatievPoint::top(), points) == pt("w"));
  CHECK(brute_glb(pt("w,1"), pt("w,1"), points) == pt("w,1"));
}

TEST_CASE("glb is a meet on the enumerated points") {
  auto points = enumerate_points(EnumerationBound{2, 2, 2, 2});
  for (const IgnatievPoint& p : points) {
    for (const IgnatievPoint& q : points) {
      IgnatievPoint g = glb(p, q);
      CHECK(leq(g, p));
      CHECK(leq(g, q));
      for (const IgnatievPoint& r : points) {
        if (leq(r, p) && leq(r, q)) CHECK(leq(r, g));
        CHECK(glb(glb(p, q), r) == glb(p, glb(q, r)));
      }
    }
  }
}

TEST_CASE("brute force glb reports an inadequate bound") {
  // With coefficients capped at 1 the meet w*2,1 of (w,1) and (w+1) is not
  // enumerated and no candidate dominates.
  EnumerationBound b{1, 2, 1, 2};
  CHECK_THROWS_AS(brute_glb(pt("w,1"), pt("w+1"), b), NoMaximum);
}

TEST_CASE("sigma supremum oracle") {
  EnumerationBound b;
  auto ords = enumerate_ordinals(b);

  auto r0 = brute_sup_sigma(0, seq(";1"), ords);
  REQUIRE(r0.complete());
  CHECK(*r0.coords[0] == ExtOrdinal(Ordinal(2)));

  auto r1 = brute_sup_sigma(1, seq(";1"), ords);
  REQUIRE(r1.complete());
  CHECK(*r1.coords[0] == ExtOrdinal(o("w+1")));
  CHECK(*r1.coords[1] == ExtOrdinal(Ordinal(2)));

  auto re = brute_sup_sigma(0, SuitableSequence::improper(), ords);
  CHECK(!re.complete());
  CHECK(re.first_unattained() == 0);

  // limit coordinate: the supremum is never attained by the enumeration
  auto rl = brute_sup_sigma(0, seq("w;1"), ords);
  CHECK(rl.first_unattained() == 0);
}

TEST_CASE("filter closure checker") {
  EnumerationBound b;
  CHECK(check_filter_closure(seq("w+1,2;1"), b).passed);
  CHECK(check_filter_closure(SuitableSequence::improper(), b).passed);
  CHECK(check_filter_closure(seq("e0,w^w,w,1;1"), b).passed);

  // raw, non-suitable input: condition (iii) fails at index 0
  auto [prefix, tail] = parse_raw_sequence("w,2;1");
  auto rep = check_filter_closure(prefix, tail, b);
  CHECK(!rep.passed);
  CHECK(rep.detail.find("(iii)") != std::string::npos);
  CHECK(rep.detail.find("index 0") != std::string::npos);
}

TEST_CASE("verification suites pass at a small bound") {
  EnumerationBound b{2, 2, 2, 2};
  for (const char* which : {"glb", "filters", "sigma", "semantics"}) {
    auto results = verify::run_suites(which, b);
    for (const auto& r : results) {
      INFO(r.name, ": ", r.detail);
      CHECK(r.passed);
      CHECK(r.cases > 0);
    }
  }
  CHECK_THROWS_AS(verify::run_suites("bogus", b), std::invalid_argument);
}
