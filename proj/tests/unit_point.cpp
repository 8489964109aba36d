#include <doctest.h>

#include "ignatiev/point.hpp"

using namespace ign;

namespace {

Ordinal o(const char* text) { return parse_ordinal(text); }
IgnatievPoint pt(const char* text) { return parse_point(text); }

}  // namespace

TEST_CASE("make_point validates the chain condition") {
  CHECK(make_point({}) == IgnatievPoint::top());
  CHECK(make_point({o("w"), o("1")}).support() == 2);
  CHECK_THROWS_AS(make_point({o("1"), o("1")}), ChainViolation);
  try {
    make_point({o("1"), o("1")});
  } catch (const ChainViolation& e) {
    CHECK(e.index == 0);
  }
  // trailing zeros strip away, interior zeros must stay zero
  CHECK(make_point({o("w"), o("1"), Ordinal()}) == pt("w,1"));
  CHECK_THROWS_AS(make_point({o("1"), Ordinal(), o("1")}), ChainViolation);
  try {
    make_point({o("1"), Ordinal(), o("1")});
  } catch (const ChainViolation& e) {
    CHECK(e.index == 1);
  }
}

TEST_CASE("coordinate and support") {
  IgnatievPoint p = pt("w,1");
  CHECK(p.coordinate(7) == Ordinal());
  CHECK(p.support() == 2);
  CHECK(IgnatievPoint::top().support() == 0);
  CHECK(p.coordinate(0) == o("w"));
}

TEST_CASE("leq is the coordinatewise reverse order") {
  CHECK(leq(pt("w,1"), pt("1")));
  CHECK(!leq(pt("1"), pt("w,1")));
  for (const char* text : {"0", "1", "w,1", "w^w,w,1"}) {
    CHECK(leq(pt(text), IgnatievPoint::top()));
  }
}

TEST_CASE("glb examples") {
  CHECK(glb(pt("w,1"), pt("w+1")) == pt("w*2,1"));
  CHECK(glb(pt("2"), pt("w,1")) == pt("w,1"));
  for (const char* text : {"0", "2", "w,1", "w^w,w,1"}) {
    CHECK(glb(pt(text), IgnatievPoint::top()) == pt(text));
    CHECK(glb(IgnatievPoint::top(), pt(text)) == pt(text));
    CHECK(glb(pt(text), pt(text)) == pt(text));
  }
  // commutativity on a few mixed pairs
  const char* sample[] = {"w*2", "w+1", "w,1", "w^w,w,1", "3"};
  for (const char* a : sample)
    for (const char* b : sample) CHECK(glb(pt(a), pt(b)) == glb(pt(b), pt(a)));
}

TEST_CASE("diamond builds the power chain") {
  CHECK(diamond(0, IgnatievPoint::top()) == pt("1"));
  CHECK(diamond(1, IgnatievPoint::top()) == pt("w,1"));
  CHECK(diamond(2, IgnatievPoint::top()) == pt("w^w,w,1"));
  CHECK(diamond(0, pt("w,1")) == pt("w+1"));
  CHECK(diamond(1, pt("w,1")) == pt("w^2,2"));

  // ell of each output coordinate equals the next coordinate, up to n
  for (const char* text : {"0", "1", "w,1", "w^w,w,1"}) {
    for (unsigned n = 0; n <= 3; ++n) {
      IgnatievPoint d = diamond(n, pt(text));
      CHECK(d.support() == n + 1);
      for (unsigned i = 0; i <= n; ++i) {
        CHECK(ell(d.coordinate(i)) == d.coordinate(i + 1));
      }
    }
  }
}

TEST_CASE("nabla truncates") {
  CHECK(nabla(0, pt("w,1")) == pt("w"));
  CHECK(nabla(5, pt("w,1")) == pt("w,1"));
  CHECK(nabla(0, IgnatievPoint::top()) == IgnatievPoint::top());
  // monotone and idempotent; p <= nabla(n, p)
  const char* sample[] = {"0", "w,1", "w^w,w,1", "w*2+1", "w^(w*3),w*2,1"};
  for (const char* a : sample) {
    IgnatievPoint p = pt(a);
    for (unsigned n = 0; n <= 2; ++n) {
      CHECK(nabla(n, nabla(n, p)) == nabla(n, p));
      CHECK(leq(p, nabla(n, p)));
      for (const char* b : sample) {
        IgnatievPoint q = pt(b);
        if (leq(p, q)) CHECK(leq(nabla(n, p), nabla(n, q)));
      }
    }
  }
}

TEST_CASE("point text format") {
  CHECK(format_point(IgnatievPoint::top()) == "0");
  CHECK(format_point(pt("w,1")) == "w,1");
  CHECK(parse_point("") == IgnatievPoint::top());
  CHECK(parse_point("0") == IgnatievPoint::top());
  CHECK(parse_point(" w , 1 ") == pt("w,1"));
  CHECK_THROWS_AS(parse_point("w,"), ParseError);
  CHECK_THROWS_AS(parse_point("1,1"), ChainViolation);
  CHECK_THROWS_AS(parse_point("e0"), ParseError);
}
