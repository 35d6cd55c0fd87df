#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "parse.hpp"

using namespace fjump;

namespace {

RingPtr F13xy() { return parse_ring("F13[x,y]"); }
RingPtr F9x() { return parse_ring("F3^2:t^2+1[x]"); }

Poly P(const RingPtr& r, const std::string& s) { return parse_poly(r, s); }

}  // namespace

TEST_CASE("field construction validates p and the modulus") {
  CHECK_NOTHROW(Field::prime_field(2));
  CHECK_NOTHROW(Field::prime_field(13));
  CHECK_THROWS_AS(Field::prime_field(1), Error);
  CHECK_THROWS_AS(Field::prime_field(12), Error);
  // t^2 + 1 irreducible over F_3, reducible over F_5 (2^2 = -1).
  CHECK_NOTHROW(Field::extension(3, 2, {1, 0, 1}));
  CHECK_THROWS_AS(Field::extension(5, 2, {1, 0, 1}), Error);
  CHECK_THROWS_AS(Field::extension(3, 2, {1, 0, 2}), Error);  // not monic
}

TEST_CASE("field arithmetic in F_9") {
  Field F = Field::extension(3, 2, {1, 0, 1});
  CHECK(F.q() == 9);
  FqElem i = F.gen();
  CHECK(F.mul(i, i) == F.from_int(-1));
  // Every nonzero element has an inverse; c^{p^k} = c.
  for (FqElem c = 0; c < F.q(); ++c) {
    if (c != 0) CHECK(F.mul(c, F.inv(c)) == F.one());
    CHECK(F.pow(c, 9) == c);
  }
}

TEST_CASE("coefficient p-th roots") {
  SUBCASE("zero") {
    Field F = Field::prime_field(13);
    CHECK(F.pth_root(0) == 0);
  }
  SUBCASE("prime field: the root of c is c itself") {
    Field F = Field::prime_field(13);
    FqElem c = 5;
    FqElem d = F.pth_root(c);
    CHECK(d == 5);
    CHECK(F.pow(d, 13) == c);
    // brute force uniqueness
    int hits = 0;
    for (FqElem x = 0; x < 13; ++x)
      if (F.pow(x, 13) == c) ++hits;
    CHECK(hits == 1);
  }
  SUBCASE("F_9: root of i is -i") {
    Field F = Field::extension(3, 2, {1, 0, 1});
    FqElem i = F.gen();
    FqElem d = F.pth_root(i);
    CHECK(d == F.neg(i));
    CHECK(F.pow(d, 3) == i);
  }
  SUBCASE("exhaustive roots over every configured field") {
    std::vector<Field> fields = {Field::prime_field(13), Field::prime_field(2),
                                 Field::extension(3, 2, {1, 0, 1}),
                                 Field::extension(2, 2, {1, 1, 1}),
                                 Field::extension(2, 3, {1, 1, 0, 1})};
    for (const Field& F : fields) {
      for (FqElem c = 0; c < F.q(); ++c) {
        FqElem r = F.pth_root(c);
        CHECK(F.pow(r, F.p()) == c);
      }
    }
  }
}

TEST_CASE("poly_pow basics and the Frobenius fast path") {
  auto R = F13xy();
  Poly f = P(R, "x^2 + y^3");
  CHECK(f.pow(0).equals(P(R, "1")));
  CHECK(f.pow(13).equals(P(R, "x^26 + y^39")));
  // 12-term expansion of f^11 with canonical residues mod 13.
  Poly expect = P(R,
                  "y^33 + 11*x^2*y^30 + 3*x^4*y^27 + 9*x^6*y^24 + 5*x^8*y^21 + 7*x^10*y^18"
                  " + 7*x^12*y^15 + 5*x^14*y^12 + 9*x^16*y^9 + 3*x^18*y^6 + 11*x^20*y^3 + x^22");
  CHECK(f.pow(11).equals(expect));
  CHECK(f.pow(11).terms().size() == 12);
}

TEST_CASE("ring and polynomial parsing") {
  auto R = parse_ring("F13[x,y]");
  CHECK(R->field.p() == 13);
  CHECK(R->field.k() == 1);
  CHECK(R->nvars() == 2);
  CHECK(P(R, "x^2 + y^3").terms().size() == 2);

  auto S = F9x();
  Poly g = P(S, "t*x + 2");
  CHECK(g.terms().size() == 2);
  CHECK(g.lt().c == S->field.gen());

  CHECK_THROWS_AS(parse_poly(R, "x^2 + z"), Error);      // unknown variable
  CHECK_THROWS_AS(parse_poly(R, "x^2 +"), Error);        // syntax
  CHECK_THROWS_AS(parse_ring("F4[x]"), Error);           // 4 not prime
  CHECK_THROWS_AS(parse_ring("F3^2:t^2+1[t,x]"), Error); // t reserved
}

TEST_CASE("parsing conveniences") {
  auto R = F13xy();
  CHECK(P(R, "2x^2y").equals(P(R, "2*x^2*y")));
  CHECK(P(R, "(x+y)^2").equals(P(R, "x^2 + 2*x*y + y^2")));
  CHECK(P(R, "x - x").is_zero());
  CHECK(P(R, "-x + 14").equals(P(R, "12*x + 1")));
  CHECK(P(R, "26").is_zero());
  // arbitrary-length coefficients reduce mod p
  CHECK(P(R, "123456789123456789123456789*x").equals(P(R, "x")));
}

TEST_CASE("print/parse round trip is the identity on canonical forms") {
  std::mt19937_64 rng(20240811);
  auto R = parse_ring("F13[x,y,z]");
  auto S = F9x();
  for (int n = 0; n < 100; ++n) {
    TermMap m(MonDescLess{R.get()});
    size_t terms = 1 + rng() % 6;
    for (size_t i = 0; i < terms; ++i) {
      Monomial mon(3);
      for (auto& e : mon) e = Exp(rng() % 7);
      m.insert_or_assign(mon, FqElem(1 + rng() % 12));
    }
    Poly f = Poly::from_map(R, m);
    Poly back = P(R, f.str());
    CHECK(back.equals(f));
    CHECK(back.str() == f.str());
  }
  for (int n = 0; n < 100; ++n) {
    TermMap m(MonDescLess{S.get()});
    size_t terms = 1 + rng() % 5;
    for (size_t i = 0; i < terms; ++i) {
      Monomial mon(1);
      mon[0] = Exp(rng() % 9);
      m.insert_or_assign(mon, FqElem(1 + rng() % 8));
    }
    Poly f = Poly::from_map(S, m);
    CHECK(P(S, f.str()).equals(f));
  }
}

TEST_CASE("algebraic identities on random polynomials") {
  std::mt19937_64 rng(987654321);
  auto R = F13xy();
  auto rand_poly = [&](size_t maxterms) {
    TermMap m(MonDescLess{R.get()});
    size_t terms = 1 + rng() % maxterms;
    for (size_t i = 0; i < terms; ++i) {
      Monomial mon(2);
      for (auto& e : mon) e = Exp(rng() % 5);
      m.insert_or_assign(mon, FqElem(1 + rng() % 12));
    }
    return Poly::from_map(R, m);
  };
  for (int n = 0; n < 50; ++n) {
    Poly f = rand_poly(4), g = rand_poly(4), h = rand_poly(3);
    CHECK(((f + g) - g).equals(f));
    CHECK((f * P(R, "1")).equals(f));
    CHECK(((f * g) * h).equals(f * (g * h)));
    // Frobenius is additive and multiplicative
    CHECK((f + g).pow(13).equals(f.pow(13) + g.pow(13)));
    CHECK((f * g).frobenius(169).equals(f.frobenius(169) * g.frobenius(169)));
  }
}

TEST_CASE("exponent overflow fails loudly") {
  auto R = F13xy();
  Poly f = P(R, "x");
  CHECK_THROWS_AS(f.pow(uint64_t(1) << 40), Error);
  Poly big = f.pow(1 << 20);
  CHECK_THROWS_AS(big.pow(1 << 20), Error);
}

TEST_CASE("grevlex orders by degree, then reverse-lex") {
  auto R = parse_ring("F7[x,y,z]");
  Poly f = P(R, "x + y + z + x*y + z^2 + 1");
  // descending: xy > z^2 > x > y > z > 1
  CHECK(f.str() == "x*y + z^2 + x + y + z + 1");
}
