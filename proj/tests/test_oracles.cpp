#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fjumping.hpp"
#include "oracles.hpp"
#include "parse.hpp"

using namespace fjump;

namespace {

Ideal I(const RingPtr& r, std::initializer_list<std::string> gens) {
  std::vector<Poly> v;
  for (const auto& s : gens) v.push_back(parse_poly(r, s));
  return Ideal(r, std::move(v));
}

}  // namespace

TEST_CASE("monomial root oracle closed form") {
  auto R = parse_ring("F3[x,y]");
  CHECK(monomial_root_oracle(I(R, {"x^5"}), 3).equals(I(R, {"x"})));
  CHECK(monomial_root_oracle(I(R, {"x^6"}), 3).equals(I(R, {"x^2"})));
  auto R7 = parse_ring("F7[x,y]");
  CHECK(monomial_root_oracle(I(R7, {"x^3*y^7"}), 7).equals(I(R7, {"y"})));
  auto R2 = parse_ring("F2[x,y]");
  CHECK(monomial_root_oracle(I(R2, {"x^2*y", "y^3"}), 2).equals(I(R2, {"x", "y"})));
  CHECK_THROWS_AS(monomial_root_oracle(I(R, {"x+y"}), 3), Error);
  // minimality via the adjunction: I inside oracle^[q], and no smaller
  // monomial ideal works (drop each generator one exponent)
  Ideal a = I(R, {"x^7*y^2"});
  Ideal root = monomial_root_oracle(a, 3);
  CHECK(bracket_power(root, 3).contains(a));
  CHECK(root.equals(I(R, {"x^2"})));
  CHECK_FALSE(bracket_power(I(R, {"x^3"}), 3).contains(a));
}

TEST_CASE("oracle agrees with frobenius_root on random monomial ideals") {
  std::mt19937_64 rng(0xacc0a1);
  auto R = parse_ring("F3[x,y,z]");
  for (int n = 0; n < 100; ++n) {
    Ideal a = random_monomial_ideal(R, rng, 3, 10);
    for (uint64_t q : {uint64_t(3), uint64_t(9)})
      CHECK(frobenius_root(a, q).equals(monomial_root_oracle(a, q)));
  }
}

TEST_CASE("adjunction fuzzer: seeded run is clean and replayable") {
  auto R = parse_ring("F3[x,y]");
  FuzzReport rep = adjunction_fuzzer(R, 100, 0x00c0ffee);
  CHECK(rep.failures == 0);
  CHECK(rep.trials == 100);
  // one JSONL row per trial
  size_t lines = 0;
  for (char c : rep.jsonl)
    if (c == '\n') ++lines;
  CHECK(lines == 100);
  // replay gives the identical report
  FuzzReport again = adjunction_fuzzer(R, 100, 0x00c0ffee);
  CHECK(again.jsonl == rep.jsonl);
}

TEST_CASE("adjunction edge cases") {
  auto R = parse_ring("F3[x,y]");
  // I = J^[q]: both sides of the equivalence hold
  Ideal j = I(R, {"x", "y^2"});
  Ideal i = bracket_power(j, 3);
  CHECK(bracket_power(j, 3).contains(i));
  CHECK(j.contains(frobenius_root(i, 3)));
  // I = (1), J = (x): both sides fail
  CHECK_FALSE(bracket_power(I(R, {"x"}), 3).contains(Ideal::unit(R)));
  CHECK_FALSE(I(R, {"x"}).contains(frobenius_root(Ideal::unit(R), 3)));
}

TEST_CASE("jumping sweep as the left-limit oracle") {
  // smooth divisor: only the integer is flagged among r/(p-1)
  auto R = parse_ring("F3[x]");
  auto rows = jumping_sweep(parse_poly(R, "x"), 1);
  REQUIRE(rows.size() == 2);
  CHECK_FALSE(rows[0].is_jumping);
  CHECK(rows[1].is_jumping);

  // cusp over F_13: exactly 10/12 and 12/12
  auto R13 = parse_ring("F13[x,y]");
  auto cusp_rows = jumping_sweep(parse_poly(R13, "x^2+y^3"), 1);
  std::vector<int64_t> flagged;
  for (const auto& row : cusp_rows)
    if (row.is_jumping) flagged.push_back(row.r);
  CHECK(flagged == std::vector<int64_t>{10, 12});

  // monomial over F_7: 3/6 and 4/6 are both jumping numbers
  auto R7 = parse_ring("F7[x,y]");
  auto mono_rows = jumping_sweep(parse_poly(R7, "x^3*y^2"), 1);
  CHECK(mono_rows[2].is_jumping);
  CHECK(mono_rows[3].is_jumping);
}

TEST_CASE("sweep is consistent under denominator refinement") {
  auto R13 = parse_ring("F13[x,y]");
  Poly cusp = parse_poly(R13, "x^2+y^3");
  for (int64_t r : {10, 12}) {
    REQUIRE(is_fjumping_number(cusp, Alpha{r, 1}).is_jumping);
    // r/(p-1) = r(p+1)/(p^2-1)
    CHECK(is_fjumping_number(cusp, Alpha{r * 14, 2}).is_jumping);
  }
}

TEST_CASE("full sweep at e = 2 flags exactly the refined set") {
  auto R13 = parse_ring("F13[x,y]");
  Poly cusp = parse_poly(R13, "x^2+y^3");
  auto rows = jumping_sweep(cusp, 2);
  REQUIRE(rows.size() == 168);
  std::vector<int64_t> flagged;
  for (const auto& row : rows)
    if (row.is_jumping) flagged.push_back(row.r);
  CHECK(flagged == std::vector<int64_t>{140, 168});  // 5/6 and 1
}
