#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fjacobian.hpp"
#include "fjumping.hpp"
#include "parse.hpp"

using namespace fjump;

namespace {

Ideal I(const RingPtr& r, std::initializer_list<std::string> gens) {
  std::vector<Poly> v;
  for (const auto& s : gens) v.push_back(parse_poly(r, s));
  return Ideal(r, std::move(v));
}

}  // namespace

TEST_CASE("Fedder's criterion") {
  auto R7 = parse_ring("F7[x,y,z]");
  CHECK(fedder_fpure_at_origin(parse_poly(R7, "x^3+y^3+z^3")));
  auto R5 = parse_ring("F5[x,y,z]");
  CHECK_FALSE(fedder_fpure_at_origin(parse_poly(R5, "x^3+y^3+z^3")));
  auto R = parse_ring("F11[x]");
  CHECK(fedder_fpure_at_origin(parse_poly(R, "x")));
  CHECK_THROWS_AS(fedder_fpure_at_origin(parse_poly(R, "x+1")), Error);
  CHECK_THROWS_AS(fedder_fpure_at_origin(parse_poly(R, "0")), Error);
}

TEST_CASE("F-Jacobian of the Fermat cubic") {
  auto R7 = parse_ring("F7[x,y,z]");
  Poly f = parse_poly(R7, "x^3+y^3+z^3");
  Ideal m = Ideal::maximal_at_origin(R7);
  FjacResult res = fjacobian_from_seed(f, m);
  CHECK(res.jf.equals(m));
  CHECK(res.trace.stable_index == 1);

  auto R5 = parse_ring("F5[x,y,z]");
  FjacResult res5 = fjacobian_from_seed(parse_poly(R5, "x^3+y^3+z^3"),
                                        Ideal::maximal_at_origin(R5));
  CHECK(res5.jf.is_unit());
}

TEST_CASE("McDermott diagonal, p = 2, n = 5, d = 5") {
  auto R = parse_ring("F2[x1,x2,x3,x4,x5]");
  Poly f = parse_poly(R, "x1^5+x2^5+x3^5+x4^5+x5^5");
  std::vector<Poly> gens;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      Monomial m(5, 0);
      m[i] += 2;
      m[j] += 1;
      gens.push_back(Poly::term(R, m, 1));
    }
  Ideal seed(R, gens);
  FjacResult res = fjacobian_from_seed(f, seed);
  CHECK(res.jf.is_unit());
  REQUIRE(res.trace.ideals.size() >= 3);
  CHECK(res.trace.ideals[1].equals(
      I(R, {"x1^2", "x2^2", "x3^2", "x4^2", "x5^2", "x1*x2*x3*x4*x5"})));
  CHECK(res.trace.ideals[2].is_unit());
}

TEST_CASE("F-Jacobian of x^2+y^2 over F_3 via seed m") {
  auto R = parse_ring("F3[x,y]");
  Poly f = parse_poly(R, "x^2+y^2");
  Ideal m = Ideal::maximal_at_origin(R);
  FjacResult res = fjacobian_from_seed(f, m);
  CHECK(res.jf.equals(m));
  CHECK(res.trace.stable_index == 1);
}

TEST_CASE("seed validation") {
  auto R = parse_ring("F3[x,y]");
  Poly f = parse_poly(R, "x^2+y^2");
  // seed must contain f
  CHECK_THROWS_AS(fjacobian_from_seed(f, I(R, {"x^3", "y^3"})), Error);
  // (f) itself is always a valid flag start and is its own fixed point
  FjacResult triv = fjacobian_from_seed(f, Ideal::principal(f));
  CHECK(triv.jf.equals(Ideal::principal(f)));
  // seed with f but violating f^{p-1} seed inside seed^[p]
  auto R5 = parse_ring("F5[x,y]");
  Poly g = parse_poly(R5, "x*y");
  CHECK_THROWS_AS(fjacobian_from_seed(g, I(R5, {"x*y", "x^4"})), Error);
}

TEST_CASE("minimal fixed ideal conditions") {
  auto R = parse_ring("F3[x,y]");
  Poly f = parse_poly(R, "x^2+y^2");
  CHECK(minimal_fixed_ideal_check(I(R, {"x", "y"}), f));
  CHECK_FALSE(minimal_fixed_ideal_check(Ideal::principal(f), f));  // I = fR
  CHECK(minimal_fixed_ideal_check(Ideal::unit(R), f));
  CHECK_FALSE(minimal_fixed_ideal_check(I(R, {"x"}), f));  // f not in I
}

TEST_CASE("Leibniz rule") {
  auto R = parse_ring("F5[x,y]");
  Ideal unit = Ideal::unit(R);
  Ideal lx = leibniz_fjacobian(parse_poly(R, "x"), parse_poly(R, "y"), unit, unit);
  CHECK(lx.equals(I(R, {"x", "y"})));

  Ideal l2 = leibniz_fjacobian(parse_poly(R, "x"), parse_poly(R, "x+y^3"), unit, unit);
  CHECK(l2.equals(I(R, {"x", "y^3"})));

  // the F_9 factorization of x^2+y^2
  auto S = parse_ring("F3^2:t^2+1[x,y]");
  Poly u = parse_poly(S, "x+t*y");
  Poly v = parse_poly(S, "x-t*y");
  CHECK((u * v).equals(parse_poly(S, "x^2+y^2")));
  Ideal lS = leibniz_fjacobian(u, v, Ideal::unit(S), Ideal::unit(S));
  CHECK(lS.equals(I(S, {"x", "y"})));

  // non-coprime factors are rejected
  CHECK_THROWS_AS(
      leibniz_fjacobian(parse_poly(R, "x"), parse_poly(R, "x*y"), unit, unit), Error);
}

TEST_CASE("smooth factors have unit F-Jacobians, verified by the flag") {
  auto S = parse_ring("F3^2:t^2+1[x,y]");
  for (const char* txt : {"x+t*y", "x-t*y"}) {
    Poly u = parse_poly(S, txt);
    FjacResult res = fjacobian_from_seed(u, Ideal::unit(S));
    CHECK(res.jf.is_unit());
    CHECK(minimal_fixed_ideal_check(Ideal::unit(S), u));
  }
}

TEST_CASE("cyclic D-module closure contains the F-Jacobian") {
  auto R = parse_ring("F7[x,y,z]");
  Poly f = parse_poly(R, "x^3+y^3+z^3");
  Ideal jf = fjacobian_from_seed(f, Ideal::maximal_at_origin(R)).jf;
  for (const char* a : {"1", "x"}) {
    CyclicResult res = cyclic_dmodule_ideal(f, parse_poly(R, a), 2);
    CHECK(res.ideal.contains(jf));
  }
  auto R1 = parse_ring("F5[x]");
  CyclicResult smooth = cyclic_dmodule_ideal(parse_poly(R1, "x"), parse_poly(R1, "1"), 2);
  CHECK(smooth.ideal.is_unit());
  CHECK(smooth.stabilized);
}

TEST_CASE("Vassilev flag step check") {
  auto R1 = parse_ring("F5[x]");
  CHECK(vassilev_step_check({Ideal::principal(parse_poly(R1, "x")), Ideal::unit(R1)}).ok);

  auto R = parse_ring("F7[x,y,z]");
  std::vector<Ideal> chain = {Ideal::principal(parse_poly(R, "x^3+y^3+z^3")),
                              Ideal::maximal_at_origin(R), Ideal::unit(R)};
  VassilevResult res = vassilev_step_check(chain);
  CHECK(res.ok);

  auto R2 = parse_ring("F5[x,y]");
  std::vector<Ideal> bad = {I(R2, {"x"}), I(R2, {"y"})};
  CHECK_THROWS_AS(vassilev_step_check(bad), Error);
}

TEST_CASE("fixed point of the stabilized flag") {
  auto R7 = parse_ring("F7[x,y,z]");
  Poly f = parse_poly(R7, "x^3+y^3+z^3");
  Ideal jf = fjacobian_from_seed(f, Ideal::maximal_at_origin(R7)).jf;
  uint64_t p = 7;
  CHECK(bracket_power(jf, p).colon(f.pow(p - 1)).equals(jf));
  CHECK(jf.member(f));
}

TEST_CASE("p-power rule for the F-Jacobian") {
  struct Sample {
    const char* ring;
    const char* f;
  };
  for (Sample s : {Sample{"F3[x,y]", "x^2+y^2"}, Sample{"F7[x,y,z]", "x^3+y^3+z^3"}}) {
    auto R = parse_ring(s.ring);
    Poly f = parse_poly(R, s.f);
    uint64_t p = R->field.p();
    Ideal m = Ideal::maximal_at_origin(R);
    Ideal jf = fjacobian_from_seed(f, m).jf;
    Ideal jfp = fjacobian_from_seed(f.pow(p), bracket_power(m, p)).jf;
    CHECK(jfp.equals(bracket_power(jf, p)));
    // power containments f^{p-1} J_F(f) inside J_F(f^p) inside J_F(f)
    CHECK(jfp.contains(jf.times(f.pow(p - 1))));
    CHECK(jf.contains(jfp));
  }
}

TEST_CASE("F-purity propagation to R/J_F") {
  struct Sample {
    const char* ring;
    const char* f;
  };
  for (Sample s : {Sample{"F3[x,y]", "x^2+y^2"}, Sample{"F7[x,y,z]", "x^3+y^3+z^3"}}) {
    auto R = parse_ring(s.ring);
    Poly f = parse_poly(R, s.f);
    uint64_t p = R->field.p();
    REQUIRE(fedder_fpure_at_origin(f));
    Ideal jf = fjacobian_from_seed(f, Ideal::maximal_at_origin(R)).jf;
    Ideal colon = bracket_power(jf, p).colon(jf);
    CHECK(colon.member(f.pow(p - 1)));
    Ideal mp = bracket_power(Ideal::maximal_at_origin(R), p);
    bool inside = true;
    for (const auto& g : colon.gb()) inside = inside && mp.member(g);
    CHECK_FALSE(inside);
  }
}

TEST_CASE("homogeneous seeds give homogeneous F-Jacobians") {
  struct Sample {
    const char* ring;
    const char* f;
  };
  for (Sample s : {Sample{"F3[x,y]", "x^2+y^2"}, Sample{"F7[x,y,z]", "x^3+y^3+z^3"},
                   Sample{"F5[x,y]", "x^4+y^4"}}) {
    auto R = parse_ring(s.ring);
    Poly f = parse_poly(R, s.f);
    REQUIRE(f.is_homogeneous());
    FjacResult res = fjacobian_from_seed(f, Ideal::maximal_at_origin(R));
    for (const auto& g : res.jf.gb()) CHECK(g.is_homogeneous());
  }
}

TEST_CASE("seed below the left limit tau(f^{1-eps})") {
  struct Sample {
    const char* ring;
    const char* f;
  };
  for (Sample s : {Sample{"F7[x,y,z]", "x^3+y^3+z^3"}, Sample{"F5[x,y,z]", "x^3+y^3+z^3"},
                   Sample{"F3[x,y]", "x^2+y^2"}}) {
    auto R = parse_ring(s.ring);
    Poly f = parse_poly(R, s.f);
    int64_t pm1 = int64_t(R->field.p()) - 1;
    Ideal eps = tau_minus_epsilon(f, Alpha{pm1, 1});  // alpha = 1
    CHECK(eps.contains(Ideal::maximal_at_origin(R)));
  }
}
