#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "wlpoly/errors.hpp"
#include "wlpoly/sequences.hpp"

using namespace wlt;

namespace {

/// The transform oracle: l_n = n! L_n^{(a-n)}(-x), built from the classical
/// family by substitution only.  Independent of the modified recurrence.
MPoly modified_laguerre_oracle(int n) {
    MPoly p = classical_laguerre(n);
    p = p.substitute(Var::alpha, var_alpha() - MPoly(n));
    p = p.substitute(Var::x, -var_x());
    return MPoly(Rat(factorial(n))) * p;
}

} // namespace

TEST_CASE("classical laguerre initial members") {
    CHECK(classical_laguerre(0) == MPoly(1));
    CHECK(classical_laguerre(1) == -var_x() + var_alpha() + MPoly(1));
    // (x^2 - 2(a+2)x + (a+1)(a+2)) / 2
    CHECK(classical_laguerre(2) ==
          P({{2, 0, 0, 1, 2},
             {1, 1, 0, -1, 1},
             {1, 0, 0, -2, 1},
             {0, 2, 0, 1, 2},
             {0, 1, 0, 3, 2},
             {0, 0, 0, 1, 1}}));
}

TEST_CASE("modified laguerre initial members") {
    CHECK(modified_laguerre(0) == MPoly(1));
    CHECK(modified_laguerre(1) == var_x() + var_alpha());
    CHECK(modified_laguerre(2) == P({{2, 0, 0, 1, 1},
                                     {1, 1, 0, 2, 1},
                                     {0, 2, 0, 1, 1},
                                     {0, 1, 0, -1, 1}}));
    // x^3 + 3ax^2 + 3a(a-1)x + a(a-1)(a-2)
    CHECK(modified_laguerre(3) == P({{3, 0, 0, 1, 1},
                                     {2, 1, 0, 3, 1},
                                     {1, 2, 0, 3, 1},
                                     {1, 1, 0, -3, 1},
                                     {0, 3, 0, 1, 1},
                                     {0, 2, 0, -3, 1},
                                     {0, 1, 0, 2, 1}}));
    CHECK_THROWS_AS(modified_laguerre(-1), std::invalid_argument);
}

TEST_CASE("modified laguerre equals the transform oracle up to n = 10") {
    for (int n = 0; n <= 10; ++n)
        CHECK(modified_laguerre(n) == modified_laguerre_oracle(n));
}

TEST_CASE("mixed-parameter identity for classical laguerre") {
    // n L_n^{(a)} = (-x+a+1) L_{n-1}^{(a+1)} - x L_{n-2}^{(a+2)}
    for (int n = 2; n <= 10; ++n) {
        const MPoly lhs = Rat(n) * classical_laguerre(n);
        const MPoly shift1 = classical_laguerre(n - 1).substitute(
            Var::alpha, var_alpha() + MPoly(1));
        const MPoly shift2 = classical_laguerre(n - 2).substitute(
            Var::alpha, var_alpha() + MPoly(2));
        CHECK(lhs == (-var_x() + var_alpha() + MPoly(1)) * shift1 -
                         var_x() * shift2);
    }
}

TEST_CASE("hermite members") {
    CHECK(hermite(0) == MPoly(1));
    CHECK(hermite(1) == var_x());
    CHECK(hermite(2) == P({{2, 0, 0, 1, 1}, {0, 0, 0, -1, 1}}));
    CHECK(hermite(3) == P({{3, 0, 0, 1, 1}, {1, 0, 0, -3, 1}}));
}

TEST_CASE("appell property and monicity for the modified families") {
    for (int n = 1; n <= 12; ++n) {
        CHECK(modified_laguerre(n).derivative_x() ==
              Rat(n) * modified_laguerre(n - 1));
        CHECK(hermite(n).derivative_x() == Rat(n) * hermite(n - 1));
        CHECK(modified_laguerre(n).is_monic_in_x(n));
        CHECK(hermite(n).is_monic_in_x(n));
    }
}

TEST_CASE("modified jacobi at fixed parameters") {
    const Rat a0 = make_rat(Int(1), Int(2));
    const Rat b0 = make_rat(Int(1), Int(3));
    CHECK(modified_jacobi(0, a0, b0) == MPoly(1));

    const MPoly a1 = modified_jacobi(1, a0, b0);
    CHECK(a1.is_monic_in_x(1));
    CHECK(a1.derivative_x() == MPoly(1));

    const MPoly a2 = modified_jacobi(2, a0, b0);
    CHECK(a2.is_monic_in_x(2));
    // self-consistency: the Appell property and a zero recurrence residual
    CHECK(a2.derivative_x() == Rat(2) * a1);
    const Rat s = a0 + b0;
    const MPoly residual =
        MPoly(Rat(s - 1)) * a2 -
        ((MPoly(Rat(s - 2)) * var_x() + MPoly(Rat(a0 - b0))) * a1 +
         (var_x() * var_x() - MPoly(1)));
    CHECK(residual.is_zero());

    for (int n = 1; n <= 8; ++n) {
        const MPoly an = modified_jacobi(n, a0, b0);
        CHECK(an.is_monic_in_x(n));
        CHECK(an.derivative_x() == Rat(n) * modified_jacobi(n - 1, a0, b0));
    }
}

TEST_CASE("jacobi singular parameters are rejected") {
    // alpha+beta = 1 makes the n = 2 step divide by zero
    CHECK_THROWS_AS(
        modified_jacobi(2, make_rat(Int(1), Int(2)), make_rat(Int(1), Int(2))),
        SingularParameter);
    // alpha+beta = 0 already breaks n = 1
    CHECK_THROWS_AS(modified_jacobi(1, Rat(1), Rat(-1)), SingularParameter);
    // n = 0 never divides
    CHECK(modified_jacobi(0, Rat(1), Rat(-1)) == MPoly(1));
}

TEST_CASE("appell generation from coefficients") {
    // Hermite: c_2 = -1, everything else zero
    AppellSpec hermite_spec;
    hermite_spec.kind = AppellSpec::Kind::hermite;
    hermite_spec.c = {MPoly(0), MPoly(-1), MPoly(0), MPoly(0)};
    CHECK(appell_from_coeffs(hermite_spec, 3) == hermite(3));
    CHECK(appell_from_coeffs(hermite_spec, 4) == hermite(4));

    // all c_k = 0 gives the monomials
    AppellSpec zero_spec;
    zero_spec.c = {MPoly(0), MPoly(0), MPoly(0), MPoly(0)};
    CHECK(appell_from_coeffs(zero_spec, 4) == P({{4, 0, 0, 1, 1}}));

    CHECK_THROWS_AS(appell_from_coeffs(zero_spec, 5), InsufficientCoefficients);

    AppellSpec bad;
    bad.c = {var_x()};
    CHECK_THROWS_AS(appell_from_coeffs(bad, 1), std::invalid_argument);
}

TEST_CASE("triangular inversion of z-values") {
    // Hermite values He_n(0) = 1, 0, -1, 0, 3
    const std::vector<MPoly> z = {MPoly(1), MPoly(0), MPoly(-1), MPoly(0),
                                  MPoly(3)};
    const auto c = c_from_z(z);
    REQUIRE(c.size() == 4);
    CHECK(c[0] == MPoly(0));
    CHECK(c[1] == MPoly(-1));
    CHECK(c[2] == MPoly(0));
    CHECK(c[3] == MPoly(0));

    // z_n = 0 for n >= 1 forces every c_n = 0
    const auto zeros = c_from_z({MPoly(1), MPoly(0), MPoly(0), MPoly(0)});
    for (const auto& entry : zeros) CHECK(entry.is_zero());

    CHECK_THROWS_AS(c_from_z({MPoly(2)}), BadNormalization);
    CHECK_THROWS_AS(c_from_z({}), BadNormalization);
}

TEST_CASE("laguerre coefficients recovered from constant terms") {
    // z_n = l_n(0) = a(a-1)...(a-n+1), and c_n comes out (-1)^{n-1}(n-1)! a
    std::vector<MPoly> z;
    for (int n = 0; n <= 4; ++n)
        z.push_back(modified_laguerre(n).substitute(Var::x, MPoly(0)));
    const auto c = c_from_z(z);
    REQUIRE(c.size() == 4);
    CHECK(c[0] == var_alpha());
    CHECK(c[1] == -var_alpha());
    CHECK(c[2] == Rat(2) * var_alpha());
    CHECK(c[3] == Rat(-6) * var_alpha());
}

TEST_CASE("round trip: c_from_z then appell_from_coeffs reproduces the family") {
    for (const bool laguerre : {true, false}) {
        const auto member = [&](int n) {
            return laguerre ? modified_laguerre(n) : hermite(n);
        };
        std::vector<MPoly> z;
        for (int n = 0; n <= 8; ++n)
            z.push_back(member(n).substitute(Var::x, MPoly(0)));
        AppellSpec spec;
        spec.c = c_from_z(z);
        for (int n = 0; n <= 8; ++n)
            CHECK(appell_from_coeffs(spec, n) == member(n));
    }
}
