#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "wlpoly/errors.hpp"
#include "wlpoly/recurrence.hpp"
#include "wlpoly/sequences.hpp"
#include "wlpoly/wronskian.hpp"

using namespace wlt;

namespace {

Partition pt(std::initializer_list<int> parts) {
    return Partition(std::vector<int>(parts));
}

MPoly oracle(FamilyKind kind, const Partition& p) {
    WronskianRequest req;
    req.kind = kind;
    req.partition = p;
    return wronskian_poly(req);
}

} // namespace

TEST_CASE("content/domino recurrence on small partitions") {
    CHECK(wlp_thm1(Partition()) == MPoly(1));
    CHECK(wlp_thm1(pt({1})) == var_x() + var_alpha());
    // hand value: (x+a+1)(x+a) - x
    CHECK(wlp_thm1(pt({1, 1})) == P({{2, 0, 0, 1, 1},
                                     {1, 1, 0, 2, 1},
                                     {0, 2, 0, 1, 1},
                                     {0, 1, 0, 1, 1}}));
    CHECK(wlp_thm1(pt({2, 1})) ==
          oracle(FamilyKind::modified_laguerre, pt({2, 1})));
}

TEST_CASE("trivial partitions reduce to the three-term recurrence") {
    for (int n = 1; n <= 10; ++n)
        CHECK(wlp_thm1(pt({n})) == modified_laguerre(n));
}

TEST_CASE("alternative recurrence") {
    CHECK(wlp_alt(Partition()) == MPoly(1));
    // hand value for (2): (x+a)(x+a) - a
    CHECK(wlp_alt(pt({2})) == P({{2, 0, 0, 1, 1},
                                 {1, 1, 0, 2, 1},
                                 {0, 2, 0, 1, 1},
                                 {0, 1, 0, -1, 1}}));
    CHECK(wlp_alt(pt({2})) == modified_laguerre(2));
    CHECK(wlp_alt(pt({1, 1})) == wlp_thm1(pt({1, 1})));
}

TEST_CASE("hermite recurrence") {
    CHECK(whp_recurrence(pt({1, 1})) == P({{2, 0, 0, 1, 1}, {0, 0, 0, 1, 1}}));
    for (int n = 1; n <= 10; ++n)
        CHECK(whp_recurrence(pt({n})) == hermite(n));
    CHECK(whp_recurrence(pt({2, 1})) == oracle(FamilyKind::hermite, pt({2, 1})));
}

TEST_CASE("all three recurrences agree with the determinant oracle") {
    for (int n = 0; n <= 6; ++n) {
        for (const Partition& p : partitions_of(n)) {
            const MPoly laguerre = oracle(FamilyKind::modified_laguerre, p);
            CHECK(wlp_thm1(p) == laguerre);
            CHECK(wlp_alt(p) == laguerre);
            CHECK(whp_recurrence(p) == oracle(FamilyKind::hermite, p));
        }
    }
}

TEST_CASE("scaled table entries divide exactly and stay monic") {
    const RecurrenceTable table(RecurrenceFamily::laguerre_thm1);
    for (int n = 0; n <= 6; ++n) {
        for (const Partition& p : partitions_of(n)) {
            const MPoly scaled = table.scaled(p);
            CHECK(scaled.integer_coefficients());
            CHECK(table.normalized(p).is_monic_in_x(n));
        }
    }
}

TEST_CASE("materialized table matches incremental evaluation") {
    const RecurrenceTable table(RecurrenceFamily::hermite);
    table.materialize_up_to(6, 2);
    for (int n = 0; n <= 6; ++n) {
        for (const Partition& p : partitions_of(n))
            CHECK(table.normalized(p) == whp_recurrence(p));
    }
}

TEST_CASE("proof decomposition base case") {
    const auto pd = proof_decomposition(pt({1}));
    CHECK(pd.a == var_x() + var_alpha());
    CHECK(pd.b.is_zero());
    CHECK(pd.c.is_zero());
    CHECK(pd.sign_prefactor == Rat(1));
    CHECK_THROWS_AS(proof_decomposition(Partition()), EmptyPartition);
    CHECK_THROWS_AS(proof_decomposition(pt({2, 1, 1, 1}), 3),
                    LengthBoundExceeded);
}

TEST_CASE("decomposition reproduces the recurrence terms") {
    const RecurrenceTable& table = thm1_table();
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& p : partitions_of(n)) {
            if (p.length() > 5) continue;
            const auto pd = proof_decomposition(p);
            CHECK(pd.b.is_zero());

            MPoly cover_sum;
            for (const CoverStep& step : covers_down(p))
                cover_sum += (var_x() + var_alpha() - MPoly(step.content)) *
                             table.scaled(step.smaller);
            CHECK(pd.a == cover_sum);

            MPoly strip_sum;
            for (const BorderStrip& strip : border_strips_down(p, 2)) {
                const MPoly term = table.scaled(strip.smaller);
                if (strip.height % 2 == 0)
                    strip_sum += term;
                else
                    strip_sum -= term;
            }
            CHECK(pd.c == var_x() * Rat(n - 1) * strip_sum);

            CHECK(pd.a + MPoly(pd.sign_prefactor) * pd.b + pd.c ==
                  table.scaled(p));
        }
    }
}

TEST_CASE("t-map is a sign-flipping involution") {
    for (int r = 1; r <= 5; ++r) {
        // staircase degree vector plus a couple of random strict vectors
        std::vector<DegreeVector> vectors;
        std::vector<int> staircase(r);
        for (int i = 0; i < r; ++i) staircase[i] = r - i;
        vectors.push_back(degree_vector(Partition(staircase)));
        Rng rng(100 + r);
        for (int extra = 0; extra < 2; ++extra) {
            std::vector<int> entries(r);
            int value = rng.pick(r, r + 6);
            for (int i = 0; i < r; ++i) {
                entries[i] = value;
                value -= rng.pick(1, 3);
            }
            vectors.push_back(DegreeVector{entries});
        }
        for (const auto& dv : vectors) {
            const auto check = verify_t_map(r, dv);
            CHECK(check.involution);
            CHECK(check.sign_flip);
            CHECK(check.value_match);
            CHECK(check.vector_match);
            // |X| = (r-1)·r! pairs with σ(j) != r out of r·r! slots
            CHECK(check.pairs == Int(Int(r - 1) * factorial(r)).get_si());
        }
    }
}
