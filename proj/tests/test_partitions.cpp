#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_support.hpp"
#include "wlpoly/errors.hpp"
#include "wlpoly/partition.hpp"

using namespace wlt;

namespace {

Partition pt(std::initializer_list<int> parts) {
    return Partition(std::vector<int>(parts));
}

std::set<std::pair<Partition, int>> strip_set(const std::vector<BorderStrip>& v,
                                              bool smaller_side) {
    std::set<std::pair<Partition, int>> out;
    for (const auto& s : v)
        out.emplace(smaller_side ? s.smaller : s.larger, s.height);
    return out;
}

} // namespace

TEST_CASE("parsing") {
    CHECK(Partition::parse("3,1") == pt({3, 1}));
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition::parse("3, 1") == pt({3, 1}));
    CHECK(Partition::parse("3,1,0") == pt({3, 1}));
    CHECK(Partition::parse("0") == Partition());
    CHECK_THROWS_AS(Partition::parse("1,3"), MalformedPartition);
    CHECK_THROWS_AS(Partition::parse("a"), MalformedPartition);
    CHECK_THROWS_AS(Partition::parse("3,,1"), MalformedPartition);
    CHECK_THROWS_AS(Partition::parse("-2"), MalformedPartition);
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 3}), MalformedPartition);
    CHECK(pt({3, 1}).to_text() == "3,1");
    CHECK(pt({3, 1}).to_json_text() == "[3,1]");
    CHECK(Partition().to_text() == "");
}

TEST_CASE("enumeration in reverse lexicographic order") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
    CHECK(partitions_of(2) == std::vector<Partition>{pt({2}), pt({1, 1})});
    const auto five = partitions_of(5);
    CHECK(five.size() == 7);
    CHECK(five.front() == pt({5}));
    CHECK(five.back() == pt({1, 1, 1, 1, 1}));
    CHECK(std::is_sorted(five.begin(), five.end(),
                         [](const Partition& a, const Partition& b) {
                             return a.parts() > b.parts();
                         }));
    // classical counts, against an independent brute-force recursion
    for (int n = 0; n <= 14; ++n)
        CHECK(static_cast<long>(partitions_of(n).size()) ==
              brute_partition_count(n));
    // each partition appears exactly once
    for (int n = 0; n <= 10; ++n) {
        const auto all = partitions_of(n);
        CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
        for (const auto& p : all) CHECK(p.size() == n);
    }
}

TEST_CASE("degree vectors") {
    CHECK(degree_vector(pt({2, 2})).entries == std::vector<int>{3, 2});
    CHECK(degree_vector(pt({3, 1})).entries == std::vector<int>{4, 1});
    CHECK(degree_vector(Partition()).entries.empty());
    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        const Partition p = rng.partition(10);
        const auto dv = degree_vector(p);
        for (std::size_t k = 0; k + 1 < dv.entries.size(); ++k)
            CHECK(dv.entries[k] > dv.entries[k + 1]);
        CHECK(partition_from_degree_vector(dv) == p);
    }
}

TEST_CASE("covers down") {
    const auto steps = covers_down(pt({2, 1}));
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].smaller == pt({1, 1}));
    CHECK(steps[0].content == 1);
    CHECK(steps[0].row == 1);
    CHECK(steps[1].smaller == pt({2}));
    CHECK(steps[1].content == -1);

    const auto one = covers_down(pt({1}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].smaller == Partition());
    CHECK(one[0].content == 0);

    const auto square = covers_down(pt({2, 2}));
    REQUIRE(square.size() == 1);
    CHECK(square[0].smaller == pt({2, 1}));
    CHECK(square[0].content == 0);

    CHECK_THROWS_AS(covers_down(Partition()), EmptyPartition);

    // count equals the number of distinct part values
    Rng rng(12);
    for (int i = 0; i < 80; ++i) {
        const Partition p = rng.partition(12);
        if (p.empty()) continue;
        const std::set<int> distinct(p.parts().begin(), p.parts().end());
        CHECK(covers_down(p).size() == distinct.size());
    }
}

TEST_CASE("covers up") {
    const auto one = covers_up(pt({1}));
    REQUIRE(one.size() == 2);
    CHECK(one[0].larger == pt({2}));
    CHECK(one[0].content == 1);
    CHECK(one[1].larger == pt({1, 1}));
    CHECK(one[1].content == -1);

    const auto empty = covers_up(Partition());
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].larger == pt({1}));
    CHECK(empty[0].content == 0);

    const auto hook = covers_up(pt({2, 1}));
    REQUIRE(hook.size() == 3);
    CHECK(hook[0].larger == pt({3, 1}));
    CHECK(hook[0].content == 2);
    CHECK(hook[1].larger == pt({2, 2}));
    CHECK(hook[1].content == 0);
    CHECK(hook[2].larger == pt({2, 1, 1}));
    CHECK(hook[2].content == -2);

    // count = distinct part values + 1; up/down are inverse relations
    Rng rng(13);
    for (int i = 0; i < 80; ++i) {
        const Partition p = rng.partition(10);
        const std::set<int> distinct(p.parts().begin(), p.parts().end());
        const auto ups = covers_up(p);
        CHECK(ups.size() == distinct.size() + 1);
        for (const auto& up : ups) {
            const auto downs = covers_down(up.larger);
            CHECK(std::any_of(downs.begin(), downs.end(),
                              [&](const CoverStep& d) {
                                  return d.smaller == p &&
                                         d.content == up.content;
                              }));
        }
    }
}

TEST_CASE("border strips down") {
    CHECK(strip_set(border_strips_down(pt({2, 2}), 2), true) ==
          std::set<std::pair<Partition, int>>{{pt({2}), 0}, {pt({1, 1}), 1}});
    CHECK(strip_set(border_strips_down(pt({2}), 2), true) ==
          std::set<std::pair<Partition, int>>{{Partition(), 0}});
    CHECK(strip_set(border_strips_down(pt({2, 2}), 3), true) ==
          std::set<std::pair<Partition, int>>{{pt({1}), 1}});
    // the staircase is a 2-core: no domino comes off
    CHECK(border_strips_down(pt({2, 1}), 2).empty());
    CHECK(border_strips_down(Partition(), 1).empty());
    CHECK_THROWS_AS(border_strips_down(pt({2}), 0), std::invalid_argument);
}

TEST_CASE("border strips up") {
    CHECK(strip_set(border_strips_up(Partition(), 2), false) ==
          std::set<std::pair<Partition, int>>{{pt({2}), 0}, {pt({1, 1}), 1}});
    // (2,1)/(1) is corner-connected only, hence not a strip
    CHECK(strip_set(border_strips_up(pt({1}), 2), false) ==
          std::set<std::pair<Partition, int>>{{pt({3}), 0},
                                              {pt({1, 1, 1}), 1}});
    CHECK(strip_set(border_strips_up(pt({2}), 1), false) ==
          std::set<std::pair<Partition, int>>{{pt({3}), 0}, {pt({2, 1}), 0}});
}

TEST_CASE("size-1 strips agree with covers") {
    Rng rng(19);
    for (int i = 0; i < 60; ++i) {
        const Partition p = rng.partition(10);
        if (p.empty()) continue;
        const auto strips = border_strips_down(p, 1);
        const auto covers = covers_down(p);
        REQUIRE(strips.size() == covers.size());
        for (const auto& s : strips) {
            CHECK(s.height == 0);
            CHECK(std::any_of(covers.begin(), covers.end(),
                              [&](const CoverStep& c) {
                                  return c.smaller == s.smaller;
                              }));
        }
    }
}

TEST_CASE("strip duality: removing from above is adding from below") {
    for (int n = 0; n <= 10; ++n) {
        for (const Partition& p : partitions_of(n)) {
            for (int k = 1; k <= 4; ++k) {
                for (const auto& down : border_strips_down(p, k)) {
                    const auto ups = border_strips_up(down.smaller, k);
                    CHECK(std::any_of(ups.begin(), ups.end(),
                                      [&](const BorderStrip& u) {
                                          return u.larger == p &&
                                                 u.height == down.height;
                                      }));
                }
                for (const auto& up : border_strips_up(p, k)) {
                    const auto downs = border_strips_down(up.larger, k);
                    CHECK(std::any_of(downs.begin(), downs.end(),
                                      [&](const BorderStrip& d) {
                                          return d.smaller == p &&
                                                 d.height == up.height;
                                      }));
                }
            }
        }
    }
}

TEST_CASE("domino heights are 0 or 1") {
    for (int n = 0; n <= 10; ++n) {
        for (const Partition& p : partitions_of(n)) {
            for (const auto& s : border_strips_down(p, 2)) {
                CHECK(s.size_k == 2);
                CHECK((s.height == 0 || s.height == 1));
            }
        }
    }
}

TEST_CASE("path counts") {
    CHECK(f_count(Partition()) == 1);
    for (int n = 1; n <= 9; ++n) CHECK(f_count(pt({n})) == 1);
    CHECK(f_count(pt({2, 1})) == 2);
    CHECK(f_count(pt({3, 1})) == 3);
    CHECK(f_count_oracle(pt({2, 2})) == 2);
    CHECK(f_count_oracle(Partition()) == 1);
    CHECK_THROWS_AS(f_count_oracle(pt({13}), 12), OracleBoundExceeded);
    CHECK(f_count_oracle(pt({13}), 13) == 1);
}

TEST_CASE("formula count equals lattice-path count up to size 12") {
    for (int n = 0; n <= 12; ++n) {
        for (const Partition& p : partitions_of(n))
            CHECK(f_count(p) == f_count_oracle(p));
    }
}

TEST_CASE("F recurrence, up-sum, and signed domino sum") {
    for (int n = 0; n <= 10; ++n) {
        for (const Partition& p : partitions_of(n)) {
            if (!p.empty()) {
                Int sum(0);
                for (const auto& step : covers_down(p))
                    sum += f_count(step.smaller);
                CHECK(sum == f_count(p));
            }
            // Σ_{λ⋗μ} F_λ = (|μ|+1) F_μ
            Int up(0);
            for (const auto& step : covers_up(p)) up += f_count(step.larger);
            CHECK(up == Int(n + 1) * f_count(p));
            // Σ_{λ∈R2+(μ)} (-1)^ht F_λ = 0
            Int signed_sum(0);
            for (const auto& strip : border_strips_up(p, 2)) {
                const Int f = f_count(strip.larger);
                signed_sum += strip.height % 2 == 0 ? f : -f;
            }
            CHECK(signed_sum == 0);
        }
    }
}

TEST_CASE("plancherel normalization") {
    for (int n = 0; n <= 10; ++n) {
        Int sum(0);
        for (const Partition& p : partitions_of(n)) {
            const Int f = f_count(p);
            sum += f * f;
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("meet and join") {
    const auto [meet, join] = meet_join(pt({3, 1}), pt({2, 2}));
    CHECK(meet == pt({2, 1}));
    CHECK(join == pt({3, 2}));
    const auto [m2, j2] = meet_join(pt({2}), Partition());
    CHECK(m2 == Partition());
    CHECK(j2 == pt({2}));
    Rng rng(8);
    for (int i = 0; i < 60; ++i) {
        const Partition p = rng.partition(9);
        const auto [m, j] = meet_join(p, p);
        CHECK(m == p);
        CHECK(j == p);
    }
}

TEST_CASE("conjugation") {
    CHECK(conjugate(pt({3, 1})) == pt({2, 1, 1}));
    CHECK(conjugate(pt({4, 4, 4})) == pt({3, 3, 3, 3}));
    CHECK(conjugate(Partition()) == Partition());
    Rng rng(77);
    for (int i = 0; i < 80; ++i) {
        const Partition p = rng.partition(12);
        CHECK(conjugate(conjugate(p)) == p);
        CHECK(conjugate(p).size() == p.size());
    }
}
