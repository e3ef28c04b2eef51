#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "toppcomb/perm.hpp"

using namespace toppcomb;

TEST_CASE("construction, parsing, and accessors") {
    const Permutation p({3, 1, 4, 2});
    CHECK(p.size() == 4);
    CHECK(p.at(1) == 3);
    CHECK(p.at(4) == 2);
    CHECK(p.word() == std::vector<int>{3, 1, 4, 2});
    CHECK(p.str() == "3,1,4,2");
    CHECK(Permutation::parse("3,1,4,2") == p);
    CHECK(Permutation::parse(" 3, 1, 4, 2") == p);

    CHECK(Permutation::identity(3) == Permutation({1, 2, 3}));
    CHECK(Permutation::identity(5).is_identity());
    CHECK_FALSE(p.is_identity());

    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("3,x,1"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1,2 3"), std::invalid_argument);
}

TEST_CASE("excedance sets") {
    CHECK(excedance_set(Permutation::parse("3,9,6,7,5,2,4,8,1")) == std::vector<int>{1, 2, 3, 4});
    CHECK(excedance_set(Permutation::identity(6)).empty());
    CHECK(excedance_set(Permutation({2, 1})) == std::vector<int>{1});
    // The last position never exceeds: p(n) <= n always.
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        do {
            const auto exc = excedance_set(Permutation(w));
            CHECK(std::find(exc.begin(), exc.end(), n) == exc.end());
        } while (std::next_permutation(w.begin(), w.end()));
    }
}

TEST_CASE("inverse") {
    const Permutation p = Permutation::parse("3,1,5,2,4");
    CHECK(inverse(p) == Permutation::parse("2,4,1,5,3"));
    std::vector<int> w{1, 2, 3, 4, 5, 6};
    do {
        const Permutation q(w);
        const Permutation qi = inverse(q);
        bool ok = true;
        for (int i = 1; i <= 6; ++i) ok = ok && qi.at(q.at(i)) == i;
        CHECK(ok);
    } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("reverse complement") {
    CHECK(reverse_complement(Permutation::parse("2,5,1,3,4")) == Permutation::parse("2,3,5,1,4"));
    CHECK(reverse_complement(Permutation::parse("3,1,4,2")) == Permutation::parse("3,1,4,2"));
    // Involution, and entrywise n+1-p at the mirrored index.
    std::vector<int> w{1, 2, 3, 4, 5};
    do {
        const Permutation p(w);
        const Permutation h = reverse_complement(p);
        CHECK(reverse_complement(h) == p);
        bool ok = true;
        for (int i = 1; i <= 5; ++i) ok = ok && h.at(i) == 6 - p.at(6 - i);
        CHECK(ok);
    } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("cycle decomposition: canonical form") {
    const Permutation p = Permutation::parse("3,9,6,7,5,2,4,8,1");
    const CycleDecomposition c = to_cycles(p);
    CHECK(c.cycles == std::vector<std::vector<int>>{{8}, {5}, {4, 7}, {1, 3, 6, 2, 9}});
    CHECK(c.str() == "(8)(5)(47)(13629)");
    CHECK(from_cycles(c) == p);

    CHECK(to_cycles(Permutation::identity(3)).str() == "(3)(2)(1)");
    CHECK(to_cycles(Permutation({2, 1})).str() == "(12)");
}

TEST_CASE("cycle decomposition: spacing above nine elements") {
    const Permutation p = Permutation::parse("10,2,3,4,5,6,7,8,9,1");
    CHECK(to_cycles(p).str() == "(9)(8)(7)(6)(5)(4)(3)(2)(1 10)");
}

TEST_CASE("cycle round trips over a full symmetric group") {
    std::vector<int> w{1, 2, 3, 4, 5, 6};
    do {
        const Permutation p(w);
        const CycleDecomposition c = to_cycles(p);
        // Least element first in each cycle, least elements decreasing across.
        int prev_least = 7;
        for (const auto& cyc : c.cycles) {
            REQUIRE(!cyc.empty());
            CHECK(*std::min_element(cyc.begin(), cyc.end()) == cyc.front());
            CHECK(cyc.front() < prev_least);
            prev_least = cyc.front();
        }
        CHECK(from_cycles(c) == p);
    } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("cycle list validation") {
    CHECK_THROWS_AS(from_cycles({{}}), std::invalid_argument);
    CHECK_THROWS_AS(from_cycles({{{1, 2}, {2, 3}}}), std::invalid_argument);  // 2 repeated
    CHECK_THROWS_AS(from_cycles({{{1, 3}}}), std::invalid_argument);          // 3 out of range for n=2
    CHECK_THROWS_AS(from_cycles({{{0, 1}}}), std::invalid_argument);
    // Any partition is accepted, canonical or not.
    CHECK(from_cycles({{{2, 3}, {1}}}) == Permutation({1, 3, 2}));
}
