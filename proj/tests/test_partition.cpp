#include <doctest.h>

#include <algorithm>

#include "rppc/enumerate.hpp"
#include "rppc/errors.hpp"
#include "rppc/partition.hpp"

using namespace rppc;

TEST_CASE("construction normalizes and validates") {
    CHECK(Partition({3, 2, 2}).parts() == std::vector<int>{3, 2, 2});
    CHECK(Partition({3, 2, 0, 0}).parts() == std::vector<int>{3, 2});
    CHECK(Partition{}.empty());
    CHECK(Partition({0, 0}).empty());
    CHECK_THROWS_AS(Partition({2, 3}), NotWeaklyDecreasing);
    CHECK_THROWS_AS(Partition({1, 0, 1}), NotWeaklyDecreasing);
    CHECK_THROWS_AS(Partition({-1}), NotWeaklyDecreasing);
}

TEST_CASE("parts, length, size") {
    Partition p{4, 2, 1};
    CHECK(p.length() == 3);
    CHECK(p.size() == 7);
    CHECK(p.part(1) == 4);
    CHECK(p.part(3) == 1);
    CHECK(p.part(4) == 0);
    CHECK(p.part(0) == 0);
}

TEST_CASE("conjugate examples") {
    CHECK(Partition({3, 1}).conjugate() == Partition{2, 1, 1});
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition({2, 2}).conjugate() == Partition{2, 2});
}

TEST_CASE("conjugation is an involution, exhaustively to size 12") {
    for (const Partition& p : partitions_up_to(12))
        CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("containment") {
    CHECK(Partition({2, 1}).contained_in(Partition{3, 1}));
    CHECK(Partition{}.contained_in(Partition{1}));
    CHECK_FALSE(Partition({2}).contained_in(Partition{1, 1}));
    CHECK_FALSE(Partition({1, 1, 1}).contained_in(Partition{3}));
}

TEST_CASE("text forms") {
    CHECK(Partition({3, 2, 1}).to_string() == "3,2,1");
    CHECK(Partition{}.to_string() == "0");
    CHECK(Partition({3, 2, 1}).to_paren_string() == "(3,2,1)");
    CHECK(Partition{}.to_paren_string() == "()");
}

TEST_CASE("display comparator is graded lex, largest first") {
    CHECK(graded_lex_greater(Partition{2, 2}, Partition{2, 1}));
    CHECK(graded_lex_greater(Partition{2, 1}, Partition{2}));
    CHECK(graded_lex_greater(Partition{2}, Partition{1, 1}));
    CHECK_FALSE(graded_lex_greater(Partition{1, 1}, Partition{2}));
    CHECK_FALSE(graded_lex_greater(Partition{2}, Partition{2}));
}

TEST_CASE("corpus helpers cover every partition once, in order") {
    std::vector<Partition> all = partitions_up_to(6);
    CHECK(all.size() == 30); // 1+1+2+3+5+7+11
    CHECK(all.front() == Partition{});
    CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());

    std::vector<Partition> subs = subpartitions(Partition{2, 1});
    std::vector<Partition> expected = {{}, {1}, {1, 1}, {2}, {2, 1}};
    CHECK(subs == expected);
    for (const Partition& mu : subs) CHECK(mu.contained_in(Partition{2, 1}));
}
