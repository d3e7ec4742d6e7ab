#include <doctest.h>

#include <algorithm>
#include <set>

#include "rppc/enumerate.hpp"
#include "rppc/errors.hpp"
#include "rppc/reading.hpp"
#include "rppc/rpp_crystal.hpp"
#include "rppc/word_crystal.hpp"

#include "fixtures.hpp"

using namespace rppc;

namespace {

Filling grid(std::vector<int> outer, std::vector<int> entries, int m) {
    return Filling(SkewShape(Partition(std::move(outer))), std::move(entries), m);
}

std::vector<std::pair<int, int>> supports(const Restriction& r) {
    std::vector<std::pair<int, int>> out;
    for (int c = 1; c <= r.cols(); ++c)
        out.emplace_back(r.band(c).top, r.band(c).bottom);
    return out;
}

} // namespace

TEST_CASE("column bands of two-row squares") {
    Restriction r(grid({2, 2}, {1, 1, 1, 2}, 2), 1);
    CHECK(r.cols() == 2);
    CHECK(r.kind(1) == ColumnKind::LowPure);
    CHECK(r.band(1).top == 1);
    CHECK(r.band(1).bottom == 2);
    CHECK(r.band(1).border == 2);
    CHECK(r.kind(2) == ColumnKind::Mixed);
    CHECK(r.band(2).border == 1);
    CHECK(r.band(2).value_at(1, 1) == 1);
    CHECK(r.band(2).value_at(2, 1) == 2);

    Restriction s(grid({2, 2}, {1, 2, 2, 2}, 2), 1);
    CHECK(s.kind(1) == ColumnKind::Mixed);
    CHECK(s.band(1).border == 1);
    CHECK(s.kind(2) == ColumnKind::HighPure);
    CHECK(s.band(2).border == 0);
}

TEST_CASE("bands ignore letters outside the index pair") {
    Filling t = grid({2, 2}, {1, 3, 2, 3}, 3);
    Restriction low(t, 1);
    CHECK(low.kind(1) == ColumnKind::Mixed);
    CHECK(low.kind(2) == ColumnKind::Empty);
    CHECK(low.band(2).top > low.band(2).bottom);
    Restriction high(t, 2);
    CHECK(high.kind(1) == ColumnKind::LowPure);
    CHECK(high.band(1).top == 2);
    CHECK(high.band(1).bottom == 2);
    CHECK(high.kind(2) == ColumnKind::HighPure);
}

TEST_CASE("the three five-row fillings split by band condition") {
    Restriction a(fixtures::trio_a(), 1);
    CHECK(a.kind(1) == ColumnKind::Mixed);
    CHECK(a.band(1).border == 2);
    CHECK(a.kind(2) == ColumnKind::HighPure);
    CHECK(a.kind(3) == ColumnKind::Mixed);
    CHECK(a.band(3).border == 3);
    CHECK(a.column_weak());
    CHECK_FALSE(a.is_benign()); // mixed borders rise to the right

    Restriction b(fixtures::trio_b(), 1);
    CHECK(b.kind(1) == ColumnKind::HighPure);
    CHECK(b.kind(2) == ColumnKind::Mixed);
    CHECK(b.band(2).border == 3);
    CHECK(b.kind(3) == ColumnKind::Mixed);
    CHECK(b.band(3).border == 2);
    CHECK(b.is_benign());
    CHECK_FALSE(fixtures::trio_b().is_rpp());

    CHECK(fixtures::trio_c().is_rpp());
    Restriction c(fixtures::trio_c(), 1);
    CHECK(c.is_benign());
    CHECK(c.descents().empty());
    // all three share the same column supports
    CHECK(supports(a) == supports(c));
    CHECK(supports(b) == supports(c));
}

TEST_CASE("band condition beyond the fixtures") {
    CHECK_FALSE(Restriction(grid({2, 2, 2}, {1, 1, 2, 1, 2, 2}, 2), 1).is_benign());
    CHECK(Restriction(grid({2, 2, 2}, {1, 1, 1, 2, 2, 2}, 2), 1).is_benign());
    // a column with i below i+1 is not even column-weak
    Restriction down(grid({1, 1}, {2, 1}, 2), 1);
    CHECK_FALSE(down.column_weak());
    CHECK_FALSE(down.is_benign());
    CHECK_THROWS_AS(down.descents(), InternalInvariant);
    // gap in a column's support blocks the rewrite machinery
    Restriction gap(grid({1, 1, 1}, {1, 3, 2}, 3), 1);
    CHECK(gap.kind(1) == ColumnKind::Mixed);
    CHECK_THROWS_AS(gap.descents(), InternalInvariant);
}

TEST_CASE("descent detection and single rewrites") {
    Restriction swap21(grid({2}, {2, 1}, 2), 1);
    auto ds = swap21.descents();
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].col == 1);
    CHECK(ds[0].type == DescentType::TwoOne);
    CHECK(to_string(ds[0].type) == "21");
    swap21.resolve_step(ds[0]);
    CHECK(swap21.write_back() == grid({2}, {1, 2}, 2));

    Restriction twoM(grid({2, 2}, {2, 1, 2, 2}, 2), 1);
    auto dm = twoM.descents();
    REQUIRE(dm.size() == 1);
    CHECK(dm[0].type == DescentType::TwoM);
    CHECK(to_string(dm[0].type) == "2M");
    twoM.resolve_step(dm[0]);
    CHECK(twoM.band(1).kind == ColumnKind::Mixed);
    CHECK(twoM.band(1).border == 1); // takes the right column's border
    CHECK(twoM.kind(2) == ColumnKind::HighPure);
    CHECK(twoM.write_back() == grid({2, 2}, {1, 2, 2, 2}, 2));
    CHECK(twoM.descents().empty());

    Restriction mOne(grid({2, 2}, {1, 1, 2, 1}, 2), 1);
    auto dn = mOne.descents();
    REQUIRE(dn.size() == 1);
    CHECK(dn[0].type == DescentType::MOne);
    CHECK(to_string(dn[0].type) == "M1");
    mOne.resolve_step(dn[0]);
    CHECK(mOne.kind(1) == ColumnKind::LowPure);
    CHECK(mOne.band(2).kind == ColumnKind::Mixed);
    CHECK(mOne.band(2).border == 1);
    CHECK(mOne.write_back() == grid({2, 2}, {1, 1, 1, 2}, 2));
}

TEST_CASE("rewrites keep supports, weight, and heights") {
    for (auto entries : {std::vector<int>{2, 1}, std::vector<int>{2, 1, 2, 2},
                         std::vector<int>{1, 1, 2, 1}}) {
        std::vector<int> outer(entries.size() == 2 ? std::vector<int>{2}
                                                   : std::vector<int>{2, 2});
        Filling before = grid(outer, entries, 2);
        Restriction r(before, 1);
        auto ds = r.descents();
        REQUIRE(ds.size() == 1);
        auto old_supports = supports(r);
        r.resolve_step(ds[0]);
        Filling after = r.write_back();
        CHECK(supports(r) == old_supports);
        CHECK(after.weight() == before.weight());
        CHECK(height_vector(after) == height_vector(before));
    }
}

TEST_CASE("mixed-mixed descent trips the guard") {
    Restriction r(grid({2, 2, 2}, {1, 1, 2, 1, 2, 2}, 2), 1);
    CHECK_FALSE(r.is_benign());
    CHECK_THROWS_AS(r.descents(), InternalInvariant);
}

TEST_CASE("rewrite type must match the column classes") {
    Restriction r(grid({2, 2}, {1, 1, 1, 2}, 2), 1);
    CHECK_THROWS_AS(r.resolve_step({1, DescentType::TwoOne}), InternalInvariant);
}

TEST_CASE("cascading rewrites meet at the same normal form") {
    for (auto start : {std::vector<int>{2, 1, 2, 1}, std::vector<int>{2, 2, 1, 1}}) {
        Filling sorted = grid({4}, {1, 1, 2, 2}, 2);
        for (auto strategy : {ResolveStrategy::Leftmost, ResolveStrategy::Rightmost}) {
            Restriction r(grid({4}, start, 2), 1);
            r.resolve_all(strategy);
            CHECK(r.write_back() == sorted);
        }
        for (unsigned seed : {1u, 2u, 3u}) {
            Restriction r(grid({4}, start, 2), 1);
            r.resolve_all(ResolveStrategy::Random, seed);
            CHECK(r.write_back() == sorted);
        }
    }
}

TEST_CASE("flip steps rewrite whole columns") {
    Restriction r(grid({2, 2}, {1, 2, 2, 2}, 2), 1);
    r.make_low_pure(2);
    CHECK(r.kind(2) == ColumnKind::LowPure);
    CHECK(r.write_back() == grid({2, 2}, {1, 1, 2, 1}, 2));
}

TEST_CASE("operator fixtures on two-row squares") {
    Filling low = grid({2, 2}, {1, 1, 1, 2}, 2);
    Filling high = grid({2, 2}, {1, 2, 2, 2}, 2);
    CHECK(lower_rpp(low, 1) == high);
    CHECK(raise_rpp(high, 1) == low);
    CHECK_FALSE(raise_rpp(low, 1).has_value());
    CHECK_FALSE(lower_rpp(high, 1).has_value());
    CHECK(lower_rpp(grid({2}, {1, 1}, 2), 1) == grid({2}, {1, 2}, 2));
}

TEST_CASE("operators validate their input") {
    Filling t = grid({2}, {1, 1}, 2);
    CHECK_THROWS_AS(raise_rpp(t, 0), ValidationError);
    CHECK_THROWS_AS(raise_rpp(t, 2), ValidationError);
    CHECK_THROWS_AS(lower_rpp(t, 5), ValidationError);
    CHECK_THROWS_AS(raise_rpp(fixtures::trio_b(), 1), ValidationError);
}

TEST_CASE("operator pair behaves like a crystal across the corpus") {
    for (const Partition& outer : partitions_up_to(5)) {
        for (const Partition& inner : subpartitions(outer)) {
            SkewShape shape(outer, inner);
            for (int m = 2; m <= 3; ++m) {
                enumerate_rpp(shape, m, [&](const Filling& t) {
                    for (int i = 1; i < m; ++i) {
                        Restriction r(t, i);
                        CHECK(r.is_benign());
                        CHECK(r.descents().empty());
                        auto down = lower_rpp(t, i);
                        if (down.has_value()) {
                            CHECK(down->is_rpp());
                            auto w = t.weight();
                            --w[i - 1];
                            ++w[i];
                            CHECK(down->weight() == w);
                            CHECK(down->ceq() == t.ceq());
                            CHECK(height_vector(*down) == height_vector(t));
                            CHECK(raise_rpp(*down, i) == t);
                        }
                        auto up = raise_rpp(t, i);
                        if (up.has_value()) {
                            CHECK(up->is_rpp());
                            CHECK(lower_rpp(*up, i) == t);
                        }
                    }
                });
            }
        }
    }
}

TEST_CASE("resolution order never changes the operators") {
    for (const Partition& outer : partitions_up_to(4)) {
        for (const Partition& inner : subpartitions(outer)) {
            SkewShape shape(outer, inner);
            for (int m = 2; m <= 3; ++m) {
                enumerate_rpp(shape, m, [&](const Filling& t) {
                    for (int i = 1; i < m; ++i) {
                        auto left = lower_rpp(t, i, ResolveStrategy::Leftmost);
                        CHECK(left == lower_rpp(t, i, ResolveStrategy::Rightmost));
                        CHECK(left == lower_rpp(t, i, ResolveStrategy::Random, 11));
                        auto up = raise_rpp(t, i, ResolveStrategy::Leftmost);
                        CHECK(up == raise_rpp(t, i, ResolveStrategy::Rightmost));
                        CHECK(up == raise_rpp(t, i, ResolveStrategy::Random, 11));
                    }
                });
            }
        }
    }
}

TEST_CASE("column letters inside the subword") {
    auto pos = column_word_positions(grid({2, 2}, {1, 1, 1, 2}, 2), 1);
    REQUIRE(pos.size() == 2);
    CHECK(pos.at(1).kind == ColumnKind::LowPure);
    CHECK(pos.at(1).pure_pos == 1);
    CHECK(pos.at(2).kind == ColumnKind::Mixed);
    CHECK(pos.at(2).high_pos == 2); // lower row read first
    CHECK(pos.at(2).low_pos == 3);

    auto qos = column_word_positions(grid({2, 2}, {1, 2, 2, 2}, 2), 1);
    CHECK(qos.at(1).high_pos == 1);
    CHECK(qos.at(1).low_pos == 3);
    CHECK(qos.at(2).kind == ColumnKind::HighPure);
    CHECK(qos.at(2).pure_pos == 2);

    auto sparse = column_word_positions(grid({2, 2}, {1, 3, 2, 3}, 3), 1);
    CHECK(sparse.size() == 1); // the all-3 column owns no letters
    CHECK(sparse.count(2) == 0);

    CHECK_THROWS_AS(column_word_positions(fixtures::trio_b(), 1), ValidationError);
}

TEST_CASE("column matching mirrors the word matching") {
    for (const Partition& outer : partitions_up_to(5)) {
        for (const Partition& inner : subpartitions(outer)) {
            SkewShape shape(outer, inner);
            for (int m = 2; m <= 3; ++m) {
                enumerate_rpp(shape, m, [&](const Filling& t) {
                    for (int i = 1; i < m; ++i) {
                        auto letters = column_word_positions(t, i);
                        Pairing p = pairing(reading_word(t), i);
                        auto to_orig = [&](int pos) {
                            REQUIRE(pos >= 1);
                            REQUIRE(pos <= static_cast<int>(
                                               p.subword_positions.size()));
                            return p.subword_positions[pos - 1];
                        };
                        std::set<int> matched_closes;
                        for (auto [open, close] : p.matched)
                            matched_closes.insert(close);

                        // every mixed column's i-letter finds a partner
                        std::size_t mixed = 0;
                        for (const auto& [col, info] : letters) {
                            if (info.kind != ColumnKind::Mixed) continue;
                            ++mixed;
                            CHECK(matched_closes.count(to_orig(info.low_pos)) == 1);
                        }

                        // pure columns pair like parentheses, left to right;
                        // matched ones carry matched letters, unmatched ones
                        // carry exactly the unmatched closing letters
                        Restriction r(t, i);
                        std::vector<int> stack;
                        std::size_t across = 0;
                        std::set<int> close_letters;
                        for (int c = 1; c <= r.cols(); ++c) {
                            if (r.kind(c) == ColumnKind::HighPure) {
                                stack.push_back(c);
                            } else if (r.kind(c) == ColumnKind::LowPure) {
                                int letter = to_orig(letters.at(c).pure_pos);
                                if (stack.empty()) {
                                    close_letters.insert(letter);
                                } else {
                                    ++across;
                                    CHECK(matched_closes.count(letter) == 1);
                                    stack.pop_back();
                                }
                            }
                        }
                        CHECK(matched_closes.size() == mixed + across);
                        CHECK(close_letters ==
                              std::set<int>(p.unmatched_closes.begin(),
                                            p.unmatched_closes.end()));
                        // raise and lower see the same number of free columns
                        CHECK(p.unmatched_opens.size() == stack.size());
                    }
                });
            }
        }
    }
}
