#include <doctest.h>

#include "rppc/enumerate.hpp"
#include "rppc/errors.hpp"
#include "rppc/skew_shape.hpp"

using namespace rppc;

TEST_CASE("cell sets") {
    SkewShape s(Partition{2, 1}, Partition{1});
    CHECK(s.cell_count() == 2);
    CHECK(s.cells() == std::vector<Cell>{{1, 2}, {2, 1}});
    CHECK(s.has_cell(1, 2));
    CHECK_FALSE(s.has_cell(1, 1));
    CHECK_FALSE(s.has_cell(3, 1));

    SkewShape big(Partition{4, 4, 4, 4, 3, 3, 2}, Partition{2, 1});
    CHECK(big.cell_count() == 21);

    CHECK_THROWS_AS(SkewShape(Partition{1}, Partition{2}), NotContained);
}

TEST_CASE("inner may equal outer") {
    SkewShape s(Partition{2, 2}, Partition{2, 2});
    CHECK(s.empty());
    CHECK(s.cells().empty());
}

TEST_CASE("column extents come from the conjugates") {
    SkewShape s(Partition{4, 4, 4, 4, 3, 3, 2}, Partition{2, 1});
    CHECK(s.col_top(1) == 3);  // inner'_1 + 1
    CHECK(s.col_bottom(1) == 7);
    CHECK(s.col_top(2) == 2);
    CHECK(s.col_bottom(2) == 7);
    CHECK(s.col_top(3) == 1);
    CHECK(s.col_bottom(3) == 6);
    CHECK(s.col_top(4) == 1);
    CHECK(s.col_bottom(4) == 4);
}

TEST_CASE("columns are contiguous with monotone extents, across the corpus") {
    for (const Partition& outer : partitions_up_to(6)) {
        for (const Partition& inner : subpartitions(outer)) {
            SkewShape s(outer, inner);
            for (int c = 1; c <= s.cols(); ++c) {
                for (int r = s.col_top(c); r <= s.col_bottom(c); ++r)
                    CHECK(s.has_cell(r, c));
                CHECK_FALSE(s.has_cell(s.col_top(c) - 1, c));
                CHECK_FALSE(s.has_cell(s.col_bottom(c) + 1, c));
                if (c > 1 && s.col_top(c) <= s.col_bottom(c) &&
                    s.col_top(c - 1) <= s.col_bottom(c - 1)) {
                    CHECK(s.col_top(c) <= s.col_top(c - 1));
                    CHECK(s.col_bottom(c) <= s.col_bottom(c - 1));
                }
            }
        }
    }
}

TEST_CASE("cell_index matches row-major cell order") {
    SkewShape s(Partition{3, 2}, Partition{1});
    auto cells = s.cells();
    for (int k = 0; k < static_cast<int>(cells.size()); ++k)
        CHECK(s.cell_index(cells[k].row, cells[k].col) == k);
}

TEST_CASE("parsing the shape grammar") {
    CHECK(SkewShape::parse("4,4,3/2,1") ==
          SkewShape(Partition{4, 4, 3}, Partition{2, 1}));
    CHECK(SkewShape::parse("3,2") == SkewShape(Partition{3, 2}));
    CHECK(SkewShape::parse("0") == SkewShape());
    CHECK(SkewShape::parse("2,2/0") == SkewShape(Partition{2, 2}));
    CHECK_THROWS_AS(SkewShape::parse("2/3"), NotContained);
    CHECK_THROWS_AS(SkewShape::parse("1,2"), NotWeaklyDecreasing);
    CHECK_THROWS_AS(SkewShape::parse("a,b"), ValidationError);
    CHECK_THROWS_AS(SkewShape::parse("1/1/1"), ValidationError);
}

TEST_CASE("shape text round-trips") {
    for (const char* text : {"4,4,3/2,1", "3,2", "0", "5,1/1"}) {
        SkewShape s = SkewShape::parse(text);
        CHECK(SkewShape::parse(s.to_string()) == s);
    }
    CHECK(SkewShape::parse("2,2/0").to_string() == "2,2");
}
