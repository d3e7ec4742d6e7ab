#ifndef RPPC_TESTS_FIXTURES_HPP
#define RPPC_TESTS_FIXTURES_HPP

#include <vector>

#include "rppc/filling.hpp"
#include "rppc/reading.hpp"

namespace fixtures {

/* The 21-cell worked example: shape (4,4,4,4,3,3,2)/(2,1), entries up
 * to 5. Its reading word and height vector are pinned below.
 */
inline rppc::Filling large_tableau() {
    rppc::SkewShape shape({4, 4, 4, 4, 3, 3, 2}, {2, 1});
    std::vector<int> entries = {1, 2, 1, 1, 4, 1, 1, 1, 4, 1,
                                3, 3, 4, 2, 3, 5, 2, 4, 5, 3, 4};
    return rppc::Filling(shape, entries, 5);
}

inline rppc::Word large_word() { return {3, 4, 2, 5, 3, 1, 3, 4, 1, 1, 2}; }

inline rppc::HeightVector large_heights() {
    return {7, 7, 6, 6, 5, 4, 4, 4, 3, 3, 1};
}

/* Three fillings of (3,3,3,3,1)/(2) with entries in {1,2}, used to pin the
 * benign / reverse-plane-partition boundary: (a) fails the mixed-border
 * condition, (b) is benign but row-violating, (c) is a reverse plane
 * partition.
 */
inline rppc::SkewShape trio_shape() {
    return rppc::SkewShape({3, 3, 3, 3, 1}, {2});
}

inline rppc::Filling trio_a() {
    return rppc::Filling(trio_shape(), {1, 1, 2, 1, 2, 2, 1, 2, 2, 2, 2}, 2);
}

inline rppc::Filling trio_b() {
    return rppc::Filling(trio_shape(), {1, 2, 1, 1, 2, 1, 2, 2, 2, 2, 2}, 2);
}

inline rppc::Filling trio_c() {
    return rppc::Filling(trio_shape(), {2, 1, 1, 2, 1, 2, 2, 2, 2, 2, 2}, 2);
}

// the 13-letter string whose raising orbit is pinned in the word tests
inline rppc::Word orbit_start() {
    return {1, 2, 2, 3, 1, 3, 2, 2, 2, 1, 3, 1, 2};
}

inline std::vector<rppc::Word> orbit_raised() {
    return {
        {1, 1, 2, 3, 1, 3, 2, 2, 2, 1, 3, 1, 2},
        {1, 1, 2, 3, 1, 3, 1, 2, 2, 1, 3, 1, 2},
        {1, 1, 2, 3, 1, 3, 1, 2, 2, 1, 3, 1, 1},
    };
}

} // namespace fixtures

#endif
