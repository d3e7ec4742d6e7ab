#ifndef RPPC_WORD_CRYSTAL_HPP
#define RPPC_WORD_CRYSTAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rppc/reading.hpp"

namespace rppc {

/* Bracket matching for one index i: each i+1 opens, each i closes, and a
 * close cancels the nearest uncancelled open to its left. All positions
 * are 0-based indices into the original word; every letter equal to i or
 * i+1 lands in exactly one of matched/unmatched_opens/unmatched_closes.
 * The unmatched residue is always closes first, then opens.
 */
struct Pairing {
    int index = 0;
    std::vector<std::pair<int, int>> matched; // (open position, close position)
    std::vector<int> unmatched_opens;         // increasing
    std::vector<int> unmatched_closes;        // increasing
    std::vector<int> subword_positions;       // all {i, i+1} positions, increasing
};

Pairing pairing(const Word& s, int i);

// Flips the leftmost unmatched i+1 to i; nullopt when there is none.
std::optional<Word> raise_word(const Word& s, int i);
// Flips the rightmost unmatched i to i+1; nullopt when there is none.
std::optional<Word> lower_word(const Word& s, int i);

// Letter counts, fixed length m.
std::vector<int> word_weight(const Word& s, int m);

/* True when every suffix of s contains at least as many i's as (i+1)'s,
 * for every i; equivalently raise_word(s, i) is empty for all i.
 */
bool is_lattice(const Word& s);

} // namespace rppc

#endif
