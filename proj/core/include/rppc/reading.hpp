#ifndef RPPC_READING_HPP
#define RPPC_READING_HPP

#include <optional>
#include <string>
#include <vector>

#include "rppc/filling.hpp"

namespace rppc {

using Word = std::vector<int>;
using HeightVector = std::vector<int>;

/* Scan rows bottom to top, left to right within a row. An entry survives
 * when the cell directly below is outside the shape or holds a different
 * value. reading_word collects the surviving letters, height_vector their
 * row indices (weakly decreasing by construction).
 */
Word reading_word(const Filling& t);
HeightVector height_vector(const Filling& t);

// Survivors with their source cells, in reading order.
struct ReadingEntry {
    int letter;
    Cell cell;
};
std::vector<ReadingEntry> reading_entries(const Filling& t);

/* Rebuild the unique row/column-weak filling with the given reading word
 * and height vector, if one exists. Cells are visited in reading order
 * with a cursor j into (word, heights): a cell takes letter j when its row
 * equals heights[j] and left-value <= word[j] < below-value, otherwise it
 * copies the value below it. A forced copy with no cell below, leftover
 * letters, or a result that fails validation all yield nullopt.
 *
 * max_entry 0 derives the bound from the largest letter (1 for the empty
 * word); a positive max_entry pins the bound, and a word exceeding it has
 * no preimage. Throws ValidationError when word and heights differ in
 * length or contain non-positive values.
 */
std::optional<Filling> reconstruct(const SkewShape& shape, const Word& word,
                                   const HeightVector& heights, int max_entry = 0);

std::string word_to_string(const Word& w);   // "3,4,2"; empty -> ""
std::string word_to_compact(const Word& w);  // "342"; requires letters <= 9

// Accepts "3,4,2" or, when comma-free, a digit run like "342".
Word parse_word(const std::string& text);

} // namespace rppc

#endif
