#include "rppc/reading.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "rppc/errors.hpp"

namespace rppc {

std::vector<ReadingEntry> reading_entries(const Filling& t) {
    const SkewShape& shape = t.shape();
    std::vector<ReadingEntry> out;
    for (int r = shape.rows(); r >= 1; --r) {
        for (int c = shape.row_begin(r) + 1; c <= shape.row_end(r); ++c) {
            if (shape.has_cell(r + 1, c) && t.at(r + 1, c) == t.at(r, c))
                continue;
            out.push_back({t.at(r, c), Cell{r, c}});
        }
    }
    return out;
}

Word reading_word(const Filling& t) {
    Word w;
    for (const ReadingEntry& e : reading_entries(t)) w.push_back(e.letter);
    return w;
}

HeightVector height_vector(const Filling& t) {
    HeightVector h;
    for (const ReadingEntry& e : reading_entries(t)) h.push_back(e.cell.row);
    return h;
}

std::optional<Filling> reconstruct(const SkewShape& shape, const Word& word,
                                   const HeightVector& heights, int max_entry) {
    if (word.size() != heights.size())
        throw ValidationError("word and height vector lengths differ");
    for (int x : word)
        if (x < 1) throw ValidationError("word letters must be positive");
    for (int h : heights)
        if (h < 1) throw ValidationError("heights must be positive row indices");

    int largest = word.empty() ? 1 : *std::max_element(word.begin(), word.end());
    if (max_entry == 0) max_entry = largest;
    if (max_entry < largest) return std::nullopt;

    constexpr int kNoCellBelow = std::numeric_limits<int>::max();
    std::vector<int> entries(shape.cell_count(), 0);
    std::size_t j = 0;
    for (int r = shape.rows(); r >= 1; --r) {
        for (int c = shape.row_begin(r) + 1; c <= shape.row_end(r); ++c) {
            int below = shape.has_cell(r + 1, c)
                            ? entries[shape.cell_index(r + 1, c)]
                            : kNoCellBelow;
            int left = shape.has_cell(r, c - 1)
                           ? entries[shape.cell_index(r, c - 1)]
                           : 0;
            int value;
            if (j < word.size() && heights[j] == r && left <= word[j] &&
                word[j] < below) {
                value = word[j];
                ++j;
            } else if (below == kNoCellBelow) {
                return std::nullopt; // forced copy with nothing to copy
            } else {
                value = below;
            }
            entries[shape.cell_index(r, c)] = value;
        }
    }
    if (j != word.size()) return std::nullopt;

    Filling result(shape, entries, max_entry);
    if (!result.is_rpp()) return std::nullopt;
    if (reading_word(result) != word) return std::nullopt;
    if (height_vector(result) != heights) return std::nullopt;
    return result;
}

std::string word_to_string(const Word& w) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(w[k]);
    }
    return out;
}

std::string word_to_compact(const Word& w) {
    std::string out;
    for (int x : w) {
        if (x < 1 || x > 9)
            throw ValidationError("compact word form needs letters in [1, 9]");
        out += static_cast<char>('0' + x);
    }
    return out;
}

Word parse_word(const std::string& text) {
    Word w;
    if (text.empty()) return w;
    if (text.find(',') == std::string::npos && text.size() > 1) {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw ValidationError("word digit form allows only 1-9: \"" +
                                      text + "\"");
            w.push_back(ch - '0');
        }
        return w;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::size_t end = comma == std::string::npos ? text.size() : comma;
        int value = 0;
        auto [ptr, ec] =
            std::from_chars(text.data() + pos, text.data() + end, value);
        if (ec != std::errc() || ptr != text.data() + end || value < 1)
            throw ValidationError("bad word letter in \"" + text + "\"");
        w.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return w;
}

} // namespace rppc
