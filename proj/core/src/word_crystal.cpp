#include "rppc/word_crystal.hpp"

#include <algorithm>

#include "rppc/errors.hpp"

namespace rppc {

Pairing pairing(const Word& s, int i) {
    if (i < 1) throw ValidationError("operator index must be at least 1");
    Pairing p;
    p.index = i;
    std::vector<int> open_stack;
    for (int pos = 0; pos < static_cast<int>(s.size()); ++pos) {
        if (s[pos] == i + 1) {
            p.subword_positions.push_back(pos);
            open_stack.push_back(pos);
        } else if (s[pos] == i) {
            p.subword_positions.push_back(pos);
            if (open_stack.empty()) {
                p.unmatched_closes.push_back(pos);
            } else {
                p.matched.emplace_back(open_stack.back(), pos);
                open_stack.pop_back();
            }
        }
    }
    p.unmatched_opens = std::move(open_stack);
    std::sort(p.matched.begin(), p.matched.end());
    return p;
}

std::optional<Word> raise_word(const Word& s, int i) {
    Pairing p = pairing(s, i);
    if (p.unmatched_opens.empty()) return std::nullopt;
    Word out = s;
    out[p.unmatched_opens.front()] = i;
    return out;
}

std::optional<Word> lower_word(const Word& s, int i) {
    Pairing p = pairing(s, i);
    if (p.unmatched_closes.empty()) return std::nullopt;
    Word out = s;
    out[p.unmatched_closes.back()] = i + 1;
    return out;
}

std::vector<int> word_weight(const Word& s, int m) {
    std::vector<int> w(m, 0);
    for (int x : s) {
        if (x < 1 || x > m)
            throw ValidationError("word letter outside [1, max_entry]");
        ++w[x - 1];
    }
    return w;
}

bool is_lattice(const Word& s) {
    int largest = 0;
    for (int x : s) largest = std::max(largest, x);
    for (int i = 1; i < largest; ++i) {
        int balance = 0; // #i minus #(i+1) in the scanned suffix
        for (auto it = s.rbegin(); it != s.rend(); ++it) {
            if (*it == i) ++balance;
            else if (*it == i + 1) --balance;
            if (balance < 0) return false;
        }
    }
    return true;
}

} // namespace rppc
