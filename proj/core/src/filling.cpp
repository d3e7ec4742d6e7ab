#include "rppc/filling.hpp"

#include <algorithm>
#include <sstream>

namespace rppc {

Filling::Filling(SkewShape shape, std::vector<int> entries, int max_entry)
    : shape_(std::move(shape)), entries_(std::move(entries)), max_entry_(max_entry) {
    if (static_cast<int>(entries_.size()) != shape_.cell_count())
        throw ValidationError("entry count " + std::to_string(entries_.size()) +
                              " does not match shape with " +
                              std::to_string(shape_.cell_count()) + " cells");
    if (max_entry_ < 1) throw ValidationError("max_entry must be positive");
    for (int e : entries_) {
        if (e < 1 || e > max_entry_)
            throw ValidationError("entry " + std::to_string(e) +
                                  " outside [1, " + std::to_string(max_entry_) + "]");
    }
}

std::string Filling::rpp_violation() const {
    for (int r = 1; r <= shape_.rows(); ++r)
        for (int c = shape_.row_begin(r) + 2; c <= shape_.row_end(r); ++c)
            if (at(r, c - 1) > at(r, c))
                return "row " + std::to_string(r) + " decreases at column " +
                       std::to_string(c);
    for (int c = 1; c <= shape_.cols(); ++c)
        for (int r = shape_.col_top(c) + 1; r <= shape_.col_bottom(c); ++r)
            if (at(r - 1, c) > at(r, c))
                return "column " + std::to_string(c) + " decreases at row " +
                       std::to_string(r);
    return {};
}

bool Filling::is_rpp() const { return rpp_violation().empty(); }

bool Filling::is_ssyt() const {
    if (!is_rpp()) return false;
    for (int c = 1; c <= shape_.cols(); ++c)
        for (int r = shape_.col_top(c) + 1; r <= shape_.col_bottom(c); ++r)
            if (at(r - 1, c) == at(r, c)) return false;
    return true;
}

std::vector<int> Filling::weight() const {
    std::vector<int> w(max_entry_, 0);
    std::vector<char> seen(max_entry_ + 1);
    for (int c = 1; c <= shape_.cols(); ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int r = shape_.col_top(c); r <= shape_.col_bottom(c); ++r) {
            int e = at(r, c);
            if (!seen[e]) {
                seen[e] = 1;
                ++w[e - 1];
            }
        }
    }
    return w;
}

std::vector<int> Filling::ceq() const {
    std::vector<int> out(std::max(shape_.rows() - 1, 0), 0);
    for (int c = 1; c <= shape_.cols(); ++c)
        for (int r = shape_.col_top(c); r < shape_.col_bottom(c); ++r)
            if (at(r, c) == at(r + 1, c)) ++out[r - 1];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::string Filling::to_text() const {
    std::ostringstream os;
    for (int r = 1; r <= shape_.rows(); ++r) {
        for (int c = 1; c <= shape_.row_end(r); ++c) {
            if (c > 1) os << ' ';
            if (c <= shape_.row_begin(r))
                os << '.';
            else
                os << at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

} // namespace rppc
