#include "rppc/skew_shape.hpp"

#include <sstream>

namespace rppc {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!inner_.contained_in(outer_)) {
        throw NotContained("inner partition " + inner_.to_string() +
                           " is not contained in outer " + outer_.to_string());
    }
    outer_conj_ = outer_.conjugate();
    inner_conj_ = inner_.conjugate();
    row_offset_.assign(rows() + 1, 0);
    for (int r = 1; r <= rows(); ++r)
        row_offset_[r] = row_offset_[r - 1] + (row_end(r) - row_begin(r));
    cell_count_ = row_offset_[rows()];
}

int SkewShape::col_top(int col) const {
    return inner_conj_.part(col) + 1;
}

int SkewShape::col_bottom(int col) const {
    return outer_conj_.part(col);
}

bool SkewShape::has_cell(int row, int col) const {
    if (row < 1 || row > rows()) return false;
    return row_begin(row) < col && col <= row_end(row);
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    out.reserve(cell_count_);
    for (int r = 1; r <= rows(); ++r)
        for (int c = row_begin(r) + 1; c <= row_end(r); ++c) out.push_back({r, c});
    return out;
}

int SkewShape::cell_index(int row, int col) const {
    return row_offset_[row - 1] + (col - row_begin(row) - 1);
}

std::string SkewShape::to_string() const {
    std::string s = outer_.to_string();
    if (!inner_.empty()) s += "/" + inner_.to_string();
    return s;
}

namespace {

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) return Partition{};
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw ValidationError("bad partition entry '" + item + "'");
        }
        if (pos != item.size() || value < 0)
            throw ValidationError("bad partition entry '" + item + "'");
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

} // namespace

SkewShape SkewShape::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(parse_partition(text));
    return SkewShape(parse_partition(text.substr(0, slash)),
                     parse_partition(text.substr(slash + 1)));
}

} // namespace rppc
