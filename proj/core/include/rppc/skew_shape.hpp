#ifndef RPPC_SKEW_SHAPE_HPP
#define RPPC_SKEW_SHAPE_HPP

#include <string>
#include <utility>
#include <vector>

#include "rppc/partition.hpp"

namespace rppc {

struct Cell {
    int row = 0; // 1-based, row 1 on top
    int col = 0; // 1-based

    auto operator<=>(const Cell&) const = default;
};

/* The skew diagram λ/μ in matrix coordinates. Row r holds the cells
 * (r, μ_r+1), ..., (r, λ_r); column c is the contiguous row interval
 * [μ'_c + 1, λ'_c]. Both column tops and column bottoms weakly decrease
 * from left to right. Disconnected shapes are allowed.
 */
class SkewShape {
public:
    SkewShape() : SkewShape(Partition{}, Partition{}) {}
    explicit SkewShape(Partition outer) : SkewShape(std::move(outer), Partition{}) {}
    // Throws NotContained unless μ ⊆ λ.
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    int rows() const { return outer_.length(); }
    int cols() const { return outer_.part(1); }
    int cell_count() const { return cell_count_; }
    bool empty() const { return cell_count_ == 0; }

    // row r spans columns (row_begin, row_end]; empty rows have begin == end
    int row_begin(int row) const { return inner_.part(row); }
    int row_end(int row) const { return outer_.part(row); }

    // column c spans rows [col_top, col_bottom]; empty columns have top > bottom
    int col_top(int col) const;
    int col_bottom(int col) const;

    bool has_cell(int row, int col) const;

    // cells in row-major (reading-independent) order: row 1 first, left to right
    std::vector<Cell> cells() const;

    // flat index of a cell in row-major order; the cell must exist
    int cell_index(int row, int col) const;

    bool operator==(const SkewShape& o) const {
        return outer_ == o.outer_ && inner_ == o.inner_;
    }

    // "4,4,3/2,1"; prints just the outer part for straight shapes
    std::string to_string() const;

    /* Parses the CLI shape grammar "λ1,λ2,.../μ1,μ2,..." with the "/μ"
     * part optional; "0" (or the empty string) denotes the empty partition.
     * Throws ValidationError subtypes on malformed input.
     */
    static SkewShape parse(const std::string& text);

private:
    Partition outer_;
    Partition inner_;
    Partition outer_conj_;
    Partition inner_conj_;
    std::vector<int> row_offset_; // prefix sums of row lengths
    int cell_count_ = 0;
};

} // namespace rppc

#endif
