#ifndef RPPC_FILLING_HPP
#define RPPC_FILLING_HPP

#include <string>
#include <vector>

#include "rppc/skew_shape.hpp"

namespace rppc {

/* A filling of a skew shape: one entry from [1, max_entry] per cell,
 * stored row-major. Reverse plane partitions (weak rows, weak columns) and
 * semistandard tableaux (weak rows, strict columns) are the two refinements
 * the algorithms care about; use is_rpp()/is_ssyt() to tell them apart.
 */
class Filling {
public:
    Filling() = default;
    // Throws ValidationError if the entry count does not match the shape or
    // some entry is outside [1, max_entry].
    Filling(SkewShape shape, std::vector<int> entries, int max_entry);

    const SkewShape& shape() const { return shape_; }
    int max_entry() const { return max_entry_; }
    const std::vector<int>& entries() const { return entries_; }

    int at(int row, int col) const {
        return entries_[shape_.cell_index(row, col)];
    }
    void set(int row, int col, int value) {
        entries_[shape_.cell_index(row, col)] = value;
    }

    bool is_rpp() const;
    bool is_ssyt() const;
    // first violated constraint as text, empty when is_rpp() holds
    std::string rpp_violation() const;

    /* Column-content weight: component i counts the columns whose entry
     * multiset contains i. Fixed length max_entry.
     */
    std::vector<int> weight() const;

    /* Vertical-equality statistic: entry i counts columns j with cells
     * (i,j) and (i+1,j) both present and equal. Trailing zeros trimmed.
     */
    std::vector<int> ceq() const;

    bool operator==(const Filling& o) const {
        return shape_ == o.shape_ && entries_ == o.entries_ &&
               max_entry_ == o.max_entry_;
    }

    // multi-line display; inner cells render as '.'
    std::string to_text() const;

private:
    SkewShape shape_;
    std::vector<int> entries_;
    int max_entry_ = 1;
};

// Tableau JSON: {"outer":[...],"inner":[...],"max_entry":m,"rows":[[...],...]}
std::string to_json(const Filling& filling);
// Throws ValidationError on malformed or inconsistent documents.
Filling filling_from_json(const std::string& text);

} // namespace rppc

#endif
