#ifndef RPPC_PARTITION_HPP
#define RPPC_PARTITION_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "rppc/errors.hpp"

namespace rppc {

/* An integer partition in the Young-diagram sense: a weakly decreasing
 * sequence of positive parts. Zero parts are stripped on construction, so
 * (3,2,0,0) and (3,2) are the same value; the empty partition is valid.
 * Rows are 1-based throughout the library (matrix coordinates, row 1 on top).
 */
class Partition {
public:
    Partition() = default;

    // Throws NotWeaklyDecreasing unless the sequence is weakly decreasing
    // after stripping trailing zeros (interior zeros before a positive part
    // are an order violation too).
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    // number of (positive) parts
    int length() const { return static_cast<int>(parts_.size()); }
    // number of cells |λ|
    int size() const;
    bool empty() const { return parts_.empty(); }

    // part of row r (1-based); 0 beyond the last row
    int part(int row) const;
    const std::vector<int>& parts() const { return parts_; }

    // transpose of the diagram
    Partition conjugate() const;

    // this ⊆ other as diagrams
    bool contained_in(const Partition& other) const;

    auto operator<=>(const Partition&) const = default;

    // "3,2,1"; the empty partition prints as "0"
    std::string to_string() const;
    // "(3,2,1)"; the empty partition prints as "()"
    std::string to_paren_string() const;

private:
    std::vector<int> parts_;
};

// display order for weight lists: larger size first, then lexicographically
// larger first (graded-lex descending)
bool graded_lex_greater(const Partition& a, const Partition& b);

} // namespace rppc

#endif
