#ifndef RPPC_SYMFUNC_HPP
#define RPPC_SYMFUNC_HPP

#include <map>
#include <utility>
#include <vector>

#include "rppc/partition.hpp"
#include "rppc/skew_shape.hpp"
#include "rppc/sparse_poly.hpp"

namespace rppc {

using SchurExpansion = std::map<Partition, BigInt>;
// key: weight partition plus vertical-equality composition (trimmed)
using RefinedKey = std::pair<Partition, std::vector<int>>;
using RefinedExpansion = std::map<RefinedKey, BigInt>;

// content generating polynomial of column-strict tableaux; zero when nu
// has more than m rows
SparsePoly schur(const Partition& nu, int m);
SparsePoly skew_schur(const SkewShape& shape, int m);

// column-content generating polynomial of the row/column-weak fillings
SparsePoly g_poly(const SkewShape& shape, int m);
// same with t^ceq attached; t_count = rows(outer) - 1 (0 for empty shapes)
SparsePoly g_refined(const SkewShape& shape, int m);

/* Basis conversion by leading-term elimination: repeatedly read off the
 * graded-lex leading exponent (must be weakly decreasing, else
 * NotSymmetric), record its coefficient, subtract that multiple of the
 * matching schur polynomial. Requires a t-free polynomial on m variables.
 */
SchurExpansion expand_in_schur(const SparsePoly& p, int m);

// counts of fillings whose reading word is a lattice word, by weight
SchurExpansion h_coeffs(const SkewShape& shape, int m);
// same, split by the vertical-equality composition
RefinedExpansion h_coeffs_refined(const SkewShape& shape, int m);
// lattice column-strict fillings by weight; entry bound = max(1, cell count)
SchurExpansion lr_classical(const SkewShape& shape);

// fillings of outer/nu, strict columns, row-r entries < r; 0 when nu is
// not contained in outer
long long elegant_count(const Partition& outer, const Partition& nu);

std::string expansion_to_string(const SchurExpansion& e);  // "nu : c" lines
std::string expansion_to_json(const SchurExpansion& e);
std::string refined_to_string(const RefinedExpansion& e);  // "nu : alpha : c" lines
std::string refined_to_json(const RefinedExpansion& e);

} // namespace rppc

#endif
