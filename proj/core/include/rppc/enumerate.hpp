#ifndef RPPC_ENUMERATE_HPP
#define RPPC_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "rppc/filling.hpp"

namespace rppc {

/* Exhaustive tableau enumerators. All of them visit fillings in row-major
 * lexicographic order on the entry sequence, smallest entries first, so two
 * runs over the same input produce identical streams. The empty shape yields
 * exactly the empty filling.
 */

// reverse plane partitions with entries in [m]
void enumerate_rpp(const SkewShape& shape, int max_entry,
                   const std::function<void(const Filling&)>& visit);

// semistandard tableaux with entries in [m]
void enumerate_ssyt(const SkewShape& shape, int max_entry,
                    const std::function<void(const Filling&)>& visit);

/* Semistandard fillings of outer/inner whose row-r entries are < r.
 * Row-1 cells make the stream empty. Throws NotContained.
 */
void enumerate_elegant(const Partition& outer, const Partition& inner,
                       const std::function<void(const Filling&)>& visit);

std::vector<Filling> all_rpp(const SkewShape& shape, int max_entry);
std::vector<Filling> all_ssyt(const SkewShape& shape, int max_entry);
std::vector<Filling> all_elegant(const Partition& outer, const Partition& inner);

long long count_rpp(const SkewShape& shape, int max_entry);
long long count_ssyt(const SkewShape& shape, int max_entry);
long long count_elegant(const Partition& outer, const Partition& inner);

/* Corpus helpers for the verification sweeps: every partition with at most
 * max_size cells (including the empty one), ordered by size then
 * lexicographically; and every μ ⊆ λ in lexicographic order.
 */
std::vector<Partition> partitions_up_to(int max_size);
std::vector<Partition> subpartitions(const Partition& outer);

} // namespace rppc

#endif
