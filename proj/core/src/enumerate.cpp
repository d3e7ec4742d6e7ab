#include "rppc/enumerate.hpp"

#include <algorithm>

namespace rppc {

namespace {

/* Shared backtracking core. Cells are filled in row-major order; the lower
 * bound at each cell comes from the left and upper neighbors (strict below
 * the upper neighbor for column-strict classes), the upper bound from the
 * per-row cap. Trying values in increasing order yields the documented
 * lexicographic stream.
 */
struct Search {
    const SkewShape& shape;
    int max_entry;            // bound recorded on emitted fillings
    bool strict_columns;
    const std::vector<int>* row_cap; // 1-based caps; nullptr = max_entry everywhere
    const std::function<void(const Filling&)>& visit;
    std::vector<Cell> cells;
    std::vector<int> entries;

    void run() {
        cells = shape.cells();
        entries.assign(cells.size(), 0);
        fill_from(0);
    }

    void fill_from(std::size_t k) {
        if (k == cells.size()) {
            visit(Filling(shape, entries, max_entry));
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (shape.has_cell(r, c - 1))
            lo = std::max(lo, entries[shape.cell_index(r, c - 1)]);
        if (shape.has_cell(r - 1, c)) {
            int above = entries[shape.cell_index(r - 1, c)];
            lo = std::max(lo, strict_columns ? above + 1 : above);
        }
        int hi = row_cap ? (*row_cap)[r] : max_entry;
        int idx = shape.cell_index(r, c);
        for (int v = lo; v <= hi; ++v) {
            entries[idx] = v;
            fill_from(k + 1);
        }
        entries[idx] = 0;
    }
};

} // namespace

void enumerate_rpp(const SkewShape& shape, int max_entry,
                   const std::function<void(const Filling&)>& visit) {
    Search{shape, max_entry, false, nullptr, visit}.run();
}

void enumerate_ssyt(const SkewShape& shape, int max_entry,
                    const std::function<void(const Filling&)>& visit) {
    Search{shape, max_entry, true, nullptr, visit}.run();
}

void enumerate_elegant(const Partition& outer, const Partition& inner,
                       const std::function<void(const Filling&)>& visit) {
    SkewShape shape(outer, inner);
    // row-r entries are < r, so nothing can exceed rows-1
    std::vector<int> caps(shape.rows() + 1, 0);
    for (int r = 1; r <= shape.rows(); ++r) caps[r] = r - 1;
    int bound = std::max(shape.rows() - 1, 1);
    Search{shape, bound, true, &caps, visit}.run();
}

std::vector<Filling> all_rpp(const SkewShape& shape, int max_entry) {
    std::vector<Filling> out;
    enumerate_rpp(shape, max_entry, [&](const Filling& f) { out.push_back(f); });
    return out;
}

std::vector<Filling> all_ssyt(const SkewShape& shape, int max_entry) {
    std::vector<Filling> out;
    enumerate_ssyt(shape, max_entry, [&](const Filling& f) { out.push_back(f); });
    return out;
}

std::vector<Filling> all_elegant(const Partition& outer, const Partition& inner) {
    std::vector<Filling> out;
    enumerate_elegant(outer, inner, [&](const Filling& f) { out.push_back(f); });
    return out;
}

long long count_rpp(const SkewShape& shape, int max_entry) {
    long long n = 0;
    enumerate_rpp(shape, max_entry, [&](const Filling&) { ++n; });
    return n;
}

long long count_ssyt(const SkewShape& shape, int max_entry) {
    long long n = 0;
    enumerate_ssyt(shape, max_entry, [&](const Filling&) { ++n; });
    return n;
}

long long count_elegant(const Partition& outer, const Partition& inner) {
    long long n = 0;
    enumerate_elegant(outer, inner, [&](const Filling&) { ++n; });
    return n;
}

namespace {

void extend_partition(std::vector<int>& parts, int remaining, int cap,
                      std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(parts);
        return;
    }
    for (int p = std::min(cap, remaining); p >= 1; --p) {
        parts.push_back(p);
        extend_partition(parts, remaining - p, p, out);
        parts.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        std::vector<Partition> of_n;
        std::vector<int> parts;
        extend_partition(parts, n, n, of_n);
        std::sort(of_n.begin(), of_n.end());
        out.insert(out.end(), of_n.begin(), of_n.end());
    }
    return out;
}

std::vector<Partition> subpartitions(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> parts;
    // rows may stop early; a zero part just ends the subpartition
    auto rec = [&](auto&& self, int row) -> void {
        out.emplace_back(parts);
        if (row > outer.length()) return;
        int cap = std::min(outer.part(row), row > 1 ? parts[row - 2] : outer.part(1));
        for (int p = 1; p <= cap; ++p) {
            parts.push_back(p);
            self(self, row + 1);
            parts.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace rppc
