#ifndef RPPC_RPP_CRYSTAL_HPP
#define RPPC_RPP_CRYSTAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rppc/filling.hpp"

namespace rppc {

/* Classification of a column of the {i, i+1}-restriction: only i's,
 * only i+1's, both, or no such entries at all.
 */
enum class ColumnKind { Empty, LowPure, HighPure, Mixed };

/* Descent types by the classes of the two adjacent columns: 2 stands for
 * an i+1-pure column, 1 for an i-pure column, M for a mixed one. A descent
 * is an i+1 with an i directly to its right; mixed-mixed pairs cannot
 * carry one when the mixed borders weakly rise to the right.
 */
enum class DescentType { TwoM, MOne, TwoOne };
std::string to_string(DescentType type);

struct Descent {
    int col = 0; // left column of the pair
    DescentType type = DescentType::TwoOne;
};

/* One column of a restriction in band form: support rows [top, bottom]
 * hold i down to row border and i+1 below it. LowPure columns have
 * border == bottom, HighPure ones border == top - 1, Mixed ones
 * top <= border < bottom. Empty columns keep top > bottom.
 */
struct ColumnBand {
    int top = 1;
    int bottom = 0;
    int border = 0;
    ColumnKind kind = ColumnKind::Empty;

    int value_at(int row, int i) const { return row <= border ? i : i + 1; }
};

enum class ResolveStrategy { Leftmost, Rightmost, Random };

/* The subtableau of entries i and i+1, viewed column by column. Built from
 * any filling; the rewrite machinery additionally needs every column's
 * support to be contiguous with the i's on top (true for restrictions of
 * reverse plane partitions and preserved by every rewrite).
 */
class Restriction {
public:
    Restriction(const Filling& base, int i);

    int index() const { return i_; }
    int cols() const { return static_cast<int>(bands_.size()) - 1; }
    const ColumnBand& band(int col) const { return bands_[col]; }
    ColumnKind kind(int col) const { return bands_[col].kind; }

    // every column's support values weakly increase top to bottom
    bool column_weak() const { return column_weak_; }
    /* column_weak plus: for mixed columns A left of B, the row of the
     * lowest i in A is >= the row of the lowest i in B.
     */
    bool is_benign() const;

    // all adjacent pairs carrying a descent, left to right; requires is_benign
    std::vector<Descent> descents() const;
    // applies one rewrite; supports stay fixed, the descent at d.col disappears
    void resolve_step(const Descent& d);
    // rewrites until descent-free; order-independent, guarded by a step bound
    void resolve_all(ResolveStrategy strategy = ResolveStrategy::Leftmost,
                     unsigned seed = 0);

    // the flip step of the operators: a whole column becomes i's / i+1's
    void make_low_pure(int col);
    void make_high_pure(int col);

    // base filling with the {i, i+1} entries replaced by the band values
    Filling write_back() const;

private:
    void require_bands() const;

    Filling base_;
    int i_ = 1;
    std::vector<ColumnBand> bands_; // index 0 unused
    bool column_weak_ = true;
    bool contiguous_ = true;
};

/* Crystal raising operator: label i-pure columns as closing and i+1-pure
 * columns as opening parentheses, left to right; turn the leftmost
 * unmatched opening column into all i's and resolve. nullopt when every
 * opening column is matched. Throws ValidationError unless t is a reverse
 * plane partition and 1 <= i < max_entry.
 */
std::optional<Filling> raise_rpp(const Filling& t, int i,
                                 ResolveStrategy strategy = ResolveStrategy::Leftmost,
                                 unsigned seed = 0);

/* Crystal lowering operator: turns the rightmost unmatched closing column
 * into all i+1's and resolves. nullopt when every closing column is matched.
 */
std::optional<Filling> lower_rpp(const Filling& t, int i,
                                 ResolveStrategy strategy = ResolveStrategy::Leftmost,
                                 unsigned seed = 0);

/* Where each column's letters sit inside the {i, i+1}-subword of the
 * reading word, positions 1-based in subword order. Pure columns own one
 * letter; mixed columns own an i letter (low) and an i+1 letter (high).
 * Only columns with support appear in the map.
 */
struct ColumnLetters {
    ColumnKind kind = ColumnKind::Empty;
    int pure_pos = 0;
    int low_pos = 0;
    int high_pos = 0;
};
std::map<int, ColumnLetters> column_word_positions(const Filling& t, int i);

} // namespace rppc

#endif
