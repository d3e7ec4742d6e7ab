#include "rppc/rpp_crystal.hpp"

#include <algorithm>
#include <random>

#include "rppc/errors.hpp"
#include "rppc/reading.hpp"

namespace rppc {

std::string to_string(DescentType type) {
    switch (type) {
    case DescentType::TwoM: return "2M";
    case DescentType::MOne: return "M1";
    case DescentType::TwoOne: return "21";
    }
    return "?";
}

Restriction::Restriction(const Filling& base, int i) : base_(base), i_(i) {
    if (i < 1) throw ValidationError("operator index must be at least 1");
    const SkewShape& shape = base.shape();
    bands_.assign(shape.cols() + 1, ColumnBand{});
    for (int c = 1; c <= shape.cols(); ++c) {
        int top = 0, bottom = 0, count = 0, lowest_low = 0;
        bool seen_high = false;
        for (int r = shape.col_top(c); r <= shape.col_bottom(c); ++r) {
            int v = base.at(r, c);
            if (v != i && v != i + 1) continue;
            if (top == 0) top = r;
            bottom = r;
            ++count;
            if (v == i) {
                if (seen_high) column_weak_ = false;
                lowest_low = r;
            } else {
                seen_high = true;
            }
        }
        if (top == 0) continue; // stays Empty
        ColumnBand& b = bands_[c];
        b.top = top;
        b.bottom = bottom;
        if (count != bottom - top + 1) contiguous_ = false;
        if (lowest_low && seen_high) {
            b.kind = ColumnKind::Mixed;
            b.border = lowest_low;
        } else if (lowest_low) {
            b.kind = ColumnKind::LowPure;
            b.border = bottom;
        } else {
            b.kind = ColumnKind::HighPure;
            b.border = top - 1;
        }
    }
}

bool Restriction::is_benign() const {
    if (!column_weak_) return false;
    int prev_border = 0;
    bool seen_mixed = false;
    for (int c = 1; c <= cols(); ++c) {
        if (bands_[c].kind != ColumnKind::Mixed) continue;
        if (seen_mixed && prev_border < bands_[c].border) return false;
        prev_border = bands_[c].border;
        seen_mixed = true;
    }
    return true;
}

void Restriction::require_bands() const {
    if (!column_weak_ || !contiguous_)
        throw InternalInvariant("restriction columns do not form bands");
}

std::vector<Descent> Restriction::descents() const {
    require_bands();
    std::vector<Descent> out;
    for (int c = 1; c < cols(); ++c) {
        const ColumnBand& a = bands_[c];
        const ColumnBand& b = bands_[c + 1];
        if (a.kind == ColumnKind::Empty || b.kind == ColumnKind::Empty)
            continue;
        // rows where a holds i+1 while b holds i
        int lo = std::max({a.border + 1, a.top, b.top});
        int hi = std::min({a.bottom, b.bottom, b.border});
        if (lo > hi) continue;
        if (a.kind == ColumnKind::HighPure && b.kind == ColumnKind::Mixed)
            out.push_back({c, DescentType::TwoM});
        else if (a.kind == ColumnKind::Mixed && b.kind == ColumnKind::LowPure)
            out.push_back({c, DescentType::MOne});
        else if (a.kind == ColumnKind::HighPure && b.kind == ColumnKind::LowPure)
            out.push_back({c, DescentType::TwoOne});
        else
            throw InternalInvariant("mixed-mixed descent; tableau was not benign");
    }
    return out;
}

void Restriction::resolve_step(const Descent& d) {
    require_bands();
    if (d.col < 1 || d.col >= cols())
        throw InternalInvariant("descent column out of range");
    ColumnBand& a = bands_[d.col];
    ColumnBand& b = bands_[d.col + 1];
    switch (d.type) {
    case DescentType::MOne: {
        if (a.kind != ColumnKind::Mixed || b.kind != ColumnKind::LowPure)
            throw InternalInvariant("descent type does not match column classes");
        int border = a.border;
        if (border < b.top || border >= b.bottom)
            throw InternalInvariant("transferred border leaves the column support");
        a.kind = ColumnKind::LowPure;
        a.border = a.bottom;
        b.kind = ColumnKind::Mixed;
        b.border = border;
        break;
    }
    case DescentType::TwoM: {
        if (a.kind != ColumnKind::HighPure || b.kind != ColumnKind::Mixed)
            throw InternalInvariant("descent type does not match column classes");
        int border = b.border;
        if (border < a.top || border >= a.bottom)
            throw InternalInvariant("transferred border leaves the column support");
        a.kind = ColumnKind::Mixed;
        a.border = border;
        b.kind = ColumnKind::HighPure;
        b.border = b.top - 1;
        break;
    }
    case DescentType::TwoOne:
        if (a.kind != ColumnKind::HighPure || b.kind != ColumnKind::LowPure)
            throw InternalInvariant("descent type does not match column classes");
        a.kind = ColumnKind::LowPure;
        a.border = a.bottom;
        b.kind = ColumnKind::HighPure;
        b.border = b.top - 1;
        break;
    }
}

void Restriction::resolve_all(ResolveStrategy strategy, unsigned seed) {
    require_bands();
    std::mt19937 rng(seed);
    const long long limit = 4LL * (cols() + 2) * (cols() + 2) + 8;
    for (long long step = 0;; ++step) {
        std::vector<Descent> ds = descents();
        if (ds.empty()) return;
        if (step >= limit)
            throw InternalInvariant("descent resolution exceeded its step bound");
        std::size_t pick = 0;
        switch (strategy) {
        case ResolveStrategy::Leftmost: pick = 0; break;
        case ResolveStrategy::Rightmost: pick = ds.size() - 1; break;
        case ResolveStrategy::Random:
            pick = std::uniform_int_distribution<std::size_t>(0, ds.size() - 1)(rng);
            break;
        }
        resolve_step(ds[pick]);
    }
}

void Restriction::make_low_pure(int col) {
    require_bands();
    ColumnBand& b = bands_[col];
    if (b.kind == ColumnKind::Empty)
        throw InternalInvariant("cannot flip an empty column");
    b.kind = ColumnKind::LowPure;
    b.border = b.bottom;
}

void Restriction::make_high_pure(int col) {
    require_bands();
    ColumnBand& b = bands_[col];
    if (b.kind == ColumnKind::Empty)
        throw InternalInvariant("cannot flip an empty column");
    b.kind = ColumnKind::HighPure;
    b.border = b.top - 1;
}

Filling Restriction::write_back() const {
    require_bands();
    Filling out = base_;
    for (int c = 1; c <= cols(); ++c) {
        const ColumnBand& b = bands_[c];
        if (b.kind == ColumnKind::Empty) continue;
        for (int r = b.top; r <= b.bottom; ++r) out.set(r, c, b.value_at(r, i_));
    }
    return out;
}

namespace {

struct ColumnMatch {
    std::vector<int> unmatched_opens;  // HighPure columns, left to right
    std::vector<int> unmatched_closes; // LowPure columns, left to right
};

// Same cancellation as for words: i+1-pure opens, i-pure closes, mixed skipped.
ColumnMatch match_columns(const Restriction& r) {
    ColumnMatch m;
    std::vector<int> stack;
    for (int c = 1; c <= r.cols(); ++c) {
        if (r.kind(c) == ColumnKind::HighPure) {
            stack.push_back(c);
        } else if (r.kind(c) == ColumnKind::LowPure) {
            if (stack.empty())
                m.unmatched_closes.push_back(c);
            else
                stack.pop_back();
        }
    }
    m.unmatched_opens = std::move(stack);
    return m;
}

void check_operator_input(const Filling& t, int i) {
    if (i < 1 || i + 1 > t.max_entry())
        throw ValidationError("operator index must lie in [1, max_entry - 1]");
    if (!t.is_rpp())
        throw ValidationError("not a reverse plane partition: " + t.rpp_violation());
}

Filling finish(Restriction& r, ResolveStrategy strategy, unsigned seed) {
    r.resolve_all(strategy, seed);
    Filling out = r.write_back();
    if (!out.is_rpp())
        throw InternalInvariant("resolution produced a non-monotone filling: " +
                                out.rpp_violation());
    return out;
}

} // namespace

std::optional<Filling> raise_rpp(const Filling& t, int i, ResolveStrategy strategy,
                                 unsigned seed) {
    check_operator_input(t, i);
    Restriction r(t, i);
    ColumnMatch m = match_columns(r);
    if (m.unmatched_opens.empty()) return std::nullopt;
    r.make_low_pure(m.unmatched_opens.front());
    return finish(r, strategy, seed);
}

std::optional<Filling> lower_rpp(const Filling& t, int i, ResolveStrategy strategy,
                                 unsigned seed) {
    check_operator_input(t, i);
    Restriction r(t, i);
    ColumnMatch m = match_columns(r);
    if (m.unmatched_closes.empty()) return std::nullopt;
    r.make_high_pure(m.unmatched_closes.back());
    return finish(r, strategy, seed);
}

std::map<int, ColumnLetters> column_word_positions(const Filling& t, int i) {
    if (i < 1) throw ValidationError("operator index must be at least 1");
    if (!t.is_rpp())
        throw ValidationError("not a reverse plane partition: " + t.rpp_violation());
    Restriction r(t, i);
    std::map<int, ColumnLetters> out;
    for (int c = 1; c <= r.cols(); ++c)
        if (r.kind(c) != ColumnKind::Empty) out[c].kind = r.kind(c);
    int pos = 0;
    for (const ReadingEntry& e : reading_entries(t)) {
        if (e.letter != i && e.letter != i + 1) continue;
        ++pos;
        ColumnLetters& cl = out.at(e.cell.col);
        int* slot = cl.kind == ColumnKind::Mixed
                        ? (e.letter == i ? &cl.low_pos : &cl.high_pos)
                        : &cl.pure_pos;
        if (*slot != 0)
            throw InternalInvariant("column owns more subword letters than its class");
        *slot = pos;
    }
    return out;
}

} // namespace rppc
