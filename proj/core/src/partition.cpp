#include "rppc/partition.hpp"

#include <numeric>
#include <sstream>

namespace rppc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k + 1 < parts_.size(); ++k) {
        if (parts_[k] < parts_[k + 1]) {
            throw NotWeaklyDecreasing("partition parts must weakly decrease: ... " +
                                      std::to_string(parts_[k]) + "," +
                                      std::to_string(parts_[k + 1]) + " ...");
        }
    }
    for (int p : parts_) {
        if (p < 0) throw NotWeaklyDecreasing("partition parts must be nonnegative");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int row) const {
    if (row < 1 || row > length()) return 0;
    return parts_[row - 1];
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++conj[c];
    return Partition(std::move(conj));
}

bool Partition::contained_in(const Partition& other) const {
    for (int r = 1; r <= length(); ++r)
        if (part(r) > other.part(r)) return false;
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) os << ',';
        os << parts_[k];
    }
    return os.str();
}

std::string Partition::to_paren_string() const {
    if (parts_.empty()) return "()";
    return "(" + to_string() + ")";
}

bool graded_lex_greater(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return b < a;
}

} // namespace rppc
