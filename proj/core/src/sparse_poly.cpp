#include "rppc/sparse_poly.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "rppc/errors.hpp"

namespace rppc {

namespace {

int total_degree(const Exponent& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

void require_same_vars(const SparsePoly& a, const SparsePoly& b) {
    if (a.x_count() != b.x_count() || a.t_count() != b.t_count())
        throw InternalInvariant("polynomial variable sets differ");
}

} // namespace

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

SparsePoly::SparsePoly(int x_count, int t_count)
    : x_count_(x_count), t_count_(t_count) {
    if (x_count < 0 || t_count < 0)
        throw ValidationError("variable counts must be nonnegative");
}

SparsePoly SparsePoly::constant(int x_count, int t_count, const BigInt& value) {
    SparsePoly p(x_count, t_count);
    p.add_term(Exponent(x_count + t_count, 0), value);
    return p;
}

BigInt SparsePoly::coeff(const Exponent& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void SparsePoly::add_term(const Exponent& exponent, const BigInt& coeff) {
    if (static_cast<int>(exponent.size()) != var_count())
        throw InternalInvariant("exponent length does not match variable count");
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace(exponent, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly out = *this;
    out += o;
    return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly out = *this;
    out -= o;
    return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    require_same_vars(*this, o);
    SparsePoly out(x_count_, t_count_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponent e(var_count());
            for (int k = 0; k < var_count(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

SparsePoly SparsePoly::times(const Exponent& monomial, const BigInt& c) const {
    if (static_cast<int>(monomial.size()) != var_count())
        throw InternalInvariant("exponent length does not match variable count");
    SparsePoly out(x_count_, t_count_);
    for (const auto& [e, coeff] : terms_) {
        Exponent shifted(var_count());
        for (int k = 0; k < var_count(); ++k) shifted[k] = e[k] + monomial[k];
        out.add_term(shifted, coeff * c);
    }
    return out;
}

SparsePoly SparsePoly::scaled(const BigInt& c) const {
    SparsePoly out(x_count_, t_count_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
    return out;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    return x_count_ == o.x_count_ && t_count_ == o.t_count_ &&
           terms_ == o.terms_;
}

SparsePoly SparsePoly::with_t_count(int t_count) const {
    SparsePoly out(x_count_, t_count);
    for (const auto& [e, c] : terms_) {
        Exponent widened(x_count_ + t_count, 0);
        for (int k = 0; k < x_count_ + std::min(t_count, t_count_); ++k)
            widened[k] = e[k];
        for (int k = x_count_ + t_count; k < var_count(); ++k)
            if (e[k] != 0)
                throw InternalInvariant("dropping a t variable in active use");
        out.add_term(widened, c);
    }
    return out;
}

SparsePoly SparsePoly::substitute_t_one() const {
    SparsePoly out(x_count_, 0);
    for (const auto& [e, c] : terms_)
        out.add_term(Exponent(e.begin(), e.begin() + x_count_), c);
    return out;
}

int SparsePoly::x_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_)
        best = std::max(best,
                        std::accumulate(e.begin(), e.begin() + x_count_, 0));
    return best;
}

SparsePoly SparsePoly::x_homogeneous_part(int degree) const {
    SparsePoly out(x_count_, t_count_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.begin() + x_count_, 0) == degree)
            out.terms_.emplace(e, c);
    return out;
}

SparsePoly SparsePoly::swap_x(int j) const {
    if (j < 1 || j >= x_count_)
        throw ValidationError("swap index must lie in [1, x_count - 1]");
    SparsePoly out(x_count_, t_count_);
    for (const auto& [e, c] : terms_) {
        Exponent swapped = e;
        std::swap(swapped[j - 1], swapped[j]);
        out.add_term(swapped, c);
    }
    return out;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string vars;
        for (int k = 0; k < var_count(); ++k) {
            if (e[k] == 0) continue;
            if (!vars.empty()) vars += ' ';
            if (k < x_count_)
                vars += "x" + std::to_string(k + 1);
            else
                vars += "t" + std::to_string(k - x_count_ + 1);
            vars += "^" + std::to_string(e[k]);
        }
        out += c.str();
        if (!vars.empty()) out += " * " + vars;
    }
    return out;
}

std::string SparsePoly::to_json() const {
    nlohmann::json doc;
    doc["x_count"] = x_count_;
    doc["t_count"] = t_count_;
    doc["terms"] = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::json term;
        term["coeff"] = c.str();
        term["x"] = std::vector<int>(e.begin(), e.begin() + x_count_);
        term["t"] = std::vector<int>(e.begin() + x_count_, e.end());
        doc["terms"].push_back(std::move(term));
    }
    return doc.dump();
}

} // namespace rppc
