#ifndef RPPC_SPARSE_POLY_HPP
#define RPPC_SPARSE_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rppc {

using BigInt = boost::multiprecision::cpp_int;

/* Exponent vector over x1..xm, t1..tk, in that order; always exactly
 * x_count + t_count entries.
 */
using Exponent = std::vector<int>;

// total degree first, then lexicographic, largest first
struct GradedLexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/* Polynomial with exact integer coefficients over a fixed variable split
 * (m x-variables, k t-variables). Terms are kept graded-lex descending,
 * zero coefficients are never stored.
 */
class SparsePoly {
public:
    explicit SparsePoly(int x_count, int t_count = 0);
    static SparsePoly constant(int x_count, int t_count, const BigInt& value);

    int x_count() const { return x_count_; }
    int t_count() const { return t_count_; }
    int var_count() const { return x_count_ + t_count_; }
    bool is_zero() const { return terms_.empty(); }

    const std::map<Exponent, BigInt, GradedLexGreater>& terms() const {
        return terms_;
    }
    BigInt coeff(const Exponent& exponent) const;

    void add_term(const Exponent& exponent, const BigInt& coeff);

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    // multiply by c * (monomial with the given exponent)
    SparsePoly times(const Exponent& monomial, const BigInt& c) const;
    SparsePoly scaled(const BigInt& c) const;
    bool operator==(const SparsePoly& o) const;

    // same x-variables, new t-count; dropping a used t variable is an error
    SparsePoly with_t_count(int t_count) const;
    // sets every t variable to 1
    SparsePoly substitute_t_one() const;

    int x_degree() const; // largest x-degree over terms; -1 when zero
    SparsePoly x_homogeneous_part(int degree) const;
    // exchanges the exponents of x_j and x_{j+1}, 1-based j < x_count
    SparsePoly swap_x(int j) const;

    // "1 * x1^2 x2^1 + 2 * t1^1"; constants print bare, zero prints "0"
    std::string to_string() const;
    std::string to_json() const;

private:
    int x_count_ = 0;
    int t_count_ = 0;
    std::map<Exponent, BigInt, GradedLexGreater> terms_;
};

} // namespace rppc

#endif
