#pragma once

#include "hilbfock/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hilbfock {

// Sparse polynomial in t over Q. Terms are (exponent, coefficient) pairs
// with strictly increasing exponents and no stored zeros.
class TPoly {
public:
    using Term = std::pair<long, Rational>;

    TPoly() = default;
    static TPoly constant(Rational c);
    static TPoly monomial(long t_exp, Rational c);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long degree() const;      // -1 for the zero polynomial
    long low_degree() const;  // -1 for the zero polynomial
    Rational coeff(long t_exp) const;

    // Accumulates c * t^t_exp, dropping the term if it cancels to zero.
    void add_term(long t_exp, const Rational& c);

    TPoly& operator+=(const TPoly& rhs);
    TPoly& operator-=(const TPoly& rhs);
    TPoly& operator*=(const Rational& c);

    // Value at t = -1: the signed coefficient sum.
    Rational eval_at_minus_one() const;

    std::string str(const char* var = "t") const;

    friend bool operator==(const TPoly&, const TPoly&) = default;

private:
    std::vector<Term> terms_;
};

TPoly operator+(TPoly lhs, const TPoly& rhs);
TPoly operator-(TPoly lhs, const TPoly& rhs);
TPoly operator*(const TPoly& lhs, const TPoly& rhs);
TPoly operator*(TPoly lhs, const Rational& c);

// Bivariate formal power series in (t, q) over Q, truncated at a fixed
// q order N: one t-polynomial per q power in 0..N. All operations are
// exact and discard q powers above the truncation.
class BiSeries {
public:
    explicit BiSeries(long trunc_order);  // the zero series
    static BiSeries one(long trunc_order);
    static BiSeries term(long trunc_order, long t_exp, long q_exp, Rational c);

    long trunc_order() const { return trunc_order_; }
    bool is_zero() const;

    // The q^n slice; requires 0 <= n <= trunc_order.
    const TPoly& coeff_q(long n) const;
    TPoly& slice(long n);

    BiSeries& operator+=(const BiSeries& rhs);
    BiSeries& operator-=(const BiSeries& rhs);

    std::string str() const;

    friend bool operator==(const BiSeries&, const BiSeries&) = default;

private:
    void require_same_order(const BiSeries& rhs) const;

    long trunc_order_ = 0;
    std::vector<TPoly> slices_;
};

BiSeries operator+(BiSeries lhs, const BiSeries& rhs);
BiSeries operator-(BiSeries lhs, const BiSeries& rhs);
BiSeries operator*(const BiSeries& lhs, const BiSeries& rhs);

// a^e by binary exponentiation, e >= 0; a^0 == 1.
BiSeries pow(const BiSeries& base, long exponent);

// (1 - t^a q^b)^{-1} = 1 + t^a q^b + t^{2a} q^{2b} + ... truncated.
// Requires b >= 1 so the geometric series terminates under truncation.
BiSeries geometric_inverse(long t_exp, long q_exp, long trunc_order);

// Generating series of Betti numbers of the punctual Hilbert schemes of a
// compact fourfold with first and second Betti numbers b1 and b2:
//
//   prod_{m>=1} [(1+t^{2m-1}q^m)(1+t^{2m+1}q^m)]^{b1}
//             / [(1-t^{2m-2}q^m)(1-t^{2m+2}q^m)(1-t^{2m}q^m)^{b2}]
//
// The factor for m only contributes q powers >= m, so the product stops at
// m = trunc_order. Every q^n slice is checked to stay within t-degrees
// [0, 4n]; a violation throws ConsistencyError.
BiSeries goettsche_series(long b1, long b2, long trunc_order);

// Signed coefficient sum of a t-polynomial, the Euler-characteristic
// evaluation of a Betti slice.
Rational eval_t_minus_one(const TPoly& p);

}  // namespace hilbfock
