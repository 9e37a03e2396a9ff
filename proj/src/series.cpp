#include "hilbfock/series.hpp"

#include "hilbfock/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hilbfock {

TPoly TPoly::constant(Rational c) {
    return monomial(0, std::move(c));
}

TPoly TPoly::monomial(long t_exp, Rational c) {
    TPoly p;
    if (c != 0) {
        p.terms_.emplace_back(t_exp, std::move(c));
    }
    return p;
}

long TPoly::degree() const {
    return terms_.empty() ? -1 : terms_.back().first;
}

long TPoly::low_degree() const {
    return terms_.empty() ? -1 : terms_.front().first;
}

Rational TPoly::coeff(long t_exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t_exp,
                               [](const Term& t, long e) { return t.first < e; });
    if (it != terms_.end() && it->first == t_exp) {
        return it->second;
    }
    return Rational(0);
}

void TPoly::add_term(long t_exp, const Rational& c) {
    if (c == 0) {
        return;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t_exp,
                               [](const Term& t, long e) { return t.first < e; });
    if (it != terms_.end() && it->first == t_exp) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    } else {
        terms_.insert(it, Term(t_exp, c));
    }
}

TPoly& TPoly::operator+=(const TPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, -c);
    }
    return *this;
}

TPoly& TPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) {
        v *= c;
    }
    return *this;
}

Rational TPoly::eval_at_minus_one() const {
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        if (e % 2 == 0) {
            sum += c;
        } else {
            sum -= c;
        }
    }
    return sum;
}

std::string TPoly::str(const char* var) const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) {
            out << (c > 0 ? " + " : " - ");
        } else if (c < 0) {
            out << "-";
        }
        Rational mag = c > 0 ? c : Rational(-c);
        if (mag != 1 || e == 0) {
            out << rational_str(mag);
        }
        if (e != 0) {
            if (mag != 1) {
                out << "*";
            }
            out << var;
            if (e != 1) {
                out << "^" << e;
            }
        }
        first = false;
    }
    return out.str();
}

TPoly operator+(TPoly lhs, const TPoly& rhs) {
    lhs += rhs;
    return lhs;
}

TPoly operator-(TPoly lhs, const TPoly& rhs) {
    lhs -= rhs;
    return lhs;
}

TPoly operator*(const TPoly& lhs, const TPoly& rhs) {
    TPoly out;
    for (const auto& [ea, ca] : lhs.terms()) {
        for (const auto& [eb, cb] : rhs.terms()) {
            out.add_term(ea + eb, ca * cb);
        }
    }
    return out;
}

TPoly operator*(TPoly lhs, const Rational& c) {
    lhs *= c;
    return lhs;
}

BiSeries::BiSeries(long trunc_order) : trunc_order_(trunc_order) {
    if (trunc_order < 0) {
        throw std::invalid_argument("truncation order must be >= 0");
    }
    slices_.resize(static_cast<std::size_t>(trunc_order) + 1);
}

BiSeries BiSeries::one(long trunc_order) {
    return term(trunc_order, 0, 0, Rational(1));
}

BiSeries BiSeries::term(long trunc_order, long t_exp, long q_exp, Rational c) {
    BiSeries s(trunc_order);
    if (q_exp < 0 || t_exp < 0) {
        throw std::invalid_argument("series terms need nonnegative exponents");
    }
    if (q_exp <= trunc_order) {
        s.slices_[static_cast<std::size_t>(q_exp)].add_term(t_exp, c);
    }
    return s;
}

bool BiSeries::is_zero() const {
    return std::all_of(slices_.begin(), slices_.end(),
                       [](const TPoly& p) { return p.is_zero(); });
}

const TPoly& BiSeries::coeff_q(long n) const {
    if (n < 0 || n > trunc_order_) {
        throw std::out_of_range("q exponent outside truncation range");
    }
    return slices_[static_cast<std::size_t>(n)];
}

TPoly& BiSeries::slice(long n) {
    if (n < 0 || n > trunc_order_) {
        throw std::out_of_range("q exponent outside truncation range");
    }
    return slices_[static_cast<std::size_t>(n)];
}

void BiSeries::require_same_order(const BiSeries& rhs) const {
    if (trunc_order_ != rhs.trunc_order_) {
        throw std::invalid_argument("truncation order mismatch");
    }
}

BiSeries& BiSeries::operator+=(const BiSeries& rhs) {
    require_same_order(rhs);
    for (std::size_t n = 0; n < slices_.size(); ++n) {
        slices_[n] += rhs.slices_[n];
    }
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& rhs) {
    require_same_order(rhs);
    for (std::size_t n = 0; n < slices_.size(); ++n) {
        slices_[n] -= rhs.slices_[n];
    }
    return *this;
}

std::string BiSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (long n = 0; n <= trunc_order_; ++n) {
        const TPoly& p = coeff_q(n);
        if (p.is_zero()) {
            continue;
        }
        if (!first) {
            out << " + ";
        }
        out << "(" << p.str() << ")";
        if (n > 0) {
            out << "*q";
            if (n > 1) {
                out << "^" << n;
            }
        }
        first = false;
    }
    if (first) {
        out << "0";
    }
    out << " + O(q^" << trunc_order_ + 1 << ")";
    return out.str();
}

BiSeries operator+(BiSeries lhs, const BiSeries& rhs) {
    lhs += rhs;
    return lhs;
}

BiSeries operator-(BiSeries lhs, const BiSeries& rhs) {
    lhs -= rhs;
    return lhs;
}

BiSeries operator*(const BiSeries& lhs, const BiSeries& rhs) {
    if (lhs.trunc_order() != rhs.trunc_order()) {
        throw std::invalid_argument("truncation order mismatch");
    }
    const long order = lhs.trunc_order();
    BiSeries out(order);
    for (long n = 0; n <= order; ++n) {
        TPoly& target = out.slice(n);
        for (long k = 0; k <= n; ++k) {
            const TPoly& a = lhs.coeff_q(k);
            const TPoly& b = rhs.coeff_q(n - k);
            if (a.is_zero() || b.is_zero()) {
                continue;
            }
            target += a * b;
        }
    }
    return out;
}

BiSeries pow(const BiSeries& base, long exponent) {
    if (exponent < 0) {
        throw std::invalid_argument("negative series exponent");
    }
    BiSeries result = BiSeries::one(base.trunc_order());
    BiSeries square = base;
    long e = exponent;
    while (e > 0) {
        if (e & 1) {
            result = result * square;
        }
        e >>= 1;
        if (e > 0) {
            square = square * square;
        }
    }
    return result;
}

BiSeries geometric_inverse(long t_exp, long q_exp, long trunc_order) {
    if (q_exp < 1) {
        throw std::invalid_argument("geometric inverse needs q degree >= 1");
    }
    if (t_exp < 0) {
        throw std::invalid_argument("series terms need nonnegative exponents");
    }
    BiSeries out(trunc_order);
    for (long k = 0; k * q_exp <= trunc_order; ++k) {
        out.slice(k * q_exp).add_term(k * t_exp, Rational(1));
    }
    return out;
}

BiSeries goettsche_series(long b1, long b2, long trunc_order) {
    if (b1 < 0 || b2 < 0) {
        throw std::invalid_argument("Betti numbers must be nonnegative");
    }
    BiSeries out = BiSeries::one(trunc_order);
    for (long m = 1; m <= trunc_order; ++m) {
        if (b1 > 0) {
            BiSeries odd_low =
                BiSeries::one(trunc_order) + BiSeries::term(trunc_order, 2 * m - 1, m, Rational(1));
            BiSeries odd_high =
                BiSeries::one(trunc_order) + BiSeries::term(trunc_order, 2 * m + 1, m, Rational(1));
            out = out * pow(odd_low, b1) * pow(odd_high, b1);
        }
        out = out * geometric_inverse(2 * m - 2, m, trunc_order);
        out = out * geometric_inverse(2 * m + 2, m, trunc_order);
        if (b2 > 0) {
            out = out * pow(geometric_inverse(2 * m, m, trunc_order), b2);
        }
    }
    for (long n = 0; n <= trunc_order; ++n) {
        const TPoly& p = out.coeff_q(n);
        if (!p.is_zero() && (p.low_degree() < 0 || p.degree() > 4 * n)) {
            throw ConsistencyError("Betti slice escapes t-degree window [0, 4n] at n = " +
                                   std::to_string(n));
        }
    }
    return out;
}

Rational eval_t_minus_one(const TPoly& p) {
    return p.eval_at_minus_one();
}

}  // namespace hilbfock
