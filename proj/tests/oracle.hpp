#pragma once

// Test-only reference implementations, kept deliberately naive and
// independent of the library's series and Fock machinery. Expected values in
// the test suites are frozen from these.

#include "hilbfock/manifold.hpp"
#include "hilbfock/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace oracle {

using hilbfock::Rational;

// Dense-map bivariate polynomial: (t exponent, q exponent) -> coefficient.
using BiPoly = std::map<std::pair<long, long>, Rational>;

inline BiPoly bp_one() {
    return BiPoly{{{0, 0}, Rational(1)}};
}

inline BiPoly bp_mul(const BiPoly& a, const BiPoly& b, long q_max) {
    BiPoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            const long tq = ea.second + eb.second;
            if (tq > q_max) {
                continue;
            }
            auto key = std::make_pair(ea.first + eb.first, tq);
            auto it = out.find(key);
            if (it == out.end()) {
                out.emplace(key, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) {
                    out.erase(it);
                }
            }
        }
    }
    return out;
}

// (1 - t^a q^b)^{-1} as an explicit geometric sum.
inline BiPoly bp_geometric(long a, long b, long q_max) {
    BiPoly out;
    for (long k = 0; k * b <= q_max; ++k) {
        out[{k * a, k * b}] = Rational(1);
    }
    return out;
}

// Naive power by repeated multiplication (no squaring tricks).
inline BiPoly bp_pow(const BiPoly& base, long e, long q_max) {
    BiPoly out = bp_one();
    for (long k = 0; k < e; ++k) {
        out = bp_mul(out, base, q_max);
    }
    return out;
}

// Betti generating series, expanded factor by factor from the closed form.
inline BiPoly goettsche(long b1, long b2, long q_max) {
    BiPoly out = bp_one();
    for (long m = 1; m <= q_max; ++m) {
        BiPoly odd_low = bp_one();
        odd_low[{2 * m - 1, m}] = Rational(1);
        BiPoly odd_high = bp_one();
        odd_high[{2 * m + 1, m}] = Rational(1);
        out = bp_mul(out, bp_pow(odd_low, b1, q_max), q_max);
        out = bp_mul(out, bp_pow(odd_high, b1, q_max), q_max);
        out = bp_mul(out, bp_geometric(2 * m - 2, m, q_max), q_max);
        out = bp_mul(out, bp_geometric(2 * m + 2, m, q_max), q_max);
        out = bp_mul(out, bp_pow(bp_geometric(2 * m, m, q_max), b2, q_max), q_max);
    }
    return out;
}

// q^n slice of a BiPoly as (t exponent -> coefficient).
inline std::map<long, Rational> bp_slice(const BiPoly& p, long n) {
    std::map<long, Rational> out;
    for (const auto& [e, c] : p) {
        if (e.second == n) {
            out[e.first] = c;
        }
    }
    return out;
}

// Reference canonicalization: plain bubble sort over the letter order,
// flipping the sign on every adjacent swap of two odd-class letters and
// bailing out when an odd letter repeats.
struct BubbleResult {
    std::vector<std::pair<int, int>> word;  // (level, class); canonical
    int sign = 1;
    bool zero = false;
};

inline BubbleResult bubble_canonicalize(const hilbfock::ManifoldCohomology& m,
                                        std::vector<std::pair<int, int>> word) {
    BubbleResult result;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t l = 0; l + 1 < word.size(); ++l) {
            auto [la, ca] = word[l];
            auto [lb, cb] = word[l + 1];
            const bool out_of_order = (lb > la) || (lb == la && cb < ca);
            if (out_of_order) {
                std::swap(word[l], word[l + 1]);
                if (m.odd(static_cast<std::size_t>(ca)) && m.odd(static_cast<std::size_t>(cb))) {
                    result.sign = -result.sign;
                }
                moved = true;
            }
        }
    }
    for (std::size_t l = 0; l + 1 < word.size(); ++l) {
        if (word[l] == word[l + 1] && m.odd(static_cast<std::size_t>(word[l].second))) {
            result.zero = true;
        }
    }
    result.word = std::move(word);
    return result;
}

}  // namespace oracle
