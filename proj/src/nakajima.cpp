#include "hilbfock/nakajima.hpp"

#include "hilbfock/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace hilbfock {

namespace {

void apply_creation(const ManifoldCohomology& m, long level, std::size_t class_idx,
                    const FockVector& v, FockVector& out) {
    const Generator g{static_cast<std::int32_t>(level), static_cast<std::int32_t>(class_idx)};
    for (const FockVector::Term& t : v) {
        Word word(t.mono.word());
        const int sign = insert_letter(m, word, g);
        if (sign == 0) {
            continue;
        }
        Rational coeff = t.coeff;
        if (sign < 0) {
            coeff = -coeff;
        }
        out.add_term(Monomial::from_canonical(std::move(word)), coeff);
    }
}

// Shared contraction loop for q_{-k}(alpha) and its pairing-dual variant.
// `pair_value(beta)` supplies the contraction scalar against a letter class.
template <typename PairFn, typename NonzeroFn>
void apply_annihilation(const ManifoldCohomology& m, long k, bool alpha_odd,
                        const FockVector& v, PairFn&& pair_value, NonzeroFn&& pair_nonzero,
                        FockVector& out) {
    const Rational minus_k(-k);
    for (const FockVector::Term& t : v) {
        const Word& word = t.mono.word();
        int prefix_sign = 1;
        for (std::size_t l = 0; l < word.size(); ++l) {
            const Generator letter = word[l];
            const auto letter_class = static_cast<std::size_t>(letter.class_idx);
            if (letter.level == k && pair_nonzero(letter_class)) {
                Rational coeff = t.coeff * pair_value(letter_class);
                coeff *= minus_k;
                if (prefix_sign < 0) {
                    coeff = -coeff;
                }
                Word reduced;
                reduced.reserve(word.size() - 1);
                reduced.assign(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(l));
                reduced.insert(reduced.end(), word.begin() + static_cast<std::ptrdiff_t>(l) + 1,
                               word.end());
                out.add_term(Monomial::from_canonical(std::move(reduced)), coeff);
            }
            if (alpha_odd && m.odd(letter_class)) {
                prefix_sign = -prefix_sign;
            }
        }
    }
}

}  // namespace

FockVector apply_q(const ManifoldCohomology& m, OperatorSpec op, const FockVector& v) {
    if (op.class_idx >= m.num_classes()) {
        throw std::out_of_range("class index out of range");
    }
    FockVector out;
    if (op.j == 0 || v.is_zero()) {
        return out;
    }
    if (op.j > 0) {
        apply_creation(m, op.j, op.class_idx, v, out);
        return out;
    }
    const long k = -op.j;
    apply_annihilation(
        m, k, m.odd(op.class_idx), v,
        [&](std::size_t beta) -> const Rational& { return m.pair(op.class_idx, beta); },
        [&](std::size_t beta) { return m.pair_nonzero(op.class_idx, beta); }, out);
    return out;
}

FockVector super_commutator(const ManifoldCohomology& m, long i, std::size_t alpha, long j,
                            std::size_t beta, const FockVector& v) {
    FockVector ij = apply_q(m, OperatorSpec{i, alpha}, apply_q(m, OperatorSpec{j, beta}, v));
    const FockVector ji =
        apply_q(m, OperatorSpec{j, beta}, apply_q(m, OperatorSpec{i, alpha}, v));
    if (m.odd(alpha) && m.odd(beta)) {
        ij += ji;
    } else {
        ij -= ji;
    }
    return ij;
}

Rational GramMatrix::entry(std::size_t r, std::size_t c) const {
    if (r >= dim || c >= dim) {
        throw std::out_of_range("Gram index out of range");
    }
    const auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& cell, std::size_t col) { return cell.first < col; });
    if (it != row.end() && it->first == c) {
        return it->second;
    }
    return Rational(0);
}

GramMatrix gram_matrix(const ManifoldCohomology& m, Bidegree bd) {
    auto table = enumerate_basis(m, bd.n);
    auto it = table.find(bd);
    if (it == table.end()) {
        return GramMatrix{};
    }
    return gram_matrix(m, it->second);
}

GramMatrix gram_matrix(const ManifoldCohomology& m, const std::vector<Monomial>& basis) {
    GramMatrix g;
    g.dim = basis.size();
    g.rows.resize(g.dim);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const Word& chain = basis[r].word();
        for (std::size_t c = 0; c < basis.size(); ++c) {
            // A_r = q_{-m_s}(dual(g_s)) ... q_{-m_1}(dual(g_1)), the reversal
            // of row monomial r; rightmost factor acts first.
            FockVector v = FockVector::single(basis[c]);
            for (const Generator& gen : chain) {
                if (v.is_zero()) {
                    break;
                }
                const auto dual_idx = static_cast<std::size_t>(gen.class_idx);
                FockVector next;
                apply_annihilation(
                    m, gen.level, m.odd(dual_idx), v,
                    [&](std::size_t beta) -> const Rational& { return m.dual_pair(dual_idx, beta); },
                    [&](std::size_t beta) { return m.dual_pair_nonzero(dual_idx, beta); }, next);
                v = std::move(next);
            }
            const Rational value = v.coeff(Monomial());
            if (value != 0) {
                g.rows[r].emplace_back(c, value);
            }
        }
    }
    return g;
}

Rational gram_det(const GramMatrix& g) {
    const std::size_t n = g.dim;
    std::vector<std::map<std::size_t, Rational>> rows(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (const auto& [c, value] : g.rows[r]) {
            rows[r].emplace(c, value);
        }
    }
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n) {
            auto it = rows[pivot].find(col);
            if (it != rows[pivot].end() && it->second != 0) {
                break;
            }
            ++pivot;
        }
        if (pivot == n) {
            return Rational(0);
        }
        if (pivot != col) {
            std::swap(rows[pivot], rows[col]);
            det = -det;
        }
        const Rational pivot_value = rows[col][col];
        det *= pivot_value;
        for (std::size_t r = col + 1; r < n; ++r) {
            auto hit = rows[r].find(col);
            if (hit == rows[r].end() || hit->second == 0) {
                continue;
            }
            const Rational factor = hit->second / pivot_value;
            for (const auto& [c, value] : rows[col]) {
                if (c < col) {
                    continue;
                }
                auto slot = rows[r].find(c);
                if (slot == rows[r].end()) {
                    rows[r].emplace(c, -factor * value);
                } else {
                    slot->second -= factor * value;
                }
            }
        }
    }
    return det;
}

}  // namespace hilbfock
