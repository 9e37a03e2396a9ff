#include "hilbfock/fock.hpp"

#include "hilbfock/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hilbfock {

Bidegree Monomial::bidegree(const ManifoldCohomology& m) const {
    Bidegree bd;
    for (const Generator& g : word_) {
        bd.n += g.level;
        bd.i += m.degree(static_cast<std::size_t>(g.class_idx)) + 2L * g.level - 2;
    }
    return bd;
}

bool operator<(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.word().begin(), a.word().end(), b.word().begin(),
                                        b.word().end(), gen_less);
}

int insert_letter(const ManifoldCohomology& m, Word& word, Generator g) {
    auto pos = std::lower_bound(word.begin(), word.end(), g, gen_less);
    const bool g_odd = m.odd(static_cast<std::size_t>(g.class_idx));
    if (g_odd && pos != word.end() && *pos == g) {
        return 0;
    }
    int sign = 1;
    if (g_odd) {
        for (auto it = word.begin(); it != pos; ++it) {
            if (m.odd(static_cast<std::size_t>(it->class_idx))) {
                sign = -sign;
            }
        }
    }
    word.insert(pos, g);
    return sign;
}

namespace {

// Append-side insertion: the letter arrives after the sorted prefix and
// bubbles left, so the sign counts the odd letters it jumps over on its
// right-hand side.
int append_letter(const ManifoldCohomology& m, Word& word, Generator g) {
    auto pos = std::upper_bound(word.begin(), word.end(), g, gen_less);
    const bool g_odd = m.odd(static_cast<std::size_t>(g.class_idx));
    if (g_odd && pos != word.begin() && *(pos - 1) == g) {
        return 0;
    }
    int sign = 1;
    if (g_odd) {
        for (auto it = pos; it != word.end(); ++it) {
            if (m.odd(static_cast<std::size_t>(it->class_idx))) {
                sign = -sign;
            }
        }
    }
    word.insert(pos, g);
    return sign;
}

}  // namespace

Canonicalized canonicalize(const ManifoldCohomology& m, std::span<const Generator> word) {
    Word sorted;
    sorted.reserve(word.size());
    int sign = 1;
    for (const Generator& g : word) {
        if (g.level < 1) {
            throw std::invalid_argument("creation letters need level >= 1");
        }
        const int s = append_letter(m, sorted, g);
        if (s == 0) {
            return Canonicalized{Monomial(), 1, true};
        }
        sign *= s;
    }
    return Canonicalized{Monomial::from_canonical(std::move(sorted)), sign, false};
}

FockVector FockVector::vacuum() {
    return single(Monomial());
}

FockVector FockVector::single(Monomial mono, Rational coeff) {
    FockVector v;
    if (coeff != 0) {
        v.terms_.push_back(Term{std::move(mono), std::move(coeff)});
    }
    return v;
}

Rational FockVector::coeff(const Monomial& mono) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                               [](const Term& t, const Monomial& key) { return t.mono < key; });
    if (it != terms_.end() && it->mono == mono) {
        return it->coeff;
    }
    return Rational(0);
}

void FockVector::add_term(const Monomial& mono, const Rational& coeff) {
    if (coeff == 0) {
        return;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                               [](const Term& t, const Monomial& key) { return t.mono < key; });
    if (it != terms_.end() && it->mono == mono) {
        it->coeff += coeff;
        if (it->coeff == 0) {
            terms_.erase(it);
        }
    } else {
        terms_.insert(it, Term{mono, coeff});
    }
}

FockVector& FockVector::operator+=(const FockVector& rhs) {
    for (const Term& t : rhs.terms_) {
        add_term(t.mono, t.coeff);
    }
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& rhs) {
    for (const Term& t : rhs.terms_) {
        add_term(t.mono, -t.coeff);
    }
    return *this;
}

FockVector& FockVector::operator*=(const Rational& scale) {
    if (scale == 0) {
        terms_.clear();
        return *this;
    }
    for (Term& t : terms_) {
        t.coeff *= scale;
    }
    return *this;
}

std::optional<Bidegree> FockVector::homogeneous_bidegree(const ManifoldCohomology& m) const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    Bidegree bd = terms_.front().mono.bidegree(m);
    for (const Term& t : terms_) {
        if (t.mono.bidegree(m) != bd) {
            return std::nullopt;
        }
    }
    return bd;
}

std::string FockVector::str(const ManifoldCohomology& m) const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first) {
            out << " + ";
        }
        out << rational_str(t.coeff) << "*";
        if (t.mono.is_vacuum()) {
            out << "|0>";
        } else {
            for (const Generator& g : t.mono.word()) {
                out << "q_" << g.level << "(" << m.cls(static_cast<std::size_t>(g.class_idx)).label
                    << ")";
            }
            out << "|0>";
        }
        first = false;
    }
    return out.str();
}

FockVector operator+(FockVector lhs, const FockVector& rhs) {
    lhs += rhs;
    return lhs;
}

FockVector operator-(FockVector lhs, const FockVector& rhs) {
    lhs -= rhs;
    return lhs;
}

FockVector operator*(FockVector lhs, const Rational& scale) {
    lhs *= scale;
    return lhs;
}

namespace {

// Depth-first extension of a canonical word by letters that keep it
// canonical. Children are visited in increasing letter order, so the whole
// traversal is lexicographic.
void extend_word(const ManifoldCohomology& m, Word& word, Bidegree bd, long budget,
                 const std::function<void(const Word&, Bidegree)>& visit) {
    visit(word, bd);
    if (budget <= 0) {
        return;
    }
    const long num_classes = static_cast<long>(m.num_classes());
    const bool empty = word.empty();
    const Generator last = empty ? Generator{0, 0} : word.back();
    const long level_hi = empty ? budget : std::min<long>(budget, last.level);
    for (long level = level_hi; level >= 1; --level) {
        const long class_lo = (!empty && level == last.level) ? last.class_idx : 0;
        for (long c = class_lo; c < num_classes; ++c) {
            const Generator g{static_cast<std::int32_t>(level), static_cast<std::int32_t>(c)};
            if (m.odd(static_cast<std::size_t>(c)) && !empty && last == g) {
                continue;  // odd letters never repeat
            }
            word.push_back(g);
            const Bidegree child{bd.n + level,
                                 bd.i + m.degree(static_cast<std::size_t>(c)) + 2 * level - 2};
            extend_word(m, word, child, budget - level, visit);
            word.pop_back();
        }
    }
}

}  // namespace

void for_each_basis_monomial(const ManifoldCohomology& m, long n_max,
                             const std::function<void(const Word&, Bidegree)>& visit) {
    if (n_max < 0) {
        throw std::invalid_argument("n_max must be >= 0");
    }
    Word word;
    extend_word(m, word, Bidegree{0, 0}, n_max, visit);
}

std::map<Bidegree, std::vector<Monomial>> enumerate_basis(const ManifoldCohomology& m,
                                                          long n_max) {
    std::map<Bidegree, std::vector<Monomial>> table;
    for_each_basis_monomial(m, n_max, [&](const Word& word, Bidegree bd) {
        table[bd].push_back(Monomial::from_canonical(Word(word)));
    });
    return table;
}

}  // namespace hilbfock
