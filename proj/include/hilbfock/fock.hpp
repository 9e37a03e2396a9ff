#pragma once

#include "hilbfock/manifold.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace hilbfock {

// A creation letter q_m(class): level m >= 1 decorated with a basis class.
// Annihilation exists only as an operator, never as a letter.
struct Generator {
    std::int32_t level = 1;
    std::int32_t class_idx = 0;

    friend bool operator==(Generator, Generator) = default;
};

// Canonical letter order: level descending, then class index ascending.
inline bool gen_less(Generator a, Generator b) {
    if (a.level != b.level) {
        return a.level > b.level;
    }
    return a.class_idx < b.class_idx;
}

using Word = boost::container::small_vector<Generator, 6>;

struct Bidegree {
    long n = 0;  // point count: sum of levels
    long i = 0;  // cohomological degree: sum of deg(class) + 2*level - 2

    auto operator<=>(const Bidegree&) const = default;
};

// A canonically ordered creation word applied to the vacuum; the Fock basis
// element. The empty word is the vacuum. A word with a repeated odd-class
// letter is not a monomial (it is zero), so it cannot be constructed here.
class Monomial {
public:
    Monomial() = default;  // vacuum

    // Trusted factory: `word` must already be canonical.
    static Monomial from_canonical(Word word) { return Monomial(std::move(word)); }

    const Word& word() const { return word_; }
    bool is_vacuum() const { return word_.empty(); }
    std::size_t length() const { return word_.size(); }

    Bidegree bidegree(const ManifoldCohomology& m) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    explicit Monomial(Word word) : word_(std::move(word)) {}

    Word word_;
};

// Lexicographic order on canonical words (prefixes first); the deterministic
// order used for basis enumeration and vector storage.
bool operator<(const Monomial& a, const Monomial& b);

struct Canonicalized {
    Monomial mono;
    int sign = 1;  // +1 or -1; meaningless when zero
    bool zero = false;
};

// Sorts an arbitrary creation word into canonical order. Each transposition
// of two adjacent odd-class letters contributes a factor -1; a repeated
// odd-class letter collapses the word to zero.
Canonicalized canonicalize(const ManifoldCohomology& m, std::span<const Generator> word);

// Inserts one letter into an already-canonical word, as if prepended and
// commuted into place. Returns the sign, or 0 when the word dies on a
// repeated odd letter (in which case `word` is left unspecified).
int insert_letter(const ManifoldCohomology& m, Word& word, Generator g);

// A finite Q-linear combination of monomials; terms sorted by monomial,
// no zero coefficients stored.
class FockVector {
public:
    struct Term {
        Monomial mono;
        Rational coeff;

        friend bool operator==(const Term&, const Term&) = default;
    };
    using Storage = boost::container::small_vector<Term, 4>;

    FockVector() = default;  // zero vector
    static FockVector vacuum();
    static FockVector single(Monomial mono, Rational coeff = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    Rational coeff(const Monomial& mono) const;
    void add_term(const Monomial& mono, const Rational& coeff);

    FockVector& operator+=(const FockVector& rhs);
    FockVector& operator-=(const FockVector& rhs);
    FockVector& operator*=(const Rational& scale);

    // The common bidegree of all terms, if the vector is homogeneous;
    // nullopt for the zero vector or a mixed vector.
    std::optional<Bidegree> homogeneous_bidegree(const ManifoldCohomology& m) const;

    std::string str(const ManifoldCohomology& m) const;

    friend bool operator==(const FockVector&, const FockVector&) = default;

private:
    Storage terms_;
};

FockVector operator+(FockVector lhs, const FockVector& rhs);
FockVector operator-(FockVector lhs, const FockVector& rhs);
FockVector operator*(FockVector lhs, const Rational& scale);

inline FockVector vec_add(FockVector a, const FockVector& b) { return std::move(a) + b; }
inline FockVector vec_scale(FockVector v, const Rational& c) { return std::move(v) * c; }

// Visits every canonical monomial with level sum <= n_max exactly once, in
// lexicographic order, vacuum first.
void for_each_basis_monomial(const ManifoldCohomology& m, long n_max,
                             const std::function<void(const Word&, Bidegree)>& visit);

// All canonical monomials with level sum <= n_max, grouped by bidegree;
// each list is in lexicographic order.
std::map<Bidegree, std::vector<Monomial>> enumerate_basis(const ManifoldCohomology& m,
                                                          long n_max);

}  // namespace hilbfock
