#pragma once

#include "hilbfock/nakajima.hpp"

#include <json.hpp>

#include <optional>
#include <random>
#include <vector>

namespace hilbfock {

// Graded dimensions dim H^i(X^[n]) indexed by bidegree; zero entries omitted.
struct CharacterTable {
    long n_max = 0;
    std::map<Bidegree, unsigned long long> entries;

    friend bool operator==(const CharacterTable&, const CharacterTable&) = default;
};

// Counts the monomial basis per bidegree.
CharacterTable character_from_fock(const ManifoldCohomology& m, long n_max);

// Reads the Betti generating series; every coefficient is checked to be a
// nonnegative integer (ConsistencyError otherwise).
CharacterTable character_from_series(const ManifoldCohomology& m, long n_max);

// One row as a polynomial in t.
TPoly character_row(const CharacterTable& table, long n);

// Signed row sum (value at t = -1).
Int character_euler(const CharacterTable& table, long n);

// dim(n, i) == dim(n, 4n - i) for all i.
bool character_row_palindromic(const CharacterTable& table, long n);

struct CharacterDiscrepancy {
    Bidegree at;
    unsigned long long fock_dim = 0;
    unsigned long long series_dim = 0;
};

struct CharacterReport {
    bool pass = false;
    long n_max = 0;
    std::optional<CharacterDiscrepancy> first;  // lexicographically smallest failing (n, i)
    CharacterTable fock;
    CharacterTable series;
};

// Smallest (n, i) at which two tables disagree; missing entries count as 0.
std::optional<CharacterDiscrepancy> first_table_discrepancy(const CharacterTable& fock,
                                                            const CharacterTable& series);

// The headline identity: basis enumeration against the product formula.
CharacterReport verify_character(const ManifoldCohomology& m, long n_max);

struct CommutatorCounterexample {
    long i = 0;
    long j = 0;
    std::size_t alpha = 0;
    std::size_t beta = 0;
    FockVector input;
    FockVector computed;
    FockVector expected;
};

struct CommutatorReport {
    bool pass = false;
    unsigned long long checks = 0;
    std::optional<CommutatorCounterexample> first;
};

// Exhaustive check of [q_i(a), q_j(b)] = i delta_{i+j,0} pair(a,b) id over
// all class pairs, all |i|, |j| <= max_level, applied to every basis
// monomial with point count <= max_n.
CommutatorReport verify_commutators(const ManifoldCohomology& m, long max_level, long max_n);

// Seeded spot checks of the same identity on random inhomogeneous vectors.
CommutatorReport verify_commutators_random(const ManifoldCohomology& m, long max_level,
                                           long max_n, std::uint64_t seed, long trials);

struct GramReport {
    struct Slice {
        Bidegree bd;
        std::size_t dim = 0;
        Rational det;
    };
    std::vector<Slice> slices;  // bidegrees with point count exactly n, ascending i
    bool all_nonzero = false;
};

// Gram determinants for every nonempty bidegree at point count n.
GramReport gram_report(const ManifoldCohomology& m, long n);

// Flat list of all basis monomials with point count <= n_max, lex order.
std::vector<Monomial> all_basis_monomials(const ManifoldCohomology& m, long n_max);

// Random sparse vector over the given basis; exercised by the seeded trials.
FockVector random_fock_vector(const std::vector<Monomial>& basis, std::mt19937_64& rng,
                              int max_terms = 4);

// Machine-readable summaries (same object notation as the manifold input).
nlohmann::json to_json(const CharacterTable& table);
nlohmann::json to_json(const ManifoldCohomology& m, const CharacterReport& report);
nlohmann::json to_json(const ManifoldCohomology& m, const CommutatorReport& report);
nlohmann::json to_json(const ManifoldCohomology& m, const GramReport& report);

}  // namespace hilbfock
