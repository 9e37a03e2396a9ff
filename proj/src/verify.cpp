#include "hilbfock/verify.hpp"

#include "hilbfock/errors.hpp"

#include <algorithm>
#include <string>

namespace hilbfock {

CharacterTable character_from_fock(const ManifoldCohomology& m, long n_max) {
    CharacterTable table;
    table.n_max = n_max;
    for_each_basis_monomial(m, n_max,
                            [&](const Word&, Bidegree bd) { ++table.entries[bd]; });
    return table;
}

CharacterTable character_from_series(const ManifoldCohomology& m, long n_max) {
    CharacterTable table;
    table.n_max = n_max;
    const BiSeries series = goettsche_series(m.b1(), m.b2(), n_max);
    for (long n = 0; n <= n_max; ++n) {
        for (const auto& [t_exp, coeff] : series.coeff_q(n).terms()) {
            const Int dim = integer_value(coeff);
            if (dim < 0) {
                throw ConsistencyError("negative Betti coefficient at (n=" + std::to_string(n) +
                                       ", i=" + std::to_string(t_exp) + ")");
            }
            table.entries[Bidegree{n, t_exp}] = dim.convert_to<unsigned long long>();
        }
    }
    return table;
}

TPoly character_row(const CharacterTable& table, long n) {
    TPoly row;
    for (auto it = table.entries.lower_bound(Bidegree{n, 0});
         it != table.entries.end() && it->first.n == n; ++it) {
        row.add_term(it->first.i, Rational(it->second));
    }
    return row;
}

Int character_euler(const CharacterTable& table, long n) {
    return integer_value(character_row(table, n).eval_at_minus_one());
}

bool character_row_palindromic(const CharacterTable& table, long n) {
    const TPoly row = character_row(table, n);
    for (const auto& [i, dim] : row.terms()) {
        if (row.coeff(4 * n - i) != dim) {
            return false;
        }
    }
    return true;
}

std::optional<CharacterDiscrepancy> first_table_discrepancy(const CharacterTable& fock,
                                                            const CharacterTable& series) {
    auto f = fock.entries.begin();
    auto s = series.entries.begin();
    while (f != fock.entries.end() || s != series.entries.end()) {
        if (s == series.entries.end() ||
            (f != fock.entries.end() && f->first < s->first)) {
            return CharacterDiscrepancy{f->first, f->second, 0};
        }
        if (f == fock.entries.end() || s->first < f->first) {
            return CharacterDiscrepancy{s->first, 0, s->second};
        }
        if (f->second != s->second) {
            return CharacterDiscrepancy{f->first, f->second, s->second};
        }
        ++f;
        ++s;
    }
    return std::nullopt;
}

CharacterReport verify_character(const ManifoldCohomology& m, long n_max) {
    CharacterReport report;
    report.n_max = n_max;
    report.fock = character_from_fock(m, n_max);
    report.series = character_from_series(m, n_max);
    report.first = first_table_discrepancy(report.fock, report.series);
    report.pass = !report.first.has_value();
    return report;
}

namespace {

// Compares [q_i(a), q_j(b)] v against i delta_{i+j,0} pair(a,b) v without
// materializing the right-hand side unless the scalar is nonzero.
bool commutator_matches(const ManifoldCohomology& m, long i, std::size_t alpha, long j,
                        std::size_t beta, const FockVector& v, FockVector& computed,
                        FockVector& expected) {
    computed = super_commutator(m, i, alpha, j, beta, v);
    expected = FockVector();
    if (i + j == 0 && i != 0) {
        const Rational& pairing = m.pair(alpha, beta);
        if (pairing != 0) {
            expected = v * (Rational(i) * pairing);
        }
    }
    return computed == expected;
}

}  // namespace

CommutatorReport verify_commutators(const ManifoldCohomology& m, long max_level, long max_n) {
    CommutatorReport report;
    report.pass = true;
    std::vector<FockVector> basis;
    for_each_basis_monomial(m, max_n, [&](const Word& word, Bidegree) {
        basis.push_back(FockVector::single(Monomial::from_canonical(Word(word))));
    });
    const std::size_t num_classes = m.num_classes();
    for (long i = -max_level; i <= max_level; ++i) {
        for (long j = -max_level; j <= max_level; ++j) {
            const bool contracting = (i + j == 0) && i != 0;
            for (std::size_t alpha = 0; alpha < num_classes; ++alpha) {
                for (std::size_t beta = 0; beta < num_classes; ++beta) {
                    Rational scale(0);
                    if (contracting) {
                        scale = Rational(i) * m.pair(alpha, beta);
                    }
                    const bool expect_zero = scale == 0;
                    for (const FockVector& v : basis) {
                        ++report.checks;
                        const FockVector computed = super_commutator(m, i, alpha, j, beta, v);
                        // v is a single coefficient-1 monomial, so the
                        // expected vector is that monomial scaled.
                        const bool ok =
                            expect_zero
                                ? computed.is_zero()
                                : computed.size() == 1 && computed.begin()->coeff == scale &&
                                      computed.begin()->mono == v.begin()->mono;
                        if (!ok) {
                            report.pass = false;
                            report.first = CommutatorCounterexample{i,        j,        alpha,
                                                                    beta,     v,        computed,
                                                                    v * scale};
                            return report;
                        }
                    }
                }
            }
        }
    }
    return report;
}

CommutatorReport verify_commutators_random(const ManifoldCohomology& m, long max_level,
                                           long max_n, std::uint64_t seed, long trials) {
    CommutatorReport report;
    report.pass = true;
    const std::vector<Monomial> basis = all_basis_monomials(m, max_n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> level_dist(-max_level, max_level);
    std::uniform_int_distribution<std::size_t> class_dist(0, m.num_classes() - 1);
    FockVector computed;
    FockVector expected;
    for (long trial = 0; trial < trials; ++trial) {
        const FockVector v = random_fock_vector(basis, rng);
        const long i = level_dist(rng);
        const long j = level_dist(rng);
        const std::size_t alpha = class_dist(rng);
        const std::size_t beta = class_dist(rng);
        ++report.checks;
        if (!commutator_matches(m, i, alpha, j, beta, v, computed, expected)) {
            report.pass = false;
            report.first = CommutatorCounterexample{i, j, alpha, beta, v, computed, expected};
            return report;
        }
    }
    return report;
}

GramReport gram_report(const ManifoldCohomology& m, long n) {
    GramReport report;
    report.all_nonzero = true;
    auto table = enumerate_basis(m, n);
    for (const auto& [bd, basis] : table) {
        if (bd.n != n) {
            continue;
        }
        const GramMatrix g = gram_matrix(m, basis);
        Rational det = gram_det(g);
        if (det == 0) {
            report.all_nonzero = false;
        }
        report.slices.push_back(GramReport::Slice{bd, basis.size(), std::move(det)});
    }
    return report;
}

std::vector<Monomial> all_basis_monomials(const ManifoldCohomology& m, long n_max) {
    std::vector<Monomial> basis;
    for_each_basis_monomial(m, n_max, [&](const Word& word, Bidegree) {
        basis.push_back(Monomial::from_canonical(Word(word)));
    });
    return basis;
}

FockVector random_fock_vector(const std::vector<Monomial>& basis, std::mt19937_64& rng,
                              int max_terms) {
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> term_count(1, max_terms);
    std::uniform_int_distribution<int> numerator(-9, 9);
    std::uniform_int_distribution<int> denominator(1, 4);
    FockVector v;
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        v.add_term(basis[pick(rng)], Rational(numerator(rng), denominator(rng)));
    }
    return v;
}

nlohmann::json to_json(const CharacterTable& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [bd, dim] : table.entries) {
        entries.push_back({{"n", bd.n}, {"i", bd.i}, {"dim", dim}});
    }
    return {{"n_max", table.n_max}, {"entries", std::move(entries)}};
}

nlohmann::json to_json(const ManifoldCohomology& m, const CharacterReport& report) {
    nlohmann::json doc{{"command", "verify"},
                       {"manifold", m.name()},
                       {"n_max", report.n_max},
                       {"pass", report.pass}};
    if (report.first) {
        doc["first_discrepancy"] = {{"n", report.first->at.n},
                                    {"i", report.first->at.i},
                                    {"fock", report.first->fock_dim},
                                    {"series", report.first->series_dim}};
    } else {
        doc["first_discrepancy"] = nullptr;
    }
    doc["character"] = to_json(report.series);
    return doc;
}

nlohmann::json to_json(const ManifoldCohomology& m, const CommutatorReport& report) {
    nlohmann::json doc{{"command", "commutators"},
                       {"manifold", m.name()},
                       {"pass", report.pass},
                       {"checks", report.checks}};
    if (report.first) {
        const auto& c = *report.first;
        doc["first_counterexample"] = {
            {"i", c.i},
            {"j", c.j},
            {"alpha", m.cls(c.alpha).label},
            {"beta", m.cls(c.beta).label},
            {"input", c.input.str(m)},
            {"computed", c.computed.str(m)},
            {"expected", c.expected.str(m)}};
    } else {
        doc["first_counterexample"] = nullptr;
    }
    return doc;
}

nlohmann::json to_json(const ManifoldCohomology& m, const GramReport& report) {
    nlohmann::json slices = nlohmann::json::array();
    for (const auto& slice : report.slices) {
        slices.push_back({{"n", slice.bd.n},
                          {"i", slice.bd.i},
                          {"dim", slice.dim},
                          {"det", rational_str(slice.det)}});
    }
    return {{"command", "gram"},
            {"manifold", m.name()},
            {"all_nonzero", report.all_nonzero},
            {"slices", std::move(slices)}};
}

}  // namespace hilbfock
