#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbfock/errors.hpp"
#include "hilbfock/series.hpp"
#include "oracle.hpp"

#include <json.hpp>

#include <fstream>
#include <random>

using namespace hilbfock;

namespace {

struct TermSpec {
    long t;
    long q;
    long num;
    long den = 1;
};

BiSeries make(long order, std::initializer_list<TermSpec> terms) {
    BiSeries s(order);
    for (const auto& t : terms) {
        s += BiSeries::term(order, t.t, t.q, Rational(t.num, t.den));
    }
    return s;
}

BiSeries random_series(std::mt19937_64& rng, long order) {
    std::uniform_int_distribution<int> term_count(0, 6);
    std::uniform_int_distribution<long> t_exp(0, 7);
    std::uniform_int_distribution<long> q_exp(0, order);
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    BiSeries s(order);
    const int terms = term_count(rng);
    for (int k = 0; k < terms; ++k) {
        s += BiSeries::term(order, t_exp(rng), q_exp(rng), Rational(num(rng), den(rng)));
    }
    return s;
}

TPoly slice_from_oracle(const std::map<long, Rational>& slice) {
    TPoly p;
    for (const auto& [e, c] : slice) {
        p.add_term(e, c);
    }
    return p;
}

}  // namespace

TEST_CASE("series addition") {
    const BiSeries one_tq = make(2, {{0, 0, 1}, {1, 1, 1}});
    CHECK(one_tq + BiSeries(2) == one_tq);
    CHECK((one_tq + make(2, {{0, 0, -1}, {1, 1, -1}})).is_zero());
    CHECK(make(2, {{0, 0, 1}, {2, 1, 1}}) + make(2, {{0, 0, 1}, {2, 1, 1}}) ==
          make(2, {{0, 0, 2}, {2, 1, 2}}));
    CHECK_THROWS_AS((void)(BiSeries(2) + BiSeries(3)), std::invalid_argument);
}

TEST_CASE("series multiplication") {
    const BiSeries a = make(3, {{0, 0, 1}, {1, 1, 1}});   // 1 + tq
    const BiSeries b = make(3, {{0, 0, 1}, {1, 1, -1}});  // 1 - tq
    CHECK(a * b == make(3, {{0, 0, 1}, {2, 2, -1}}));
    CHECK(make(1, {{0, 0, 1}, {0, 1, 1}}) * BiSeries::one(1) == make(1, {{0, 0, 1}, {0, 1, 1}}));
    // (1 + q + q^2)(1 - q) = 1 - q^3, truncated at order 2.
    const BiSeries c = make(2, {{0, 0, 1}, {0, 1, 1}, {0, 2, 1}});
    CHECK(c * make(2, {{0, 0, 1}, {0, 1, -1}}) == BiSeries::one(2));
    CHECK_THROWS_AS((void)(BiSeries(2) * BiSeries(3)), std::invalid_argument);
}

TEST_CASE("geometric inverse") {
    CHECK(geometric_inverse(0, 1, 3) ==
          make(3, {{0, 0, 1}, {0, 1, 1}, {0, 2, 1}, {0, 3, 1}}));
    CHECK(geometric_inverse(2, 1, 2) == make(2, {{0, 0, 1}, {2, 1, 1}, {4, 2, 1}}));
    CHECK(geometric_inverse(4, 2, 3) == make(3, {{0, 0, 1}, {4, 2, 1}}));
    CHECK_THROWS_AS(geometric_inverse(2, 0, 3), std::invalid_argument);
}

TEST_CASE("integer powers") {
    const BiSeries a = make(2, {{0, 0, 1}, {1, 1, 1}});
    CHECK(pow(a, 0) == BiSeries::one(2));
    CHECK(pow(a, 2) == make(2, {{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}));
    CHECK(pow(make(1, {{0, 0, 1}, {1, 1, 1}}), 4) == make(1, {{0, 0, 1}, {1, 1, 4}}));
    CHECK_THROWS_AS(pow(a, -1), std::invalid_argument);
}

TEST_CASE("betti generating series: frozen slices") {
    CHECK(goettsche_series(0, 1, 0) == BiSeries::one(0));

    const TPoly q1 = goettsche_series(4, 6, 1).coeff_q(1);
    TPoly expected_q1;
    for (auto [e, c] : {std::pair<long, long>{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}}) {
        expected_q1.add_term(e, Rational(c));
    }
    CHECK(q1 == expected_q1);

    TPoly expected_small;  // 1 + 2t^2 + 3t^4 + 2t^6 + t^8
    for (auto [e, c] : {std::pair<long, long>{0, 1}, {2, 2}, {4, 3}, {6, 2}, {8, 1}}) {
        expected_small.add_term(e, Rational(c));
    }
    CHECK(goettsche_series(0, 1, 2).coeff_q(2) == expected_small);

    TPoly expected_k3;  // 1 + 23t^2 + 276t^4 + 23t^6 + t^8
    for (auto [e, c] : {std::pair<long, long>{0, 1}, {2, 23}, {4, 276}, {6, 23}, {8, 1}}) {
        expected_k3.add_term(e, Rational(c));
    }
    CHECK(goettsche_series(0, 22, 2).coeff_q(2) == expected_k3);
}

TEST_CASE("betti generating series matches the naive oracle") {
    for (auto [b1, b2, order] : {std::array<long, 3>{0, 1, 4},
                                 {1, 0, 3},
                                 {2, 3, 3},
                                 {4, 6, 3},
                                 {0, 22, 3}}) {
        const BiSeries s = goettsche_series(b1, b2, order);
        const oracle::BiPoly reference = oracle::goettsche(b1, b2, order);
        for (long n = 0; n <= order; ++n) {
            CAPTURE(b1);
            CAPTURE(b2);
            CAPTURE(n);
            CHECK(s.coeff_q(n) == slice_from_oracle(oracle::bp_slice(reference, n)));
        }
    }
}

TEST_CASE("golden q^2 slices agree with oracle and library") {
    std::ifstream in(std::string(HILBFOCK_GOLDEN_DIR) + "/goettsche_q2.json");
    REQUIRE(in.good());
    nlohmann::json golden;
    in >> golden;
    REQUIRE(golden.size() == 2);
    for (const auto& entry : golden) {
        const long b1 = entry["b1"].get<long>();
        const long b2 = entry["b2"].get<long>();
        const long n = entry["n"].get<long>();
        TPoly expected;
        for (const auto& term : entry["slice"]) {
            expected.add_term(term[0].get<long>(), parse_rational(term[1].get<std::string>()));
        }
        CHECK(goettsche_series(b1, b2, n).coeff_q(n) == expected);
        CHECK(slice_from_oracle(oracle::bp_slice(oracle::goettsche(b1, b2, n), n)) == expected);
    }
}

TEST_CASE("slice extraction") {
    const BiSeries k3 = goettsche_series(0, 1, 2);
    CHECK(k3.coeff_q(0) == TPoly::constant(Rational(1)));
    CHECK(make(2, {{0, 0, 1}, {2, 1, 3}}).coeff_q(1) == TPoly::monomial(2, Rational(3)));
    CHECK_THROWS_AS(k3.coeff_q(3), std::out_of_range);
    CHECK_THROWS_AS(k3.coeff_q(-1), std::out_of_range);
}

TEST_CASE("evaluation at t = -1") {
    TPoly p;  // 1 + 2t^2 + 3t^4 + 2t^6 + t^8
    for (auto [e, c] : {std::pair<long, long>{0, 1}, {2, 2}, {4, 3}, {6, 2}, {8, 1}}) {
        p.add_term(e, Rational(c));
    }
    CHECK(eval_t_minus_one(p) == 9);

    TPoly q;  // 1 + 4t + 6t^2 + 4t^3 + t^4
    for (auto [e, c] : {std::pair<long, long>{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}}) {
        q.add_term(e, Rational(c));
    }
    CHECK(eval_t_minus_one(q) == 0);
    CHECK(eval_t_minus_one(TPoly()) == 0);
}

TEST_CASE("ring axioms on random series") {
    std::mt19937_64 rng(0xBE771);
    for (int round = 0; round < 60; ++round) {
        const long order = 3;
        const BiSeries a = random_series(rng, order);
        const BiSeries b = random_series(rng, order);
        const BiSeries c = random_series(rng, order);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("geometric inverse is a genuine inverse") {
    for (long a = 0; a <= 5; ++a) {
        for (long b = 1; b <= 4; ++b) {
            const long order = 6;
            const BiSeries factor =
                BiSeries::one(order) - BiSeries::term(order, a, b, Rational(1));
            CHECK(geometric_inverse(a, b, order) * factor == BiSeries::one(order));
        }
    }
}

TEST_CASE("betti slice properties for random parameters") {
    std::mt19937_64 rng(0x90E775);
    std::uniform_int_distribution<long> b1_dist(0, 5);
    std::uniform_int_distribution<long> b2_dist(0, 10);
    for (int round = 0; round < 12; ++round) {
        const long b1 = b1_dist(rng);
        const long b2 = b2_dist(rng);
        const long order = 4;
        const BiSeries s = goettsche_series(b1, b2, order);
        CAPTURE(b1);
        CAPTURE(b2);

        CHECK(s.coeff_q(0) == TPoly::constant(Rational(1)));

        TPoly expected_q1;
        expected_q1.add_term(0, Rational(1));
        expected_q1.add_term(1, Rational(b1));
        expected_q1.add_term(2, Rational(b2));
        expected_q1.add_term(3, Rational(b1));
        expected_q1.add_term(4, Rational(1));
        CHECK(s.coeff_q(1) == expected_q1);

        // Signed slice sums follow the Euler series prod_m (1-q^m)^{-e}
        // with e = 2 - 2*b1 + b2; in particular they vanish for n >= 1
        // exactly when e = 0.
        const long euler = 2 - 2 * b1 + b2;
        oracle::BiPoly euler_series = oracle::bp_one();
        for (long m = 1; m <= order; ++m) {
            if (euler >= 0) {
                euler_series = oracle::bp_mul(
                    euler_series, oracle::bp_pow(oracle::bp_geometric(0, m, order), euler, order),
                    order);
            } else {
                oracle::BiPoly factor = oracle::bp_one();
                factor[{0, m}] = Rational(-1);
                euler_series =
                    oracle::bp_mul(euler_series, oracle::bp_pow(factor, -euler, order), order);
            }
        }

        for (long n = 0; n <= order; ++n) {
            const TPoly& slice = s.coeff_q(n);
            CHECK(slice.low_degree() >= 0);
            CHECK(slice.degree() <= 4 * n);
            for (const auto& [i, coeff] : slice.terms()) {
                CHECK(slice.coeff(4 * n - i) == coeff);  // palindromic slice
            }
            const auto euler_slice = oracle::bp_slice(euler_series, n);
            const Rational expected =
                euler_slice.count(0) ? euler_slice.at(0) : Rational(0);
            CHECK(eval_t_minus_one(slice) == expected);
        }
    }
}

TEST_CASE("signed slice sums vanish when the fourfold has zero Euler characteristic") {
    for (auto [b1, b2] : {std::pair<long, long>{1, 0}, {2, 2}, {4, 6}}) {
        const BiSeries s = goettsche_series(b1, b2, 4);
        for (long n = 1; n <= 4; ++n) {
            CAPTURE(b1);
            CAPTURE(n);
            CHECK(eval_t_minus_one(s.coeff_q(n)) == 0);
        }
    }
}
