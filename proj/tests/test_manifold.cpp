#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbfock/errors.hpp"
#include "hilbfock/manifold.hpp"
#include "hilbfock/series.hpp"

#include <json.hpp>

#include <string>

using namespace hilbfock;
using nlohmann::json;

namespace {

json cp2_doc() {
    return json::parse(R"({
      "name": "CP2-like",
      "betti": [1, 0, 1, 0, 1],
      "classes": [
        {"label": "1", "degree": 0},
        {"label": "h", "degree": 2},
        {"label": "p", "degree": 4}
      ],
      "pairing": [
        ["0", "0", "1"],
        ["0", "1", "0"],
        ["1", "0", "0"]
      ]
    })");
}

// Minimal fourfold with odd cohomology: one dual pair in degrees 1 and 3.
json odd_doc(const std::string& sign_back) {
    json doc = json::parse(R"({
      "name": "odd-pair",
      "betti": [1, 1, 0, 1, 1],
      "classes": [
        {"label": "1", "degree": 0},
        {"label": "a", "degree": 1},
        {"label": "a*", "degree": 3},
        {"label": "p", "degree": 4}
      ],
      "pairing": [
        ["0", "0", "0", "1"],
        ["0", "0", "1", "0"],
        ["0", "-1", "0", "0"],
        ["1", "0", "0", "0"]
      ]
    })");
    doc["pairing"][2][1] = sign_back;
    return doc;
}

ManifoldCohomology fixture(const char* stem) {
    return ManifoldCohomology::load(std::string(HILBFOCK_DATA_DIR) + "/" + stem + ".json");
}

TPoly poly(std::initializer_list<std::pair<long, long>> terms) {
    TPoly p;
    for (auto [e, c] : terms) {
        p.add_term(e, Rational(c));
    }
    return p;
}

}  // namespace

TEST_CASE("loads a valid document and serves the pairing") {
    const ManifoldCohomology m = ManifoldCohomology::from_json(cp2_doc());
    CHECK(m.name() == "CP2-like");
    CHECK(m.b1() == 0);
    CHECK(m.b2() == 1);
    const std::size_t one = *m.class_index("1");
    const std::size_t h = *m.class_index("h");
    const std::size_t p = *m.class_index("p");
    CHECK(m.pair(one, p) == 1);
    CHECK(m.pair(p, one) == 1);
    CHECK(m.pair(h, h) == 1);
    CHECK(m.pair(h, one) == 0);
    CHECK_THROWS_AS((void)m.pair(0, 3), std::out_of_range);
    CHECK(!m.class_index("nope").has_value());
}

TEST_CASE("graded symmetry forces the odd sign rule") {
    const ManifoldCohomology m = ManifoldCohomology::from_json(odd_doc("-1"));
    const std::size_t a = *m.class_index("a");
    const std::size_t a_star = *m.class_index("a*");
    CHECK(m.pair(a, a_star) == 1);
    CHECK(m.pair(a_star, a) == -1);
    CHECK_THROWS_AS(ManifoldCohomology::from_json(odd_doc("1")), ValidationError);
}

TEST_CASE("rejects documents violating an invariant") {
    auto expect_rejection = [](json doc) {
        CHECK_THROWS_AS(ManifoldCohomology::from_json(doc), ValidationError);
    };

    {
        json doc = cp2_doc();
        doc["betti"] = {1, 2, 1, 0, 1};  // b1 != b3
        expect_rejection(doc);
    }
    {
        json doc = cp2_doc();
        doc["betti"] = {2, 0, 1, 0, 1};  // b0 != 1
        expect_rejection(doc);
    }
    {
        json doc = cp2_doc();
        doc["betti"] = {1, 0, 2, 0, 1};  // class count does not match b2
        expect_rejection(doc);
    }
    {
        json doc = cp2_doc();
        doc["classes"][1]["degree"] = 5;  // degree outside 0..4
        expect_rejection(doc);
    }
    {
        json doc = cp2_doc();
        doc["pairing"][0][1] = "1";  // degrees 0 + 2 != 4
        expect_rejection(doc);
    }
    {
        json doc = cp2_doc();
        doc["pairing"][1][1] = "0";  // degenerate matrix
        expect_rejection(doc);
    }
    {
        json doc = cp2_doc();
        doc["pairing"][0] = {"0", "0"};  // not square
        expect_rejection(doc);
    }
    {
        json doc = cp2_doc();
        doc["pairing"][0][2] = "1.5";  // not an exact rational
        expect_rejection(doc);
    }
    {
        json doc = cp2_doc();
        doc["pairing"][0][2] = "3/0";  // zero denominator
        expect_rejection(doc);
    }
    {
        json doc = cp2_doc();
        doc.erase("classes");
        expect_rejection(doc);
    }
}

TEST_CASE("randomized mutations of a valid document are rejected") {
    // Flip one pairing entry at a time; any change that breaks grading,
    // symmetry or nondegeneracy must be caught.
    const json base = cp2_doc();
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            json doc = base;
            const std::string old = doc["pairing"][r][c].get<std::string>();
            doc["pairing"][r][c] = old == "0" ? "7" : "0";
            const int dr = r == 0 ? 0 : (r == 1 ? 2 : 4);
            const int dc = c == 0 ? 0 : (c == 1 ? 2 : 4);
            if (dr + dc != 4) {
                CHECK_THROWS_AS(ManifoldCohomology::from_json(doc), ValidationError);
            } else if (r != c) {
                // breaks symmetry with the untouched mirror entry
                CHECK_THROWS_AS(ManifoldCohomology::from_json(doc), ValidationError);
            } else {
                // (h,h) flipped to 0: matrix goes degenerate
                CHECK_THROWS_AS(ManifoldCohomology::from_json(doc), ValidationError);
            }
        }
    }
}

TEST_CASE("round-trips through serialization") {
    for (const char* stem : {"cp2_like", "k3_like", "torus_like"}) {
        const ManifoldCohomology m = fixture(stem);
        const ManifoldCohomology again = ManifoldCohomology::from_json(m.to_json());
        CHECK(m == again);
        CHECK(again.to_json() == m.to_json());
    }
}

TEST_CASE("poincare polynomials of the bundled fixtures") {
    CHECK(fixture("cp2_like").poincare_polynomial() == poly({{0, 1}, {2, 1}, {4, 1}}));
    CHECK(fixture("torus_like").poincare_polynomial() ==
          poly({{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}}));
    CHECK(fixture("k3_like").poincare_polynomial() == poly({{0, 1}, {2, 22}, {4, 1}}));
}

TEST_CASE("poincare polynomial equals the q^1 slice of the product formula") {
    for (const char* stem : {"cp2_like", "k3_like", "torus_like"}) {
        const ManifoldCohomology m = fixture(stem);
        CHECK(m.poincare_polynomial() == goettsche_series(m.b1(), m.b2(), 2).coeff_q(1));
    }
}

TEST_CASE("dual classes contract to the identity") {
    for (const char* stem : {"cp2_like", "k3_like", "torus_like"}) {
        const ManifoldCohomology m = fixture(stem);
        for (std::size_t i = 0; i < m.num_classes(); ++i) {
            for (std::size_t j = 0; j < m.num_classes(); ++j) {
                CHECK(m.dual_pair(i, j) == (i == j ? 1 : 0));
                // same statement from the raw dual-class coefficients
                Rational sum(0);
                for (std::size_t a = 0; a < m.num_classes(); ++a) {
                    sum += m.dual_class(i)[a] * m.pair(a, j);
                }
                CHECK(sum == (i == j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("torus pairing has the wedge signs") {
    const ManifoldCohomology m = fixture("torus_like");
    const std::size_t a1 = *m.class_index("a1");
    const std::size_t a234 = *m.class_index("a234");
    const std::size_t a12 = *m.class_index("a12");
    const std::size_t a34 = *m.class_index("a34");
    const std::size_t a13 = *m.class_index("a13");
    const std::size_t a24 = *m.class_index("a24");
    CHECK(m.pair(a1, a234) == 1);
    CHECK(m.pair(a234, a1) == -1);
    CHECK(m.pair(a12, a34) == 1);
    CHECK(m.pair(a34, a12) == 1);
    CHECK(m.pair(a13, a24) == -1);
}

TEST_CASE("exact dense linear algebra helpers") {
    std::vector<std::vector<Rational>> mat{{Rational(2), Rational(1)},
                                           {Rational(1), Rational(1)}};
    CHECK(rational_det(mat) == 1);
    const auto inv = rational_inverse(mat);
    CHECK(inv[0][0] == 1);
    CHECK(inv[0][1] == -1);
    CHECK(inv[1][0] == -1);
    CHECK(inv[1][1] == 2);
    std::vector<std::vector<Rational>> singular{{Rational(1), Rational(2)},
                                                {Rational(2), Rational(4)}};
    CHECK(rational_det(singular) == 0);
    CHECK_THROWS_AS(rational_inverse(singular), std::invalid_argument);
}

TEST_CASE("missing file reports a validation error") {
    CHECK_THROWS_AS(ManifoldCohomology::load("/nonexistent/manifold.json"), ValidationError);
}
