#pragma once

#include "hilbfock/rational.hpp"
#include "hilbfock/series.hpp"

#include <json.hpp>

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hilbfock {

struct CohomologyClass {
    std::string label;
    int degree = 0;  // 0..4

    friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
};

// Cohomological data of a closed almost-complex fourfold: Betti numbers, an
// ordered graded basis of H*(X,Q) and the top-degree intersection pairing.
// Validated eagerly on construction:
//   * b0 = b4 = 1 and b1 = b3,
//   * the number of degree-d classes equals betti[d],
//   * pairing(a,b) = 0 unless deg(a) + deg(b) = 4,
//   * pairing(a,b) = (-1)^{deg(a) deg(b)} pairing(b,a),
//   * the pairing matrix is nondegenerate.
class ManifoldCohomology {
public:
    static ManifoldCohomology from_json(const nlohmann::json& doc);
    static ManifoldCohomology load(const std::filesystem::path& path);
    nlohmann::json to_json() const;

    const std::string& name() const { return name_; }
    const std::array<long, 5>& betti() const { return betti_; }
    long b1() const { return betti_[1]; }
    long b2() const { return betti_[2]; }

    std::size_t num_classes() const { return classes_.size(); }
    const CohomologyClass& cls(std::size_t idx) const;
    const std::vector<CohomologyClass>& classes() const { return classes_; }
    int degree(std::size_t idx) const { return cls(idx).degree; }
    bool odd(std::size_t idx) const { return parity_[idx] != 0; }
    std::optional<std::size_t> class_index(const std::string& label) const;

    // The intersection number of two basis classes.
    const Rational& pair(std::size_t a, std::size_t b) const;
    bool pair_nonzero(std::size_t a, std::size_t b) const {
        return pair_nonzero_[a * classes_.size() + b] != 0;
    }

    // Contraction table of the pairing-dual basis against the original one:
    // dual_pair(i, j) = pair(dual_i, class_j), computed once from the cached
    // inverse of the pairing matrix.
    const Rational& dual_pair(std::size_t dual_idx, std::size_t class_idx) const;
    bool dual_pair_nonzero(std::size_t dual_idx, std::size_t class_idx) const {
        return dual_nonzero_[dual_idx * classes_.size() + class_idx] != 0;
    }

    // Coefficients of the dual class of basis class i in the original basis.
    const std::vector<Rational>& dual_class(std::size_t idx) const;

    // sum_d betti[d] t^d.
    TPoly poincare_polynomial() const;

    friend bool operator==(const ManifoldCohomology& a, const ManifoldCohomology& b) {
        return a.name_ == b.name_ && a.betti_ == b.betti_ && a.classes_ == b.classes_ &&
               a.pairing_ == b.pairing_;
    }

private:
    ManifoldCohomology() = default;
    void validate() const;
    void build_caches();
    std::size_t require_class(std::size_t idx) const;

    std::string name_;
    std::array<long, 5> betti_{};
    std::vector<CohomologyClass> classes_;
    std::vector<std::vector<Rational>> pairing_;

    // Derived, read-only after construction.
    std::vector<char> parity_;
    std::vector<char> pair_nonzero_;
    std::vector<std::vector<Rational>> pairing_inverse_;
    std::vector<std::vector<Rational>> dual_pair_;
    std::vector<char> dual_nonzero_;
};

// Exact Gaussian elimination helpers used by validation and the Gram checks.
Rational rational_det(std::vector<std::vector<Rational>> matrix);
std::vector<std::vector<Rational>> rational_inverse(std::vector<std::vector<Rational>> matrix);

}  // namespace hilbfock
