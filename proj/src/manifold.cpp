#include "hilbfock/manifold.hpp"

#include "hilbfock/errors.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hilbfock {

namespace {

Rational parse_pairing_entry(const nlohmann::json& cell) {
    if (cell.is_string()) {
        return parse_rational(cell.get<std::string>());
    }
    if (cell.is_number_integer()) {
        return Rational(Int(cell.get<std::int64_t>()));
    }
    throw ValidationError("pairing: entries must be integer or \"p/q\" strings");
}

}  // namespace

ManifoldCohomology ManifoldCohomology::from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw ValidationError("manifold document must be an object");
    }
    for (const char* key : {"name", "betti", "classes", "pairing"}) {
        if (!doc.contains(key)) {
            throw ValidationError(std::string("manifold document is missing \"") + key + "\"");
        }
    }

    ManifoldCohomology m;
    if (!doc["name"].is_string()) {
        throw ValidationError("name: must be a string");
    }
    m.name_ = doc["name"].get<std::string>();

    const auto& betti = doc["betti"];
    if (!betti.is_array() || betti.size() != 5) {
        throw ValidationError("betti: expected exactly five numbers b0..b4");
    }
    for (std::size_t d = 0; d < 5; ++d) {
        if (!betti[d].is_number_integer() || betti[d].get<long>() < 0) {
            throw ValidationError("betti: entries must be nonnegative integers");
        }
        m.betti_[d] = betti[d].get<long>();
    }

    const auto& classes = doc["classes"];
    if (!classes.is_array()) {
        throw ValidationError("classes: expected an array");
    }
    for (const auto& entry : classes) {
        if (!entry.is_object() || !entry.contains("label") || !entry.contains("degree") ||
            !entry["label"].is_string() || !entry["degree"].is_number_integer()) {
            throw ValidationError("classes: entries must be {\"label\", \"degree\"} objects");
        }
        CohomologyClass c{entry["label"].get<std::string>(), entry["degree"].get<int>()};
        if (c.degree < 0 || c.degree > 4) {
            throw ValidationError("classes: degree of '" + c.label + "' outside 0..4");
        }
        m.classes_.push_back(std::move(c));
    }

    const auto& pairing = doc["pairing"];
    if (!pairing.is_array() || pairing.size() != m.classes_.size()) {
        throw ValidationError("pairing: expected a square matrix over the class basis");
    }
    for (const auto& row : pairing) {
        if (!row.is_array() || row.size() != m.classes_.size()) {
            throw ValidationError("pairing: expected a square matrix over the class basis");
        }
        std::vector<Rational> out_row;
        out_row.reserve(row.size());
        for (const auto& cell : row) {
            out_row.push_back(parse_pairing_entry(cell));
        }
        m.pairing_.push_back(std::move(out_row));
    }

    m.validate();
    m.build_caches();
    return m;
}

ManifoldCohomology ManifoldCohomology::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open manifold file: " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("manifold file " + path.string() + ": " + e.what());
    }
    return from_json(doc);
}

nlohmann::json ManifoldCohomology::to_json() const {
    nlohmann::json doc;
    doc["name"] = name_;
    doc["betti"] = betti_;
    doc["classes"] = nlohmann::json::array();
    for (const auto& c : classes_) {
        doc["classes"].push_back({{"label", c.label}, {"degree", c.degree}});
    }
    doc["pairing"] = nlohmann::json::array();
    for (const auto& row : pairing_) {
        nlohmann::json out_row = nlohmann::json::array();
        for (const auto& cell : row) {
            out_row.push_back(rational_str(cell));
        }
        doc["pairing"].push_back(std::move(out_row));
    }
    return doc;
}

void ManifoldCohomology::validate() const {
    if (betti_[0] != 1 || betti_[4] != 1) {
        throw ValidationError("betti: b0 and b4 must both be 1");
    }
    if (betti_[1] != betti_[3]) {
        throw ValidationError("betti: b1 must equal b3");
    }

    std::array<long, 5> per_degree{};
    for (const auto& c : classes_) {
        ++per_degree[static_cast<std::size_t>(c.degree)];
    }
    for (std::size_t d = 0; d < 5; ++d) {
        if (per_degree[d] != betti_[d]) {
            std::ostringstream msg;
            msg << "classes: " << per_degree[d] << " classes of degree " << d
                << " but betti[" << d << "] = " << betti_[d];
            throw ValidationError(msg.str());
        }
    }

    const std::size_t k = classes_.size();
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            const Rational& v = pairing_[a][b];
            if (classes_[a].degree + classes_[b].degree != 4 && v != 0) {
                throw ValidationError("pairing: nonzero entry at ('" + classes_[a].label +
                                      "', '" + classes_[b].label +
                                      "') whose degrees do not sum to 4");
            }
            const bool odd_pair = (classes_[a].degree % 2) && (classes_[b].degree % 2);
            const Rational mirrored = odd_pair ? Rational(-pairing_[b][a]) : pairing_[b][a];
            if (v != mirrored) {
                throw ValidationError("pairing: graded symmetry violated at ('" +
                                      classes_[a].label + "', '" + classes_[b].label + "')");
            }
        }
    }

    if (rational_det(pairing_) == 0) {
        throw ValidationError("pairing: matrix is degenerate");
    }
}

void ManifoldCohomology::build_caches() {
    const std::size_t k = classes_.size();
    parity_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        parity_[i] = static_cast<char>(classes_[i].degree % 2);
    }

    pair_nonzero_.assign(k * k, 0);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            pair_nonzero_[a * k + b] = pairing_[a][b] != 0;
        }
    }

    pairing_inverse_ = rational_inverse(pairing_);

    // dual_pair(i, j) = sum_a inverse(i, a) * pairing(a, j)
    dual_pair_.assign(k, std::vector<Rational>(k, Rational(0)));
    dual_nonzero_.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            Rational sum(0);
            for (std::size_t a = 0; a < k; ++a) {
                if (pairing_inverse_[i][a] != 0 && pairing_[a][j] != 0) {
                    sum += pairing_inverse_[i][a] * pairing_[a][j];
                }
            }
            dual_nonzero_[i * k + j] = sum != 0;
            dual_pair_[i][j] = std::move(sum);
        }
    }
}

std::size_t ManifoldCohomology::require_class(std::size_t idx) const {
    if (idx >= classes_.size()) {
        throw std::out_of_range("class index out of range");
    }
    return idx;
}

const CohomologyClass& ManifoldCohomology::cls(std::size_t idx) const {
    return classes_[require_class(idx)];
}

std::optional<std::size_t> ManifoldCohomology::class_index(const std::string& label) const {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (classes_[i].label == label) {
            return i;
        }
    }
    return std::nullopt;
}

const Rational& ManifoldCohomology::pair(std::size_t a, std::size_t b) const {
    return pairing_[require_class(a)][require_class(b)];
}

const Rational& ManifoldCohomology::dual_pair(std::size_t dual_idx, std::size_t class_idx) const {
    return dual_pair_[require_class(dual_idx)][require_class(class_idx)];
}

const std::vector<Rational>& ManifoldCohomology::dual_class(std::size_t idx) const {
    return pairing_inverse_[require_class(idx)];
}

TPoly ManifoldCohomology::poincare_polynomial() const {
    TPoly p;
    for (std::size_t d = 0; d < 5; ++d) {
        p.add_term(static_cast<long>(d), Rational(betti_[d]));
    }
    return p;
}

Rational rational_det(std::vector<std::vector<Rational>> matrix) {
    const std::size_t n = matrix.size();
    for (const auto& row : matrix) {
        if (row.size() != n) {
            throw std::invalid_argument("determinant of a non-square matrix");
        }
    }
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && matrix[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return Rational(0);
        }
        if (pivot != col) {
            std::swap(matrix[pivot], matrix[col]);
            det = -det;
        }
        det *= matrix[col][col];
        const Rational inv_pivot = Rational(1) / matrix[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (matrix[r][col] == 0) {
                continue;
            }
            const Rational factor = matrix[r][col] * inv_pivot;
            for (std::size_t c = col; c < n; ++c) {
                if (matrix[col][c] != 0) {
                    matrix[r][c] -= factor * matrix[col][c];
                }
            }
        }
    }
    return det;
}

std::vector<std::vector<Rational>> rational_inverse(std::vector<std::vector<Rational>> matrix) {
    const std::size_t n = matrix.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n) {
            throw std::invalid_argument("inverse of a non-square matrix");
        }
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && matrix[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            throw std::invalid_argument("matrix is singular");
        }
        std::swap(matrix[pivot], matrix[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational scale = Rational(1) / matrix[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            matrix[col][c] *= scale;
            inv[col][c] *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || matrix[r][col] == 0) {
                continue;
            }
            const Rational factor = matrix[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                matrix[r][c] -= factor * matrix[col][c];
                inv[r][c] -= factor * inv[col][c];
            }
        }
    }
    return inv;
}

}  // namespace hilbfock
