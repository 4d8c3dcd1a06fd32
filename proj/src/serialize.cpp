#include "kintraj/serialize.hpp"

namespace kintraj {

Json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational record: expected fraction string");
    return Rational::from_string(j.get<std::string>());
}

Json poly_to_json(const PuiseuxPoly& p) {
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json term;
        term["r_exp"] = rational_to_json(m.r_exp);
        term["sigma_exp"] = m.sigma_exp;
        term["coeff"] = rational_to_json(c);
        out.push_back(std::move(term));
    }
    return out;
}

PuiseuxPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("poly record: expected array of terms");
    PuiseuxPoly p;
    for (const auto& term : j) {
        p += PuiseuxPoly::monomial(rational_from_json(term.at("coeff")),
                                   rational_from_json(term.at("r_exp")),
                                   term.at("sigma_exp").get<int>());
    }
    return p;
}

Json matrix_to_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

PolyMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix record: expected rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j.at(0).size();
    PolyMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols)
            throw std::invalid_argument("matrix record: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(i, c, poly_from_json(j.at(i).at(c)));
    }
    return m;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace kintraj
