#include "kintraj/archive.hpp"

#include <fstream>

namespace kintraj {

namespace {

Json table_to_json(const CoefficientTable& table) {
    Json cols = Json::array();
    for (const auto& column : table) {
        Json col = Json::array();
        for (const auto& entry : column) {
            Json e;
            e["basis_exp"] = rational_to_json(entry.basis_exponent);
            e["coeff"] = rational_to_json(entry.coeff);
            e["sigma_power"] = entry.sigma_power;
            col.push_back(std::move(e));
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

CoefficientTable table_from_json(const Json& j) {
    CoefficientTable table;
    for (const auto& col : j) {
        std::vector<CoefficientEntry> column;
        for (const auto& e : col)
            column.push_back({rational_from_json(e.at("basis_exp")),
                              rational_from_json(e.at("coeff")),
                              e.at("sigma_power").get<int>()});
        table.push_back(std::move(column));
    }
    return table;
}

Json archive_body(const TrajectoryPair& pair) {
    Json doc;
    doc["format"] = "kintraj-pair";
    doc["version"] = 1;
    doc["k"] = pair.k;
    doc["root_denom"] = pair.root_denom;
    Json kappa = Json::array();
    for (const Rational& x : pair.kappa) kappa.push_back(rational_to_json(x));
    doc["kappa"] = std::move(kappa);
    doc["a"] = matrix_to_json(pair.a);
    doc["b"] = matrix_to_json(pair.b);
    doc["alpha"] = table_to_json(pair.alpha);
    doc["beta"] = table_to_json(pair.beta);
    return doc;
}

}  // namespace

std::string archive_content_hash(const TrajectoryPair& pair) {
    return fnv1a_hex(archive_body(pair).dump());
}

Json pair_to_archive(const TrajectoryPair& pair) {
    Json doc = archive_body(pair);
    doc["content_hash"] = archive_content_hash(pair);
    return doc;
}

TrajectoryPair pair_from_archive(const Json& doc) {
    if (doc.value("format", "") != "kintraj-pair")
        throw std::runtime_error("archive: unrecognized document format");
    TrajectoryPair pair;
    pair.k = doc.at("k").get<int>();
    pair.root_denom = doc.at("root_denom").get<long long>();
    for (const auto& x : doc.at("kappa")) pair.kappa.push_back(rational_from_json(x));
    pair.a = matrix_from_json(doc.at("a"));
    pair.b = matrix_from_json(doc.at("b"));
    pair.alpha = table_from_json(doc.at("alpha"));
    pair.beta = table_from_json(doc.at("beta"));

    const std::size_t n = static_cast<std::size_t>(pair.k) + 1;
    if (pair.a.rows() != n || pair.a.cols() != n || pair.b.rows() != n || pair.b.cols() != n)
        throw std::runtime_error("archive: matrix dimensions inconsistent with k");

    const std::string stored = doc.value("content_hash", "");
    if (stored != archive_content_hash(pair))
        throw std::runtime_error("archive: content hash mismatch");
    return pair;
}

void write_archive(const TrajectoryPair& pair, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("archive: cannot write " + path);
    out << pair_to_archive(pair).dump(2) << "\n";
}

TrajectoryPair read_archive(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("archive: cannot read " + path);
    Json doc = Json::parse(in);
    return pair_from_archive(doc);
}

}  // namespace kintraj
