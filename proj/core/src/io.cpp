#include "opent/io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace opent {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            entries.push_back({m(i, j).real(), m(i, j).imag()});
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries"))
        throw std::invalid_argument("matrix JSON: need rows, cols, entries");
    const long rows = j.at("rows").get<long>();
    const long cols = j.at("cols").get<long>();
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("matrix JSON: non-positive dimensions");
    const auto& entries = j.at("entries");
    if (!entries.is_array() || static_cast<long>(entries.size()) != rows * cols)
        throw std::invalid_argument("matrix JSON: entries length != rows*cols");
    Matrix m(rows, cols);
    long k = 0;
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("matrix JSON: entry is not an [re, im] pair");
        m(k / cols, k % cols) = Complex(e[0].get<double>(), e[1].get<double>());
        ++k;
    }
    if (!m.allFinite())
        throw std::invalid_argument("matrix JSON: non-finite entry");
    return m;
}

json kraus_to_json(const KrausMap& t) {
    json ops = json::array();
    for (const Matrix& a : t.kraus) ops.push_back(matrix_to_json(a));
    return json{{"d", t.dimA},
                {"trace_preserving", t.tracePreserving},
                {"kraus", ops}};
}

KrausMap kraus_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("kraus"))
        throw std::invalid_argument("Kraus JSON: need d and kraus");
    const int d = j.at("d").get<int>();
    const bool tp = j.value("trace_preserving", false);
    std::vector<Matrix> ops;
    for (const auto& m : j.at("kraus")) ops.push_back(matrix_from_json(m));
    return KrausMap(std::move(ops), d, d, tp);
}

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::ios_base::failure("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace

Matrix load_matrix(const std::string& path) { return matrix_from_json(load_json(path)); }

KrausMap load_kraus(const std::string& path) { return kraus_from_json(load_json(path)); }

}  // namespace opent
