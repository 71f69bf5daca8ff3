#include "json_io.hpp"

#include <stdexcept>

namespace cremona {

namespace {

using nlohmann::json;

int read_rank(const json& j) {
    if (!j.is_object() || !j.contains("r") || !j.at("r").is_number_integer())
        throw std::invalid_argument("expected an object with an integer field \"r\"");
    int r = j.at("r").get<int>();
    if (r < 1 || r > 8) throw std::invalid_argument("rank out of range 1..8");
    return r;
}

IntMat matrix_from_json(int r, const json& j) {
    if (!j.is_array() || static_cast<int>(j.size()) != r + 1)
        throw std::invalid_argument("matrix must have r+1 rows");
    IntMat m;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != r + 1)
            throw std::invalid_argument("matrix must have r+1 columns");
        std::vector<long long> out;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw std::invalid_argument("matrix entries must be integers");
            out.push_back(x.get<long long>());
        }
        m.push_back(std::move(out));
    }
    return m;
}

json matrix_to_json(const IntMat& m) {
    json rows = json::array();
    for (const auto& row : m) rows.push_back(row);
    return rows;
}

}  // namespace

json to_json(const LatticeVector& v) {
    return {{"r", v.r}, {"coords", v.coords}};
}

LatticeVector vector_from_json(const json& j) {
    int r = read_rank(j);
    if (!j.contains("coords") || !j.at("coords").is_array() ||
        static_cast<int>(j.at("coords").size()) != r + 1)
        throw std::invalid_argument("\"coords\" must list r+1 integers");
    std::vector<long long> c;
    for (const auto& x : j.at("coords")) {
        if (!x.is_number_integer())
            throw std::invalid_argument("coordinates must be integers");
        c.push_back(x.get<long long>());
    }
    return LatticeVector(r, std::move(c));
}

json to_json(const Isometry& w) {
    return {{"r", w.r}, {"matrix", matrix_to_json(w.m)}};
}

Isometry isometry_from_json(const json& j) {
    int r = read_rank(j);
    if (!j.contains("matrix")) throw std::invalid_argument("missing \"matrix\"");
    return Isometry(r, matrix_from_json(r, j.at("matrix")));
}

json to_json(const ActionSpec& spec) {
    json gens = json::array();
    for (const auto& g : spec.generators) gens.push_back(matrix_to_json(g.m));
    json j = {{"r", spec.r}, {"generators", gens}};
    j["sigma"] = spec.sigma ? matrix_to_json(spec.sigma->m) : json(nullptr);
    return j;
}

ActionSpec action_from_json(const json& j) {
    ActionSpec spec;
    spec.r = read_rank(j);
    if (!j.contains("generators") || !j.at("generators").is_array())
        throw std::invalid_argument("\"generators\" must be a list of matrices");
    for (const auto& g : j.at("generators"))
        spec.generators.emplace_back(spec.r, matrix_from_json(spec.r, g));
    if (j.contains("sigma") && !j.at("sigma").is_null())
        spec.sigma = Isometry(spec.r, matrix_from_json(spec.r, j.at("sigma")));
    return spec;
}

json to_json(const ClassInvariant& inv) {
    json factors = json::array();
    for (const auto& [d, m] : inv.char_poly_factored) factors.push_back({d, m});
    return {{"order", inv.order},
            {"charpoly", factors},
            {"charpoly_display", charpoly_pk_string(inv.char_poly_factored)},
            {"trace", inv.trace_on_Er},
            {"eig1_multiplicity", inv.eig1_multiplicity},
            {"labels", inv.carter_candidates}};
}

json to_json(const Verdict& v) {
    json details = json::array();
    for (const auto& [claim, witness] : v.details)
        details.push_back({{"claim", claim}, {"result", witness}});
    return {{"case", v.case_id}, {"passed", v.passed}, {"details", details}};
}

}  // namespace cremona
