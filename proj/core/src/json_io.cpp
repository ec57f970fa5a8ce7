#include "vsqc/json_io.hpp"

#include <stdexcept>

namespace vsqc {

nlohmann::json matrix_to_json(const ExponentMatrix& E, std::optional<std::int64_t> P) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < E.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int r = 0; r < E.cols(); ++r) row.push_back(E(i, r));
        rows.push_back(std::move(row));
    }
    nlohmann::json j{{"J", E.rows()}, {"L", E.cols()}, {"rows", std::move(rows)}, {"tag", to_string(E.tag())}};
    if (P) j["P"] = *P;
    else j["P"] = nullptr;
    return j;
}

LoadedMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
        throw std::invalid_argument("matrix JSON: missing rows");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : j["rows"]) {
        if (!row.is_array()) throw std::invalid_argument("matrix JSON: rows must be arrays");
        rows.push_back(row.get<std::vector<std::int64_t>>());
    }
    auto matrix = ExponentMatrix::from_rows(rows);
    if (j.contains("J") && j["J"].get<int>() != matrix.rows())
        throw std::invalid_argument("matrix JSON: J does not match rows");
    if (j.contains("L") && j["L"].get<int>() != matrix.cols())
        throw std::invalid_argument("matrix JSON: L does not match rows");
    LoadedMatrix out{std::move(matrix), std::nullopt};
    if (j.contains("P") && !j["P"].is_null()) out.P = j["P"].get<std::int64_t>();
    return out;
}

nlohmann::json mask_to_json(const Mask& mask) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < mask.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int r = 0; r < mask.cols; ++r) row.push_back(mask.at(i, r) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"J", mask.rows}, {"L", mask.cols}, {"rows", std::move(rows)}};
}

Mask mask_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
        throw std::invalid_argument("mask JSON: missing rows");
    Mask mask;
    mask.rows = static_cast<int>(j["rows"].size());
    if (mask.rows == 0) throw std::invalid_argument("mask JSON: empty");
    mask.cols = static_cast<int>(j["rows"][0].size());
    for (const auto& row : j["rows"]) {
        if (static_cast<int>(row.size()) != mask.cols) throw std::invalid_argument("mask JSON: ragged rows");
        for (const auto& v : row) {
            const int b = v.get<int>();
            if (b != 0 && b != 1) throw std::invalid_argument("mask JSON: entries must be 0 or 1");
            mask.bits.push_back(static_cast<std::uint8_t>(b));
        }
    }
    return mask;
}

nlohmann::json witness_to_json(const CycleWitness& w) {
    return nlohmann::json{{"length", w.length}, {"rows", w.rows},    {"cols", w.cols},
                          {"P", w.P},           {"residue", w.residue}};
}

nlohmann::json girth_to_json(const GirthReport& report) {
    nlohmann::json j;
    if (report.exact) j["girth"] = report.girth;
    else j["girth"] = ">=" + std::to_string(report.girth);
    j["cap"] = report.cap;
    if (report.witness) j["witness"] = witness_to_json(*report.witness);
    return j;
}

}  // namespace vsqc
