// JSON debug dumps: complex amplitudes as [re, im] pairs.

#pragma once

#include <json.hpp>

#include "qstbell/linalg.hpp"

namespace qstbell {

inline nlohmann::ordered_json complex_json(const Complex& z) {
    return nlohmann::ordered_json::array({z.real(), z.imag()});
}

inline nlohmann::ordered_json amplitudes_json(const StateVector& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int i = 0; i < v.dim(); ++i) arr.push_back(complex_json(v[i]));
    return arr;
}

inline nlohmann::ordered_json entries_json(const HermitianOperator& h) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < h.dim(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < h.dim(); ++j) row.push_back(complex_json(h.entry(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace qstbell
