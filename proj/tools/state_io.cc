// Copyright 2026 The bellwb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "state_io.h"

#include <fstream>
#include <sstream>

#include "bellwb/errors.h"

namespace bellwb::cli {

DensityMatrix state_from_json(const nlohmann::json &doc) {
    if (!doc.is_object() || !doc.contains("n_parties") || !doc.contains("matrix")) {
        throw InvalidState("state file needs fields \"n_parties\" and \"matrix\"");
    }
    if (!doc["n_parties"].is_number_integer()) {
        throw InvalidState("\"n_parties\" must be an integer");
    }
    const int n = doc["n_parties"].get<int>();
    if (n < 1 || n > 10) {
        throw InvalidState("\"n_parties\" must be in [1, 10]");
    }
    const std::size_t dim = std::size_t{1} << n;
    const auto &rows = doc["matrix"];
    if (!rows.is_array() || rows.size() != dim) {
        throw InvalidState("\"matrix\" must have 2^n_parties rows");
    }
    ComplexMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const auto &row = rows[r];
        if (!row.is_array() || row.size() != dim) {
            throw InvalidState("row " + std::to_string(r) + " must have 2^n_parties entries");
        }
        for (std::size_t c = 0; c < dim; ++c) {
            const auto &z = row[c];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw InvalidState("entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                   ") must be a [re, im] pair");
            }
            m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
        }
    }
    return DensityMatrix::from_matrix(std::move(m));
}

nlohmann::json state_to_json(const DensityMatrix &rho) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            const auto z = rho.matrix()(r, c);
            row.push_back({z.real(), z.imag()});
        }
        rows.push_back(std::move(row));
    }
    return {{"n_parties", rho.n_parties()}, {"matrix", std::move(rows)}};
}

DensityMatrix load_state(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidState("cannot read state file " + path);
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception &e) {
        throw InvalidState("state file " + path + " is not valid JSON: " + e.what());
    }
    return state_from_json(doc);
}

}  // namespace bellwb::cli
