// Copyright 2026 The Symgate Authors
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


#include "symgate/matrix_file.h"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"

namespace symgate {

namespace {

using nlohmann::json;

double component(const json &x, std::size_t r, std::size_t c) {
    if (!x.is_number()) {
        throw MatrixFileError(fmt::format("entry ({}, {}) has a non-numeric component", r, c));
    }
    return x.get<double>();
}

}  // namespace

Matrix parse_matrix_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw MatrixFileError(fmt::format("not valid JSON: {}", e.what()));
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries")) {
        throw MatrixFileError("expected an object with fields 'dim' and 'entries'");
    }
    if (!doc["dim"].is_number_integer()) {
        throw MatrixFileError("'dim' must be an integer");
    }
    long long dim = doc["dim"].get<long long>();
    if (dim < 2 || dim > 4) {
        throw MatrixFileError(fmt::format("'dim' must be 2, 3 or 4, got {}", dim));
    }
    const json &rows = doc["entries"];
    auto n = static_cast<std::size_t>(dim);
    if (!rows.is_array() || rows.size() != n) {
        throw MatrixFileError(fmt::format("'entries' must be an array of {} rows", n));
    }
    Matrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n) {
            throw MatrixFileError(fmt::format("row {} must have {} entries", r, n));
        }
        for (std::size_t c = 0; c < n; ++c) {
            const json &e = rows[r][c];
            if (!e.is_array() || e.size() != 2) {
                throw MatrixFileError(fmt::format("entry ({}, {}) must be a [re, im] pair", r, c));
            }
            m(r, c) = Complex(component(e[0], r, c), component(e[1], r, c));
        }
    }
    return m;
}

std::string to_matrix_json(const Matrix &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    json doc = {{"dim", m.dim()}, {"entries", std::move(rows)}};
    return doc.dump() + "\n";
}

Matrix read_matrix_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw MatrixFileError(fmt::format("cannot open '{}'", path.string()));
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_matrix_json(buf.str());
    } catch (const MatrixFileError &e) {
        throw MatrixFileError(fmt::format("{}: {}", path.string(), e.what()));
    }
}

void write_matrix_file(const std::filesystem::path &path, const Matrix &m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw MatrixFileError(fmt::format("cannot write '{}'", path.string()));
    }
    out << to_matrix_json(m);
    if (!out) {
        throw MatrixFileError(fmt::format("write to '{}' failed", path.string()));
    }
}

}  // namespace symgate
