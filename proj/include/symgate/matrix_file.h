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


#ifndef SYMGATE_MATRIX_FILE_H
#define SYMGATE_MATRIX_FILE_H

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "symgate/linalg.h"

namespace symgate {

class MatrixFileError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// A matrix file is a JSON object
//   {"dim": 3, "entries": [[[re, im], [re, im], [re, im]], ...]}
// with one inner array per row. dim must be 2, 3 or 4.

Matrix parse_matrix_json(std::string_view text);
std::string to_matrix_json(const Matrix &m);

Matrix read_matrix_file(const std::filesystem::path &path);
void write_matrix_file(const std::filesystem::path &path, const Matrix &m);

}  // namespace symgate

#endif  // SYMGATE_MATRIX_FILE_H
