#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "latkern/matrix.hpp"

namespace latkern::cli {

using Json = nlohmann::ordered_json;

/// MatrixFile: {"rows", "cols", "entries": [[{"num": [...], "den": [...]}]]},
/// coefficients as "a" or "a/b" strings, ascending powers of z.
TransferMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const TransferMatrix& m);
Json matrix_to_json(const ConstMatrix& m);
Json vector_to_json(const RatVector& v);

TransferMatrix read_matrix_file(const std::filesystem::path& path);
/// Entries must be constants.
ConstMatrix read_constant_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const TransferMatrix& m);

}  // namespace latkern::cli
