#include "cli/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "latkern/errors.hpp"
#include "latkern/rational.hpp"

namespace latkern::cli {

namespace {

Poly poly_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw PreconditionError(where + " must be an array of coefficient strings");
  std::vector<Rational> c;
  for (const auto& e : j) {
    if (!e.is_string()) throw PreconditionError(where + " coefficients must be strings such as \"3\" or \"-1/2\"");
    try {
      c.push_back(parse_rational(e.get<std::string>()));
    } catch (const std::invalid_argument& ex) {
      throw PreconditionError(where + ": " + ex.what());
    }
  }
  return Poly(std::move(c));
}

Json poly_to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  if (a.empty()) a.push_back("0");
  return a;
}

std::size_t dimension(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long>() < 1)
    throw PreconditionError(std::string("matrix file needs a positive integer \"") + key + "\"");
  return j[key].get<std::size_t>();
}

}  // namespace

TransferMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw PreconditionError("matrix file must be a JSON object");
  const std::size_t rows = dimension(j, "rows");
  const std::size_t cols = dimension(j, "cols");
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != rows)
    throw PreconditionError("\"entries\" must be an array of " + std::to_string(rows) + " rows");
  TransferMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j["entries"][i];
    if (!row.is_array() || row.size() != cols)
      throw PreconditionError("row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) {
      const Json& e = row[k];
      const std::string where = "entry (" + std::to_string(i) + "," + std::to_string(k) + ")";
      if (!e.is_object() || !e.contains("num")) throw PreconditionError(where + " needs \"num\"");
      const Poly num = poly_from_json(e["num"], where + " num");
      const Poly den = e.contains("den") ? poly_from_json(e["den"], where + " den") : Poly(1);
      if (den.is_zero()) throw PreconditionError(where + " has a zero denominator");
      m(i, k) = RatFun(num, den);
    }
  }
  return m;
}

Json matrix_to_json(const TransferMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k)
      row.push_back(Json{{"num", poly_to_json(m(i, k).num())}, {"den", poly_to_json(m(i, k).den())}});
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json matrix_to_json(const ConstMatrix& m) { return matrix_to_json(to_transfer(m)); }

Json vector_to_json(const RatVector& v) { return matrix_to_json(TransferMatrix::column_vector(v)); }

TransferMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError("malformed JSON in " + path.string() + ": " + e.what());
  }
  try {
    return matrix_from_json(j);
  } catch (const PreconditionError& e) {
    throw PreconditionError(path.string() + ": " + e.what());
  }
}

ConstMatrix read_constant_matrix_file(const std::filesystem::path& path) {
  const TransferMatrix m = read_matrix_file(path);
  return m.map([&](const RatFun& r) {
    if (!r.is_constant()) throw PreconditionError(path.string() + ": entries must be constants");
    return r.num().coeff(0);
  });
}

void write_matrix_file(const std::filesystem::path& path, const TransferMatrix& m) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path.string());
  out << matrix_to_json(m).dump(2) << '\n';
}

}  // namespace latkern::cli
