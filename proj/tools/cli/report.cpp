#include "cli/report.hpp"

#include <sstream>

namespace latkern::cli {

namespace {

bool is_matrix(const Json& j) { return j.is_object() && j.contains("entries") && j.contains("rows"); }

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool is_flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void render(std::ostringstream& os, const Json& j, int indent);

void render_matrix(std::ostringstream& os, const Json& j, int indent) {
  const TransferMatrix m = matrix_from_json(j);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << std::string(static_cast<std::size_t>(indent), ' ') << '[';
    for (std::size_t k = 0; k < m.cols(); ++k) os << (k ? ", " : "") << m(i, k).to_string();
    os << "]\n";
  }
}

void render_value(std::ostringstream& os, const std::string& label, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_matrix(v)) {
    os << pad << label << ":\n";
    render_matrix(os, v, indent + 2);
  } else if (is_flat_array(v)) {
    os << pad << label << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
    os << "]\n";
  } else if (v.is_structured()) {
    os << pad << label << ":\n";
    render(os, v, indent + 2);
  } else {
    os << pad << label << ": " << scalar(v) << '\n';
  }
}

void render(std::ostringstream& os, const Json& j, int indent) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_value(os, k, v, indent);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) render_value(os, "[" + std::to_string(i) + "]", j[i], indent);
  } else {
    os << std::string(static_cast<std::size_t>(indent), ' ') << scalar(j) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

}  // namespace latkern::cli
