#pragma once

#include <string>

#include "cli/matrix_io.hpp"

namespace latkern::cli {

/// Human-readable rendering of a JSON report. Matrix objects are printed
/// as rows of rational functions.
std::string render_text(const Json& report);

}  // namespace latkern::cli
