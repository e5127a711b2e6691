#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "greenbiset/checks.hpp"
#include "greenbiset/config.hpp"
#include "greenbiset/matrix.hpp"

namespace gb {

/// Aligned table with row and column labels.
std::string render_matrix(const Matrix& m);

/// Human-readable form of a report; matrices in the witnesses (objects with
/// rows, cols and entries) are drawn as tables.
std::string render_text(const CheckReport& r);

/// Text: reports separated by blank lines. Json: one object, or an array
/// when there are several. Always ends with a newline.
std::string render_reports(const std::vector<CheckReport>& rs, OutputFormat f);

/// Pretty JSON with a trailing newline.
std::string render_json(const nlohmann::ordered_json& j);

}  // namespace gb
