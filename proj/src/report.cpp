#include "greenbiset/report.hpp"

#include <algorithm>
#include <sstream>

namespace gb {

namespace {

std::string table(const std::vector<std::string>& rlabels, const std::vector<std::string>& clabels,
                  const std::vector<std::vector<std::string>>& cells) {
  const std::size_t nc = clabels.size();
  std::size_t w0 = 0;
  for (const auto& l : rlabels) w0 = std::max(w0, l.size());
  std::vector<std::size_t> w(nc, 0);
  for (std::size_t c = 0; c < nc; ++c) {
    w[c] = clabels[c].size();
    for (const auto& row : cells) w[c] = std::max(w[c], row[c].size());
  }
  std::ostringstream os;
  auto pad = [&](const std::string& s, std::size_t width) { os << std::string(width - s.size(), ' ') << s; };
  pad("", w0);
  for (std::size_t c = 0; c < nc; ++c) {
    os << "  ";
    pad(clabels[c], w[c]);
  }
  os << '\n';
  for (std::size_t r = 0; r < cells.size(); ++r) {
    os << rlabels[r] << std::string(w0 - rlabels[r].size(), ' ');
    for (std::size_t c = 0; c < nc; ++c) {
      os << "  ";
      pad(cells[r][c], w[c]);
    }
    os << '\n';
  }
  return os.str();
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

bool is_matrix(const nlohmann::ordered_json& j) {
  return j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("entries");
}

std::string scalar_text(const nlohmann::ordered_json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string json_matrix(const nlohmann::ordered_json& j) {
  const std::size_t rows = j["rows"], cols = j["cols"];
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : j["entries"]) {
    std::vector<std::string> r;
    for (const auto& e : row) r.push_back(scalar_text(e));
    cells.push_back(std::move(r));
  }
  std::vector<std::string> rl = default_labels(rows), cl = default_labels(cols);
  if (j.contains("labels")) {
    rl = j["labels"].get<std::vector<std::string>>();
    if (rows == cols) cl = rl;
  }
  return table(rl, cl, cells);
}

void indent_block(std::ostringstream& os, const std::string& block, const std::string& ind) {
  std::istringstream in(block);
  std::string line;
  while (std::getline(in, line)) os << ind << line << '\n';
}

void render_value(std::ostringstream& os, const std::string& key, const nlohmann::ordered_json& v, const std::string& ind) {
  if (is_matrix(v)) {
    os << ind << key << ":\n";
    indent_block(os, json_matrix(v), ind + "  ");
  } else if (v.is_object()) {
    os << ind << key << ":\n";
    for (const auto& [k, x] : v.items()) render_value(os, k, x, ind + "  ");
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const auto& e) { return e.is_primitive(); })) {
    os << ind << key << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
    os << "]\n";
  } else if (v.is_array()) {
    os << ind << key << ":\n";
    for (std::size_t i = 0; i < v.size(); ++i) render_value(os, std::to_string(i), v[i], ind + "  ");
  } else {
    os << ind << key << ": " << scalar_text(v) << '\n';
  }
}

}  // namespace

std::string render_matrix(const Matrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) cells[r][c] = m(r, c).to_string();
  const auto rl = m.row_labels().empty() ? default_labels(m.rows()) : m.row_labels();
  const auto cl = m.col_labels().empty() ? default_labels(m.cols()) : m.col_labels();
  return table(rl, cl, cells);
}

std::string render_text(const CheckReport& r) {
  std::ostringstream os;
  std::string verdict = to_string(r.verdict);
  std::transform(verdict.begin(), verdict.end(), verdict.begin(), [](unsigned char c) { return std::toupper(c); });
  os << r.check << ' ' << r.spec << ": " << verdict << '\n';
  os << "scope: ";
  for (std::size_t i = 0; i < r.scope.size(); ++i) os << (i ? " " : "") << r.scope[i];
  os << '\n';
  for (const auto& [k, v] : r.witnesses.items()) render_value(os, k, v, "  ");
  for (const auto& c : r.caveats) os << "note: " << c << '\n';
  return os.str();
}

std::string render_json(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::string render_reports(const std::vector<CheckReport>& rs, OutputFormat f) {
  if (f == OutputFormat::Json) {
    if (rs.size() == 1) return render_json(rs[0].to_json());
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(r.to_json());
    return render_json(arr);
  }
  std::string out;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) out += '\n';
    out += render_text(rs[i]);
  }
  return out;
}

}  // namespace gb
