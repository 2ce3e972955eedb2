#include <algorithm>
#include <sstream>

#include "cli/cli.hpp"

namespace mersexp::cli {

namespace {

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

bool is_scalar_array(const Json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), is_scalar);
}

bool is_matrix(const Json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), is_scalar_array);
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

std::string join(const Json& row) {
  std::string out;
  for (const auto& x : row) {
    if (!out.empty()) out += ' ';
    out += scalar_text(x);
  }
  return out;
}

void render_object(const Json& obj, std::size_t indent, std::ostream& os) {
  std::size_t width = 0;
  for (const auto& [key, _] : obj.items()) width = std::max(width, key.size());
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : obj.items()) {
    os << pad << key;
    if (is_scalar(value) || (is_scalar_array(value) && !value.empty())) {
      os << std::string(width - key.size() + 2, ' ')
         << (value.is_array() ? join(value) : scalar_text(value)) << '\n';
    } else if (value.empty()) {
      os << std::string(width - key.size() + 2, ' ') << "(none)\n";
    } else if (is_matrix(value)) {
      os << '\n';
      for (const auto& row : value) os << pad << "  " << join(row) << '\n';
    } else if (value.is_object()) {
      os << '\n';
      render_object(value, indent + 2, os);
    } else {
      os << '\n';
      for (const auto& item : value) {
        os << pad << "  -\n";
        if (item.is_object()) {
          render_object(item, indent + 4, os);
        } else {
          os << pad << "    " << (item.is_array() ? join(item) : scalar_text(item)) << '\n';
        }
      }
    }
  }
}

}  // namespace

Json residue_json(const Residue& x) {
  Json out = Json::object();
  out["value"] = x.to_string();
  out["bits"] = to_bits(x).to_string();
  return out;
}

Json matrix_json(const RMatrix& m) { return m.to_rows(); }

Json to_json(const Document& doc) {
  Json out = Json::object();
  out["command"] = doc.command;
  out["inputs"] = doc.inputs;
  out["result"] = doc.result;
  out["case_label"] = doc.case_label ? Json(*doc.case_label) : Json(nullptr);
  out["warnings"] = doc.warnings;
  return out;
}

std::string render(const Document& doc, Format format) {
  if (format == Format::Json) return to_json(doc).dump(2) + "\n";
  Json top = Json::object();
  top["command"] = doc.command;
  top["inputs"] = doc.inputs;
  top["result"] = doc.result;
  if (doc.case_label) top["case_label"] = *doc.case_label;
  if (!doc.warnings.empty()) top["warnings"] = doc.warnings;
  std::ostringstream os;
  render_object(top, 0, os);
  return os.str();
}

}  // namespace mersexp::cli
