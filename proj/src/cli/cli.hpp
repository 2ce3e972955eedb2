#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mersexp/orderings.hpp"
#include "mersexp/residue.hpp"

namespace mersexp::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kNotInvertible = 2,
  kBadParameters = 3,
  kCarryInconsistent = 4,
  kAuditMismatch = 5,
};

enum class Format { Text, Json };

struct Document {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::optional<std::string> case_label;
  std::vector<std::string> warnings;
};

/// {"value": "<decimal>", "bits": "0b..."}
Json residue_json(const Residue& x);
Json matrix_json(const RMatrix& m);

Json to_json(const Document& doc);
std::string render(const Document& doc, Format format);

/// args excludes the program name. Results go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mersexp::cli
