#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pspec/monomial.hpp"
#include "pspec/structure.hpp"

namespace pspec::cli {

enum class Format { text, structured };

/// Raw verb arguments as given on the command line.
struct Options {
  std::vector<std::string> positional;
  std::optional<std::string> point;
  std::optional<std::string> ideal;
  std::optional<std::string> lambda;
  std::optional<std::string> mu;
  std::optional<std::string> h;
  std::optional<std::string> candidate;
  OrderKind order = OrderKind::grevlex;
};

struct Report {
  std::string verb;
  std::vector<std::string> lines;
  nlohmann::json data = nlohmann::json::object();
  /// Set by yes/no verbs.
  std::optional<bool> verdict;
};

const std::vector<std::string>& verbs();

/// Runs one verb. Library errors propagate as pspec::Error.
Report dispatch(const std::string& verb, const PoissonStructure& s, const Options& opt);

/// Text lines, or a JSON document with sorted keys. Ends with a newline.
std::string render(const Report& r, Format format);

/// Full command line handling (args exclude the program name). Returns the
/// process exit code: 0 ok, 1 negative verdict under --strict-exit, 2 input or
/// domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pspec::cli
