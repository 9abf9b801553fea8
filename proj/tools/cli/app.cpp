#include "app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "pspec/error.hpp"
#include "pspec/parse.hpp"

namespace pspec::cli {
namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

// Splits a batch line into arguments; single or double quotes group words.
std::vector<std::string> split_command(const std::string& line, std::size_t lineno) {
  std::vector<std::string> out;
  std::string cur;
  bool in_word = false;
  char quote = 0;
  for (char ch : line) {
    if (quote) {
      if (ch == quote) {
        quote = 0;
      } else {
        cur += ch;
      }
    } else if (ch == '"' || ch == '\'') {
      quote = ch;
      in_word = true;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (in_word) out.push_back(std::move(cur));
      cur.clear();
      in_word = false;
    } else {
      cur += ch;
      in_word = true;
    }
  }
  if (quote) throw ParseError("unterminated quote", lineno, line.size());
  if (in_word) out.push_back(std::move(cur));
  return out;
}

int run_batch(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read batch file '" << path << "'\n";
    return kInputError;
  }
  std::vector<std::vector<std::string>> commands;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      auto args = split_command(line, lineno);
      if (std::find(args.begin(), args.end(), "--batch") != args.end()) {
        throw DomainError("batch files cannot nest --batch");
      }
      commands.push_back(std::move(args));
    } catch (const Error& e) {
      err << "error: " << path << ": " << e.what() << "\n";
      return kInputError;
    }
  }

  struct Result {
    int code;
    std::string out;
    std::string err;
  };
  std::vector<std::future<Result>> jobs;
  jobs.reserve(commands.size());
  for (const auto& args : commands) {
    jobs.push_back(std::async(std::launch::async, [args] {
      std::ostringstream o, e;
      const int code = run(args, o, e);
      return Result{code, o.str(), e.str()};
    }));
  }
  int worst = kOk;
  for (auto& job : jobs) {
    const Result r = job.get();
    out << r.out;
    err << r.err;
    worst = std::max(worst, r.code);
  }
  return worst;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jacobian Poisson brackets on polynomial rings", "pspec"};
  app.set_help_flag("--help", "Print this help message and exit");
  std::string verb;
  std::string structure_path;
  Options opt;
  std::string format = "text";
  std::string order = "grevlex";
  std::string batch;
  bool strict = false;

  app.add_option("verb", verb, "Analysis to run")->check(CLI::IsMember(verbs()));
  app.add_option("structure", structure_path, "Structure file (.psn)");
  app.add_option("args", opt.positional, "Verb arguments (expressions or column indices)");
  app.add_option("--point", opt.point, "Comma-separated rational point");
  app.add_option("--ideal", opt.ideal, "Comma-separated ideal generators");
  app.add_option("--lambda", opt.lambda, "Pencil lambda values");
  app.add_option("--mu", opt.mu, "Pencil or fiber mu values");
  app.add_option("--h", opt.h, "Torus element");
  app.add_option("--candidate", opt.candidate, "Candidate ideal generators");
  app.add_option("--order", order, "Monomial order for ideal computations")
      ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--strict-exit", strict, "Exit 1 when a yes/no verb answers no");
  app.add_option("--batch", batch, "Run the commands listed in a file");
  app.positionals_at_end(false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (!batch.empty()) {
    if (!verb.empty()) {
      err << "error: --batch cannot be combined with a verb\n";
      return kInputError;
    }
    return run_batch(batch, out, err);
  }
  if (verb.empty() || structure_path.empty()) {
    err << "error: expected <verb> <structure-file>\n";
    return kInputError;
  }

  std::optional<PoissonStructure> s;
  try {
    s = load_structure_file(structure_path);
  } catch (const Error& e) {
    err << "error: " << structure_path << ": " << e.what() << "\n";
    return kInputError;
  }
  try {
    opt.order = parse_order_kind(order);
    const Report report = dispatch(verb, *s, opt);
    out << render(report, format == "structured" ? Format::structured : Format::text);
    if (strict && report.verdict && !*report.verdict) return kNegative;
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace pspec::cli
