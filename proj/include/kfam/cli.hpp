#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kfam/basis.hpp"
#include "kfam/core.hpp"
#include "kfam/families.hpp"

namespace kfam {

// Exit statuses of the command line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitDomainError = 1,
  kExitInternalError = 2,
};

// One factor of a product on the command line: "K:2:1,2", "L:3:2", "K:2:".
struct FactorSpec {
  Basis kind;
  SubsetSpec set;

  static FactorSpec parse(std::string_view text);
  Series build(unsigned trunc) const;
};

// {"degree": d, "vars": V, "terms": [{"monomial": "x0*x1", "coeff": 2}, ...]}
nlohmann::json to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);

struct SelftestResult {
  std::string name;
  bool passed;
  std::string detail;
};

// The exhaustive small-degree suites behind `kfam selftest`.
std::vector<SelftestResult> run_selftest(const std::function<void(const SelftestResult&)>& on_result = {});

// Runs the command line tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kfam
