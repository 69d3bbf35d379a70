#include "kfam/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "kfam/oracle.hpp"
#include "kfam/shuffle.hpp"

namespace kfam {

FactorSpec FactorSpec::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw DomainError("factor '" + std::string(text) + "' is not of the form KIND:n:set");
  }
  const auto kind = parse_basis(text.substr(0, first));
  const auto n_text = std::string(text.substr(first + 1, second - first - 1));
  unsigned n = 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoul(n_text, &used);
    if (used != n_text.size() || v > SubsetSpec::kMaxN) throw std::invalid_argument(n_text);
    n = static_cast<unsigned>(v);
  } catch (const std::logic_error&) {
    throw DomainError("bad degree in factor '" + std::string(text) + "'");
  }
  return {kind, SubsetSpec::parse(n, text.substr(second + 1))};
}

Series FactorSpec::build(unsigned trunc) const {
  return kind == Basis::K ? k_series(set, trunc) : l_series(set, trunc);
}

nlohmann::json to_json(const Series& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : s.terms()) terms.push_back({{"monomial", m.to_string()}, {"coeff", bigint_to_json(c)}});
  return {{"degree", s.degree()}, {"vars", s.trunc()}, {"terms", terms}};
}

Series series_from_json(const nlohmann::json& j) {
  try {
    Series s(j.at("degree").get<unsigned>(), j.at("vars").get<unsigned>());
    for (const auto& t : j.at("terms")) {
      s.add_term(Monomial::parse(t.at("monomial").get<std::string>()), bigint_from_json(t.at("coeff")));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed series JSON: ") + e.what());
  }
}

namespace {

bool verbose() {
  const char* v = std::getenv("KFAM_VERBOSE");
  return v != nullptr && std::string_view(v) != "" && std::string_view(v) != "0";
}

class Timer {
 public:
  Timer(std::ostream& err, std::string label) : err_(err), label_(std::move(label)) {}
  ~Timer() {
    if (!verbose()) return;
    const auto ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    err_ << "[kfam] " << label_ << " took " << ms << " ms\n";
  }

 private:
  std::ostream& err_;
  std::string label_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void print_series(std::ostream& out, const Series& s, bool json) {
  if (json) {
    out << to_json(s).dump() << '\n';
    return;
  }
  out << "degree " << s.degree() << ", V=" << s.trunc() << ", " << s.size() << " terms\n";
  for (const auto& [m, c] : s.terms()) out << "  " << c << "  " << m.to_string() << '\n';
}

void print_decomposition(std::ostream& out, const Decomposition& dec, bool json) {
  if (json) {
    out << to_json(dec).dump() << '\n';
    return;
  }
  const auto name = to_string(dec.basis);
  out << "basis " << name << ", degree " << dec.degree << ", " << dec.coeffs.size() << " terms\n";
  for (const auto& [spec, c] : dec.coeffs) out << "  " << c << "  " << name << "{" << spec.to_string() << "}\n";
}

// Factors given as --left, --factor... and --right, multiplied in that order.
struct ProductArgs {
  std::string left;
  std::string right;
  std::vector<std::string> factors;

  void attach(CLI::App* app) {
    app->add_option("--left", left, "first factor, KIND:n:set");
    app->add_option("--right", right, "last factor, KIND:n:set");
    app->add_option("--factor", factors, "additional factor, repeatable");
  }

  std::vector<FactorSpec> parsed() const {
    std::vector<FactorSpec> out;
    if (!left.empty()) out.push_back(FactorSpec::parse(left));
    for (const auto& f : factors) out.push_back(FactorSpec::parse(f));
    if (!right.empty()) out.push_back(FactorSpec::parse(right));
    if (out.empty()) throw DomainError("no factors given; use --left/--right/--factor");
    return out;
  }
};

unsigned total_degree(const std::vector<FactorSpec>& fs) {
  unsigned d = 0;
  for (const auto& f : fs) d += f.set.n();
  return d;
}

Series product(const std::vector<FactorSpec>& fs, unsigned trunc) {
  Series acc = Series::one(trunc);
  for (const auto& f : fs) acc = acc * f.build(trunc);
  return acc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for the K_{n,S} / L_{n,S} series families", "kfam"};
  app.require_subcommand(1);

  bool json = false;
  unsigned n = 0;
  unsigned m = 0;
  std::string set;
  std::optional<unsigned> vars;
  long q = 2;
  std::string basis = "L";
  std::string word;
  ProductArgs product_args;

  auto add_vars = [&](CLI::App* sub) {
    sub->add_option_function<unsigned>(
           "--vars", [&](const unsigned& v) { vars = v; }, "number of natural variables V")
        ->check(CLI::PositiveNumber);
  };

  auto* kseries = app.add_subcommand("kseries", "print K_{n,set}");
  kseries->add_option("--n", n, "degree")->required()->check(CLI::Range(0u, SubsetSpec::kMaxN));
  kseries->add_option("--set", set, "comma-separated members, empty for {}");
  kseries->add_option("--q", q, "coefficient base (nonzero)");
  add_vars(kseries);
  kseries->add_flag("--json", json);

  auto* lseries = app.add_subcommand("lseries", "print L_{n,set}");
  lseries->add_option("--n", n, "degree")->required()->check(CLI::Range(0u, SubsetSpec::kMaxN));
  lseries->add_option("--set", set, "comma-separated members, empty for {}");
  add_vars(lseries);
  lseries->add_flag("--json", json);

  auto* multiply = app.add_subcommand("multiply", "multiply factors");
  product_args.attach(multiply);
  add_vars(multiply);
  multiply->add_flag("--json", json);

  auto* decompose = app.add_subcommand("decompose", "write a product in the K or L basis");
  product_args.attach(decompose);
  decompose->add_option("--basis", basis, "K or L")->check(CLI::IsMember({"K", "L"}));
  add_vars(decompose);
  decompose->add_flag("--json", json);

  auto* shuffle_formula = app.add_subcommand("shuffle-formula", "K_{1,{}} K_{m,set} as a sum of K_{m+1,Gp(s)}");
  shuffle_formula->add_option("--m", m, "degree of the right factor")->required()->check(CLI::Range(0u, 20u));
  shuffle_formula->add_option("--set", set, "comma-separated members, empty for {}");
  bool verify = false;
  shuffle_formula->add_flag("--verify", verify, "also check the identity at V = m+1");
  shuffle_formula->add_flag("--json", json);

  auto* gp_cmd = app.add_subcommand("gp", "generalized peak set of a word over A>B>C>D");
  gp_cmd->add_option("word", word, "e.g. BCACDD")->required();
  gp_cmd->add_flag("--json", json);

  auto* spreading = app.add_subcommand("check-spreading", "check the spreading condition of a product");
  product_args.attach(spreading);
  add_vars(spreading);
  spreading->add_flag("--json", json);

  auto* check_q = app.add_subcommand("check-q", "is (K^q_{1,{}})^2 in the span of the K^q_{2,S}?");
  check_q->add_option("--q", q, "coefficient base (nonzero)")->required();
  add_vars(check_q);
  check_q->add_flag("--json", json);

  auto* selftest = app.add_subcommand("selftest", "run the exhaustive small-degree suites");
  selftest->add_flag("--json", json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitDomainError;
  }

  try {
    if (*kseries || *lseries) {
      const auto spec = SubsetSpec::parse(n, set);
      const unsigned v = vars.value_or(std::max(n, 1u));
      Timer t(err, "series construction");
      if (*kseries) {
        print_series(out, q == 2 ? k_series(spec, v) : k_series_q(spec, v, q), json);
      } else {
        print_series(out, l_series(spec, v), json);
      }
      return kExitOk;
    }

    if (*multiply) {
      const auto fs = product_args.parsed();
      const unsigned v = vars.value_or(std::max(total_degree(fs), 1u));
      Timer t(err, "multiplication");
      print_series(out, product(fs, v), json);
      return kExitOk;
    }

    if (*decompose) {
      const auto fs = product_args.parsed();
      const unsigned v = vars.value_or(std::max(total_degree(fs), 1u));
      Timer t(err, "decomposition");
      const auto target = product(fs, v);
      const auto dec = parse_basis(basis) == Basis::K ? decompose_k(target) : decompose_l(target);
      if (reconstruct(dec, v) != target) throw InvariantViolation("decomposition does not reconstruct the target");
      print_decomposition(out, dec, json);
      return kExitOk;
    }

    if (*shuffle_formula) {
      const auto right = SubsetSpec::parse(m, set);
      const auto sets = k1_product(right);
      std::optional<bool> holds;
      if (verify) {
        const unsigned v = m + 1;
        Series sum(m + 1, v);
        for (const auto& s : sets) sum += k_series(s, v);
        holds = sum == k_series(SubsetSpec(1, {}), v) * k_series(right, v);
      }
      if (json) {
        nlohmann::json j = {{"m", m}, {"set", right.members()}, {"terms", multiset_to_json(sets)}};
        if (holds) j["verified"] = *holds;
        out << j.dump() << '\n';
      } else {
        out << "K{} * K_" << m << "{" << right.to_string() << "} = sum of " << sets.size() << " terms\n";
        for (const auto& [s, k] : multiplicities(sets)) {
          out << "  " << k << "  K_" << (m + 1) << "{" << s.to_string() << "}\n";
        }
        if (holds) out << "identity at V=" << (m + 1) << ": " << (*holds ? "holds" : "FAILS") << '\n';
      }
      return holds.value_or(true) ? kExitOk : kExitInternalError;
    }

    if (*gp_cmd) {
      const auto peaks = gp(word);
      if (json) {
        out << nlohmann::json{{"word", word}, {"set", peaks.members()}}.dump() << '\n';
      } else {
        out << "{" << peaks.to_string() << "}\n";
      }
      return kExitOk;
    }

    if (*spreading) {
      const auto fs = product_args.parsed();
      const unsigned v = vars.value_or(total_degree(fs) + 1);
      Timer t(err, "spreading check");
      const bool ok = check_spreading(product(fs, v));
      if (json) {
        out << nlohmann::json{{"vars", v}, {"spreading", ok}}.dump() << '\n';
      } else {
        out << "spreading condition at V=" << v << ": " << (ok ? "holds" : "fails") << '\n';
      }
      return ok ? kExitOk : kExitDomainError;
    }

    if (*check_q) {
      if (q == 0) throw DomainError("q must be nonzero");
      const auto res = q_square_in_span(q, vars.value_or(2));
      if (json) {
        nlohmann::json sol = nlohmann::json::array();
        for (const auto& x : res.solution) sol.push_back(x.str());
        out << nlohmann::json{{"q", q}, {"in_span", res.solvable}, {"solution", sol}}.dump() << '\n';
      } else {
        out << "q=" << q << ": (K_{1,{}})^2 is " << (res.solvable ? "in" : "outside") << " the span of K_{2,S}\n";
        if (res.solvable) {
          const auto subsets = all_subsets(2);
          for (std::size_t i = 0; i < subsets.size(); ++i) {
            out << "  " << res.solution[i] << "  K_2{" << subsets[i].to_string() << "}\n";
          }
        }
      }
      return kExitOk;
    }

    if (*selftest) {
      auto results = run_selftest([&](const SelftestResult& r) {
        if (!json) out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n' << std::flush;
      });
      bool all = true;
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : results) {
        all = all && r.passed;
        arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      }
      if (json) out << nlohmann::json{{"passed", all}, {"suites", arr}}.dump() << '\n';
      return all ? kExitOk : kExitDomainError;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  err << app.help();
  return kExitDomainError;
}

}  // namespace kfam
