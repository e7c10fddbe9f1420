#include "bicomm/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "bicomm/dimension.hpp"
#include "bicomm/element.hpp"
#include "bicomm/error.hpp"
#include "bicomm/ideals.hpp"
#include "bicomm/orders.hpp"
#include "bicomm/structalg.hpp"
#include "bicomm/tideals.hpp"

namespace bicomm::cli {
namespace {

// Bad flag values found after CLI11 parsing; mapped to the usage status.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OutputMode { Human, Tsv, Json };

// Collects facts in print order and renders them in the selected mode.
class Report {
 public:
  void fact(std::string key, std::string value) { facts_.push_back({std::move(key), {std::move(value)}, false}); }
  // Human output shows the key too.
  void labeled(std::string key, std::string value) {
    facts_.push_back({std::move(key), {std::move(value)}, false, true});
  }
  void list(std::string key, std::vector<std::string> values) {
    facts_.push_back({std::move(key), std::move(values), true});
  }

  void render(std::ostream& out, OutputMode mode) const {
    switch (mode) {
      case OutputMode::Human:
        for (const auto& f : facts_) {
          if (!f.is_list) {
            out << (f.labeled ? f.key + ": " : "") << f.values.front() << '\n';
            continue;
          }
          out << f.key << ":\n";
          for (const auto& v : f.values) out << "  " << v << '\n';
        }
        break;
      case OutputMode::Tsv:
        for (const auto& f : facts_)
          for (const auto& v : f.values) out << f.key << '\t' << v << '\n';
        break;
      case OutputMode::Json: {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (const auto& f : facts_) {
          if (f.is_list)
            j[f.key] = f.values;
          else
            j[f.key] = f.values.front();
        }
        out << j.dump(2) << '\n';
        break;
      }
    }
  }

 private:
  struct Fact {
    std::string key;
    std::vector<std::string> values;
    bool is_list;
    bool labeled = false;
  };
  std::vector<Fact> facts_;
};

struct Common {
  std::string field = "q";
  std::string output = "human";
  bool verbose = false;
};

Field field_flag(const std::string& text) {
  try {
    return Field::parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--field: ") + e.what());
  }
}

OutputMode output_flag(const std::string& text) {
  if (text == "human") return OutputMode::Human;
  if (text == "tsv") return OutputMode::Tsv;
  if (text == "json") return OutputMode::Json;
  throw UsageError("--output must be human, tsv or json");
}

IdealMode ideal_mode_flag(const std::string& text) {
  if (text == "two") return IdealMode::TwoSided;
  if (text == "left") return IdealMode::Left;
  if (text == "right") return IdealMode::Right;
  throw UsageError("--mode must be two, left or right");
}

CheckMode check_mode_flag(const std::string& text) {
  if (text == "exhaustive") return CheckMode::MultilinearExhaustive;
  if (text == "symbolic") return CheckMode::Symbolic;
  if (text == "sample") return CheckMode::Sample;
  throw UsageError("--mode must be exhaustive, symbolic or sample");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Generator files hold one element per line; '#' starts a comment.
// Blank lines separate the blocks of a chain file.
std::vector<std::vector<Element>> read_blocks(const std::string& path, Field field) {
  std::istringstream in(read_file(path));
  std::vector<std::vector<Element>> blocks(1);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) {
      if (!blocks.back().empty()) blocks.emplace_back();
      continue;
    }
    auto hash = line.find('#');
    if (blank(line.substr(0, hash))) continue;
    try {
      blocks.back().push_back(parse_element(line, field));
    } catch (const Error& e) {
      throw Error(e.code(), path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (blocks.back().empty()) blocks.pop_back();
  return blocks;
}

std::vector<Element> read_gens(const std::string& path, Field field) {
  std::vector<Element> gens;
  for (auto& block : read_blocks(path, field))
    for (auto& g : block) gens.push_back(std::move(g));
  return gens;
}

std::vector<std::string> strings(const std::vector<Element>& elems) {
  std::vector<std::string> out;
  for (const auto& e : elems) out.push_back(e.to_string());
  return out;
}

std::string vector_string(const std::vector<Scalar>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

// Each subcommand registers its flags and returns the body run after parsing.
using Body = std::function<int(Report&)>;

struct Command {
  CLI::App* app;
  Body body;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in free bicommutative algebras", "bicomm"};
  app.require_subcommand(1);
  Common common;
  std::vector<Command> commands;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--field", common.field, "q or fp:P")->capture_default_str();
    sub->add_option("--output", common.output, "human, tsv or json")->capture_default_str();
    sub->add_flag("--verbose", common.verbose, "print certificates");
    commands.push_back({sub, {}});
    return &commands.back();
  };
  commands.reserve(12);

  std::string expr, expr2, gens_path, chain_path, algebra_path;
  std::string ideal_mode = "two", chain_mode = "two", check_mode = "exhaustive";
  std::uint32_t max_deg = ClosureWindow{}.max_degree, max_vars = ClosureWindow{}.max_variables;
  std::uint32_t n = 0, d = 0;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  bool char0 = false;

  {
    auto* c = add("normalize", "normal form of a nonassociative polynomial");
    c->app->add_option("expr", expr)->required();
    c->body = [&](Report& r) {
      r.fact("result", normalize(parse_expression(expr, field_flag(common.field))).to_string());
      return kTrue;
    };
  }
  {
    auto* c = add("mul", "product of two elements");
    c->app->add_option("a", expr)->required();
    c->app->add_option("b", expr2)->required();
    c->body = [&](Report& r) {
      Field f = field_flag(common.field);
      r.fact("result", multiply(parse_element(expr, f), parse_element(expr2, f)).to_string());
      return kTrue;
    };
  }
  {
    auto* c = add("hilbert", "dimension of the degree-n component in d generators");
    c->app->add_option("-d", d)->required()->check(CLI::PositiveNumber);
    c->app->add_option("-n", n)->required()->check(CLI::PositiveNumber);
    c->body = [&](Report& r) {
      r.fact("dimension", graded_dimension(d, n).get_str());
      return kTrue;
    };
  }
  {
    auto* c = add("codim", "dimension of the multilinear component of degree n");
    c->app->add_option("-n", n)->required()->check(CLI::PositiveNumber);
    c->body = [&](Report& r) {
      r.fact("codimension", multilinear_dimension(n).get_str());
      return kTrue;
    };
  }
  {
    auto* c = add("weight-cmp", "compare two monomials in the weight order");
    c->app->add_option("m1", expr)->required();
    c->app->add_option("m2", expr2)->required();
    c->body = [&](Report& r) {
      auto cmp = weight_compare(parse_monomial(expr), parse_monomial(expr2));
      r.fact("relation", cmp < 0 ? "<" : cmp > 0 ? ">" : "=");
      return kTrue;
    };
  }
  {
    auto* c = add("higman-cmp", "compare two monomials in the Higman order");
    c->app->add_option("m1", expr)->required();
    c->app->add_option("m2", expr2)->required();
    c->body = [&](Report& r) {
      const char* names[] = {"EQ", "LEQ", "GEQ", "INCOMPARABLE"};
      r.fact("relation", names[static_cast<int>(higman_compare(parse_monomial(expr), parse_monomial(expr2)))]);
      return kTrue;
    };
  }
  {
    auto* c = add("ideal-member", "membership in a two-sided or one-sided ideal");
    c->app->add_option("--gens", gens_path)->required();
    c->app->add_option("--elem", expr)->required();
    c->app->add_option("--mode", ideal_mode, "two, left or right")->capture_default_str();
    c->body = [&](Report& r) {
      Field f = field_flag(common.field);
      IdealMode m = ideal_mode_flag(ideal_mode);
      auto gens = read_gens(gens_path, f);
      Element elem = parse_element(expr, f);
      MembershipCertificate cert;
      if (m == IdealMode::TwoSided)
        cert = two_sided_member(elem, TwoSidedPresentation::build(f, gens));
      else
        cert = m == IdealMode::Left ? left_ideal_member(elem, gens) : right_ideal_member(elem, gens);
      r.fact("status", cert.member ? "MEMBER" : "NOT-MEMBER");
      if (common.verbose && cert.member) {
        std::vector<std::string> mu;
        for (std::size_t k = 0; k < cert.mu.size(); ++k)
          if (!cert.mu[k].is_zero()) mu.push_back("g" + std::to_string(k + 1) + ": " + cert.mu[k].to_string());
        r.list("multipliers", mu);
        r.labeled("residue", cert.residue.to_string());
        std::vector<std::string> cof;
        for (std::size_t k = 0; k < cert.cofactors.size(); ++k)
          if (!cert.cofactors[k].is_zero())
            cof.push_back("b" + std::to_string(k + 1) + ": " + cert.cofactors[k].to_string());
        r.list("cofactors", cof);
      }
      return cert.member ? kTrue : kFalse;
    };
  }
  {
    auto* c = add("chain-stabilize", "stabilization index of a cumulative ideal chain");
    c->app->add_option("--chain", chain_path)->required();
    c->app->add_option("--mode", chain_mode, "two, left or right")->capture_default_str();
    c->body = [&](Report& r) {
      Field f = field_flag(common.field);
      IdealMode m = ideal_mode_flag(chain_mode);
      auto steps = read_blocks(chain_path, f);
      auto index = chain_stabilization(steps, m);
      r.fact("stabilization", index ? std::to_string(*index) : "NOT-STABLE-WITHIN-INPUT");
      if (common.verbose) {
        auto strict = chain_strict_steps(steps, m);
        std::vector<std::string> lines;
        for (std::size_t k = 1; k < strict.size(); ++k)
          lines.push_back("step " + std::to_string(k + 1) + (strict[k] ? ": strict" : ": equal"));
        r.list("steps", lines);
      }
      return index ? kTrue : kFalse;
    };
  }
  {
    auto* c = add("tideal-member", "membership in a T-ideal within a degree and variable window");
    c->app->add_option("--gens", gens_path)->required();
    c->app->add_option("--elem", expr)->required();
    c->app->add_option("--max-deg", max_deg)->capture_default_str()->check(CLI::PositiveNumber);
    c->app->add_option("--max-vars", max_vars)->capture_default_str()->check(CLI::PositiveNumber);
    c->body = [&](Report& r) {
      Field f = field_flag(common.field);
      auto gens = read_gens(gens_path, f);
      bool member = t_ideal_member_bounded(parse_element(expr, f), gens, {max_deg, max_vars});
      r.fact("status", member ? "MEMBER" : "NOT-MEMBER");
      return member ? kTrue : kFalse;
    };
  }
  {
    auto* c = add("specht-search", "finite basis candidate for a T-ideal");
    c->app->add_option("--gens", gens_path)->required();
    c->app->add_option("--max-deg", max_deg)->capture_default_str()->check(CLI::PositiveNumber);
    c->app->add_option("--max-vars", max_vars)->capture_default_str()->check(CLI::PositiveNumber);
    c->app->add_flag("--char0-two-vars", char0, "first reduce to two-variable consequences (field q)");
    c->body = [&](Report& r) {
      Field f = field_flag(common.field);
      if (char0 && !f.is_rational()) throw UsageError("--char0-two-vars needs --field q");
      ClosureWindow window{max_deg, max_vars};
      auto gens = read_gens(gens_path, f);
      if (char0) gens = char_zero_two_variable_heuristic(gens, window);
      auto result = specht_basis_search(gens, window);
      r.list("basis", strings(result.basis));
      std::vector<std::string> weights;
      for (const auto& w : result.antichain) weights.push_back(w.to_string());
      r.list("antichain", weights);
      r.fact("status", result.verified ? "VERIFIED" : "UNVERIFIED-WITHIN-WINDOW");
      return result.verified ? kTrue : kFalse;
    };
  }
  {
    auto* c = add("check-identity", "check a polynomial identity in a structure algebra");
    c->app->add_option("--algebra", algebra_path)->required();
    c->app->add_option("--identity", expr)->required();
    c->app->add_option("--mode", check_mode, "exhaustive, symbolic or sample")->capture_default_str();
    c->app->add_option("--samples", samples)->capture_default_str()->check(CLI::PositiveNumber);
    c->app->add_option("--seed", seed)->capture_default_str();
    c->body = [&](Report& r) {
      CheckMode m = check_mode_flag(check_mode);
      auto alg = StructureAlgebra::from_json(read_file(algebra_path));
      auto result = check_identity(parse_expression(expr, alg.field()), alg, m, samples, seed);
      r.fact("status", result.holds ? "HOLDS" : "FAILS");
      if (result.witness_basis) {
        std::vector<std::string> w;
        for (std::size_t i = 0; i < result.witness_basis->size(); ++i)
          w.push_back("x" + std::to_string(i + 1) + " = e" + std::to_string((*result.witness_basis)[i]));
        r.list("witness", w);
      } else if (result.witness) {
        std::vector<std::string> w;
        for (std::size_t i = 0; i < result.witness->size(); ++i)
          w.push_back("x" + std::to_string(i + 1) + " = " + vector_string((*result.witness)[i]));
        r.list("witness", w);
      }
      return result.holds ? kTrue : kFalse;
    };
  }
  {
    auto* c = add("witt", "structure constants of the truncated Witt algebra");
    c->app->add_option("-n", n)->required()->check(CLI::PositiveNumber);
    c->body = [&](Report&) {
      out << witt_truncated(n, field_flag(common.field)).to_json() << '\n';
      return kTrue;
    };
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kTrue;
    }
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  for (const auto& c : commands) {
    if (!c.app->parsed()) continue;
    Report report;
    int status;
    try {
      OutputMode output = output_flag(common.output);
      field_flag(common.field);
      status = c.body(report);
      report.render(out, output);
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << '\n';
      return kUsage;
    } catch (const Error& e) {
      err << "input error: " << e.what() << '\n';
      return kInput;
    }
    out.flush();
    return status;
  }
  err << app.help();
  return kUsage;
}

}  // namespace bicomm::cli
