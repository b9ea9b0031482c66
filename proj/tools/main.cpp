// hamband: bandwidth labelings, bounds, and exact optima for products of
// cliques. Exit codes: 0 success, 1 verification/search failure, 2
// malformed input or arguments. Data goes to stdout, diagnostics to stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamband/arrangement.hpp"
#include "hamband/bounds.hpp"
#include "hamband/construct.hpp"
#include "hamband/hypercube.hpp"
#include "hamband/io.hpp"
#include "hamband/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitBadInput = 2;

hamband::Shape parse_shape(const std::vector<int>& dims) {
  hamband::Shape shape(dims);
  if (shape.dims() != dims)
    std::cerr << "note: shape normalized to" << [&] {
      std::string s;
      for (int n : shape.dims()) s += ' ' + std::to_string(n);
      return s;
    }() << " (dims sorted ascending, unit factors dropped)\n";
  return shape;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hamband::ParseError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << data;
}

hamband::Arrangement load_arrangement(const std::string& path,
                                      const std::string& format) {
  const std::string text = read_file(path);
  return format == "csv" ? hamband::arrangement_from_csv(text)
                         : hamband::arrangement_from_json(text);
}

struct Options {
  std::vector<int> dims;
  std::string format = "json";
  std::string in_path;
  std::string out_path;
  std::uint64_t budget = hamband::kDefaultNodeBudget;
  bool general_bounds = false;
  int hypercube_d = 0;
};

int run_bounds(const Options& opt) {
  const hamband::Shape shape = parse_shape(opt.dims);
  std::cout << to_json(hamband::bounds_report(shape, {}, opt.general_bounds))
            << '\n';
  return kExitOk;
}

int run_construct(const Options& opt) {
  const hamband::Shape shape = parse_shape(opt.dims);
  const hamband::ConstructionResult result = hamband::construct(shape);
  const std::string payload = opt.format == "csv"
                                  ? hamband::to_csv(result.arrangement)
                                  : hamband::to_json(result.arrangement);
  if (!opt.out_path.empty()) write_file(opt.out_path, payload);
  if (opt.format == "csv")
    std::cout << payload;
  else
    std::cout << to_json(result) << '\n';
  return kExitOk;
}

int run_spread(const Options& opt) {
  const hamband::Arrangement a = load_arrangement(opt.in_path, opt.format);
  std::cout << "{\"spread\":" << hamband::spread(a) << "}\n";
  return kExitOk;
}

int run_verify(const Options& opt) {
  const hamband::Arrangement a = load_arrangement(opt.in_path, opt.format);
  if (!opt.dims.empty()) {
    const hamband::Shape expected = parse_shape(opt.dims);
    if (!(expected == a.shape()))
      throw hamband::ParseError("arrangement shape does not match --shape");
  }
  const hamband::Shape& shape = a.shape();
  const hamband::Value sp = hamband::spread(a);
  hamband::Value lower, upper;
  if (shape.dim_count() == 1) {
    lower = upper = shape.volume() - 1;  // a single clique
  } else {
    lower = opt.general_bounds ? hamband::lower_bound_general(shape)
                               : hamband::lower_bound(shape);
    upper = opt.general_bounds ? hamband::upper_bound_general(shape)
                               : hamband::upper_bound(shape);
  }
  const bool ok = lower <= sp && sp <= upper;
  std::cout << "{\"shape\":" << [&] {
    std::string s = "[";
    for (std::size_t i = 0; i < shape.dims().size(); ++i)
      s += (i ? "," : "") + std::to_string(shape.dims()[i]);
    return s + "]";
  }() << ",\"spread\":" << sp << ",\"lower\":" << lower << ",\"upper\":" << upper
            << ",\"monotonic\":" << (hamband::is_monotonic(a) ? "true" : "false")
            << ",\"ok\":" << (ok ? "true" : "false") << "}\n";
  if (!ok) {
    std::cerr << "verification failed: spread " << sp << " outside ["
              << lower << ", " << upper << "]\n";
    return kExitVerifyFailure;
  }
  return kExitOk;
}

int run_exact(const Options& opt) {
  const hamband::Shape shape = parse_shape(opt.dims);
  const hamband::OracleResult result = hamband::exact_min_spread(shape, opt.budget);
  std::cout << to_json(result) << '\n';
  return kExitOk;
}

int run_hypercube(const Options& opt) {
  std::cout << to_json(hamband::harper_numbering(opt.hypercube_d)) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bandwidth labelings and bounds for products of cliques"};
  app.require_subcommand(1);
  Options opt;

  auto add_shape = [&](CLI::App* cmd, bool required) {
    auto* o = cmd->add_option("dims", opt.dims, "clique orders n1 n2 ...")
                  ->check(CLI::PositiveNumber);
    if (required) o->required()->expected(1, 64);
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "json or csv (csv is 2D only)")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* bounds = app.add_subcommand("bounds", "print the bound bracket for a shape");
  add_shape(bounds, true);
  bounds->add_flag("--general-bounds", opt.general_bounds,
                   "use the d-dimensional formulas even at d = 2");

  CLI::App* construct = app.add_subcommand("construct", "build a near-optimal arrangement");
  add_shape(construct, true);
  add_format(construct);
  construct->add_option("--out", opt.out_path, "also write the arrangement to a file");

  CLI::App* spread = app.add_subcommand("spread", "spread of a stored arrangement");
  spread->add_option("--in", opt.in_path, "arrangement file")->required();
  add_format(spread);

  CLI::App* verify = app.add_subcommand("verify", "validate a stored arrangement against the bracket");
  verify->add_option("--in", opt.in_path, "arrangement file")->required();
  verify->add_option("--shape", opt.dims, "expected clique orders")->check(CLI::PositiveNumber);
  add_format(verify);
  verify->add_flag("--general-bounds", opt.general_bounds,
                   "check against the d-dimensional formulas even at d = 2");

  CLI::App* exact = app.add_subcommand("exact", "exact minimum spread on a small shape");
  add_shape(exact, true);
  exact->add_option("--budget", opt.budget, "search node budget");

  CLI::App* hypercube = app.add_subcommand("hypercube", "print the Harper numbering of K_2^d");
  hypercube->add_option("d", opt.hypercube_d, "hypercube dimension")
      ->required()
      ->check(CLI::Range(1, 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (app.got_subcommand(bounds)) return run_bounds(opt);
    if (app.got_subcommand(construct)) return run_construct(opt);
    if (app.got_subcommand(spread)) return run_spread(opt);
    if (app.got_subcommand(verify)) return run_verify(opt);
    if (app.got_subcommand(exact)) return run_exact(opt);
    if (app.got_subcommand(hypercube)) return run_hypercube(opt);
  } catch (const hamband::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const hamband::BudgetExceeded& e) {
    std::cerr << "error: " << e.what();
    if (e.best_so_far)
      std::cerr << " (best spread found: " << e.best_so_far->optimum << ")";
    std::cerr << '\n';
    return kExitVerifyFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailure;
  }
  return kExitBadInput;
}
