// Command-line front end: compute flag-count and class-count polynomials,
// reproduce the reference table, run the verification suites, and print the
// Betti-number reading of a flag count.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 deterministic resource refusal.

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unicount/errors.hpp"
#include "unicount/flag_counts.hpp"
#include "unicount/group_orders.hpp"
#include "unicount/json_io.hpp"
#include "unicount/verify.hpp"

namespace {

using namespace unicount;

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "latex") return OutputFormat::Latex;
  return OutputFormat::Text;
}

int checked_sum(const std::vector<int>& values, int n, const char* what) {
  const int sum = std::accumulate(values.begin(), values.end(), 0);
  if (sum != n)
    throw InvalidInputError(std::string(what) + " sums to " +
                            std::to_string(sum) + ", expected " +
                            std::to_string(n));
  return sum;
}

int run_fpoly(int n, const std::vector<int>& parts, const std::vector<int>& blocks,
              const std::string& format) {
  checked_sum(parts, n, "--partition");
  checked_sum(blocks, n, "--blocks");
  const Partition pi(parts);
  const DimVector d = DimVector::from_blocks(BlockComposition(blocks));
  const Polynomial f = flag_count_poly(pi, d);
  std::cout << render_polynomial(f, parse_format(format)) << "\n";
  return 0;
}

int run_kpoly(int n, const std::vector<int>& blocks, const std::string& flavor,
              const std::string& format) {
  checked_sum(blocks, n, "--blocks");
  const GroupKind kind = (flavor == "pgl") ? GroupKind::PGL : GroupKind::GL;
  const Polynomial k = class_count_poly(n, BlockComposition(blocks), kind);
  std::cout << render_polynomial(k, parse_format(format)) << "\n";
  return 0;
}

int run_table1(int max_n, const std::string& format) {
  std::cout << render_class_count_table(max_n, parse_format(format));
  return 0;
}

int run_betti(int n, const std::vector<int>& parts, const std::vector<int>& blocks) {
  checked_sum(parts, n, "--partition");
  checked_sum(blocks, n, "--blocks");
  const Partition pi(parts);
  const DimVector d = DimVector::from_blocks(BlockComposition(blocks));
  const Polynomial f = flag_count_poly(pi, d);
  if (f.is_zero()) {
    std::cout << "no fixed points: the fixed-point variety is empty\n";
    return 0;
  }
  // coefficient of q^i = dimension of the degree-2i cohomology of the
  // fixed-point variety; evaluation at 1 = its Euler characteristic
  for (int i = 0; i <= f.degree(); ++i)
    std::cout << "b_" << 2 * i << " = " << f.coeff(i).get_str() << "\n";
  std::cout << "Euler characteristic = " << f.eval(Int(1)).get_str() << "\n";
  return 0;
}

int run_verify(const std::string& suite, const VerifyOptions& options) {
  std::vector<CheckRecord> records;
  if (suite == "appendix" || suite == "all") {
    const auto part = run_appendix_suite(options);
    records.insert(records.end(), part.begin(), part.end());
  }
  if (suite == "oracle" || suite == "all") {
    const auto part = run_oracle_suite(options);
    records.insert(records.end(), part.begin(), part.end());
  }
  long failures = 0;
  for (const CheckRecord& r : records) {
    std::cout << check_record_to_json(r).dump() << "\n";
    if (!r.equal) ++failures;
  }
  std::cerr << "verify: " << records.size() << " checks, " << failures
            << " failed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact class-counting polynomials for unipotent radicals"};
  app.require_subcommand(1);

  int n = 0;
  std::vector<int> parts;
  std::vector<int> blocks;
  std::string format = "text";
  std::string flavor = "gl";
  int max_n = 10;

  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
  };

  CLI::App* fpoly = app.add_subcommand(
      "fpoly", "flag-count polynomial f for a Jordan type and parabolic shape");
  fpoly->add_option("--n", n, "ambient dimension")->required();
  fpoly->add_option("--partition", parts, "Jordan type, e.g. 2,1")
      ->required()
      ->delimiter(',');
  fpoly->add_option("--blocks", blocks, "parabolic block sizes, e.g. 1,1,1")
      ->required()
      ->delimiter(',');
  add_format(fpoly);

  CLI::App* kpoly = app.add_subcommand(
      "kpoly", "class-count polynomial k for a unipotent radical");
  kpoly->add_option("--n", n, "ambient dimension")->required();
  kpoly->add_option("--blocks", blocks, "parabolic block sizes")
      ->required()
      ->delimiter(',');
  kpoly->add_option("--flavor", flavor, "ambient group")
      ->check(CLI::IsMember({"gl", "pgl"}));
  add_format(kpoly);

  CLI::App* table1 = app.add_subcommand(
      "table1", "Borel-radical class counts in PGL_n for n = 2..max-n");
  table1->add_option("--max-n", max_n, "largest n (2..10)");
  add_format(table1);

  CLI::App* betti = app.add_subcommand(
      "betti", "coefficients of f as Betti numbers of the fixed-point variety");
  betti->add_option("--n", n, "ambient dimension")->required();
  betti->add_option("--partition", parts, "Jordan type")->required()->delimiter(',');
  betti->add_option("--blocks", blocks, "parabolic block sizes")
      ->required()
      ->delimiter(',');

  std::string suite = "all";
  VerifyOptions options;
  bool serial = false;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", suite, "which suite to run")
      ->check(CLI::IsMember({"appendix", "oracle", "all"}));
  verify->add_option("--max-n", options.max_n, "size cap for the case grids");
  verify->add_option("--primes", options.primes, "oracle sample primes")
      ->delimiter(',');
  verify->add_flag("--inject-fault", options.inject_fault,
                   "corrupt one conservation case to prove failures propagate");
  verify->add_flag("--serial", serial, "run the oracle kernels single-threaded");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("UNICOUNT_ORACLE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) {
      std::cerr << "invalid UNICOUNT_ORACLE_BUDGET: " << env << "\n";
      return 2;
    }
    options.element_budget = value;
  }
  if (serial) options.exec = ff::Exec::Serial;

  try {
    if (fpoly->parsed()) return run_fpoly(n, parts, blocks, format);
    if (kpoly->parsed()) return run_kpoly(n, blocks, flavor, format);
    if (table1->parsed()) return run_table1(max_n, format);
    if (betti->parsed()) return run_betti(n, parts, blocks);
    if (verify->parsed()) return run_verify(suite, options);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource refusal: " << e.what() << "\n";
    return 3;
  } catch (const InvalidInputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatchError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
