#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "finspinor/herm.hpp"
#include "finspinor/json_io.hpp"
#include "finspinor/metric.hpp"
#include "finspinor/spinor.hpp"
#include "finspinor/types.hpp"
#include "finspinor/verify.hpp"

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw finspinor::DomainError("cannot open " + path);
  return nlohmann::json::parse(in);
}

void save_json(const std::string& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) throw finspinor::DomainError("cannot open " + path + " for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw finspinor::DomainError("write to " + path + " failed");
}

int run_gen_basis(int n, const std::string& out_path) {
  const finspinor::HermBasis basis = finspinor::standard_herm_basis(n);
  save_json(out_path, finspinor::basis_document(basis));
  return 0;
}

int run_map(int n, const std::string& in_path) {
  const finspinor::CMatrix c = finspinor::matrix_from_document(load_json(in_path), n);
  const finspinor::BasisChange change = finspinor::make_basis_change(c);
  const finspinor::FLMatrix map =
      finspinor::epimorphism_L(change, finspinor::standard_herm_basis(n));
  std::cout << finspinor::fl_matrix_document(map).dump(2) << '\n';
  return 0;
}

int run_metric(int n, const std::string& out_path) {
  const finspinor::FinslerMetric metric =
      finspinor::metric_coefficients(finspinor::standard_herm_basis(n));
  save_json(out_path, finspinor::metric_document(metric));
  return 0;
}

int run_kernel(int n, const std::string& in_path) {
  const finspinor::CMatrix c = finspinor::matrix_from_document(load_json(in_path), n);
  const finspinor::BasisChange change = finspinor::make_basis_change(c);
  const bool inside = finspinor::is_in_kernel(change, finspinor::standard_herm_basis(n));
  std::cout << (inside ? "kernel: true" : "kernel: false") << '\n';
  return 0;
}

int run_verify(int max_n, std::uint64_t seed, int samples) {
  const std::vector<finspinor::SuiteResult> results =
      finspinor::run_verification(max_n, seed, samples);
  finspinor::print_report(results, std::cout);
  return finspinor::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Finslerian N-spinor toolkit: Hermitian bases of Herm(N), the induced "
      "map SL(N,C) -> FL(N^2,R), kernel tests, and degree-N metric "
      "coefficients"};
  app.require_subcommand(1);

  int gen_n = 0;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand(
      "gen-basis", "Write the standard Hermitian basis and its duals as JSON");
  gen->add_option("-n,--dim", gen_n, "Spinor dimension N")
      ->required()
      ->check(CLI::Range(2, 8));
  gen->add_option("-o,--output", gen_out, "Output file")->required();

  int map_n = 0;
  std::string map_in;
  CLI::App* map_cmd = app.add_subcommand(
      "map", "Print the N^2 x N^2 real matrix induced by a unimodular matrix");
  map_cmd->add_option("-n,--dim", map_n, "Spinor dimension N")
      ->required()
      ->check(CLI::Range(2, 8));
  map_cmd->add_option("-i,--input", map_in, "Matrix document to read")->required();

  int metric_n = 0;
  std::string metric_out;
  CLI::App* metric_cmd = app.add_subcommand(
      "metric", "Write the degree-N metric coefficients as JSON");
  metric_cmd->add_option("-n,--dim", metric_n, "Spinor dimension N")
      ->required()
      ->check(CLI::Range(2, 5));
  metric_cmd->add_option("-o,--output", metric_out, "Output file")->required();

  int kernel_n = 0;
  std::string kernel_in;
  CLI::App* kernel_cmd = app.add_subcommand(
      "kernel", "Report whether a unimodular matrix maps to the identity");
  kernel_cmd->add_option("-n,--dim", kernel_n, "Spinor dimension N")
      ->required()
      ->check(CLI::Range(2, 8));
  kernel_cmd->add_option("-i,--input", kernel_in, "Matrix document to read")->required();

  int verify_max_n = 3;
  std::uint64_t verify_seed = 42;
  int verify_samples = 100;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run every module property suite for N = 2..max-n");
  verify_cmd->add_option("--max-n", verify_max_n, "Largest dimension to check")
      ->check(CLI::Range(2, 5));
  verify_cmd->add_option("--seed", verify_seed, "64-bit sampling seed (mt19937_64)");
  verify_cmd->add_option("--samples", verify_samples, "Random draws per suite")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen_basis(gen_n, gen_out);
    if (map_cmd->parsed()) return run_map(map_n, map_in);
    if (metric_cmd->parsed()) return run_metric(metric_n, metric_out);
    if (kernel_cmd->parsed()) return run_kernel(kernel_n, kernel_in);
    if (verify_cmd->parsed())
      return run_verify(verify_max_n, verify_seed, verify_samples);
  } catch (const finspinor::NotUnimodularError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const finspinor::SingularMatrixError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const finspinor::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
