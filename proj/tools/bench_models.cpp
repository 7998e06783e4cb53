// Benchmark: serial vs parallel model enumeration and validity checking.
// The parallel path splits the candidate space across OpenMP threads;
// the serial path is the reference implementation the tests run against.
//
// Usage: bench_models <corpus-dir> [theory=MON] [sizes=M=3] [reps=3]

#include <chrono>
#include <iostream>
#include <string>

#include "alonzo/graph.hpp"

using namespace alonzo;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& f) {
  auto t0 = Clock::now();
  f();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: bench_models <corpus-dir> [theory] [sizes] [reps]\n";
    return 2;
  }
  std::string theory_name = argc > 2 ? argv[2] : "MON";
  std::string size_spec = argc > 3 ? argv[3] : "M=3";
  int reps = argc > 4 ? std::stoi(argv[4]) : 3;

  ModuleStore store = load_corpus(argv[1]);
  const Theory& T = store.theory(theory_name);
  SizeSpec s = parse_sizes(size_spec);
  ExprPtr comm = elaborate_term(
      "forall x, y : " + *T.language.base_types.begin() + ". x * x = x * x",
      T.language);

  std::cout << "theory " << theory_name << " at " << size_spec << ", " << reps
            << " rep(s) each\n";

  for (bool parallel : {false, true}) {
    const char* mode = parallel ? "parallel" : "serial  ";
    double best_enum = 1e18, best_check = 1e18;
    size_t n_models = 0;
    for (int r = 0; r < reps; ++r) {
      std::vector<Model> models;
      best_enum = std::min(
          best_enum, time_ms([&] { models = enumerate_models(T, s, parallel); }));
      n_models = models.size();
      CheckResult res;
      best_check = std::min(best_check, time_ms([&] {
                              res = check_validity_at_scale(T, comm, s, parallel);
                            }));
      if (res.refuted) {
        std::cerr << "unexpected refutation\n";
        return 1;
      }
    }
    std::cout << mode << "  enumerate: " << best_enum << " ms (" << n_models
              << " models)   check: " << best_check << " ms\n";
  }
  return 0;
}
