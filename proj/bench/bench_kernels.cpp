// Serial reference vs OpenMP kernels.  Both paths reduce in a fixed order, so
// the results are compared before timing starts.

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <iostream>

#include "liepf/dynkin.hpp"
#include "liepf/verlinde.hpp"

using namespace liepf;

namespace {

const FormalCharacter& e8_character() {
  static const FormalCharacter ch = dominant_character(build_algebra("E8"), Weight::fundamental(8, 7));
  return ch;
}

VerlindeQuery b3_query() { return {build_algebra("B3"), 10, 2, {Weight{1, 0, 1}, Weight{0, 1, 0}}, 128}; }

void theta_sum(benchmark::State& state, Execution execution) {
  const auto& ch = e8_character();
  for (auto _ : state) benchmark::DoNotOptimize(theta_square_sum(ch, execution));
  state.counters["dominant_weights"] = static_cast<double>(ch.dominant_mults().size());
}

void verlinde_sum(benchmark::State& state, Execution execution) {
  VerlindeQuery q = b3_query();
  VerlindeOptions options;
  options.execution = execution;
  std::size_t alcove_size = 0;
  for (auto _ : state) {
    auto r = verlinde_dimension(q, options);
    alcove_size = r.alcove_size;
    benchmark::DoNotOptimize(r.dimension);
  }
  state.counters["alcove"] = static_cast<double>(alcove_size);
}

bool paths_agree() {
  const auto& ch = e8_character();
  if (theta_square_sum(ch, Execution::serial) != theta_square_sum(ch, Execution::parallel)) return false;
  VerlindeOptions serial;
  serial.execution = Execution::serial;
  VerlindeOptions parallel;
  parallel.execution = Execution::parallel;
  return verlinde_dimension(b3_query(), serial).dimension == verlinde_dimension(b3_query(), parallel).dimension;
}

}  // namespace

BENCHMARK_CAPTURE(theta_sum, serial, Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(theta_sum, parallel, Execution::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verlinde_sum, serial, Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verlinde_sum, parallel, Execution::parallel)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  if (!paths_agree()) {
    std::cerr << "serial and parallel kernels disagree\n";
    return EXIT_FAILURE;
  }
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return EXIT_FAILURE;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return EXIT_SUCCESS;
}
