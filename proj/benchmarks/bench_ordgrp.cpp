#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "ordgrp/braid.hpp"
#include "ordgrp/free_magnus.hpp"
#include "ordgrp/lattice_ext.hpp"
#include "ordgrp/pl_line.hpp"
#include "ordgrp/prover.hpp"
#include "ordgrp/smith.hpp"

namespace {

using namespace ordgrp;

pres::Presentation load(const std::string& name) {
  std::ifstream in(std::string(ORDGRP_DATA_DIR) + "/" + name + ".pres");
  std::stringstream s;
  s << in.rdbuf();
  return pres::parse_presentation(s.str());
}

void BM_HandleReduce(benchmark::State& state) {
  const auto s = braid::sample_braids(4, 256, static_cast<std::size_t>(state.range(0)), 1);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(braid::handle_reduce(s.elements[i++ % s.elements.size()]));
}
BENCHMARK(BM_HandleReduce)->Arg(8)->Arg(12)->Arg(24);

void BM_DehornoyCompare(benchmark::State& state) {
  const auto s = braid::sample_braids(4, 256, 12, 2);
  const braid::DehornoyOracle order(4);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(order.compare(s.elements[i % 256], s.elements[(i * 7 + 3) % 256]));
    ++i;
  }
}
BENCHMARK(BM_DehornoyCompare);

void BM_MagnusExpand(benchmark::State& state) {
  const auto s = magnus::sample_free_words(2, 64, 12, 3);
  const int cap = static_cast<int>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(magnus::magnus_expand(s.elements[i++ % 64], cap));
}
BENCHMARK(BM_MagnusExpand)->DenseRange(2, 6, 2);

void BM_MagnusCompare(benchmark::State& state) {
  const auto s = magnus::sample_free_words(2, 256, 8, 4);
  const magnus::MagnusOracle order(2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(order.compare(s.elements[i % 256], s.elements[(i * 7 + 3) % 256]));
    ++i;
  }
}
BENCHMARK(BM_MagnusCompare);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(5);
  pres::IntMatrix a(n, std::vector<std::int64_t>(n));
  for (auto& row : a)
    for (auto& x : row) x = uniform_int(rng, -9, 9);
  for (auto _ : state) benchmark::DoNotOptimize(pres::smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(2)->Arg(4)->Arg(6);

void BM_WeeksCaseAnalysis(benchmark::State& state) {
  const auto weeks = load("weeks");
  const auto schema = pres::default_schema(weeks);
  for (auto _ : state) benchmark::DoNotOptimize(pres::nonlo_case_analysis(weeks, schema));
}
BENCHMARK(BM_WeeksCaseAnalysis)->Unit(benchmark::kMillisecond);

void BM_QuotientWitnessBrieskorn(benchmark::State& state) {
  const auto p = load("brieskorn237");
  for (auto _ : state) benchmark::DoNotOptimize(pres::nontriviality_witness(p, 7));
}
BENCHMARK(BM_QuotientWitnessBrieskorn)->Unit(benchmark::kMillisecond);

void BM_PlCompose(benchmark::State& state) {
  const auto s = pl::sample_pl_maps(128, 3, 6);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pl::pl_compose(s.elements[i % 128], s.elements[(i + 1) % 128]));
    ++i;
  }
}
BENCHMARK(BM_PlCompose);

void BM_SikoraPerturb(benchmark::State& state) {
  const auto order = lattice::lex_order(3);
  const std::vector<lattice::IntVector> cs{{1, -2, 3}, {0, 1, -4}, {2, 5, -1}};
  for (auto _ : state) benchmark::DoNotOptimize(lattice::sikora_perturb(order, cs));
}
BENCHMARK(BM_SikoraPerturb);

}  // namespace

BENCHMARK_MAIN();
