#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "twistkit/catalog.hpp"
#include "twistkit/characters.hpp"
#include "twistkit/classify.hpp"
#include "twistkit/cohomology.hpp"
#include "twistkit/modular.hpp"

using namespace twistkit;

namespace {

const std::vector<std::string> kTableGroups = {"cyclic 12", "dihedral 6", "sym 4", "sl 2 3", "alt 5", "sl 2 5"};
const std::vector<std::string> kDoubleGroups = {"dihedral 4", "quaternion", "alt 4", "abelian 2 2 2 2", "sym 4"};
const std::vector<std::string> kLabelGroups = {"abelian 2 2", "dihedral 4", "alt 4", "sym 4", "alt 5", "sl 2 5"};

Cochain d8_twisted(const FiniteGroup& D8) {
  auto N = generated_subgroup(D8, {D8.parse_element("r2"), D8.parse_element("s")});
  auto Q = quotient_group(D8, N);
  return standard_cocycle(D8, inflate(D8, Q.group, cyclic_cocycle(2, 1), Q.projection));
}

}  // namespace

static void BM_CharacterTable(benchmark::State& state) {
  const auto& spec = kTableGroups[state.range(0)];
  auto G = build_group(spec);
  for (auto _ : state) benchmark::DoNotOptimize(character_table(G));
  state.SetLabel(spec);
}
BENCHMARK(BM_CharacterTable)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

static void BM_SMatrix(benchmark::State& state) {
  const auto& spec = kDoubleGroups[state.range(0)];
  auto G = build_group(spec);
  for (auto _ : state) benchmark::DoNotOptimize(s_matrix(G, Cochain()));
  state.SetLabel(spec);
}
BENCHMARK(BM_SMatrix)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_SMatrixTwistedD8(benchmark::State& state) {
  auto D8 = dihedral_group(4);
  auto w = d8_twisted(D8);
  for (auto _ : state) benchmark::DoNotOptimize(s_matrix(D8, w));
}
BENCHMARK(BM_SMatrixTwistedD8)->Unit(benchmark::kMillisecond);

static void BM_BruteForce(benchmark::State& state) {
  const auto& spec = kDoubleGroups[state.range(0)];
  auto data = s_matrix(build_group(spec), Cochain());
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_lagrangians(data));
  state.SetLabel(spec);
}
BENCHMARK(BM_BruteForce)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_LagrangianLabels(benchmark::State& state) {
  const auto& spec = kLabelGroups[state.range(0)];
  auto G = build_group(spec);
  for (auto _ : state) benchmark::DoNotOptimize(lagrangian_labels(G, Cochain()));
  state.SetLabel(spec);
}
BENCHMARK(BM_LagrangianLabels)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

static void BM_DualGroupSL25(benchmark::State& state) {
  auto G = build_group("sl 2 5");
  auto Z = center(G);
  for (auto _ : state) benchmark::DoNotOptimize(dual_group(G, Cochain(), Z, Cochain(2, G.order(), 1)));
}
BENCHMARK(BM_DualGroupSL25)->Unit(benchmark::kMillisecond);

static void BM_FindMatchingCocycle(benchmark::State& state) {
  auto target = s_matrix(dihedral_group(4), Cochain());
  auto A = abelian_group({2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(find_matching_cocycle(target, A));
}
BENCHMARK(BM_FindMatchingCocycle)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
