#include <benchmark/benchmark.h>

#include "wha/comodules.hpp"
#include "wha/constructions.hpp"
#include "wha/linalg.hpp"
#include "wha/quantum.hpp"
#include "wha_cli/commands.hpp"

using namespace wha;

namespace {

const Field Q = Field::rationals();

Space basis(int n) {
    std::vector<std::string> l;
    for (int i = 0; i < n; ++i) l.push_back("b" + std::to_string(i));
    return Space::atomic(l);
}

LinMap dense_map(const Space& x, Field f) {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> e;
    for (std::uint32_t i = 0; i < x.dim(); ++i)
        for (std::uint32_t j = 0; j < x.dim(); ++j)
            if ((i * 7 + j * 3) % 5 < 3) e.emplace_back(i, j, Scalar::from_fraction(f, int(i) - int(j), 1 + (i + j) % 3));
    return LinMap::from_triples(f, x, x, e);
}

void BM_Compose(benchmark::State& st) {
    const auto x = basis(int(st.range(0)));
    const auto a = dense_map(x, Q), b = dense_map(x, Q);
    for (auto _ : st) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_Compose)->Arg(8)->Arg(27)->Arg(81);

void BM_Tensor(benchmark::State& st) {
    const auto x = basis(int(st.range(0)));
    const auto a = dense_map(x, Q);
    for (auto _ : st) benchmark::DoNotOptimize(tensor(a, a));
}
BENCHMARK(BM_Tensor)->Arg(3)->Arg(9);

void BM_Rank(benchmark::State& st) {
    const auto x = basis(int(st.range(0)));
    const auto a = dense_map(x, Field::prime(101));
    for (auto _ : st) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(64);

void BM_WeakBimonoidG2(benchmark::State& st) {
    const auto w = category_algebra(walking_isomorphism(), Q);
    for (auto _ : st) benchmark::DoNotOptimize(check_weak_bimonoid(w));
}
BENCHMARK(BM_WeakBimonoidG2);

void BM_FindAntipode(benchmark::State& st) {
    const auto w = category_algebra(cyclic_groups_disjoint({2, 3}), Q);
    for (auto _ : st) benchmark::DoNotOptimize(find_antipode(w));
}
BENCHMARK(BM_FindAntipode);

void BM_FrobeniusSquareQ3(benchmark::State& st) {
    const auto r = functions_frobenius(3, Q);
    for (auto _ : st) {
        auto h = frobenius_square(r);
        benchmark::DoNotOptimize(check_weak_hopf(h));
    }
}
BENCHMARK(BM_FrobeniusSquareQ3)->Unit(benchmark::kMillisecond);

void BM_ComodulesG2(benchmark::State& st) {
    const auto h = groupoid_algebra(walking_isomorphism(), Q);
    for (auto _ : st) benchmark::DoNotOptimize(check_comodules(h.bimonoid, &h));
}
BENCHMARK(BM_ComodulesG2)->Unit(benchmark::kMillisecond);

void BM_QuantumGroupoidQ2sq(benchmark::State& st) {
    const auto h = frobenius_square(functions_frobenius(2, Q));
    for (auto _ : st) {
        auto g = quantum_groupoid(h);
        benchmark::DoNotOptimize(check_quantum_groupoid(g));
    }
}
BENCHMARK(BM_QuantumGroupoidQ2sq)->Unit(benchmark::kMillisecond);

void BM_CliAllG2(benchmark::State& st) {
    const auto m = cli::category_model("G2", walking_isomorphism(), Q);
    for (auto _ : st) benchmark::DoNotOptimize(cli::run_command("all", m));
}
BENCHMARK(BM_CliAllG2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
