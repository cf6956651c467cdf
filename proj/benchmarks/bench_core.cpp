#include <benchmark/benchmark.h>

#include "wdp/basis_bound.hpp"
#include "wdp/certificate.hpp"
#include "wdp/defaults.hpp"
#include "wdp/polytope.hpp"
#include "wdp/surface.hpp"
#include "wdp/volume_profile.hpp"
#include "wdp/weights.hpp"
#include "wdp/zariski.hpp"

namespace {

using namespace wdp;

void BM_CountMonomials(benchmark::State& state) {
  const Quintuple q = load_surface("s64").weights;
  for (auto _ : state) {
    MonomialCounter counter(q);
    benchmark::DoNotOptimize(counter.count(864));
  }
}
BENCHMARK(BM_CountMonomials);

void BM_HilbertCoefficients(benchmark::State& state) {
  const Quintuple q = load_surface("s117").weights;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert_coefficients(q, 200));
  }
}
BENCHMARK(BM_HilbertCoefficients);

void BM_PolytopeVertices(benchmark::State& state) {
  const auto script = load_certificate("s45");
  const std::vector<std::string> names{"a", "b"};
  std::vector<std::string> vars;
  std::vector<AffineForm> cons;
  for (std::size_t v = 0; v < script->transforms.size(); ++v) {
    vars.push_back(names[v]);
    cons.push_back(AffineForm::variable(names[v]));
    cons.push_back(AffineForm(script->caps[v]) -
                   AffineForm::variable(names[v]));
  }
  vars.push_back("m");
  cons.push_back(AffineForm::variable("m"));
  cons.push_back(AffineForm::parse(script->m_cap) -
                 AffineForm::variable("m"));
  for (auto _ : state) {
    const Polytope region(vars, cons);
    benchmark::DoNotOptimize(region.vertices());
  }
}
BENCHMARK(BM_PolytopeVertices);

void BM_ZariskiDecomposition(benchmark::State& state) {
  const SurfaceModel s = load_surface("s45");
  const IntersectionTable t = complete_table(s);
  QDivisor d = QDivisor::anti_canonical(s);
  d.add("L_xz", Rational(-3, 5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zariski(t, d));
  }
}
BENCHMARK(BM_ZariskiDecomposition);

void BM_VolumeProfile(benchmark::State& state) {
  const SurfaceModel s = load_surface("s117");
  const IntersectionTable t = complete_table(s);
  const QDivisor d0 = QDivisor::anti_canonical(s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(volume_profile(t, d0, "L_xz"));
  }
}
BENCHMARK(BM_VolumeProfile);

void BM_VerifyCertificate(benchmark::State& state) {
  const SurfaceModel s = load_surface("s45");
  const auto script = load_certificate("s45");
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_certificate(s, *script));
  }
}
BENCHMARK(BM_VerifyCertificate);

void BM_DiscreteFiltration(benchmark::State& state) {
  const SurfaceModel s = load_surface("s15");
  const long k = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(discrete_filtration(s, "C_x", k));
  }
}
BENCHMARK(BM_DiscreteFiltration)->Arg(60)->Arg(150)->Arg(300);

}  // namespace

BENCHMARK_MAIN();
