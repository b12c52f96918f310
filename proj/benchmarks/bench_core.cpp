#include <benchmark/benchmark.h>

#include "weyl/endomorphism.hpp"
#include "weyl/series.hpp"

using namespace weyl;

namespace {

Element dense_element(const AlgebraSignature& sig, int degree) {
  Element::TermMap terms;
  std::vector<std::uint32_t> e(sig.s(), 0);
  // Every monomial of the given total degree with unit coefficients.
  auto rec = [&](auto&& self, std::uint32_t pos, int remaining) -> void {
    if (pos + 1 == sig.s()) {
      e[pos] = static_cast<std::uint32_t>(remaining);
      terms.emplace(MultiIndex(e), Scalar(1));
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      e[pos] = static_cast<std::uint32_t>(d);
      self(self, pos + 1, remaining - d);
    }
  };
  rec(rec, 0, degree);
  return Element::from_terms(sig, std::move(terms));
}

void BM_NormalOrderedMul(benchmark::State& state) {
  const AlgebraSignature sig(2, 0);
  Element a = dense_element(sig, static_cast<int>(state.range(0)));
  Element b = dense_element(sig, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Element c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_NormalOrderedMul)->Arg(2)->Arg(4)->Arg(6);

Endomorphism bench_automorphism() {
  const AlgebraSignature sig(1, 1);
  Element q = Element::generator(sig, 0);
  Element p = Element::generator(sig, 1);
  Element y = Element::generator(sig, 2);
  Endomorphism momentum_shear(sig, {q, p + power(q, 2), y});
  Endomorphism position_shear(sig, {q + power(p, 2), p, y});
  Endomorphism scale(sig, {Scalar(2) * q, Scalar(1, 2) * p,
                           Scalar(3) * y + Element::one(sig)});
  return compose(scale, compose(position_shear, momentum_shear));
}

void BM_Invert(benchmark::State& state) {
  Endomorphism sigma = bench_automorphism();
  for (auto _ : state) {
    Endomorphism tau = invert(sigma);
    benchmark::DoNotOptimize(tau);
  }
}
BENCHMARK(BM_Invert);

void BM_Certify(benchmark::State& state) {
  Endomorphism sigma = bench_automorphism();
  for (auto _ : state) {
    Certification cert = certify_automorphism(sigma);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_Certify);

void BM_SeriesInvert(benchmark::State& state) {
  const std::uint32_t order = static_cast<std::uint32_t>(state.range(0));
  TruncatedSeries x = TruncatedSeries::variable(2, order, 0);
  TruncatedSeries y = TruncatedSeries::variable(2, order, 1);
  SeriesEndomorphism sigma =
      SeriesEndomorphism::make(2, order, {x + y * y, y + x * x});
  for (auto _ : state) {
    SeriesEndomorphism tau = series_invert(sigma);
    benchmark::DoNotOptimize(tau);
  }
}
BENCHMARK(BM_SeriesInvert)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
