#include "msg/exterior.hpp"
#include "msg/parse.hpp"
#include <benchmark/benchmark.h>
#include <functional>

using namespace msg;

namespace
{

ChartPtr chart4() { return make_chart({"x", "y", "z", "w"}); }

Poly dense_poly(ChartPtr const &c, int deg)
{
	Poly p(c);
	int n = c->dim();
	long coeff = 1;
	std::vector<int> e(n, 0);
	// all monomials of total degree <= deg
	std::function<void(int, int)> rec = [&](int i, int left) {
		if (i == n)
		{
			p.add_term(Mono{e}, rat(coeff++ % 7 - 3, 2));
			return;
		}
		for (int k = 0; k <= left; ++k)
		{
			e[i] = k;
			rec(i + 1, left - k);
		}
		e[i] = 0;
	};
	rec(0, deg);
	return p;
}

void bm_poly_mul(benchmark::State &state)
{
	auto c = chart4();
	Poly a = dense_poly(c, (int)state.range(0));
	Poly b = dense_poly(c, (int)state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_poly_mul)->Arg(3)->Arg(5);

void bm_wedge(benchmark::State &state)
{
	auto c = chart4();
	Form a(c, 1), b(c, 2);
	for (int i = 0; i < 4; ++i)
		a.add_term(IndexSet{{i}}, dense_poly(c, 2));
	for (int i = 0; i < 4; ++i)
		for (int j = i + 1; j < 4; ++j)
			b.add_term(IndexSet{{i, j}}, dense_poly(c, 2));
	for (auto _ : state)
		benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(bm_wedge);

void bm_ext_d(benchmark::State &state)
{
	auto c = chart4();
	Form b(c, 2);
	for (int i = 0; i < 4; ++i)
		for (int j = i + 1; j < 4; ++j)
			b.add_term(IndexSet{{i, j}}, dense_poly(c, 4));
	for (auto _ : state)
		benchmark::DoNotOptimize(ext_d(b));
}
BENCHMARK(bm_ext_d);

void bm_parse(benchmark::State &state)
{
	auto c = chart4();
	std::string src = "(x^2*y - 1/2*z*w + 3)*dx^dy + (w^3 - x)*dz^dw";
	for (auto _ : state)
		benchmark::DoNotOptimize(parse_expr(src, c));
}
BENCHMARK(bm_parse);

} // namespace

BENCHMARK_MAIN();
