#pragma once

#include "msg/exterior.hpp"
#include "msg/report.hpp"

#include <cstdint>

namespace msg
{

// deterministic 64-bit generator (splitmix), stable across platforms
struct Rng
{
	uint64_t s;

	explicit Rng(uint64_t seed) : s(seed) {}

	uint64_t next()
	{
		s += 0x9e3779b97f4a7c15ull;
		uint64_t z = s;
		z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
		z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
		return z ^ (z >> 31);
	}

	int below(int n) { return (int)(next() % (uint64_t)n); }

	// small rational in [-3,3] with denominator 1 or 2
	Rat coeff()
	{
		long num = (long)below(7) - 3;
		long den = below(2) + 1;
		return rat(num, den);
	}
};

Poly random_poly(ChartPtr const &c, Rng &rng, int maxdeg, int nterms = 3);
Form random_form(ChartPtr const &c, Rng &rng, int deg, int maxcoeffdeg = 2,
                 int nterms = 2);
MVF random_mvf(ChartPtr const &c, Rng &rng, int deg, int maxcoeffdeg = 2,
               int nterms = 2);

std::vector<std::string> fuzz_suites();

// seed-deterministic residual fuzzing; every instance must come out zero
Report run_fuzz(std::string const &suite, int count, uint64_t seed,
                int maxdim = 4, int maxdeg = 2);

} // namespace msg
