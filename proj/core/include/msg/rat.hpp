#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace msg
{

// exact rational scalar; gmp keeps results canonical after arithmetic
using Rat = mpq_class;

inline Rat rat(long num, long den = 1)
{
	if (den == 0)
		throw std::invalid_argument("rat: zero denominator");
	Rat r(num, den);
	r.canonicalize();
	return r;
}

inline Rat rat_from_string(std::string const &s)
{
	Rat r(s);
	r.canonicalize();
	return r;
}

inline std::string rat_str(Rat const &r) { return r.get_str(); }

// (-1)^e
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace msg
