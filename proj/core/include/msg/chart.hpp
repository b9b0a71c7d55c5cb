#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace msg
{

// named coordinate chart; all symbolic values carry a pointer to their chart
struct Chart
{
	std::vector<std::string> names;

	int dim() const { return (int)names.size(); }

	int index_of(std::string const &n) const
	{
		auto it = std::find(names.begin(), names.end(), n);
		return it == names.end() ? -1 : (int)(it - names.begin());
	}
};

using ChartPtr = std::shared_ptr<const Chart>;

inline ChartPtr make_chart(std::vector<std::string> names)
{
	if (names.empty())
		throw std::invalid_argument("chart: needs at least one coordinate");
	for (size_t i = 0; i < names.size(); ++i)
		for (size_t j = i + 1; j < names.size(); ++j)
			if (names[i] == names[j])
				throw std::invalid_argument("chart: duplicate coordinate " +
				                            names[i]);
	auto c = std::make_shared<Chart>();
	c->names = std::move(names);
	return c;
}

inline bool same_chart(ChartPtr const &a, ChartPtr const &b)
{
	return a == b || (a && b && a->names == b->names);
}

inline void require_same_chart(ChartPtr const &a, ChartPtr const &b)
{
	if (!same_chart(a, b))
		throw std::invalid_argument("chart mismatch");
}

} // namespace msg
