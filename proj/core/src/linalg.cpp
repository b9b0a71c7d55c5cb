#include "msg/linalg.hpp"

#include <stdexcept>

namespace msg
{

std::vector<int> rref_inplace(QMat &m)
{
	std::vector<int> pivots;
	if (m.empty())
		return pivots;
	size_t rows = m.size(), cols = m[0].size();
	for (auto const &row : m)
		if (row.size() != cols)
			throw std::invalid_argument("rref: ragged matrix");
	size_t r = 0;
	for (size_t c = 0; c < cols && r < rows; ++c)
	{
		size_t p = r;
		while (p < rows && m[p][c] == 0)
			++p;
		if (p == rows)
			continue;
		std::swap(m[r], m[p]);
		Rat inv = 1 / m[r][c];
		for (size_t j = c; j < cols; ++j)
			m[r][j] *= inv;
		for (size_t i = 0; i < rows; ++i)
		{
			if (i == r || m[i][c] == 0)
				continue;
			Rat f = m[i][c];
			for (size_t j = c; j < cols; ++j)
				m[i][j] -= f * m[r][j];
		}
		pivots.push_back((int)c);
		++r;
	}
	return pivots;
}

std::vector<QVec> nullspace(QMat a, int ncols)
{
	auto pivots = rref_inplace(a);
	std::vector<bool> is_pivot(ncols, false);
	for (int c : pivots)
		is_pivot[c] = true;
	std::vector<QVec> basis;
	for (int fc = 0; fc < ncols; ++fc)
	{
		if (is_pivot[fc])
			continue;
		QVec v(ncols, Rat(0));
		v[fc] = 1;
		for (size_t r = 0; r < pivots.size(); ++r)
			v[pivots[r]] = -a[r][fc];
		basis.push_back(std::move(v));
	}
	return basis;
}

std::optional<QVec> solve(QMat const &a, QVec const &b)
{
	if (a.size() != b.size())
		throw std::invalid_argument("solve: size mismatch");
	if (a.empty())
		return QVec{};
	size_t cols = a[0].size();
	QMat aug = a;
	for (size_t i = 0; i < a.size(); ++i)
		aug[i].push_back(b[i]);
	auto pivots = rref_inplace(aug);
	if (!pivots.empty() && pivots.back() == (int)cols)
		return std::nullopt; // pivot in the augmented column
	QVec x(cols, Rat(0));
	for (size_t r = 0; r < pivots.size(); ++r)
		x[pivots[r]] = aug[r][cols];
	return x;
}

int rank(QMat a) { return (int)rref_inplace(a).size(); }

} // namespace msg
