#pragma once

#include "msg/exterior.hpp"

#include <stdexcept>
#include <variant>

namespace msg
{

struct ParseError : std::runtime_error
{
	int line, col;

	ParseError(std::string const &msg, int line_, int col_)
	    : std::runtime_error(msg + " at " + std::to_string(line_) + ":" +
	                         std::to_string(col_)),
	      line(line_), col(col_)
	{}
};

using Value = std::variant<Poly, Form, MVF>;

Value parse_expr(std::string const &src, ChartPtr const &chart);

// typed wrappers; a Poly result promotes to a degree-0 form/field
Poly parse_poly(std::string const &src, ChartPtr const &chart);
Form parse_form(std::string const &src, ChartPtr const &chart);
MVF parse_mvf(std::string const &src, ChartPtr const &chart);

} // namespace msg
