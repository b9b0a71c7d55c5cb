#pragma once

#include "msg/exterior.hpp"

namespace msg
{

// classical Lie bracket of vector fields, [X,Y]^j = X^i d_i Y^j - Y^i d_i X^j
MVF vf_bracket(MVF const &X, MVF const &Y);

// Schouten-Nijenhuis bracket; degrees >= 1, result degree k+l-1
MVF schouten(MVF const &X, MVF const &Y);

// sum_{i<j} (-1)^{i+j} [V_i,V_j] ^ (remaining factors), 1-based signs
MVF list_boundary(DecomposableMVF const &p);

// residuals of the interior-product identity suite; all must vanish
Form interior_bracket_residual(MVF const &X, MVF const &Y, Form const &t);
Form cartan_residual(DecomposableMVF const &p, MVF const &dp, Form const &t);
Form lie_bracket_residual(MVF const &X, MVF const &Y, Form const &t);
Form bracket_hook_residual(MVF const &X, MVF const &Y, Form const &t);

} // namespace msg
