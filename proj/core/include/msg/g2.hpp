#pragma once

#include "msg/plectic.hpp"

namespace msg
{

// the standard torsion-free G2 structure on R^7
struct G2Structure
{
	ChartPtr chart;
	Form phi;   // associative 3-form
	Form psi;   // coassociative 4-form, star(phi)
	Form vol;   // volume 7-form
	QMat metric; // identity in these presentations
};

enum class G2Presentation
{
	Flat7,   // coordinates x1..x7, phi in the standard normal form
	RPlusC3  // coordinates (t, x1..x3, y1..y3), phi = Re(Omega3) - dt ^ omega3
};

G2Structure standard_g2(G2Presentation p);

// Euclidean Hodge star for the identity metric and dx1^...^dx7 orientation
Form hodge_star(Form const &t, G2Structure const &g2);

// musical isomorphisms, trivial for the identity metric
Form flat(MVF const &X, G2Structure const &g2);
MVF sharp(Form const &a, G2Structure const &g2);

// g(X x Y, Z) = phi(X, Y, Z), i.e. (X x Y) = (Y |- X |- phi)#
MVF cross(MVF const &X, MVF const &Y, G2Structure const &g2);

// (curl X)b = star(d(Xb) ^ psi); curl_coord is the pointwise index formula
MVF curl(MVF const &X, G2Structure const &g2);
MVF curl_coord(MVF const &X, G2Structure const &g2);

// pointwise projections of a 2-form onto the 7- and 14-dimensional pieces
Form pi7(Form const &a, G2Structure const &g2);
Form pi14(Form const &a, G2Structure const &g2);

struct G2HamReport
{
	bool is_hamiltonian = false;
	MVF field;            // curl(alpha#)
	int matched_sign = 0; // sign from hamiltonian_verify against omega = phi
};

G2HamReport g2_hamiltonian_check(Form const &alpha, G2Structure const &g2);

// residual of {alpha, beta} = (curl(alpha#) x curl(beta#))b as 1-forms
Form g2_bracket_is_cross_check(HamPair const &a, HamPair const &b,
                               G2Structure const &g2);

} // namespace msg
