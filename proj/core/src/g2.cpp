#include "msg/g2.hpp"

#include "msg/parse.hpp"

namespace msg
{

static void require_dim7(ChartPtr const &c)
{
	if (c->dim() != 7)
		throw std::invalid_argument("g2: chart must have 7 coordinates");
}

Form hodge_star(Form const &t, G2Structure const &g2)
{
	require_same_chart(t.chart(), g2.chart);
	// orientation sign of vol against the chart-order basis 7-form
	Poly vc = g2.vol.coeff(IndexSet{{0, 1, 2, 3, 4, 5, 6}});
	Rat eps = vc.constant_value();
	Form r(t.chart(), 7 - t.degree());
	for (auto const &[I, p] : t.terms())
	{
		std::vector<int> comp;
		size_t pos = 0;
		for (int i = 0; i < 7; ++i)
			if (pos < I.idx.size() && I.idx[pos] == i)
				++pos;
			else
				comp.push_back(i);
		auto m = merge_indices(I, IndexSet{comp});
		r.add_term(IndexSet{std::move(comp)}, p * (Rat(m->second) * eps));
	}
	return r;
}

G2Structure standard_g2(G2Presentation p)
{
	G2Structure g2;
	if (p == G2Presentation::Flat7)
	{
		g2.chart = make_chart({"x1", "x2", "x3", "x4", "x5", "x6", "x7"});
		g2.phi = parse_form("dx1^dx2^dx3 + dx1^dx4^dx5 - dx1^dx6^dx7"
		                    " + dx2^dx4^dx6 + dx2^dx5^dx7"
		                    " + dx3^dx4^dx7 - dx3^dx5^dx6",
		                    g2.chart);
		g2.vol = Form::basis(g2.chart, IndexSet{{0, 1, 2, 3, 4, 5, 6}});
	}
	else
	{
		g2.chart = make_chart({"t", "x1", "x2", "x3", "y1", "y2", "y3"});
		g2.phi = parse_form("dx1^dx2^dx3 - dx1^dy2^dy3 - dy1^dx2^dy3"
		                    " - dy1^dy2^dx3 - dt^dx1^dy1 - dt^dx2^dy2"
		                    " - dt^dx3^dy3",
		                    g2.chart);
		// the orientation induced by phi: dt dx1 dy1 dx2 dy2 dx3 dy3
		g2.vol = -Form::basis(g2.chart, IndexSet{{0, 1, 2, 3, 4, 5, 6}});
	}
	g2.metric = QMat(7, QVec(7, Rat(0)));
	for (int i = 0; i < 7; ++i)
		g2.metric[i][i] = 1;
	g2.psi = hodge_star(g2.phi, g2);
	if (!ext_d(g2.phi).is_zero() || !ext_d(g2.psi).is_zero())
		throw std::logic_error("g2: structure is not torsion-free");
	return g2;
}

Form flat(MVF const &X, G2Structure const &g2)
{
	require_same_chart(X.chart(), g2.chart);
	Form r(X.chart(), X.degree());
	for (auto const &[I, p] : X.terms())
		r.add_term(I, p);
	return r;
}

MVF sharp(Form const &a, G2Structure const &g2)
{
	require_same_chart(a.chart(), g2.chart);
	MVF r(a.chart(), a.degree());
	for (auto const &[I, p] : a.terms())
		r.add_term(I, p);
	return r;
}

MVF cross(MVF const &X, MVF const &Y, G2Structure const &g2)
{
	require_same_chart(X.chart(), g2.chart);
	require_same_chart(Y.chart(), g2.chart);
	if (X.degree() != 1 || Y.degree() != 1)
		throw std::invalid_argument("cross: degree-1 fields only");
	return sharp(contract(Y, contract(X, g2.phi)), g2);
}

MVF curl(MVF const &X, G2Structure const &g2)
{
	require_same_chart(X.chart(), g2.chart);
	if (X.degree() != 1)
		throw std::invalid_argument("curl: degree-1 fields only");
	// (X |- phi) ^ psi = 3 star(Xb), so the star expression needs the 1/3
	// for pi7(dXb) = curl(X) |- phi to hold
	return sharp(hodge_star(wedge(ext_d(flat(X, g2)), g2.psi), g2), g2) *
	       Rat(1, 3);
}

// signed component phi_{abl} of the associative form
static Rat phi_comp(Form const &phi, int a, int b, int l)
{
	if (a == b || a == l || b == l)
		return 0;
	int s = 1;
	if (a > b)
	{
		std::swap(a, b);
		s = -s;
	}
	if (b > l)
	{
		std::swap(b, l);
		s = -s;
	}
	if (a > b)
	{
		std::swap(a, b);
		s = -s;
	}
	Poly c = phi.coeff(IndexSet{{a, b, l}});
	return c.is_zero() ? Rat(0) : c.constant_value() * s;
}

MVF curl_coord(MVF const &X, G2Structure const &g2)
{
	require_same_chart(X.chart(), g2.chart);
	if (X.degree() != 1)
		throw std::invalid_argument("curl: degree-1 fields only");
	MVF r(X.chart(), 1);
	for (int b = 0; b < 7; ++b)
	{
		Poly Xb = X.coeff(IndexSet{{b}});
		if (Xb.is_zero())
			continue;
		for (int a = 0; a < 7; ++a)
		{
			Poly d = Xb.partial(a);
			if (d.is_zero())
				continue;
			for (int l = 0; l < 7; ++l)
			{
				Rat c = phi_comp(g2.phi, a, b, l);
				if (c != 0)
					r.add_term(IndexSet{{l}}, d * (c / 3));
			}
		}
	}
	return r;
}

Form pi7(Form const &a, G2Structure const &g2)
{
	require_same_chart(a.chart(), g2.chart);
	if (a.degree() != 2)
		throw std::invalid_argument("pi7: degree-2 forms only");
	return (a - hodge_star(wedge(g2.phi, a), g2)) * Rat(1, 3);
}

Form pi14(Form const &a, G2Structure const &g2)
{
	require_same_chart(a.chart(), g2.chart);
	if (a.degree() != 2)
		throw std::invalid_argument("pi14: degree-2 forms only");
	return (a * Rat(2) + hodge_star(wedge(g2.phi, a), g2)) * Rat(1, 3);
}

G2HamReport g2_hamiltonian_check(Form const &alpha, G2Structure const &g2)
{
	require_same_chart(alpha.chart(), g2.chart);
	if (alpha.degree() != 1)
		throw std::invalid_argument("g2_hamiltonian_check: 1-forms only");
	G2HamReport rep;
	rep.field = curl(sharp(alpha, g2), g2);
	rep.is_hamiltonian = pi14(ext_d(alpha), g2).is_zero();
	if (rep.is_hamiltonian)
		rep.matched_sign =
		    hamiltonian_verify(alpha, rep.field, g2.phi).matched_sign;
	return rep;
}

Form g2_bracket_is_cross_check(HamPair const &a, HamPair const &b,
                               G2Structure const &g2)
{
	for (auto const *p : {&a, &b})
		if (p->form.degree() != 1 ||
		    !(ext_d(p->form) + contract(p->field, g2.phi)).is_zero())
			throw std::invalid_argument(
			    "g2_bracket_is_cross_check: non-Hamiltonian input");
	MVF ca = curl(sharp(a.form, g2), g2);
	MVF cb = curl(sharp(b.form, g2), g2);
	return poisson(a, b, g2.phi) - flat(cross(ca, cb, g2), g2);
}

} // namespace msg
