#include "msg/parse.hpp"

#include <cctype>

namespace msg
{

namespace
{

enum class Tok
{
	Int,
	Ident,
	Plus,
	Minus,
	Star,
	Slash,
	Caret,
	LParen,
	RParen,
	End
};

struct Token
{
	Tok kind;
	std::string text;
	int line, col;
};

struct Lexer
{
	std::string src;
	size_t pos = 0;
	int line = 1, col = 1;

	void advance()
	{
		if (src[pos] == '\n')
		{
			++line;
			col = 1;
		}
		else
			++col;
		++pos;
	}

	Token next()
	{
		while (pos < src.size() && std::isspace((unsigned char)src[pos]))
			advance();
		if (pos >= src.size())
			return {Tok::End, "", line, col};
		int l = line, c = col;
		char ch = src[pos];
		if (std::isdigit((unsigned char)ch))
		{
			std::string t;
			while (pos < src.size() && std::isdigit((unsigned char)src[pos]))
			{
				t += src[pos];
				advance();
			}
			return {Tok::Int, t, l, c};
		}
		if (std::isalpha((unsigned char)ch) || ch == '_')
		{
			std::string t;
			while (pos < src.size() &&
			       (std::isalnum((unsigned char)src[pos]) || src[pos] == '_'))
			{
				t += src[pos];
				advance();
			}
			return {Tok::Ident, t, l, c};
		}
		advance();
		switch (ch)
		{
		case '+':
			return {Tok::Plus, "+", l, c};
		case '-':
			return {Tok::Minus, "-", l, c};
		case '*':
			return {Tok::Star, "*", l, c};
		case '/':
			return {Tok::Slash, "/", l, c};
		case '^':
			return {Tok::Caret, "^", l, c};
		case '(':
			return {Tok::LParen, "(", l, c};
		case ')':
			return {Tok::RParen, ")", l, c};
		default:
			throw ParseError(std::string("unexpected character '") + ch + "'",
			                 l, c);
		}
	}
};

struct Parser
{
	ChartPtr chart;
	Lexer lex;
	Token cur;

	explicit Parser(std::string const &src, ChartPtr const &c) : chart(c)
	{
		lex.src = src;
		cur = lex.next();
	}

	void bump() { cur = lex.next(); }

	void expect(Tok k, char const *what)
	{
		if (cur.kind != k)
			throw ParseError(std::string("expected ") + what, cur.line,
			                 cur.col);
		bump();
	}

	[[noreturn]] void fail(std::string const &msg)
	{
		throw ParseError(msg, cur.line, cur.col);
	}

	static bool is_zero(Value const &v)
	{
		if (auto p = std::get_if<Poly>(&v))
			return p->is_zero();
		if (auto f = std::get_if<Form>(&v))
			return f->is_zero();
		return std::get<MVF>(v).is_zero();
	}

	Value negate(Value const &v)
	{
		if (auto p = std::get_if<Poly>(&v))
			return -*p;
		if (auto f = std::get_if<Form>(&v))
			return -*f;
		return -std::get<MVF>(v);
	}

	Value add(Value const &a, Value const &b)
	{
		if (is_zero(a))
			return b;
		if (is_zero(b))
			return a;
		if (a.index() != b.index())
			fail("cannot add values of different kinds");
		if (auto p = std::get_if<Poly>(&a))
			return *p + std::get<Poly>(b);
		if (auto f = std::get_if<Form>(&a))
		{
			if (f->degree() != std::get<Form>(b).degree())
				fail("cannot add forms of different degree");
			return *f + std::get<Form>(b);
		}
		if (std::get<MVF>(a).degree() != std::get<MVF>(b).degree())
			fail("cannot add fields of different degree");
		return std::get<MVF>(a) + std::get<MVF>(b);
	}

	Value mul(Value const &a, Value const &b)
	{
		if (auto p = std::get_if<Poly>(&a))
		{
			if (auto q = std::get_if<Poly>(&b))
				return *p * *q;
			if (auto f = std::get_if<Form>(&b))
				return *f * *p;
			return std::get<MVF>(b) * *p;
		}
		if (auto q = std::get_if<Poly>(&b))
		{
			if (auto f = std::get_if<Form>(&a))
				return *f * *q;
			return std::get<MVF>(a) * *q;
		}
		if (a.index() != b.index())
			fail("cannot mix d and d/d bases in one product");
		if (auto f = std::get_if<Form>(&a))
			return wedge(*f, std::get<Form>(b));
		return wedge(std::get<MVF>(a), std::get<MVF>(b));
	}

	int coord_of(std::string const &name, Token const &tok)
	{
		int i = chart->index_of(name);
		if (i < 0)
			throw ParseError("unknown coordinate '" + name + "'", tok.line,
			                 tok.col);
		return i;
	}

	// basis := 'd' ident | 'd/d' ident, already past the leading token checks
	struct BasisAtom
	{
		bool is_form;
		int coord;
	};

	std::optional<BasisAtom> try_basis()
	{
		if (cur.kind != Tok::Ident)
			return std::nullopt;
		Token t = cur;
		if (t.text == "d")
		{
			// vector basis 'd/d<name>'
			bump();
			expect(Tok::Slash, "'/' in d/d basis");
			if (cur.kind != Tok::Ident || cur.text.size() < 2 ||
			    cur.text[0] != 'd')
				fail("expected d<coordinate> after 'd/'");
			int i = coord_of(cur.text.substr(1), cur);
			bump();
			return BasisAtom{false, i};
		}
		if (t.text.size() >= 2 && t.text[0] == 'd' &&
		    chart->index_of(t.text) < 0 &&
		    chart->index_of(t.text.substr(1)) >= 0)
		{
			int i = coord_of(t.text.substr(1), t);
			bump();
			return BasisAtom{true, i};
		}
		return std::nullopt;
	}

	Value wedgeatom(BasisAtom first)
	{
		std::vector<int> coords{first.coord};
		while (cur.kind == Tok::Caret)
		{
			// a caret after a basis atom must continue the wedge
			Token save = cur;
			bump();
			auto b = try_basis();
			if (!b)
				throw ParseError("expected basis element after '^' in wedge",
				                 save.line, save.col);
			if (b->is_form != first.is_form)
				fail("cannot mix d and d/d bases in one wedge");
			coords.push_back(b->coord);
		}
		// signed sort; repeated index collapses to zero
		int swaps = 0;
		bool dup = false;
		for (size_t i = 0; i < coords.size(); ++i)
			for (size_t j = i + 1; j < coords.size(); ++j)
			{
				if (coords[i] == coords[j])
					dup = true;
				else if (coords[i] > coords[j])
					++swaps;
			}
		int deg = std::min((int)coords.size(), chart->dim());
		if (!dup)
			std::sort(coords.begin(), coords.end());
		if (first.is_form)
		{
			Form r(chart, deg);
			if (!dup)
				r.add_term(IndexSet{coords},
				           Poly::constant(chart, sign_pow(swaps)));
			return r;
		}
		MVF r(chart, deg);
		if (!dup)
			r.add_term(IndexSet{coords}, Poly::constant(chart, sign_pow(swaps)));
		return r;
	}

	Value factor()
	{
		if (cur.kind == Tok::Int)
		{
			Rat num(cur.text);
			bump();
			if (cur.kind == Tok::Slash)
			{
				bump();
				if (cur.kind != Tok::Int)
					fail("expected denominator after '/'");
				Rat den(cur.text);
				bump();
				if (den == 0)
					fail("zero denominator");
				num /= den;
			}
			return Poly::constant(chart, num);
		}
		if (cur.kind == Tok::LParen)
		{
			bump();
			Value v = expr();
			expect(Tok::RParen, "')'");
			return v;
		}
		if (cur.kind == Tok::Ident)
		{
			if (auto b = try_basis())
				return wedgeatom(*b);
			int i = chart->index_of(cur.text);
			if (i < 0)
				fail("unknown identifier '" + cur.text + "'");
			bump();
			int power = 1;
			if (cur.kind == Tok::Caret)
			{
				bump();
				if (cur.kind != Tok::Int)
					fail("expected integer exponent");
				power = std::stoi(cur.text);
				bump();
			}
			return Poly::var(chart, i, power);
		}
		fail("expected factor");
	}

	Value term()
	{
		Value v = factor();
		while (cur.kind == Tok::Star)
		{
			bump();
			v = mul(v, factor());
		}
		return v;
	}

	Value expr()
	{
		bool neg = false;
		if (cur.kind == Tok::Plus)
			bump();
		else if (cur.kind == Tok::Minus)
		{
			neg = true;
			bump();
		}
		Value v = term();
		if (neg)
			v = negate(v);
		while (cur.kind == Tok::Plus || cur.kind == Tok::Minus)
		{
			bool minus = cur.kind == Tok::Minus;
			bump();
			Value w = term();
			v = add(v, minus ? negate(w) : w);
		}
		return v;
	}

	Value parse()
	{
		Value v = expr();
		if (cur.kind != Tok::End)
			fail("trailing input");
		return v;
	}
};

} // namespace

Value parse_expr(std::string const &src, ChartPtr const &chart)
{
	return Parser(src, chart).parse();
}

Poly parse_poly(std::string const &src, ChartPtr const &chart)
{
	Value v = parse_expr(src, chart);
	if (auto p = std::get_if<Poly>(&v))
		return *p;
	throw ParseError("expected a polynomial expression", 1, 1);
}

Form parse_form(std::string const &src, ChartPtr const &chart)
{
	Value v = parse_expr(src, chart);
	if (auto p = std::get_if<Poly>(&v))
		return Form::scalar(chart, *p);
	if (auto f = std::get_if<Form>(&v))
		return *f;
	throw ParseError("expected a form expression", 1, 1);
}

MVF parse_mvf(std::string const &src, ChartPtr const &chart)
{
	Value v = parse_expr(src, chart);
	if (auto p = std::get_if<Poly>(&v))
		return MVF::scalar(chart, *p);
	if (auto x = std::get_if<MVF>(&v))
		return *x;
	throw ParseError("expected a multivector expression", 1, 1);
}

} // namespace msg
