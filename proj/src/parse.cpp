#include "cdvf/parse.hpp"

#include <cctype>
#include <sstream>

#include "cdvf/errors.hpp"
#include "cdvf/rebase.hpp"

namespace cdvf {
namespace {

// ---------------------------------------------------------------------------
// Tokens

enum class Tok {
    Int,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Equals,
    Comma,
    Semicolon,
    Colon,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

struct Lexer {
    const std::string src;
    size_t i = 0;

    explicit Lexer(std::string s) : src(std::move(s)) {}

    [[noreturn]] void fail_at(size_t pos, const std::string& expected) const {
        long line = 1, col = 1;
        for (size_t j = 0; j < pos && j < src.size(); ++j) {
            if (src[j] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::ostringstream os;
        os << "line " << line << ", col " << col << ": expected " << expected;
        fail(errc::syntax_error, os.str());
    }

    Token next() {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
        if (i >= src.size()) return {Tok::End, "", src.size()};
        size_t start = i;
        char c = src[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            return {Tok::Int, src.substr(start, i - start), start};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isalnum(static_cast<unsigned char>(src[i]))) ++i;
            return {Tok::Ident, src.substr(start, i - start), start};
        }
        ++i;
        switch (c) {
            case '+': return {Tok::Plus, "+", start};
            case '-': return {Tok::Minus, "-", start};
            case '*': return {Tok::Star, "*", start};
            case '/': return {Tok::Slash, "/", start};
            case '^': return {Tok::Caret, "^", start};
            case '(': return {Tok::LParen, "(", start};
            case ')': return {Tok::RParen, ")", start};
            case '=': return {Tok::Equals, "=", start};
            case ',': return {Tok::Comma, ",", start};
            case ';': return {Tok::Semicolon, ";", start};
            case ':': return {Tok::Colon, ":", start};
            default: break;
        }
        fail_at(start, "a valid token");
    }
};

struct Parser {
    Lexer lex;
    Token cur;

    explicit Parser(const std::string& s) : lex(s), cur(lex.next()) {}

    void advance() { cur = lex.next(); }
    bool at(Tok k) const { return cur.kind == k; }

    void expect(Tok k, const std::string& what) {
        if (!at(k)) lex.fail_at(cur.pos, what);
        advance();
    }

    [[noreturn]] void fail_here(const std::string& expected) const {
        lex.fail_at(cur.pos, expected);
    }

    long take_int(const std::string& what) {
        if (!at(Tok::Int)) fail_here(what);
        if (cur.text.size() > 18) fail_here("a smaller integer literal");
        long v = std::stol(cur.text);
        advance();
        return v;
    }
};

// ---------------------------------------------------------------------------
// Defining monics for Fq residue fields: a tiny expression parser over Z[w],
// kept separate from the field-valued evaluator because the field does not
// exist until this polynomial is known.

using ZPoly = std::vector<long>;  // ascending, may carry trailing zeros

void z_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly z_add(const ZPoly& a, const ZPoly& b, long sign) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        long x = i < a.size() ? a[i] : 0;
        long y = i < b.size() ? b[i] : 0;
        r[i] = x + sign * y;
    }
    z_trim(r);
    return r;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    z_trim(r);
    return r;
}

ZPoly z_expression(Parser& ps);

ZPoly z_atom(Parser& ps) {
    if (ps.at(Tok::Int)) {
        long v = ps.take_int("an integer");
        return v == 0 ? ZPoly{} : ZPoly{v};
    }
    if (ps.at(Tok::Ident) && ps.cur.text == "w") {
        ps.advance();
        return ZPoly{0, 1};
    }
    if (ps.at(Tok::LParen)) {
        ps.advance();
        ZPoly e = z_expression(ps);
        ps.expect(Tok::RParen, "')'");
        return e;
    }
    ps.fail_here("an integer, 'w' or '('");
}

ZPoly z_factor(Parser& ps) {
    ZPoly a = z_atom(ps);
    if (!ps.at(Tok::Caret)) return a;
    ps.advance();
    long n = ps.take_int("an exponent");
    if (n > 64) ps.fail_here("a smaller exponent");
    ZPoly r{1};
    for (long k = 0; k < n; ++k) r = z_mul(r, a);
    return r;
}

ZPoly z_term(Parser& ps) {
    ZPoly a = z_factor(ps);
    while (ps.at(Tok::Star)) {
        ps.advance();
        a = z_mul(a, z_factor(ps));
    }
    return a;
}

ZPoly z_expression(Parser& ps) {
    ZPoly a;
    if (ps.at(Tok::Minus)) {
        ps.advance();
        a = z_add({}, z_term(ps), -1);
    } else {
        a = z_term(ps);
    }
    while (ps.at(Tok::Plus) || ps.at(Tok::Minus)) {
        long sign = ps.at(Tok::Plus) ? 1 : -1;
        ps.advance();
        a = z_add(a, z_term(ps), sign);
    }
    return a;
}

// ---------------------------------------------------------------------------
// Field-valued expressions: polynomials in one variable over exact Laurent
// polynomials. The empty coefficient vector is the zero polynomial.

struct PolyVal {
    std::vector<TSeries> c;  // ascending in the variable
};

void pv_trim(PolyVal& a) {
    while (!a.c.empty() && a.c.back().is_exact_zero()) a.c.pop_back();
}

PolyVal pv_const(TSeries s) {
    PolyVal r;
    r.c.push_back(std::move(s));
    pv_trim(r);
    return r;
}

PolyVal pv_add(const RFPtr& f, const PolyVal& a, const PolyVal& b, long sign) {
    PolyVal r;
    size_t n = std::max(a.c.size(), b.c.size());
    for (size_t i = 0; i < n; ++i) {
        TSeries x = i < a.c.size() ? a.c[i] : TSeries::zero(f);
        TSeries y = i < b.c.size() ? b.c[i] : TSeries::zero(f);
        r.c.push_back(sign > 0 ? x + y : x - y);
    }
    pv_trim(r);
    return r;
}

PolyVal pv_mul(const RFPtr& f, const PolyVal& a, const PolyVal& b) {
    if (a.c.empty() || b.c.empty()) return {};
    PolyVal r;
    r.c.assign(a.c.size() + b.c.size() - 1, TSeries::zero(f));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    pv_trim(r);
    return r;
}

bool pv_is_invertible_monomial(const PolyVal& a) {
    return a.c.size() == 1 && a.c[0].is_monomial();
}

PolyVal pv_invert(const Parser& ps, size_t oppos, const PolyVal& a) {
    if (a.c.empty()) fail(errc::division_by_zero, "division by zero in input expression");
    if (!pv_is_invertible_monomial(a))
        ps.lex.fail_at(oppos, "an invertible divisor (a residue scalar times a power of t)");
    return pv_const(a.c[0].inv(PREC_INF));
}

PolyVal pv_pow(const Parser& ps, size_t oppos, const RFPtr& f, PolyVal a, long n) {
    if (n < 0) {
        a = pv_invert(ps, oppos, a);
        n = -n;
    }
    if (n > 5000) ps.lex.fail_at(oppos, "a smaller exponent");
    if (pv_is_invertible_monomial(a)) {
        ResidueElt s = a.c[0].leading().pow(n);
        return pv_const(TSeries::monomial(f, s, a.c[0].offset() * n));
    }
    PolyVal r = pv_const(TSeries::from_int(f, 1));
    while (n > 0) {
        if (n & 1) r = pv_mul(f, r, a);
        a = pv_mul(f, a, a);
        n >>= 1;
    }
    return r;
}

struct ExprParser {
    Parser& ps;
    const CDVF& base;
    const std::string* var;  // null when the polynomial variable is not allowed

    PolyVal expression() {
        PolyVal a;
        if (ps.at(Tok::Minus)) {
            ps.advance();
            a = pv_add(base.k, {}, term(), -1);
        } else {
            a = term();
        }
        while (ps.at(Tok::Plus) || ps.at(Tok::Minus)) {
            long sign = ps.at(Tok::Plus) ? 1 : -1;
            ps.advance();
            a = pv_add(base.k, a, term(), sign);
        }
        return a;
    }

    PolyVal term() {
        PolyVal a = factor();
        while (ps.at(Tok::Star) || ps.at(Tok::Slash)) {
            bool div = ps.at(Tok::Slash);
            size_t oppos = ps.cur.pos;
            ps.advance();
            PolyVal b = factor();
            if (div) b = pv_invert(ps, oppos, b);
            a = pv_mul(base.k, a, b);
        }
        return a;
    }

    PolyVal factor() {
        PolyVal a = atom();
        if (!ps.at(Tok::Caret)) return a;
        size_t oppos = ps.cur.pos;
        ps.advance();
        long n = exponent();
        return pv_pow(ps, oppos, base.k, std::move(a), n);
    }

    long exponent() {
        long sign = 1;
        if (ps.at(Tok::LParen)) {
            ps.advance();
            if (ps.at(Tok::Minus)) {
                sign = -1;
                ps.advance();
            }
            long v = ps.take_int("an exponent");
            ps.expect(Tok::RParen, "')'");
            return sign * v;
        }
        if (ps.at(Tok::Minus)) {
            sign = -1;
            ps.advance();
        }
        return sign * ps.take_int("an exponent");
    }

    PolyVal atom() {
        const RFPtr& f = base.k;
        if (ps.at(Tok::Int)) {
            long v = ps.take_int("an integer");
            return pv_const(TSeries::from_int(f, v));
        }
        if (ps.at(Tok::LParen)) {
            ps.advance();
            PolyVal e = expression();
            ps.expect(Tok::RParen, "')'");
            return e;
        }
        if (ps.at(Tok::Ident)) {
            const std::string& id = ps.cur.text;
            if (var && id == *var) {
                ps.advance();
                PolyVal x;
                x.c = {TSeries::zero(f), TSeries::from_int(f, 1)};
                return x;
            }
            if (id == base.uni || id == "t") {
                ps.advance();
                return pv_const(TSeries::monomial(f, ResidueElt::one(f), 1));
            }
            if (f->has_u() && (id == base.usym || id == "u")) {
                ps.advance();
                return pv_const(TSeries::monomial(f, ResidueElt::gen_u(f), 0));
            }
            if (f->has_w() && id == "w") {
                ps.advance();
                return pv_const(TSeries::monomial(f, ResidueElt::gen_w(f), 0));
            }
            ps.fail_here("a symbol among {" + symbol_list() + "}");
        }
        ps.fail_here("a value (integer, symbol or parenthesized expression)");
    }

    std::string symbol_list() const {
        std::string s;
        if (var) s += *var + ", ";
        s += base.uni;
        if (base.k->has_u()) s += ", " + base.usym;
        if (base.k->has_w()) s += ", w";
        return s;
    }
};

// ---------------------------------------------------------------------------
// Base descriptors

void expect_ident(Parser& ps, const std::string& word) {
    if (!ps.at(Tok::Ident) || ps.cur.text != word) ps.fail_here("'" + word + "'");
    ps.advance();
}

CDVF parse_base_inner(Parser& ps) {
    expect_ident(ps, "laurent");
    ps.expect(Tok::LParen, "'('");
    expect_ident(ps, "p");
    ps.expect(Tok::Equals, "'='");
    long p = ps.take_int("a prime");
    RFPtr field;
    if (ps.at(Tok::Comma)) {
        ps.advance();
        expect_ident(ps, "k");
        ps.expect(Tok::Equals, "'='");
        if (!ps.at(Tok::Ident) || (ps.cur.text != "Fp" && ps.cur.text != "Fq"))
            ps.fail_here("'Fp', 'Fp(u)', 'Fq:<monic>' or 'Fq(u):<monic>'");
        bool fq = ps.cur.text == "Fq";
        ps.advance();
        bool with_u = false;
        if (ps.at(Tok::LParen)) {
            ps.advance();
            expect_ident(ps, "u");
            ps.expect(Tok::RParen, "')'");
            with_u = true;
        }
        if (fq) {
            ps.expect(Tok::Colon, "':' before the defining monic");
            ZPoly wmod = z_expression(ps);
            field = with_u ? ResidueField::make_fqu(p, wmod) : ResidueField::make_fq(p, wmod);
        } else {
            field = with_u ? ResidueField::make_fpu(p) : ResidueField::make_fp(p);
        }
    } else {
        field = ResidueField::make_fp(p);
    }
    ps.expect(Tok::RParen, "')'");
    return CDVF{field};
}

KPoly finish_poly(const CDVF& base, ExprParser& ep) {
    PolyVal v = ep.expression();
    if (v.c.empty()) ep.ps.fail_here("a nonzero polynomial");
    return KPoly::from_coeffs(base.k, v.c);
}

// ---------------------------------------------------------------------------
// Printers

// Residue strings come out of the core with the generator spelled 'u'; a
// rebased presentation renames it (u1, u2, ...).
std::string subst_usym(const std::string& s, const std::string& usym) {
    if (usym == "u") return s;
    std::string r;
    r.reserve(s.size() + 8);
    for (char c : s) {
        if (c == 'u')
            r += usym;
        else
            r += c;
    }
    return r;
}

bool has_toplevel_plus(const std::string& s) {
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '+' && depth == 0) return true;
    }
    return false;
}

// One monomial c*t^e rendered for a sum context.
std::string term_str(const CDVF& base, const ResidueElt& c, long e) {
    std::string cs = subst_usym(c.to_string(), base.usym);
    bool wrap = has_toplevel_plus(cs);
    std::ostringstream os;
    if (e == 0) {
        os << (wrap ? "(" + cs + ")" : cs);
        return os.str();
    }
    if (cs != "1") os << (wrap ? "(" + cs + ")" : cs) << "*";
    os << base.uni;
    if (e != 1) os << "^" << e;
    return os.str();
}

std::string series_sum(const CDVF& base, const TSeries& a) {
    std::ostringstream os;
    bool first = true;
    const auto& cs = a.coeffs();
    for (size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].is_zero()) continue;
        if (!first) os << "+";
        first = false;
        os << term_str(base, cs[i], a.offset() + static_cast<long>(i));
    }
    if (!a.is_exact()) {
        if (!first) os << "+";
        os << "O(" << base.uni << "^" << a.prec() << ")";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

CDVF parse_base(const std::string& text) {
    Parser ps(text);
    CDVF b = parse_base_inner(ps);
    if (!ps.at(Tok::End)) ps.fail_here("end of input");
    return b;
}

KPoly parse_poly(const CDVF& base, const std::string& text, const std::string& var) {
    Parser ps(text);
    ExprParser ep{ps, base, &var};
    KPoly P = finish_poly(base, ep);
    if (!ps.at(Tok::End)) ps.fail_here("end of input");
    return P;
}

TSeries parse_series(const CDVF& base, const std::string& text) {
    Parser ps(text);
    ExprParser ep{ps, base, nullptr};
    PolyVal v = ep.expression();
    if (!ps.at(Tok::End)) ps.fail_here("end of input");
    return v.c.empty() ? TSeries::zero(base.k) : v.c[0];
}

std::pair<CDVF, std::vector<KPoly>> parse_input(const std::string& text) {
    Parser ps(text);
    CDVF b = parse_base_inner(ps);
    std::vector<KPoly> polys;
    CDVF cur = b;
    while (ps.at(Tok::Semicolon)) {
        ps.advance();
        std::string var = "X";
        ExprParser ep{ps, cur, &var};
        KPoly P = finish_poly(cur, ep);
        polys.push_back(P);
        // Advance the presentation so a following step parses over the right
        // field. The rebase precision is immaterial here; only the field and
        // the symbol names survive into parsing.
        if (ps.at(Tok::Semicolon)) {
            StepDesc st = validate_step(cur, P);
            cur = rebase_step(cur, st, 64, static_cast<long>(polys.size()) - 1).to;
        }
    }
    if (!ps.at(Tok::End)) ps.fail_here("';' or end of input");
    return {b, polys};
}

std::string print_base(const CDVF& base) {
    const RFPtr& f = base.k;
    std::ostringstream os;
    os << "laurent(p=" << f->p;
    if (f->has_w()) {
        os << ",k=Fq" << (f->has_u() ? "(u)" : "") << ":";
        bool first = true;
        for (int i = f->wdeg(); i >= 0; --i) {
            long c = f->wmod[static_cast<size_t>(i)];
            if (c == 0) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0) {
                os << c;
                continue;
            }
            if (c != 1) os << c << "*";
            os << "w";
            if (i > 1) os << "^" << i;
        }
        if (first) os << "0";
    } else if (f->has_u()) {
        os << ",k=Fp(u)";
    }
    os << ")";
    return os.str();
}

std::string print_poly(const CDVF& base, const KPoly& P, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (long j = P.degree(); j >= 0; --j) {
        TSeries a = P.coeff(j);
        if (a.is_exact_zero()) continue;
        if (!first) os << "+";
        first = false;
        if (j == 0) {
            os << series_sum(base, a);
            continue;
        }
        bool trivial = a.is_monomial() && a.offset() == 0 && a.leading().is_one();
        if (!trivial) {
            std::string cs = series_sum(base, a);
            os << (has_toplevel_plus(cs) ? "(" + cs + ")" : cs) << "*";
        }
        os << var;
        if (j > 1) os << "^" << j;
    }
    if (first) os << "0";
    return os.str();
}

std::string print_series(const CDVF& base, const TSeries& a) { return series_sum(base, a); }

std::string print_residue(const CDVF& base, const ResidueElt& r) {
    return subst_usym(r.to_string(), base.usym);
}

}  // namespace cdvf
