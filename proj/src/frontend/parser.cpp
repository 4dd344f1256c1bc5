#include "wcalc/frontend.hpp"

#include <cctype>

namespace wcalc {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                            message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Token {
    enum class Kind { Number, Ident, Op, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Token t;
            t.line = line_;
            t.column = col_;
            if (pos_ >= src_.size()) {
                out.push_back(t);
                return out;
            }
            const char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                t.kind = Token::Kind::Number;
                t.text = digits();
                // "a/b" is one literal only when a digit follows the slash.
                if (peek() == '/' && pos_ + 1 < src_.size() &&
                    std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
                    advance();
                    t.text += '/' + digits();
                }
                if (peek() == 'i' && !ident_char(peek(1))) {
                    advance();
                    t.text += 'i';
                }
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                t.kind = Token::Kind::Ident;
                while (pos_ < src_.size() && ident_char(src_[pos_])) t.text += advance();
            } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
                t.kind = Token::Kind::Op;
                t.text = std::string(1, advance());
            } else {
                throw ParseError(t.line, t.column, std::string("unexpected character '") + c + "'");
            }
            out.push_back(std::move(t));
        }
    }

private:
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    std::string digits() {
        std::string s;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) s += advance();
        return s;
    }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

using Node = std::unique_ptr<ExprAst>;

Node make(ExprAst::Kind k, const Token& at) {
    auto n = std::make_unique<ExprAst>();
    n->kind = k;
    n->line = at.line;
    n->column = at.column;
    return n;
}

GaussQ literal_value(const Token& t) {
    std::string s = t.text;
    const bool imag = !s.empty() && s.back() == 'i';
    if (imag) s.pop_back();
    Rational r;
    try {
        r = parse_rational(s);
    } catch (const std::exception& e) {
        throw ParseError(t.line, t.column, "bad number '" + t.text + "'");
    }
    return imag ? GaussQ(Rational(0), r) : GaussQ(r);
}

// Variable names: w, wb, u, zK, zbK (K >= 1, no leading zero).
bool variable_monomial(const std::string& name, Monomial& m) {
    if (name == "w") {
        m.w = 1;
        return true;
    }
    if (name == "wb") {
        m.wb = 1;
        return true;
    }
    if (name == "u") {
        m.u = 1;
        return true;
    }
    std::size_t off = 0;
    bool bar = false;
    if (name.rfind("zb", 0) == 0) {
        off = 2;
        bar = true;
    } else if (name.rfind("z", 0) == 0) {
        off = 1;
    } else {
        return false;
    }
    const std::string idx = name.substr(off);
    if (idx.empty() || idx.size() > 6 || idx[0] == '0') return false;
    for (char c : idx) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    const int k = std::stoi(idx);
    if (bar) {
        m.set_zb(k, 1);
    } else {
        m.set_z(k, 1);
    }
    return true;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Node expression() {
        Node lhs = term();
        while (is_op("+") || is_op("-")) {
            const Token op = next();
            Node rhs = term();
            if (op.text == "-") {
                Node neg = make(ExprAst::Kind::Negate, op);
                neg->args.push_back(std::move(rhs));
                rhs = std::move(neg);
            }
            Node sum = make(ExprAst::Kind::Sum, op);
            sum->args.push_back(std::move(lhs));
            sum->args.push_back(std::move(rhs));
            lhs = std::move(sum);
        }
        return lhs;
    }

    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    bool at_end() const { return peek().kind == Token::Kind::End; }
    bool is_op(const char* s, std::size_t ahead = 0) const {
        return peek(ahead).kind == Token::Kind::Op && peek(ahead).text == s;
    }
    bool is_ident(const char* s, std::size_t ahead = 0) const {
        return peek(ahead).kind == Token::Kind::Ident && peek(ahead).text == s;
    }
    Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

    void expect_op(const char* s) {
        if (!is_op(s)) fail(peek(), std::string("expected '") + s + "'");
    }

    [[noreturn]] static void fail(const Token& t, const std::string& msg) {
        const std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.line, t.column, msg + ", found " + found);
    }

private:
    Node term() {
        Node lhs = unary();
        while (is_op("*") || is_op("/")) {
            const Token op = next();
            Node rhs = unary();
            Node prod = make(op.text == "*" ? ExprAst::Kind::Product : ExprAst::Kind::Quotient, op);
            prod->args.push_back(std::move(lhs));
            prod->args.push_back(std::move(rhs));
            lhs = std::move(prod);
        }
        return lhs;
    }

    Node unary() {
        if (is_op("-")) {
            const Token op = next();
            Node n = make(ExprAst::Kind::Negate, op);
            n->args.push_back(unary());
            return n;
        }
        if (is_op("+")) {
            next();
            return unary();
        }
        return power();
    }

    Node power() {
        Node base = primary();
        if (!is_op("^")) return base;
        const Token op = next();
        const Token e = peek();
        if (e.kind != Token::Kind::Number) {
            if (is_op("-")) throw ParseError(e.line, e.column, "negative exponents are not allowed");
            fail(e, "exponent must be a nonnegative integer literal");
        }
        if (e.text.find('/') != std::string::npos || e.text.back() == 'i') {
            throw ParseError(e.line, e.column, "exponent must be a nonnegative integer literal, got '" + e.text + "'");
        }
        next();
        if (e.text.size() > 6) throw ParseError(e.line, e.column, "exponent too large");
        Node n = make(ExprAst::Kind::Power, op);
        n->exponent = static_cast<unsigned>(std::stoul(e.text));
        n->args.push_back(std::move(base));
        if (is_op("^")) fail(peek(), "chained exponents need parentheses");
        return n;
    }

    Node primary() {
        const Token t = peek();
        if (t.kind == Token::Kind::Number) {
            next();
            Node n = make(ExprAst::Kind::Constant, t);
            n->value = literal_value(t);
            return n;
        }
        if (is_op("(")) {
            next();
            Node inner = expression();
            expect_op(")");
            next();
            return inner;
        }
        if (t.kind == Token::Kind::Ident) {
            next();
            if (t.text == "Re" || t.text == "Im" || t.text == "conj") {
                expect_op("(");
                next();
                Node n = make(t.text == "Re"   ? ExprAst::Kind::Re
                              : t.text == "Im" ? ExprAst::Kind::Im
                                               : ExprAst::Kind::Conj,
                              t);
                n->args.push_back(expression());
                expect_op(")");
                next();
                return n;
            }
            if (t.text == "i") {
                Node n = make(ExprAst::Kind::Constant, t);
                n->value = GaussQ::i();
                return n;
            }
            Monomial m;
            if (!variable_monomial(t.text, m)) throw ParseError(t.line, t.column, "unknown variable '" + t.text + "'");
            Node n = make(ExprAst::Kind::Variable, t);
            n->variable = m;
            return n;
        }
        fail(t, "expected a number, variable or '('");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<ExprAst> parse_expr(std::string_view text) {
    Parser p(Lexer(text).run());
    if (p.at_end()) Parser::fail(p.peek(), "empty expression");
    Node n = p.expression();
    if (!p.at_end()) Parser::fail(p.peek(), "unexpected token");
    return n;
}

MixedPoly lower(const ExprAst& ast) {
    auto arg = [&](std::size_t k) { return lower(*ast.args.at(k)); };
    switch (ast.kind) {
        case ExprAst::Kind::Constant: return MixedPoly(ast.value);
        case ExprAst::Kind::Variable: return MixedPoly::term(ast.variable);
        case ExprAst::Kind::Negate: return -arg(0);
        case ExprAst::Kind::Sum: return arg(0) + arg(1);
        case ExprAst::Kind::Product: return arg(0) * arg(1);
        case ExprAst::Kind::Quotient: {
            const MixedPoly d = arg(1);
            const GaussQ c = d.coeff(Monomial{});
            if (d.terms().size() != 1 || c.is_zero()) {
                throw ParseError(ast.line, ast.column, "division only by a nonzero constant");
            }
            return arg(0) * (GaussQ(1) / c);
        }
        case ExprAst::Kind::Power: return pow(arg(0), ast.exponent);
        case ExprAst::Kind::Re: return real_part(arg(0));
        case ExprAst::Kind::Im: return imag_part(arg(0));
        case ExprAst::Kind::Conj: return arg(0).conj();
    }
    throw std::logic_error("lower: unknown node");
}

MixedPoly parse_poly(std::string_view text) { return lower(*parse_expr(text)); }

HoloVectorField parse_field(std::string_view text, int n_min) {
    Parser p(Lexer(text).run());
    std::vector<MixedPoly> q(static_cast<std::size_t>(std::max(n_min, 0) + 1));
    if (p.at_end()) Parser::fail(p.peek(), "empty field");
    bool first = true;
    while (!p.at_end()) {
        bool negative = false;
        if (!first || p.is_op("-") || p.is_op("+")) {
            if (!p.is_op("+") && !p.is_op("-")) Parser::fail(p.peek(), "expected '+' or '-' between field terms");
            negative = p.next().text == "-";
        }
        first = false;
        const Token start = p.peek();
        MixedPoly coeff(1);
        if (p.is_op("(")) {
            p.next();
            auto ast = p.expression();
            p.expect_op(")");
            p.next();
            coeff = lower(*ast);
        }
        if (!p.is_ident("d") || !p.is_op("/", 1)) Parser::fail(p.peek(), "expected 'd/dw' or 'd/dzK'");
        p.next();
        p.next();
        const Token var = p.next();
        int k = -1;
        Monomial m;
        if (var.kind == Token::Kind::Ident && var.text.size() > 1 && var.text[0] == 'd' &&
            variable_monomial(var.text.substr(1), m) && m.is_holomorphic() && m.u == 0) {
            k = m.w == 1 ? 0 : m.num_z();
        }
        if (k < 0) throw ParseError(var.line, var.column, "expected d/dw or d/dzK, got d/" + var.text);
        if (!coeff.is_holomorphic()) {
            throw ParseError(start.line, start.column, "field coefficient must be holomorphic (no wb, zbK or u)");
        }
        if (static_cast<std::size_t>(k) >= q.size()) q.resize(static_cast<std::size_t>(k) + 1);
        if (negative) coeff = -coeff;
        q[static_cast<std::size_t>(k)] += coeff;
    }
    int n = static_cast<int>(q.size()) - 1;
    for (const auto& c : q) n = std::max(n, c.num_z());
    q.resize(static_cast<std::size_t>(n) + 1);
    return HoloVectorField(std::move(q));
}

WeightSystem parse_weights(std::string_view text) {
    std::vector<int> m;
    std::size_t pos = 0;
    std::string s(text);
    while (true) {
        const std::size_t comma = s.find(',', pos);
        const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("weights: '" + item + "' is not a positive integer");
        }
        if (used != item.size() || v < 1) throw std::invalid_argument("weights: '" + item + "' is not a positive integer");
        m.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return WeightSystem(m);
}

std::string print_weights(const WeightSystem& ws) {
    std::string out;
    for (int j = 1; j <= ws.size(); ++j) {
        if (j > 1) out += ',';
        out += to_string(ws.m(j));
    }
    return out;
}

}  // namespace wcalc
