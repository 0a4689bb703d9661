#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "vnum/constructors.hpp"
#include "vnum/errors.hpp"

namespace vnum {

// ---------------------------------------------------------------------------
// AST
// ---------------------------------------------------------------------------

struct GraphExpr;
using GraphExprPtr = std::shared_ptr<const GraphExpr>;

struct GraphExpr {
    struct Path {
        int n;
    };
    struct Cycle {
        int n;
    };
    struct Complete {
        int n;
    };
    struct Power {
        GraphExprPtr base;
        int k;
    };
    struct Literal {
        int n;
        std::vector<std::pair<int, int>> edges;  // 1-based endpoints
    };
    std::variant<Path, Cycle, Complete, Power, Literal> node;
};

/// One parsed monomial: (variable name, exponent) factors in source order.
/// An empty factor list is the constant 1.
using MonomialText = std::vector<std::pair<std::string, int>>;

struct IdealExpr;
using IdealExprPtr = std::shared_ptr<const IdealExpr>;

struct IdealExpr {
    struct EdgeIdeal {
        GraphExprPtr graph;
    };
    struct Mixed {
        MixedSpec spec;
    };
    struct Pow {
        IdealExprPtr base;
        int k;
    };
    struct SqPow {
        IdealExprPtr base;
        int k;
    };
    struct SymPow {
        IdealExprPtr base;
        int k;
    };
    struct Sum {
        IdealExprPtr lhs;
        IdealExprPtr rhs;
    };
    struct Product {
        IdealExprPtr lhs;
        IdealExprPtr rhs;
    };
    struct Colon {
        IdealExprPtr lhs;
        IdealExprPtr rhs;
    };
    struct Polarize {
        IdealExprPtr base;
    };
    struct Literal {
        bool zero = false;
        std::vector<MonomialText> monomials;
    };
    std::variant<EdgeIdeal, Mixed, Pow, SqPow, SymPow, Sum, Product, Colon, Polarize, Literal> node;
};

// Deep structural equality (round-trip testing needs it).
inline bool equal(const GraphExpr& a, const GraphExpr& b);
inline bool equal(const IdealExpr& a, const IdealExpr& b);

inline bool equal(const GraphExprPtr& a, const GraphExprPtr& b) { return equal(*a, *b); }
inline bool equal(const IdealExprPtr& a, const IdealExprPtr& b) { return equal(*a, *b); }

inline bool equal(const GraphExpr& a, const GraphExpr& b) {
    if (a.node.index() != b.node.index()) {
        return false;
    }
    using G = GraphExpr;
    return std::visit(
        [&](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const T& rhs = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, G::Path> || std::is_same_v<T, G::Cycle> ||
                          std::is_same_v<T, G::Complete>) {
                return lhs.n == rhs.n;
            } else if constexpr (std::is_same_v<T, G::Power>) {
                return lhs.k == rhs.k && equal(lhs.base, rhs.base);
            } else {
                return lhs.n == rhs.n && lhs.edges == rhs.edges;
            }
        },
        a.node);
}

inline bool equal(const IdealExpr& a, const IdealExpr& b) {
    if (a.node.index() != b.node.index()) {
        return false;
    }
    using I = IdealExpr;
    return std::visit(
        [&](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const T& rhs = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, I::EdgeIdeal>) {
                return equal(lhs.graph, rhs.graph);
            } else if constexpr (std::is_same_v<T, I::Mixed>) {
                return lhs.spec.n == rhs.spec.n && lhs.spec.m == rhs.spec.m &&
                       lhs.spec.terms == rhs.spec.terms;
            } else if constexpr (std::is_same_v<T, I::Pow> || std::is_same_v<T, I::SqPow> ||
                                 std::is_same_v<T, I::SymPow>) {
                return lhs.k == rhs.k && equal(lhs.base, rhs.base);
            } else if constexpr (std::is_same_v<T, I::Sum> || std::is_same_v<T, I::Product> ||
                                 std::is_same_v<T, I::Colon>) {
                return equal(lhs.lhs, rhs.lhs) && equal(lhs.rhs, rhs.rhs);
            } else if constexpr (std::is_same_v<T, I::Polarize>) {
                return equal(lhs.base, rhs.base);
            } else {
                return lhs.zero == rhs.zero && lhs.monomials == rhs.monomials;
            }
        },
        a.node);
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace parser_detail {

enum class TokKind { Ident, Int, Symbol, End };

struct Token {
    TokKind kind;
    std::string text;
    long long value = 0;
    int line = 1;
    int column = 1;
};

inline std::vector<Token> lex(std::string_view input) {
    std::vector<Token> tokens;
    int line = 1;
    int column = 1;
    size_t i = 0;
    auto advance = [&](size_t count) {
        for (size_t j = 0; j < count; ++j, ++i) {
            if (input[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    while (i < input.size()) {
        char c = input[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        int tok_line = line;
        int tok_col = column;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) {
                ++j;
            }
            std::string text(input.substr(i, j - i));
            if (text.size() > 7) {
                throw ParseError(tok_line, tok_col, "smaller integer",
                                 "integer literal too large at " + std::to_string(tok_line) + ":" +
                                     std::to_string(tok_col));
            }
            tokens.push_back({TokKind::Int, text, std::stoll(text), tok_line, tok_col});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < input.size() &&
                   (std::isalnum(static_cast<unsigned char>(input[j])) || input[j] == '_')) {
                ++j;
            }
            tokens.push_back({TokKind::Ident, std::string(input.substr(i, j - i)), 0, tok_line, tok_col});
            advance(j - i);
            continue;
        }
        if (std::string_view("()[]{},;+*^=-").find(c) != std::string_view::npos) {
            tokens.push_back({TokKind::Symbol, std::string(1, c), 0, tok_line, tok_col});
            advance(1);
            continue;
        }
        throw ParseError(line, column, "token",
                         std::string("unexpected character '") + c + "' at " +
                             std::to_string(line) + ":" + std::to_string(column));
    }
    tokens.push_back({TokKind::End, "", 0, line, column});
    return tokens;
}

/// Variable names look like x1, y12 or polarized copies like x3_2.
inline bool is_variable_name(std::string_view s) {
    size_t i = 0;
    while (i < s.size() && std::islower(static_cast<unsigned char>(s[i]))) {
        ++i;
    }
    if (i == 0 || i >= s.size()) {
        return false;
    }
    size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
        ++digits;
    }
    if (digits == 0) {
        return false;
    }
    if (i == s.size()) {
        return true;
    }
    if (s[i] != '_') {
        return false;
    }
    ++i;
    size_t copy_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
        ++copy_digits;
    }
    return copy_digits > 0 && i == s.size();
}

inline bool is_function_name(std::string_view s) {
    static constexpr std::string_view names[] = {"I",     "pow",      "sqpow",    "sympow",
                                                 "colon", "polarize", "mixed",    "path",
                                                 "cycle", "complete", "power",    "graph"};
    for (auto n : names) {
        if (s == n) {
            return true;
        }
    }
    return false;
}

class Parser {
  public:
    explicit Parser(std::string_view input) : tokens_(lex(input)) {}

    IdealExprPtr parse_top() {
        if (peek().kind == TokKind::Ident && is_graph_function(peek().text)) {
            throw SemanticError("a graph expression cannot stand alone; wrap it in I(...)");
        }
        IdealExprPtr expr = parse_sum();
        expect_end();
        return expr;
    }

  private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;

    const Token& peek(size_t ahead = 0) const {
        size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }
    const Token& advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        std::string found = t.kind == TokKind::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.line, t.column, expected,
                         "expected " + expected + " but found " + found + " at " +
                             std::to_string(t.line) + ":" + std::to_string(t.column));
    }

    bool accept_symbol(std::string_view s) {
        if (peek().kind == TokKind::Symbol && peek().text == s) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect_symbol(std::string_view s) {
        if (!accept_symbol(s)) {
            fail("'" + std::string(s) + "'");
        }
    }
    void expect_end() {
        if (peek().kind != TokKind::End) {
            fail("end of input");
        }
    }
    int expect_int(const char* what) {
        if (peek().kind != TokKind::Int) {
            fail(std::string("an integer ") + what);
        }
        return int(advance().value);
    }
    std::string expect_ident(const char* what) {
        if (peek().kind != TokKind::Ident) {
            fail(std::string("an identifier ") + what);
        }
        return advance().text;
    }
    void expect_keyword(std::string_view kw) {
        if (peek().kind != TokKind::Ident || peek().text != kw) {
            fail("'" + std::string(kw) + "'");
        }
        ++pos_;
    }

    static bool is_graph_function(std::string_view s) {
        return s == "path" || s == "cycle" || s == "complete" || s == "power" || s == "graph";
    }

    IdealExprPtr parse_sum() {
        IdealExprPtr lhs = parse_product();
        while (accept_symbol("+")) {
            IdealExprPtr rhs = parse_product();
            lhs = std::make_shared<IdealExpr>(IdealExpr{IdealExpr::Sum{lhs, rhs}});
        }
        return lhs;
    }

    IdealExprPtr parse_product() {
        IdealExprPtr lhs = parse_atom();
        while (accept_symbol("*")) {
            IdealExprPtr rhs = parse_atom();
            lhs = std::make_shared<IdealExpr>(IdealExpr{IdealExpr::Product{lhs, rhs}});
        }
        return lhs;
    }

    IdealExprPtr parse_atom() {
        const Token& t = peek();
        if (t.kind == TokKind::Ident) {
            if (is_graph_function(t.text)) {
                throw SemanticError("graph expression '" + t.text +
                                    "' used where an ideal is required; wrap it in I(...)");
            }
            if (t.text == "I") {
                advance();
                expect_symbol("(");
                GraphExprPtr g = parse_graph();
                expect_symbol(")");
                return std::make_shared<IdealExpr>(IdealExpr{IdealExpr::EdgeIdeal{g}});
            }
            if (t.text == "pow" || t.text == "sqpow" || t.text == "sympow") {
                std::string fn = advance().text;
                expect_symbol("(");
                IdealExprPtr base = parse_sum();
                expect_symbol(",");
                int k = expect_int("exponent");
                expect_symbol(")");
                if (k < 1) {
                    throw SemanticError(fn + " requires k >= 1");
                }
                if (fn == "pow") {
                    return std::make_shared<IdealExpr>(IdealExpr{IdealExpr::Pow{base, k}});
                }
                if (fn == "sqpow") {
                    return std::make_shared<IdealExpr>(IdealExpr{IdealExpr::SqPow{base, k}});
                }
                return std::make_shared<IdealExpr>(IdealExpr{IdealExpr::SymPow{base, k}});
            }
            if (t.text == "colon") {
                advance();
                expect_symbol("(");
                IdealExprPtr lhs = parse_sum();
                expect_symbol(",");
                IdealExprPtr rhs = parse_sum();
                expect_symbol(")");
                return std::make_shared<IdealExpr>(IdealExpr{IdealExpr::Colon{lhs, rhs}});
            }
            if (t.text == "polarize") {
                advance();
                expect_symbol("(");
                IdealExprPtr base = parse_sum();
                expect_symbol(")");
                return std::make_shared<IdealExpr>(IdealExpr{IdealExpr::Polarize{base}});
            }
            if (t.text == "mixed") {
                return parse_mixed();
            }
            if (is_variable_name(t.text)) {
                MonomialText m = parse_monomial();
                IdealExpr::Literal lit;
                lit.monomials.push_back(std::move(m));
                return std::make_shared<IdealExpr>(IdealExpr{std::move(lit)});
            }
            fail("an ideal expression");
        }
        if (t.kind == TokKind::Int && (t.value == 0 || t.value == 1)) {
            // bare unit or zero ideal
            IdealExpr::Literal lit;
            if (advance().value == 0) {
                lit.zero = true;
            } else {
                lit.monomials.push_back({});
            }
            return std::make_shared<IdealExpr>(IdealExpr{std::move(lit)});
        }
        if (t.kind == TokKind::Symbol && t.text == "(") {
            // Try an ideal literal first; fall back to a parenthesized group.
            size_t saved = pos_;
            try {
                return parse_ideal_literal();
            } catch (const ParseError&) {
                pos_ = saved;
            }
            expect_symbol("(");
            IdealExprPtr inner = parse_sum();
            expect_symbol(")");
            return inner;
        }
        fail("an ideal expression");
    }

    IdealExprPtr parse_ideal_literal() {
        expect_symbol("(");
        IdealExpr::Literal lit;
        if (peek().kind == TokKind::Int && peek().value == 0) {
            advance();
            expect_symbol(")");
            lit.zero = true;
            return std::make_shared<IdealExpr>(IdealExpr{std::move(lit)});
        }
        lit.monomials.push_back(parse_monomial());
        while (accept_symbol(",")) {
            lit.monomials.push_back(parse_monomial());
        }
        expect_symbol(")");
        return std::make_shared<IdealExpr>(IdealExpr{std::move(lit)});
    }

    MonomialText parse_monomial() {
        MonomialText factors;
        if (peek().kind == TokKind::Int && peek().value == 1) {
            advance();
            return factors;  // the constant monomial
        }
        while (true) {
            if (peek().kind != TokKind::Ident || !is_variable_name(peek().text)) {
                fail("a variable like x1");
            }
            std::string name = advance().text;
            int exponent = 1;
            if (accept_symbol("^")) {
                exponent = expect_int("exponent");
                if (exponent < 1) {
                    throw SemanticError("monomial exponents must be >= 1");
                }
            }
            factors.emplace_back(std::move(name), exponent);
            // '*' continues the monomial only when a variable follows
            if (peek().kind == TokKind::Symbol && peek().text == "*" &&
                peek(1).kind == TokKind::Ident && is_variable_name(peek(1).text)) {
                advance();
                continue;
            }
            break;
        }
        return factors;
    }

    IdealExprPtr parse_mixed() {
        expect_keyword("mixed");
        expect_symbol("(");
        expect_keyword("n");
        expect_symbol("=");
        int n = expect_int("for n");
        expect_symbol(",");
        expect_keyword("m");
        expect_symbol("=");
        int m = expect_int("for m");
        expect_symbol(";");
        MixedSpec spec;
        spec.n = n;
        spec.m = m;
        do {
            expect_symbol("[");
            int q = expect_int("for the x-degree");
            expect_symbol(",");
            int r = expect_int("for the y-degree");
            expect_symbol("]");
            spec.terms.emplace_back(q, r);
        } while (accept_symbol(","));
        expect_symbol(")");
        try {
            spec.validate();
        } catch (const InvalidInput& e) {
            throw SemanticError(e.what());
        }
        return std::make_shared<IdealExpr>(IdealExpr{IdealExpr::Mixed{std::move(spec)}});
    }

    GraphExprPtr parse_graph() {
        const Token& t = peek();
        if (t.kind != TokKind::Ident) {
            fail("a graph expression");
        }
        if (t.text == "path" || t.text == "cycle" || t.text == "complete") {
            std::string fn = advance().text;
            expect_symbol("(");
            int n = expect_int("vertex count");
            expect_symbol(")");
            if (fn == "path") {
                if (n < 2) {
                    throw SemanticError("path requires n >= 2");
                }
                return std::make_shared<GraphExpr>(GraphExpr{GraphExpr::Path{n}});
            }
            if (fn == "cycle") {
                if (n < 3) {
                    throw SemanticError("cycle requires n >= 3");
                }
                return std::make_shared<GraphExpr>(GraphExpr{GraphExpr::Cycle{n}});
            }
            if (n < 2) {
                throw SemanticError("complete requires n >= 2");
            }
            return std::make_shared<GraphExpr>(GraphExpr{GraphExpr::Complete{n}});
        }
        if (t.text == "power") {
            advance();
            expect_symbol("(");
            GraphExprPtr base = parse_graph();
            expect_symbol(",");
            int k = expect_int("power");
            expect_symbol(")");
            if (k < 1) {
                throw SemanticError("graph power requires k >= 1");
            }
            return std::make_shared<GraphExpr>(GraphExpr{GraphExpr::Power{base, k}});
        }
        if (t.text == "graph") {
            advance();
            expect_symbol("{");
            expect_keyword("n");
            expect_symbol("=");
            int n = expect_int("vertex count");
            if (n < 1) {
                throw SemanticError("graph literal requires n >= 1");
            }
            expect_symbol(";");
            expect_keyword("edges");
            expect_symbol("=");
            expect_symbol("[");
            GraphExpr::Literal lit;
            lit.n = n;
            if (!accept_symbol("]")) {
                do {
                    int a = expect_int("edge endpoint");
                    expect_symbol("-");
                    int b = expect_int("edge endpoint");
                    if (a < 1 || a > n || b < 1 || b > n || a == b) {
                        throw SemanticError("graph literal edge endpoints must be distinct and in 1.." +
                                            std::to_string(n));
                    }
                    lit.edges.emplace_back(a, b);
                } while (accept_symbol(","));
                expect_symbol("]");
            }
            expect_symbol("}");
            return std::make_shared<GraphExpr>(GraphExpr{std::move(lit)});
        }
        fail("a graph expression");
    }
};

}  // namespace parser_detail

/// Parse an ideal expression. Syntax errors carry position and expectation;
/// parameter bounds are validated during the parse.
inline IdealExprPtr parse(std::string_view text) {
    parser_detail::Parser parser(text);
    return parser.parse_top();
}

// ---------------------------------------------------------------------------
// Canonical printer
// ---------------------------------------------------------------------------

inline std::string print(const GraphExpr& g) {
    using G = GraphExpr;
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, G::Path>) {
                return "path(" + std::to_string(node.n) + ")";
            } else if constexpr (std::is_same_v<T, G::Cycle>) {
                return "cycle(" + std::to_string(node.n) + ")";
            } else if constexpr (std::is_same_v<T, G::Complete>) {
                return "complete(" + std::to_string(node.n) + ")";
            } else if constexpr (std::is_same_v<T, G::Power>) {
                return "power(" + print(*node.base) + "," + std::to_string(node.k) + ")";
            } else {
                std::string s = "graph{n=" + std::to_string(node.n) + "; edges=[";
                for (size_t i = 0; i < node.edges.size(); ++i) {
                    if (i > 0) {
                        s += ",";
                    }
                    s += std::to_string(node.edges[i].first) + "-" +
                         std::to_string(node.edges[i].second);
                }
                return s + "]}";
            }
        },
        g.node);
}

inline std::string print(const IdealExpr& e);

namespace parser_detail {

inline std::string print_monomial_text(const MonomialText& m) {
    if (m.empty()) {
        return "1";
    }
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i > 0) {
            s += "*";
        }
        s += m[i].first;
        if (m[i].second != 1) {
            s += "^" + std::to_string(m[i].second);
        }
    }
    return s;
}

inline std::string print_child(const IdealExpr& e, bool parenthesize_sum, bool parenthesize_product) {
    std::string s = print(e);
    if ((parenthesize_sum && std::holds_alternative<IdealExpr::Sum>(e.node)) ||
        (parenthesize_product && std::holds_alternative<IdealExpr::Product>(e.node))) {
        return "(" + s + ")";
    }
    return s;
}

}  // namespace parser_detail

inline std::string print(const IdealExpr& e) {
    using I = IdealExpr;
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, I::EdgeIdeal>) {
                return "I(" + print(*node.graph) + ")";
            } else if constexpr (std::is_same_v<T, I::Mixed>) {
                std::string s = "mixed(n=" + std::to_string(node.spec.n) +
                                ",m=" + std::to_string(node.spec.m) + ";";
                for (size_t i = 0; i < node.spec.terms.size(); ++i) {
                    if (i > 0) {
                        s += ",";
                    }
                    s += "[" + std::to_string(node.spec.terms[i].first) + "," +
                         std::to_string(node.spec.terms[i].second) + "]";
                }
                return s + ")";
            } else if constexpr (std::is_same_v<T, I::Pow>) {
                return "pow(" + print(*node.base) + "," + std::to_string(node.k) + ")";
            } else if constexpr (std::is_same_v<T, I::SqPow>) {
                return "sqpow(" + print(*node.base) + "," + std::to_string(node.k) + ")";
            } else if constexpr (std::is_same_v<T, I::SymPow>) {
                return "sympow(" + print(*node.base) + "," + std::to_string(node.k) + ")";
            } else if constexpr (std::is_same_v<T, I::Sum>) {
                // parenthesize a right-nested sum so the tree shape survives
                return print(*node.lhs) + " + " +
                       parser_detail::print_child(*node.rhs, true, false);
            } else if constexpr (std::is_same_v<T, I::Product>) {
                return parser_detail::print_child(*node.lhs, true, false) + "*" +
                       parser_detail::print_child(*node.rhs, true, true);
            } else if constexpr (std::is_same_v<T, I::Colon>) {
                return "colon(" + print(*node.lhs) + ", " + print(*node.rhs) + ")";
            } else if constexpr (std::is_same_v<T, I::Polarize>) {
                return "polarize(" + print(*node.base) + ")";
            } else {
                if (node.zero) {
                    return "(0)";
                }
                std::string s = "(";
                for (size_t i = 0; i < node.monomials.size(); ++i) {
                    if (i > 0) {
                        s += ", ";
                    }
                    s += parser_detail::print_monomial_text(node.monomials[i]);
                }
                return s + ")";
            }
        },
        e.node);
}

}  // namespace vnum
