#include "endostar/expr.hpp"

#include <cctype>

namespace endostar {

namespace {

struct Token {
    enum Kind { Num, Imag, U, S, E, LParen, RParen, Plus, Minus, Mul, Adjoint, End } kind;
    size_t pos;
    Rational value;      // Num
    std::string payload; // U / E
};

[[noreturn]] void fail(size_t pos, const std::string& msg) {
    throw Error(ErrorCode::ParseError, "parse error at position " + std::to_string(pos) + ": " + msg);
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { tokenize(); }
    const std::vector<Token>& tokens() const { return tokens_; }

private:
    void tokenize() {
        size_t i = 0;
        while (i < text_.size()) {
            char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            size_t start = i;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t j = i;
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
                std::string num = text_.substr(i, j - i);
                if (j < text_.size() && text_[j] == '/') {
                    size_t k = j + 1;
                    while (k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k])))
                        ++k;
                    if (k == j + 1) fail(j, "expected denominator");
                    num += text_.substr(j, k - j);
                    j = k;
                }
                Token t{Token::Num, start, rational_from_string(num), ""};
                if (j < text_.size() && text_[j] == 'i') { // glued imaginary part
                    t.kind = Token::Imag;
                    ++j;
                }
                tokens_.push_back(t);
                i = j;
                continue;
            }
            switch (c) {
                case 'i':
                    tokens_.push_back({Token::Imag, start, make_rational(1), ""});
                    ++i;
                    break;
                case 's':
                    tokens_.push_back({Token::S, start, Rational(), ""});
                    ++i;
                    break;
                case 'u': {
                    if (i + 1 >= text_.size() || text_[i + 1] != '{') fail(i, "expected '{' after u");
                    size_t close = text_.find('}', i + 2);
                    if (close == std::string::npos) fail(i, "unterminated u{...}");
                    tokens_.push_back({Token::U, start, Rational(), text_.substr(i + 2, close - i - 2)});
                    i = close + 1;
                    break;
                }
                case 'e': {
                    if (i + 1 >= text_.size() || text_[i + 1] != '[') fail(i, "expected '[' after e");
                    size_t close = text_.find(']', i + 2);
                    if (close == std::string::npos) fail(i, "unterminated e[...]");
                    tokens_.push_back({Token::E, start, Rational(), text_.substr(i + 2, close - i - 2)});
                    i = close + 1;
                    break;
                }
                case '(':
                    tokens_.push_back({Token::LParen, start, Rational(), ""});
                    ++i;
                    break;
                case ')':
                    tokens_.push_back({Token::RParen, start, Rational(), ""});
                    ++i;
                    break;
                case '+':
                    tokens_.push_back({Token::Plus, start, Rational(), ""});
                    ++i;
                    break;
                case '-':
                    tokens_.push_back({Token::Minus, start, Rational(), ""});
                    ++i;
                    break;
                case '*': {
                    // adjoint when glued to the preceding closed primary
                    bool glued = i > 0 && !std::isspace(static_cast<unsigned char>(text_[i - 1]));
                    bool prev_primary = false;
                    if (!tokens_.empty()) {
                        auto k = tokens_.back().kind;
                        prev_primary = k == Token::S || k == Token::U || k == Token::E ||
                                       k == Token::RParen || k == Token::Adjoint;
                    }
                    tokens_.push_back({glued && prev_primary ? Token::Adjoint : Token::Mul, start,
                                       Rational(), ""});
                    ++i;
                    break;
                }
                default:
                    fail(i, std::string("unexpected character '") + c + "'");
            }
        }
        tokens_.push_back({Token::End, text_.size(), Rational(), ""});
    }

    const std::string& text_;
    std::vector<Token> tokens_;
};

class Parser {
public:
    Parser(const GroupInstance& G, const std::string& text) : G_(G), lex_(text) {}

    AlgebraElement parse() {
        AlgebraElement x = expr();
        if (cur().kind != Token::End) fail(cur().pos, "trailing input");
        return x;
    }

private:
    const Token& cur() const { return lex_.tokens()[pos_]; }
    void advance() { ++pos_; }

    AlgebraElement expr() {
        bool neg = false;
        if (cur().kind == Token::Minus) {
            neg = true;
            advance();
        }
        AlgebraElement acc = term();
        if (neg) acc = scale(Scalar::integer(-1), acc);
        while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
            bool minus = cur().kind == Token::Minus;
            advance();
            AlgebraElement t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    bool starts_factor(Token::Kind k) const {
        return k == Token::Num || k == Token::Imag || k == Token::U || k == Token::S ||
               k == Token::E || k == Token::LParen;
    }

    AlgebraElement term() {
        AlgebraElement acc = factor();
        for (;;) {
            if (cur().kind == Token::Mul) {
                advance();
                acc = mul(G_, acc, factor());
            } else if (starts_factor(cur().kind)) {
                acc = mul(G_, acc, factor());
            } else {
                return acc;
            }
        }
    }

    AlgebraElement factor() {
        AlgebraElement x = primary();
        while (cur().kind == Token::Adjoint) {
            advance();
            x = adjoint(G_, x);
        }
        return x;
    }

    AlgebraElement primary() {
        const Token& t = cur();
        switch (t.kind) {
            case Token::Num:
                advance();
                return scale(Scalar(t.value), alg_one(G_));
            case Token::Imag:
                advance();
                return scale(Scalar(Rational(0), t.value), alg_one(G_));
            case Token::S:
                advance();
                return alg_s(G_);
            case Token::U: {
                GroupElement g = parse_element(t.payload, t.pos);
                advance();
                return alg_u(G_, g);
            }
            case Token::E: {
                LatticeSubgroup L = parse_subgroup(t.payload, t.pos);
                advance();
                return alg_e(G_, L);
            }
            case Token::LParen: {
                advance();
                AlgebraElement x = expr();
                if (cur().kind != Token::RParen) fail(cur().pos, "expected ')'");
                advance();
                return x;
            }
            default:
                fail(t.pos, "expected a scalar, generator, or '('");
        }
    }

    GroupElement parse_element(const std::string& s, size_t pos) const {
        const std::string& id = G_.id();
        GroupElement out = G_.identity();
        if (s.empty()) return out;
        size_t i = 0;
        auto read_int = [&]() -> int64_t {
            size_t j = i;
            if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
            size_t k = j;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            if (k == j) fail(pos, "expected integer in element payload");
            int64_t v = std::stoll(s.substr(i, k - i));
            i = k;
            return v;
        };
        for (;;) {
            int64_t first = read_int();
            if (id == "shift-z") {
                if (i >= s.size() || s[i] != ':') fail(pos, "shift-z entries are index:value");
                ++i;
                int64_t val = read_int();
                out = G_.mul(out, GroupElement(VecZ{{static_cast<int32_t>(first), val}}));
            } else if (id == "free-shift") {
                if (first == 0) fail(pos, "generator index must be nonzero");
                out = G_.mul(out, GroupElement(Word{static_cast<int32_t>(first)}));
            } else { // times2
                out = G_.mul(out, GroupElement(first));
            }
            if (i == s.size()) return out;
            if (s[i] != ',') fail(pos, "expected ',' in element payload");
            ++i;
        }
    }

    LatticeSubgroup parse_subgroup(const std::string& raw, size_t pos) const {
        std::string s;
        for (char c : raw)
            if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s += c;
        int n = 0;
        std::string base = "G";
        if (s.rfind("phi^", 0) == 0) {
            size_t j = 4;
            size_t k = j;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            if (k == j) fail(pos, "expected power after phi^");
            n = std::stoi(s.substr(j, k - j));
            if (k < s.size()) base = s.substr(k);
        } else if (!s.empty()) {
            base = s;
        }
        return LatticeSubgroup(LatticeTerm{n, G_.base_index(base)});
    }

    const GroupInstance& G_;
    Lexer lex_;
    size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_expr(const GroupInstance& G, const std::string& text) {
    return Parser(G, text).parse();
}

}  // namespace endostar
