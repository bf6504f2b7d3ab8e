#include "eptl/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace eptl {

// ---------------------------------------------------------------------------
// Patterns and propositions

Pattern Pattern::lit(Value v) {
    Pattern p;
    p.kind = Kind::Literal;
    p.literal = std::move(v);
    return p;
}

Pattern Pattern::variable(std::string name) {
    Pattern p;
    p.kind = Kind::Variable;
    p.var = std::move(name);
    return p;
}

Pattern Pattern::wildcard() {
    return Pattern{};
}

bool Pattern::operator==(const Pattern& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
    case Kind::Literal: return literal == o.literal;
    case Kind::Variable: return var == o.var;
    case Kind::Wildcard: return true;
    }
    return false;
}

std::string Pattern::to_string() const {
    switch (kind) {
    case Kind::Literal: return literal.to_string();
    case Kind::Variable: return var;
    case Kind::Wildcard: return "_";
    }
    return {};
}

bool RetPredicate::operator==(const RetPredicate& o) const {
    return kind == o.kind && pattern == o.pattern;
}

bool Proposition::operator==(const Proposition& o) const {
    return op_name == o.op_name && args == o.args && ret == o.ret;
}

std::string Proposition::to_string() const {
    std::ostringstream os;
    os << op_name << '(';
    bool first = true;
    for (const auto& a : args) {
        if (!first) os << ',';
        first = false;
        os << a.to_string();
    }
    os << ')';
    if (ret) os << (ret->kind == RetPredicate::Kind::Equals ? " == " : " contains ")
               << ret->pattern.to_string();
    return os.str();
}

namespace {

bool pattern_matches(const Pattern& p, const Value& v, const Interpretation& interp) {
    switch (p.kind) {
    case Pattern::Kind::Literal: return p.literal == v;
    case Pattern::Kind::Variable: {
        auto it = interp.find(p.var);
        if (it == interp.end()) throw UnboundVariableError("unbound variable: " + p.var);
        return it->second == v;
    }
    case Pattern::Kind::Wildcard: return true;
    }
    return false;
}

} // namespace

bool match_prop(const Proposition& p, const Event& e, const Interpretation& interp) {
    if (e.op.name != p.op_name) return false;
    if (e.op.args.size() != p.args.size()) return false;
    for (std::size_t i = 0; i < p.args.size(); ++i)
        if (!pattern_matches(p.args[i], e.op.args[i], interp)) return false;
    if (!p.ret) return true;
    if (!e.op.ret) return false;
    if (p.ret->kind == RetPredicate::Kind::Equals)
        return pattern_matches(p.ret->pattern, *e.op.ret, interp);
    if (!e.op.ret->is_set()) return false;
    for (const auto& m : e.op.ret->members())
        if (pattern_matches(p.ret->pattern, m, interp)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Formula nodes

struct Formula::Node {
    FormulaOp op = FormulaOp::True;
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
    std::optional<Proposition> prop;
    std::vector<std::string> fv;  // sorted
};

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void collect_pattern_var(const Pattern& p, std::vector<std::string>& out) {
    if (p.kind == Pattern::Kind::Variable) out.push_back(p.var);
}

} // namespace

Formula::Formula() : node_(std::make_shared<const Node>()) {}

Formula Formula::tt() {
    return Formula{};
}

Formula Formula::ff() {
    auto n = std::make_shared<Node>();
    n->op = FormulaOp::False;
    return Formula(std::move(n));
}

Formula Formula::prop(Proposition p) {
    auto n = std::make_shared<Node>();
    n->op = FormulaOp::Prop;
    for (const auto& a : p.args) collect_pattern_var(a, n->fv);
    if (p.ret) collect_pattern_var(p.ret->pattern, n->fv);
    std::sort(n->fv.begin(), n->fv.end());
    n->fv.erase(std::unique(n->fv.begin(), n->fv.end()), n->fv.end());
    n->prop = std::move(p);
    return Formula(std::move(n));
}

#define EPTL_UNARY_FACTORY(fn, opname)                 \
    Formula Formula::fn(Formula f) {                   \
        auto n = std::make_shared<Node>();             \
        n->op = FormulaOp::opname;                     \
        n->a = f.node_;                                \
        n->fv = f.node_->fv;                           \
        return Formula(std::move(n));                  \
    }

EPTL_UNARY_FACTORY(negation, Not)
EPTL_UNARY_FACTORY(ex, Ex)
EPTL_UNARY_FACTORY(ax, Ax)
EPTL_UNARY_FACTORY(eventually, Eventually)
EPTL_UNARY_FACTORY(always, Always)
#undef EPTL_UNARY_FACTORY

#define EPTL_BINARY_FACTORY(fn, opname)                     \
    Formula Formula::fn(Formula a, Formula b) {             \
        auto n = std::make_shared<Node>();                  \
        n->op = FormulaOp::opname;                          \
        n->a = a.node_;                                     \
        n->b = b.node_;                                     \
        n->fv = merge_vars(a.node_->fv, b.node_->fv);       \
        return Formula(std::move(n));                       \
    }

EPTL_BINARY_FACTORY(disjunction, Or)
EPTL_BINARY_FACTORY(conjunction, And)
EPTL_BINARY_FACTORY(implication, Implies)
EPTL_BINARY_FACTORY(until, Until)
EPTL_BINARY_FACTORY(weak_until, WeakUntil)
#undef EPTL_BINARY_FACTORY

FormulaOp Formula::op() const {
    return node_->op;
}

Formula Formula::lhs() const {
    if (!node_->a) throw Error("formula node has no operand");
    return Formula(node_->a);
}

Formula Formula::rhs() const {
    if (!node_->b) throw Error("formula node has no right operand");
    return Formula(node_->b);
}

const Proposition& Formula::proposition() const {
    if (!node_->prop) throw Error("formula node is not a proposition");
    return *node_->prop;
}

const std::vector<std::string>& Formula::free_vars() const {
    return node_->fv;
}

const void* Formula::identity() const {
    return node_.get();
}

bool Formula::operator==(const Formula& o) const {
    if (node_ == o.node_) return true;
    if (node_->op != o.node_->op) return false;
    switch (node_->op) {
    case FormulaOp::True:
    case FormulaOp::False:
        return true;
    case FormulaOp::Prop:
        return *node_->prop == *o.node_->prop;
    case FormulaOp::Not:
    case FormulaOp::Ex:
    case FormulaOp::Ax:
    case FormulaOp::Eventually:
    case FormulaOp::Always:
        return lhs() == o.lhs();
    default:
        return lhs() == o.lhs() && rhs() == o.rhs();
    }
}

std::set<std::string> free_vars(const Formula& f) {
    const auto& fv = f.free_vars();
    return {fv.begin(), fv.end()};
}

// ---------------------------------------------------------------------------
// Rendering
//
// Precedence, loose to tight: => (1, right) < | (2) < & (3) < U, W (4, right)
// < unary (5) < atoms (6). A proposition carrying a return predicate renders
// at level 1 so it gets parenthesized under any operator.

namespace {

int render_prec(const Formula& f) {
    switch (f.op()) {
    case FormulaOp::Implies: return 1;
    case FormulaOp::Or: return 2;
    case FormulaOp::And: return 3;
    case FormulaOp::Until:
    case FormulaOp::WeakUntil: return 4;
    case FormulaOp::Not:
    case FormulaOp::Ex:
    case FormulaOp::Ax:
    case FormulaOp::Eventually:
    case FormulaOp::Always: return 5;
    case FormulaOp::Prop: return f.proposition().ret ? 1 : 6;
    default: return 6;
    }
}

void render_to(const Formula& f, int min_prec, std::string& out) {
    const int prec = render_prec(f);
    const bool wrap = prec < min_prec;
    if (wrap) out += '(';
    switch (f.op()) {
    case FormulaOp::True: out += "true"; break;
    case FormulaOp::False: out += "false"; break;
    case FormulaOp::Prop: out += f.proposition().to_string(); break;
    case FormulaOp::Not:
        out += '!';
        render_to(f.lhs(), 5, out);
        break;
    case FormulaOp::Ex:
    case FormulaOp::Ax:
    case FormulaOp::Eventually:
    case FormulaOp::Always: {
        switch (f.op()) {
        case FormulaOp::Ex: out += "EX"; break;
        case FormulaOp::Ax: out += "AX"; break;
        case FormulaOp::Eventually: out += "F"; break;
        default: out += "G"; break;
        }
        out += '(';
        render_to(f.lhs(), 1, out);
        out += ')';
        break;
    }
    case FormulaOp::Implies:
        render_to(f.lhs(), 2, out);
        out += " => ";
        render_to(f.rhs(), 1, out);
        break;
    case FormulaOp::Or:
        render_to(f.lhs(), 2, out);
        out += " | ";
        render_to(f.rhs(), 3, out);
        break;
    case FormulaOp::And:
        render_to(f.lhs(), 3, out);
        out += " & ";
        render_to(f.rhs(), 4, out);
        break;
    case FormulaOp::Until:
    case FormulaOp::WeakUntil:
        render_to(f.lhs(), 5, out);
        out += f.op() == FormulaOp::Until ? " U " : " W ";
        render_to(f.rhs(), 4, out);
        break;
    }
    if (wrap) out += ')';
}

} // namespace

std::string Formula::render() const {
    std::string out;
    render_to(*this, 1, out);
    return out;
}

std::string render(const Formula& f) {
    return f.render();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok {
    End,
    Ident,
    Int,
    String,
    LParen,
    RParen,
    Comma,
    Underscore,
    Bang,
    Amp,
    Pipe,
    Arrow,
    EqEq,
    KwTrue,
    KwFalse,
    KwEx,
    KwAx,
    KwF,
    KwG,
    KwU,
    KwW,
    KwContains,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::int64_t int_value = 0;
    std::size_t pos = 0;
};

std::string describe(const Token& t) {
    switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier '" + t.text + "'";
    case Tok::Int: return "integer";
    case Tok::String: return "string literal";
    default: return "'" + t.text + "'";
    }
}

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        cur_ = Token{};
        cur_.pos = i_;
        if (i_ >= s_.size()) return;
        const char c = s_[i_];
        auto two = [&](char a, char b) {
            return c == a && i_ + 1 < s_.size() && s_[i_ + 1] == b;
        };
        if (two('=', '>')) { set(Tok::Arrow, "=>", 2); return; }
        if (two('=', '=')) { set(Tok::EqEq, "==", 2); return; }
        switch (c) {
        case '(': set(Tok::LParen, "(", 1); return;
        case ')': set(Tok::RParen, ")", 1); return;
        case ',': set(Tok::Comma, ",", 1); return;
        case '!': set(Tok::Bang, "!", 1); return;
        case '&': set(Tok::Amp, "&", 1); return;
        case '|': set(Tok::Pipe, "|", 1); return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && i_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_ + 1])))) {
            std::size_t j = i_ + 1;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            cur_.kind = Tok::Int;
            cur_.text = s_.substr(i_, j - i_);
            cur_.int_value = std::stoll(cur_.text);
            i_ = j;
            return;
        }
        if (c == '"') {
            std::string text;
            std::size_t j = i_ + 1;
            while (j < s_.size() && s_[j] != '"') {
                if (s_[j] == '\\' && j + 1 < s_.size()) ++j;
                text.push_back(s_[j]);
                ++j;
            }
            if (j >= s_.size())
                throw ParseError("unterminated string literal at offset " + std::to_string(i_), i_,
                                 {"closing '\"'"});
            cur_.kind = Tok::String;
            cur_.text = std::move(text);
            i_ = j + 1;
            return;
        }
        if (c == '_' || std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (s_[j] == '_' || std::isalnum(static_cast<unsigned char>(s_[j]))))
                ++j;
            cur_.text = s_.substr(i_, j - i_);
            i_ = j;
            if (cur_.text == "_") cur_.kind = Tok::Underscore;
            else if (cur_.text == "true") cur_.kind = Tok::KwTrue;
            else if (cur_.text == "false") cur_.kind = Tok::KwFalse;
            else if (cur_.text == "EX") cur_.kind = Tok::KwEx;
            else if (cur_.text == "AX") cur_.kind = Tok::KwAx;
            else if (cur_.text == "F") cur_.kind = Tok::KwF;
            else if (cur_.text == "G") cur_.kind = Tok::KwG;
            else if (cur_.text == "U") cur_.kind = Tok::KwU;
            else if (cur_.text == "W") cur_.kind = Tok::KwW;
            else if (cur_.text == "contains") cur_.kind = Tok::KwContains;
            else cur_.kind = Tok::Ident;
            return;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " +
                             std::to_string(i_),
                         i_, {"formula"});
    }

    void set(Tok kind, const char* text, std::size_t len) {
        cur_.kind = kind;
        cur_.text = text;
        i_ += len;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token cur_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Formula parse_top() {
        Formula f = parse_formula(1);
        if (lex_.peek().kind != Tok::End)
            fail(lex_.peek(), {"end of input", "binary operator"});
        return f;
    }

private:
    [[noreturn]] void fail(const Token& t, std::vector<std::string> expected) {
        std::ostringstream os;
        os << "unexpected " << describe(t) << " at offset " << t.pos << "; expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) os << (i + 1 == expected.size() ? " or " : ", ");
            os << expected[i];
        }
        throw ParseError(os.str(), t.pos, std::move(expected));
    }

    Token expect(Tok kind, const char* what) {
        if (lex_.peek().kind != kind) fail(lex_.peek(), {what});
        return lex_.take();
    }

    Formula parse_formula(int min_prec) {
        Formula lhs = parse_unary();
        for (;;) {
            const Tok k = lex_.peek().kind;
            int prec;
            bool right_assoc;
            switch (k) {
            case Tok::Arrow: prec = 1; right_assoc = true; break;
            case Tok::Pipe: prec = 2; right_assoc = false; break;
            case Tok::Amp: prec = 3; right_assoc = false; break;
            case Tok::KwU:
            case Tok::KwW: prec = 4; right_assoc = true; break;
            default: return lhs;
            }
            if (prec < min_prec) return lhs;
            lex_.take();
            Formula rhs = parse_formula(right_assoc ? prec : prec + 1);
            switch (k) {
            case Tok::Arrow: lhs = Formula::implication(std::move(lhs), std::move(rhs)); break;
            case Tok::Pipe: lhs = Formula::disjunction(std::move(lhs), std::move(rhs)); break;
            case Tok::Amp: lhs = Formula::conjunction(std::move(lhs), std::move(rhs)); break;
            case Tok::KwU: lhs = Formula::until(std::move(lhs), std::move(rhs)); break;
            default: lhs = Formula::weak_until(std::move(lhs), std::move(rhs)); break;
            }
        }
    }

    Formula parse_unary() {
        const Token t = lex_.peek();
        switch (t.kind) {
        case Tok::Bang:
            lex_.take();
            return Formula::negation(parse_unary());
        case Tok::KwEx:
            lex_.take();
            return Formula::ex(parse_unary());
        case Tok::KwAx:
            lex_.take();
            return Formula::ax(parse_unary());
        case Tok::KwF:
            lex_.take();
            return Formula::eventually(parse_unary());
        case Tok::KwG:
            lex_.take();
            return Formula::always(parse_unary());
        case Tok::KwTrue:
            lex_.take();
            return Formula::tt();
        case Tok::KwFalse:
            lex_.take();
            return Formula::ff();
        case Tok::LParen: {
            lex_.take();
            Formula f = parse_formula(1);
            expect(Tok::RParen, "')'");
            return f;
        }
        case Tok::Ident:
            return parse_prop();
        default:
            fail(t, {"'true'", "'false'", "'!'", "'EX'", "'AX'", "'F'", "'G'", "'('", "identifier"});
        }
    }

    Formula parse_prop() {
        Proposition p;
        p.op_name = lex_.take().text;
        expect(Tok::LParen, "'('");
        if (lex_.peek().kind != Tok::RParen) {
            p.args.push_back(parse_pattern());
            while (lex_.peek().kind == Tok::Comma) {
                lex_.take();
                p.args.push_back(parse_pattern());
            }
        }
        expect(Tok::RParen, "')'");
        if (lex_.peek().kind == Tok::EqEq) {
            lex_.take();
            p.ret = RetPredicate{RetPredicate::Kind::Equals, parse_pattern()};
        } else if (lex_.peek().kind == Tok::KwContains) {
            lex_.take();
            p.ret = RetPredicate{RetPredicate::Kind::Contains, parse_pattern()};
        }
        return Formula::prop(std::move(p));
    }

    Pattern parse_pattern() {
        const Token t = lex_.peek();
        switch (t.kind) {
        case Tok::Int:
            lex_.take();
            return Pattern::lit(Value::integer(t.int_value));
        case Tok::String:
            lex_.take();
            return Pattern::lit(Value::string(t.text));
        case Tok::Ident:
            lex_.take();
            return Pattern::variable(t.text);
        case Tok::Underscore:
            lex_.take();
            return Pattern::wildcard();
        default:
            fail(t, {"integer", "string literal", "identifier", "'_'"});
        }
    }

    Lexer lex_;
};

} // namespace

Formula parse(const std::string& text) {
    return Parser(text).parse_top();
}

} // namespace eptl
