#include "cliflat/op_text.hpp"

#include <cctype>
#include <vector>

namespace cliflat {

namespace {

const char* sign_token(int sign) { return sign > 0 ? "+" : "-"; }

const char* weight_token(weight_kind k) {
    switch (k) {
    case weight_kind::plus: return "+";
    case weight_kind::minus: return "-";
    case weight_kind::mid: return "0";
    }
    return "?";
}

} // namespace

std::string op_print(const op_ptr& e) {
    if (!e) throw domain_error("op_print: null operator");
    switch (e->node) {
    case node_kind::primitive:
        switch (e->prim) {
        case prim_kind::identity: return "(identity)";
        case prim_kind::shift:
            return std::string("(shift ") + sign_token(e->sign) + " " +
                   std::to_string(e->axis_j) + ")";
        case prim_kind::fdiff:
            return std::string("(fdiff ") + sign_token(e->sign) + " " +
                   std::to_string(e->axis_j) + ")";
        case prim_kind::weight:
            return std::string("(weight ") + weight_token(e->wkind) + " " +
                   std::to_string(e->axis_j) + ")";
        case prim_kind::dirac: return std::string("(dirac ") + sign_token(e->sign) + ")";
        case prim_kind::euler: return std::string("(euler ") + sign_token(e->sign) + ")";
        case prim_kind::raise_op: return std::string("(raise ") + sign_token(e->sign) + ")";
        case prim_kind::angular:
            return std::string("(angular ") + sign_token(e->sign) + " " +
                   std::to_string(e->axis_j) + " " + std::to_string(e->axis_k) + ")";
        case prim_kind::cderiv: return "(cderiv " + std::to_string(e->axis_j) + ")";
        case prim_kind::sheffer: return std::string("(sheffer ") + sign_token(e->sign) + ")";
        case prim_kind::evolution: return "(evolution " + e->time.str() + ")";
        case prim_kind::angular_classical:
            return "(angular-classical " + std::to_string(e->axis_j) + " " +
                   std::to_string(e->axis_k) + ")";
        }
        throw domain_error("op_print: unknown primitive");
    case node_kind::compose:
    case node_kind::sum: {
        std::string out = e->node == node_kind::compose ? "(compose" : "(sum";
        for (const auto& c : e->children) out += " " + op_print(c);
        return out + ")";
    }
    case node_kind::scale:
        return "(scale " + e->factor.str() + " " + op_print(e->children[0]) + ")";
    case node_kind::power:
        return "(power " + op_print(e->children[0]) + " " + std::to_string(e->exponent) + ")";
    case node_kind::commutator:
        return "(commutator " + op_print(e->children[0]) + " " + op_print(e->children[1]) + ")";
    }
    throw domain_error("op_print: unknown node");
}

namespace {

struct token_stream {
    explicit token_stream(const std::string& text) : text_(text) {}

    std::string next() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error(where(), "unexpected end of input");
        const char c = text_[pos_];
        if (c == '(' || c == ')') {
            ++pos_;
            return std::string(1, c);
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '(' && text_[pos_] != ')')
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    std::string where() const { return "operator text, offset " + std::to_string(pos_); }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    const std::string& text_;
    std::size_t pos_ = 0;
};

int parse_sign(token_stream& ts) {
    const std::string t = ts.next();
    if (t == "+") return +1;
    if (t == "-") return -1;
    throw parse_error(ts.where(), "expected sign '+' or '-', got '" + t + "'");
}

int parse_axis(token_stream& ts) {
    const std::string t = ts.next();
    try {
        std::size_t used = 0;
        const int v = std::stoi(t, &used);
        if (used != t.size() || v < 1) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw parse_error(ts.where(), "expected a positive axis index, got '" + t + "'");
    }
}

void expect_close(token_stream& ts, const std::string& head) {
    const std::string t = ts.next();
    if (t != ")")
        throw parse_error(ts.where(), "expected ')' closing (" + head + "...), got '" + t + "'");
}

op_ptr parse_expr(token_stream& ts);

op_ptr parse_form(token_stream& ts) {
    const std::string head = ts.next();
    if (head == ")") throw parse_error(ts.where(), "empty operator form");

    auto wrap_domain = [&](auto&& fn) -> op_ptr {
        try {
            return fn();
        } catch (const domain_error& e) {
            throw parse_error(ts.where(), e.what());
        }
    };

    if (head == "identity") {
        expect_close(ts, head);
        return ops::identity();
    }
    if (head == "shift" || head == "fdiff") {
        const int sign = parse_sign(ts);
        const int j = parse_axis(ts);
        expect_close(ts, head);
        return head == "shift" ? ops::shift_op(sign, j) : ops::fdiff(sign, j);
    }
    if (head == "weight") {
        const std::string k = ts.next();
        weight_kind wk;
        if (k == "+") wk = weight_kind::plus;
        else if (k == "-") wk = weight_kind::minus;
        else if (k == "0") wk = weight_kind::mid;
        else throw parse_error(ts.where(), "expected weight kind '+', '-' or '0', got '" + k + "'");
        const int j = parse_axis(ts);
        expect_close(ts, head);
        return ops::weight(wk, j);
    }
    if (head == "dirac" || head == "euler" || head == "raise" || head == "sheffer") {
        const int sign = parse_sign(ts);
        expect_close(ts, head);
        if (head == "dirac") return ops::dirac(sign);
        if (head == "euler") return ops::euler(sign);
        if (head == "raise") return ops::raise(sign);
        return ops::sheffer(sign);
    }
    if (head == "angular") {
        const int sign = parse_sign(ts);
        const int j = parse_axis(ts);
        const int k = parse_axis(ts);
        expect_close(ts, head);
        return wrap_domain([&] { return ops::angular(sign, j, k); });
    }
    if (head == "angular-classical") {
        const int j = parse_axis(ts);
        const int k = parse_axis(ts);
        expect_close(ts, head);
        return wrap_domain([&] { return ops::angular_classical(j, k); });
    }
    if (head == "cderiv") {
        const int j = parse_axis(ts);
        expect_close(ts, head);
        return ops::cderiv(j);
    }
    if (head == "evolution") {
        const rational t = rational::parse(ts.next(), ts.where());
        expect_close(ts, head);
        return ops::evolution(t);
    }
    if (head == "scale") {
        const rational c = rational::parse(ts.next(), ts.where());
        op_ptr a = parse_expr(ts);
        expect_close(ts, head);
        return ops::scale(c, a);
    }
    if (head == "power") {
        op_ptr a = parse_expr(ts);
        const std::string t = ts.next();
        unsigned k = 0;
        try {
            std::size_t used = 0;
            const long v = std::stol(t, &used);
            if (used != t.size() || v < 0) throw std::invalid_argument(t);
            k = static_cast<unsigned>(v);
        } catch (const std::exception&) {
            throw parse_error(ts.where(), "expected a nonnegative exponent, got '" + t + "'");
        }
        expect_close(ts, head);
        return ops::power(a, k);
    }
    if (head == "commutator") {
        op_ptr a = parse_expr(ts);
        op_ptr b = parse_expr(ts);
        expect_close(ts, head);
        return ops::commutator(a, b);
    }
    if (head == "compose" || head == "sum") {
        std::vector<op_ptr> children;
        for (;;) {
            if (ts.at_end()) throw parse_error(ts.where(), "unterminated (" + head + " ...)");
            // Peek by parsing: a ')' ends the list.
            token_stream probe = ts;
            if (probe.next() == ")") {
                ts.next();
                break;
            }
            children.push_back(parse_expr(ts));
        }
        return wrap_domain([&]() -> op_ptr {
            return head == "compose" ? ops::compose(std::move(children))
                                     : ops::sum(std::move(children));
        });
    }
    throw parse_error(ts.where(), "unknown operator '" + head + "'");
}

op_ptr parse_expr(token_stream& ts) {
    const std::string t = ts.next();
    if (t != "(") throw parse_error(ts.where(), "expected '(', got '" + t + "'");
    return parse_form(ts);
}

} // namespace

op_ptr op_parse(const std::string& text) {
    token_stream ts(text);
    op_ptr e = parse_expr(ts);
    if (!ts.at_end()) throw parse_error(ts.where(), "trailing input after operator expression");
    return e;
}

} // namespace cliflat
