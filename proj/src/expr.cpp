#include "djcm/expr.hpp"

#include <cctype>
#include <cmath>
#include <regex>
#include <string>

#include "djcm/error.hpp"

namespace djcm {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    double parse() {
        const double v = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidConfig("bad expression '" + std::string(s_) + "': " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    double sum() {
        double v = product();
        for (;;) {
            if (eat('+')) {
                v += product();
            } else if (eat('-')) {
                v -= product();
            } else {
                return v;
            }
        }
    }

    double product() {
        double v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                v /= unary();
            } else {
                return v;
            }
        }
    }

    double unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return primary();
    }

    double primary() {
        skip();
        if (eat('(')) {
            const double v = sum();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
            const std::string rest(s_.substr(pos_));
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(rest, &used);
            } catch (const std::exception&) {
                fail("bad number");
            }
            pos_ += used;
            return v;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string_view id = s_.substr(start, pos_ - start);
        if (id.empty()) fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
        if (id == "pi") return kPi;
        double (*fn)(double) = nullptr;
        if (id == "atan") fn = [](double x) { return std::atan(x); };
        if (id == "sqrt") fn = [](double x) { return std::sqrt(x); };
        if (id == "sin") fn = [](double x) { return std::sin(x); };
        if (id == "cos") fn = [](double x) { return std::cos(x); };
        if (fn == nullptr) fail("unknown name '" + std::string(id) + "'");
        if (!eat('(')) fail("expected '(' after " + std::string(id));
        const double arg = sum();
        if (!eat(')')) fail("missing ')'");
        return fn(arg);
    }
};

}  // namespace

double eval_expr(std::string_view text) {
    const double v = Parser(text).parse();
    if (!std::isfinite(v)) throw InvalidConfig("expression '" + std::string(text) + "' is not finite");
    return v;
}

Angle parse_angle(std::string_view text) {
    static const std::regex exact(R"(\s*(?:(0)|pi\s*/\s*(4)|pi\s*/\s*(2)|atan\(\s*(\d+)\s*(?:/\s*(\d+)\s*)?\))\s*)");
    const std::string s(text);
    std::smatch m;
    if (std::regex_match(s, m, exact)) {
        if (m[1].matched) return Angle::zero();
        if (m[2].matched) return Angle::quarter_pi();
        if (m[3].matched) return Angle::half_pi();
        const std::int64_t p = std::stoll(m[4].str());
        const std::int64_t q = m[5].matched ? std::stoll(m[5].str()) : 1;
        if (q == 0) throw InvalidConfig("atan(p/0) in '" + s + "'");
        return Angle::from_tan(p, q);
    }
    return Angle(eval_expr(text));
}

}  // namespace djcm
