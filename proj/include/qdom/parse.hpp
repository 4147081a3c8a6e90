#ifndef QDOM_PARSE_HPP
#define QDOM_PARSE_HPP

#include "presentation.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace qdom {

// Expressions over a presentation: generators (z, z', f0, z[1,2], t[1,4]i,
// alpha', ...), scalars in q, + - * /, ^ powers and parentheses.
// Negative powers of a generator X use the generator Xi when it exists.
class ExprParser {
public:
    ExprParser(const std::string& s, const Presentation& A) : s_(s), A_(A) {}
    NCPoly run() {
        NCPoly r = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    const std::string& s_;
    const Presentation& A_;
    size_t i_ = 0;

    [[noreturn]] void fail(const std::string& m) {
        throw ParseError("parse error at " + std::to_string(i_) + ": " + m);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++i_;
            return true;
        }
        return false;
    }
    bool at_factor() {
        skip();
        if (i_ >= s_.size()) return false;
        char c = s_[i_];
        return c == '(' || std::isalnum((unsigned char)c) || c == '_';
    }
    NCPoly expr() {
        NCPoly r = term();
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }
    NCPoly term() {
        NCPoly r = unary();
        for (;;) {
            if (eat('*')) r = r * unary();
            else if (eat('/')) {
                NCPoly d = unary();
                if (d.size() != 1 || d.max_len() != 0) fail("division by a non-scalar");
                r *= d.constant().inv();
            } else if (at_factor()) r = r * unary();
            else return r;
        }
    }
    NCPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    long integer() {
        skip();
        size_t st = i_;
        while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) ++i_;
        if (st == i_) fail("expected integer");
        return std::stol(s_.substr(st, i_ - st));
    }
    std::pair<long, long> exponent() {
        bool br = eat('{'), pa = !br && eat('(');
        long sg = 1;
        if (eat('-')) sg = -1;
        long n = integer(), d = 1;
        if (eat('/')) d = integer();
        if (br && !eat('}')) fail("expected }");
        if (pa && !eat(')')) fail("expected )");
        if (d == 0) fail("zero denominator in exponent");
        return {sg * n, d};
    }
    std::string ident() {
        skip();
        size_t st = i_;
        while (i_ < s_.size() && (std::isalnum((unsigned char)s_[i_]) || s_[i_] == '_')) ++i_;
        if (i_ < s_.size() && s_[i_] == '[') {
            while (i_ < s_.size() && s_[i_] != ']') ++i_;
            if (i_ == s_.size()) fail("expected ]");
            ++i_;
            if (i_ < s_.size() && s_[i_] == 'i') ++i_;
        }
        std::string r = s_.substr(st, i_ - st);
        r.erase(std::remove(r.begin(), r.end(), ' '), r.end());
        return r;
    }
    // a generator name with optional ' suffixes
    NCPoly generator(std::string name) {
        int primes = 0;
        while (i_ < s_.size() && s_[i_] == '\'') ++i_, ++primes;
        std::string full = name + std::string(primes, '\'');
        if (A_.index(full) >= 0) return A_.g(full);
        if (primes && A_.index(name) >= 0 && A_.has_star()) {
            NCPoly r = A_.g(name);
            for (int k = 0; k < primes; ++k) r = A_.star_of(r);
            return r;
        }
        fail("unknown generator " + full + " in " + A_.name);
    }
    NCPoly power() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        char c = s_[i_];
        NCPoly base;
        bool isq = false;
        if (eat('(')) {
            base = expr();
            if (!eat(')')) fail("expected )");
            while (i_ < s_.size() && s_[i_] == '\'') {
                ++i_;
                if (!A_.has_star()) fail("no involution in " + A_.name);
                base = A_.star_of(base);
            }
        } else if (std::isdigit((unsigned char)c)) {
            size_t st = i_;
            while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) ++i_;
            base = NCPoly(Scalar(Int(s_.substr(st, i_ - st))));
        } else if (std::isalpha((unsigned char)c) || c == '_') {
            std::string id = ident();
            if (id == "q" && A_.index("q") < 0) {
                isq = true;
                base = NCPoly(Scalar::q());
            } else {
                base = generator(id);
            }
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
        if (!eat('^')) return base;
        auto [n, d] = exponent();
        if (isq) {
            if ((4 * n) % d != 0) fail("q exponent must be a multiple of 1/4");
            return NCPoly(Scalar::vpow(int(4 * n / d)));
        }
        if (d != 1) fail("fractional exponent");
        if (n < 0) {
            if (base.size() == 1 && base.max_len() == 0) return NCPoly(base.constant().pow(n));
            if (base.size() == 1 && base.max_len() == 1 && base.begin()->second.is_one()) {
                std::string inv = A_.gens[base.begin()->first[0]].name + "i";
                if (A_.index(inv) >= 0) {
                    NCPoly r(1);
                    for (long k = 0; k < -n; ++k) r = r * A_.g(inv);
                    return r;
                }
            }
            fail("negative power of a non-invertible element");
        }
        NCPoly r(1);
        for (long k = 0; k < n; ++k) r = r * base;
        return r;
    }
};

inline NCPoly parse_expr(const std::string& text, const Presentation& A) { return ExprParser(text, A).run(); }

}  // namespace qdom

#endif
