#ifndef QDOM_SCALAR_HPP
#define QDOM_SCALAR_HPP

#include "zpoly.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace qdom {

struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};
struct EvaluationError : std::domain_error {
    using std::domain_error::domain_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of Q(v), q = v^4. Canonical: num and den coprime, integer contents
// coprime, den has positive leading coefficient.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long k) : num_(k), den_(1) {}
    explicit Scalar(const Int& k) : num_(k), den_(1) {}
    Scalar(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }
    static Scalar rational(long a, long b) { return Scalar(ZPoly(a), ZPoly(b)); }

    // v^k, k any integer; q^{k/4}
    static Scalar vpow(int k) {
        Scalar s;
        if (k >= 0) s.num_ = ZPoly::monomial(1, k);
        else { s.num_ = ZPoly(1); s.den_ = ZPoly::monomial(1, -k); }
        return s;
    }
    static Scalar q() { return vpow(4); }
    static Scalar qpow(int k) { return vpow(4 * k); }  // q^k
    static Scalar qhalf(int k) { return vpow(2 * k); } // q^{k/2}

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }
    bool is_zero() const { return num_.zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_int() const { return den_.is_one() && num_.deg() <= 0; }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // arbitrary but total, used for sorted containers only
    bool operator<(const Scalar& o) const {
        if (den_ != o.den_) return den_ < o.den_;
        return num_ < o.num_;
    }

    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
        if (a.den_.is_monomial() && b.den_.is_monomial()) {
            // lcm of c1 v^k1 and c2 v^k2
            int k = std::max(a.den_.deg(), b.den_.deg());
            Int l;
            mpz_lcm(l.get_mpz_t(), a.den_.lead().get_mpz_t(), b.den_.lead().get_mpz_t());
            ZPoly na = a.num_.shift(k - a.den_.deg());
            na *= Int(l / a.den_.lead());
            ZPoly nb = b.num_.shift(k - b.den_.deg());
            nb *= Int(l / b.den_.lead());
            return Scalar(na + nb, ZPoly::monomial(l, k));
        }
        ZPoly g = gcd_prim(a.den_, b.den_);
        ZPoly ad = divexact(a.den_, g), bd = divexact(b.den_, g);
        return Scalar(a.num_ * bd + b.num_ * ad, a.den_ * bd);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        if (a.den_.is_one() && b.den_.is_one()) {
            Scalar r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    Scalar inv() const {
        if (is_zero()) throw ArithmeticError("division by zero scalar");
        return Scalar(den_, num_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw ArithmeticError("division by zero scalar");
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    Scalar pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Scalar r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    // value at v = q0^{1/4}
    std::complex<double> eval(double q0) const {
        if (!(q0 > 0)) throw EvaluationError("q0 must be positive");
        long double v = std::pow((long double)q0, 0.25L);
        // powers of v are split off first, they never vanish at v > 0
        auto horner = [v](const ZPoly& p) {
            long double r = 0;
            for (int i = p.deg(); i >= std::max(p.val(), 0); --i) r = r * v + (long double)p.c[i].get_d();
            return r;
        };
        if (num_.zero()) return {0.0, 0.0};
        long double n = horner(num_), d = horner(den_);
        long double scale = 0;
        for (auto& x : den_.c) scale = std::max(scale, (long double)std::fabs(x.get_d()));
        if (std::fabs((double)d) <= 1e-13 * (double)scale)
            throw EvaluationError("pole at q0");
        return {(double)(n / d * std::pow(v, (long double)(num_.val() - den_.val()))), 0.0};
    }
    double evald(double q0) const { return eval(q0).real(); }

    std::string str() const;
    static Scalar parse(const std::string& text);

private:
    ZPoly num_, den_;

    void canonicalize() {
        if (den_.zero()) throw ArithmeticError("zero denominator");
        if (num_.zero()) { den_ = ZPoly(1); return; }
        if (!den_.is_one()) {
            ZPoly g;
            if (den_.is_monomial() || num_.is_monomial()) {
                int k = std::min(den_.val(), num_.val());
                if (k > 0) {
                    num_ = num_.shift(-k);
                    den_ = den_.shift(-k);
                }
            } else {
                g = gcd_prim(num_, den_);
                if (g.deg() > 0) {
                    num_ = divexact(num_, g);
                    den_ = divexact(den_, g);
                }
            }
        }
        Int cn = num_.content(), cd = den_.content();
        Int g;
        mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
        if (g != 1) {
            num_.divexact(g);
            den_.divexact(g);
        }
        if (den_.lead() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
};

inline Scalar canonicalize(ZPoly num, ZPoly den) { return Scalar(std::move(num), std::move(den)); }

// q-number helpers
inline Scalar qp(int k) { return Scalar::qpow(k); }

namespace detail {

inline std::string render_qexp(int vexp) {
    // vexp/4 as q exponent
    if (vexp == 0) return "";
    if (vexp == 4) return "q";
    int g = std::gcd(std::abs(vexp), 4);
    int n = vexp / g, d = 4 / g;
    if (d == 1 && n > 0) return "q^" + std::to_string(n);
    if (d == 1) return "q^{" + std::to_string(n) + "}";
    return "q^{" + std::to_string(n) + "/" + std::to_string(d) + "}";
}

// Render sum_i c_i v^{i+shift} / den (den a positive integer)
inline std::string render_terms(const ZPoly& p, int shift, const Int& den) {
    std::string out;
    bool first = true;
    for (size_t i = 0; i < p.c.size(); ++i) {
        Int a = p.c[i];
        if (a == 0) continue;
        int e = int(i) + shift;
        bool neg = a < 0;
        if (neg) a = -a;
        mpq_class r(a, den);
        r.canonicalize();
        std::string coef = r.get_str();
        std::string mon = render_qexp(e);
        std::string term;
        if (mon.empty()) term = coef;
        else if (coef == "1") term = mon;
        else term = coef + "*" + mon;
        if (first) out += neg ? "-" + term : term;
        else out += (neg ? "-" : "+") + term;
        first = false;
    }
    return first ? "0" : out;
}

}  // namespace detail

inline std::string Scalar::str() const {
    if (is_zero()) return "0";
    if (den_.is_monomial()) return detail::render_terms(num_, -den_.deg(), den_.lead());
    std::string n = detail::render_terms(num_, 0, Int(1));
    std::string d = detail::render_terms(den_, 0, Int(1));
    return "(" + n + ")/(" + d + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace detail {

// Recursive-descent parser for scalar expressions in q:
//   expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary | implicit)* ;
//   unary := '-' unary | power ; power := atom ('^' exponent)? ;
//   atom := integer | 'q' | '(' expr ')' ; exponent := int | '{' frac '}' | '(' frac ')' | '-' int
class ScalarParser {
public:
    explicit ScalarParser(const std::string& s) : s_(s) {}
    Scalar run() {
        Scalar r = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    const std::string& s_;
    size_t i_ = 0;

    [[noreturn]] void fail(const std::string& m) {
        throw ParseError("scalar parse error at " + std::to_string(i_) + ": " + m);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool eat(char c) {
        if (peek(c)) { ++i_; return true; }
        return false;
    }
    Scalar expr() {
        Scalar r = term();
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }
    Scalar term() {
        Scalar r = unary();
        for (;;) {
            if (eat('*')) r *= unary();
            else if (eat('/')) r /= unary();
            else if (peek('(') || peek('q')) r *= unary();
            else return r;
        }
    }
    Scalar unary() {
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
    // returns exponent as a fraction num/den
    std::pair<long, long> frac() {
        long sg = 1;
        if (eat('-')) sg = -1;
        long n = integer(), d = 1;
        if (eat('/')) d = integer();
        if (d == 0) fail("zero denominator in exponent");
        return {sg * n, d};
    }
    std::pair<long, long> exponent() {
        if (eat('{')) {
            auto f = frac();
            if (!eat('}')) fail("expected }");
            return f;
        }
        if (eat('(')) {
            auto f = frac();
            if (!eat(')')) fail("expected )");
            return f;
        }
        long sg = 1;
        if (eat('-')) sg = -1;
        return {sg * integer(), 1};
    }
    Scalar atom() {
        skip();
        if (eat('(')) {
            Scalar r = expr();
            if (!eat(')')) fail("expected )");
            return r;
        }
        if (eat('q')) return Scalar::q();
        if (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) {
            size_t st = i_;
            while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) ++i_;
            return Scalar(Int(s_.substr(st, i_ - st)));
        }
        fail("unexpected character");
    }
    Scalar power() {
        skip();
        bool isq = i_ < s_.size() && s_[i_] == 'q';
        Scalar b = atom();
        if (eat('^')) {
            auto [n, d] = exponent();
            if (isq) {
                if ((4 * n) % d != 0) fail("q exponent must be a multiple of 1/4");
                return Scalar::vpow(int(4 * n / d));
            }
            if (d != 1) fail("fractional exponent on non-q base");
            return b.pow(n);
        }
        return b;
    }
};

}  // namespace detail

inline Scalar Scalar::parse(const std::string& text) { return detail::ScalarParser(text).run(); }

}  // namespace qdom

#endif
