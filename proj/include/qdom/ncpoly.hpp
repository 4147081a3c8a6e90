#ifndef QDOM_NCPOLY_HPP
#define QDOM_NCPOLY_HPP

#include "scalar.hpp"

#include <map>
#include <string>

namespace qdom {

using Letter = unsigned char;
using Word = std::basic_string<Letter>;

inline Word word(std::initializer_list<int> l) {
    Word w;
    for (int x : l) w.push_back(Letter(x));
    return w;
}

// Finite map Word -> Scalar; zero coefficients are never stored.
class NCPoly {
public:
    using Map = std::map<Word, Scalar>;

    NCPoly() = default;
    explicit NCPoly(const Scalar& c) { if (!c.is_zero()) t_.emplace(Word(), c); }
    explicit NCPoly(long c) : NCPoly(Scalar(c)) {}
    static NCPoly of(const Word& w, const Scalar& c = Scalar(1)) {
        NCPoly p;
        p.add(w, c);
        return p;
    }
    static NCPoly gen(int g, const Scalar& c = Scalar(1)) { return of(Word(1, Letter(g)), c); }

    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    auto begin() const { return t_.begin(); }
    auto end() const { return t_.end(); }

    void add(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = t_.find(w);
        if (it == t_.end()) {
            t_.emplace(w, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
    Scalar coeff(const Word& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? Scalar(0) : it->second;
    }
    Scalar constant() const { return coeff(Word()); }
    size_t max_len() const {
        size_t m = 0;
        for (auto& [w, c] : t_) m = std::max(m, w.size());
        return m;
    }

    bool operator==(const NCPoly& o) const { return t_ == o.t_; }
    bool operator!=(const NCPoly& o) const { return t_ != o.t_; }

    NCPoly& operator+=(const NCPoly& o) {
        for (auto& [w, c] : o.t_) add(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (auto& [w, c] : o.t_) add(w, -c);
        return *this;
    }
    NCPoly operator-() const {
        NCPoly r = *this;
        for (auto& [w, c] : r.t_) c = -c;
        return r;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    // free (concatenation) product; no rewriting
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        for (auto& [wa, ca] : a.t_)
            for (auto& [wb, cb] : b.t_) r.add(wa + wb, ca * cb);
        return r;
    }
    friend NCPoly operator*(const Scalar& k, const NCPoly& a) {
        NCPoly r;
        if (k.is_zero()) return r;
        for (auto& [w, c] : a.t_) r.t_.emplace(w, k * c);
        return r;
    }
    NCPoly& operator*=(const Scalar& k) { return *this = k * *this; }

private:
    Map t_;
};

}  // namespace qdom

#endif
