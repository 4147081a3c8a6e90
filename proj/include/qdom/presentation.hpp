#ifndef QDOM_PRESENTATION_HPP
#define QDOM_PRESENTATION_HPP

#include "linalg.hpp"
#include "ncpoly.hpp"
#include "report.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdom {

struct RewriteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline long default_step_budget() {
    if (const char* e = std::getenv("QDOM_STEP_BUDGET")) {
        long v = std::atol(e);
        if (v > 0) return v;
    }
    return 1000000;
}

struct GeneratorInfo {
    std::string name;
    bool odd = false;
    std::vector<int> degree;
    int weight = 1;    // weight in the term order
    int position = -1; // rank in the lexicographic tie-break
};

struct Rule {
    Word lhs;
    NCPoly rhs;
};

// Algebra presentation: generators, quadratic rewriting rules derived from
// the defining relations, optional involution.
class Presentation {
public:
    std::string name;
    std::vector<GeneratorInfo> gens;
    std::vector<NCPoly> relations;  // each element is zero in the algebra
    std::vector<Rule> rules;
    std::vector<NCPoly> star;       // image of each generator, empty if no involution
    long step_budget = default_step_budget();

    int ngens() const { return int(gens.size()); }
    bool has_star() const { return !star.empty(); }

    int index(const std::string& n) const {
        for (int i = 0; i < ngens(); ++i)
            if (gens[i].name == n) return i;
        return -1;
    }
    int at(const std::string& n) const {
        int i = index(n);
        if (i < 0) throw CatalogError("unknown generator " + n + " in " + name);
        return i;
    }
    NCPoly g(const std::string& n, const Scalar& c = Scalar(1)) const { return NCPoly::gen(at(n), c); }

    int weight(const Word& w) const {
        int s = 0;
        for (Letter l : w) s += gens[l].weight;
        return s;
    }
    std::vector<int> degree(const Word& w) const {
        size_t d = gens.empty() ? 0 : gens[0].degree.size();
        std::vector<int> r(d, 0);
        for (Letter l : w)
            for (size_t k = 0; k < d; ++k) r[k] += gens[l].degree[k];
        return r;
    }
    int parity(const Word& w) const {
        int p = 0;
        for (Letter l : w) p ^= gens[l].odd;
        return p;
    }
    // strict term order: weight, then lexicographic by position
    bool word_less(const Word& a, const Word& b) const {
        int wa = weight(a), wb = weight(b);
        if (wa != wb) return wa < wb;
        size_t n = std::min(a.size(), b.size());
        for (size_t i = 0; i < n; ++i)
            if (a[i] != b[i]) return gens[a[i]].position < gens[b[i]].position;
        return a.size() < b.size();
    }

    int rule_at(Letter a, Letter b) const { return rule_idx_[a * ngens() + b]; }
    // leftmost redex position >= from, or -1
    int redex(const Word& w, size_t from = 0) const {
        for (size_t i = from; i + 1 < w.size(); ++i)
            if (rule_at(w[i], w[i + 1]) >= 0) return int(i);
        return -1;
    }
    bool is_normal(const Word& w) const { return redex(w) < 0; }

    NCPoly rewrite_at(const Word& w, size_t i) const {
        int r = rule_at(w[i], w[i + 1]);
        if (r < 0) return NCPoly::of(w);
        NCPoly out;
        Word pre = w.substr(0, i), suf = w.substr(i + 2);
        for (auto& [rw, rc] : rules[r].rhs) out.add(pre + rw + suf, rc);
        return out;
    }

    NCPoly normal_form(const NCPoly& p) const;
    NCPoly mul(const NCPoly& a, const NCPoly& b) const { return normal_form(a * b); }
    NCPoly mul(std::initializer_list<NCPoly> fs) const {
        NCPoly r(1);
        for (auto& f : fs) r = normal_form(r * f);
        return r;
    }
    NCPoly pow(const NCPoly& a, int k) const {
        NCPoly r(1);
        for (int i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }
    NCPoly star_of(const NCPoly& p) const;

    // terms sorted by decreasing term order
    std::vector<std::pair<Word, Scalar>> sorted(const NCPoly& p) const {
        std::vector<std::pair<Word, Scalar>> v(p.begin(), p.end());
        std::sort(v.begin(), v.end(), [&](auto& x, auto& y) { return word_less(y.first, x.first); });
        return v;
    }
    std::string word_str(const Word& w) const {
        std::string s;
        for (size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + gens[w[i]].name;
        return s;
    }
    std::string render(const NCPoly& p) const {
        if (p.is_zero()) return "0";
        std::string s;
        for (auto& [w, c] : sorted(p)) {
            if (!s.empty()) s += " + ";
            if (w.empty()) s += "(" + c.str() + ")";
            else if (c.is_one()) s += word_str(w);
            else s += "(" + c.str() + ")*" + word_str(w);
        }
        return s;
    }

    // Orient the relations into rules and build lookup tables.
    void finalize();

    // all normal words of given length (by positions of letters)
    std::vector<Word> normal_words(int len) const {
        std::vector<Word> cur{Word()};
        for (int k = 0; k < len; ++k) {
            std::vector<Word> nxt;
            for (auto& w : cur)
                for (int g = 0; g < ngens(); ++g) {
                    if (!w.empty() && rule_at(w.back(), Letter(g)) >= 0) continue;
                    nxt.push_back(w + Letter(g));
                }
            cur.swap(nxt);
        }
        return cur;
    }
    std::vector<Word> normal_words_upto(int len) const {
        std::vector<Word> r;
        for (int k = 0; k <= len; ++k) {
            auto v = normal_words(k);
            r.insert(r.end(), v.begin(), v.end());
        }
        return r;
    }

private:
    std::vector<int> rule_idx_;
};

inline void Presentation::finalize() {
    int n = ngens();
    if (n > 250) throw CatalogError("too many generators");
    std::set<std::string> names;
    for (int i = 0; i < n; ++i) {
        if (!names.insert(gens[i].name).second) throw CatalogError("duplicate generator " + gens[i].name);
        if (gens[i].position < 0) gens[i].position = i;
        if (gens[i].weight <= 0) throw CatalogError("weights must be positive");
    }
    size_t dd = n ? gens[0].degree.size() : 0;
    for (auto& g : gens)
        if (g.degree.size() != dd) throw CatalogError("inconsistent degree vectors");

    // columns: every word occurring in a relation, by decreasing term order
    std::set<Word> ws;
    for (auto& r : relations)
        for (auto& [w, c] : r) ws.insert(w);
    std::vector<Word> cols(ws.begin(), ws.end());
    std::sort(cols.begin(), cols.end(), [&](const Word& a, const Word& b) { return word_less(b, a); });
    std::map<Word, int> col;
    for (size_t i = 0; i < cols.size(); ++i) col[cols[i]] = int(i);
    Mat<Scalar> m(relations.size(), std::vector<Scalar>(cols.size(), Scalar(0)));
    for (size_t i = 0; i < relations.size(); ++i)
        for (auto& [w, c] : relations[i]) m[i][col[w]] = c;
    auto piv = rref(m);

    rules.clear();
    rule_idx_.assign(n * n, -1);
    for (size_t r = 0; r < piv.size(); ++r) {
        const Word& lhs = cols[piv[r]];
        if (lhs.size() != 2)
            throw CatalogError(name + ": relation with leading word " + word_str(lhs) + " is not quadratic");
        NCPoly rhs;
        for (size_t c = piv[r] + 1; c < cols.size(); ++c)
            if (!m[r][c].is_zero()) rhs.add(cols[c], -m[r][c]);
        auto dl = degree(lhs);
        for (auto& [w, c] : rhs)
            if (degree(w) != dl) throw CatalogError(name + ": inhomogeneous rule for " + word_str(lhs));
        rule_idx_[lhs[0] * n + lhs[1]] = int(rules.size());
        rules.push_back({lhs, rhs});
    }
}

inline NCPoly Presentation::normal_form(const NCPoly& p) const {
    // pending terms processed from the largest in the term order; every
    // rewrite produces strictly smaller words, so merging is safe
    auto cmp = [this](const Word& a, const Word& b) { return word_less(a, b); };
    std::map<Word, Scalar, decltype(cmp)> pending(cmp);
    for (auto& [w, c] : p) {
        if (w.size() && *std::max_element(w.begin(), w.end()) >= ngens())
            throw RewriteError("unknown generator index in " + name);
        pending.emplace(w, c);
    }
    NCPoly out;
    long steps = 0;
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Word w = it->first;
        Scalar c = it->second;
        pending.erase(it);
        int i = redex(w);
        if (i < 0) {
            out.add(w, c);
            continue;
        }
        if (++steps > step_budget) throw RewriteError("step budget exceeded in " + name);
        const Rule& r = rules[rule_at(w[i], w[i + 1])];
        Word pre = w.substr(0, i), suf = w.substr(i + 2);
        for (auto& [rw, rc] : r.rhs) {
            Word nw = pre + rw + suf;
            Scalar nc = c * rc;
            auto f = pending.find(nw);
            if (f == pending.end()) pending.emplace(std::move(nw), std::move(nc));
            else {
                f->second += nc;
                if (f->second.is_zero()) pending.erase(f);
            }
        }
    }
    return out;
}

inline NCPoly Presentation::star_of(const NCPoly& p) const {
    if (!has_star()) throw CatalogError("no involution defined for " + name);
    NCPoly r;
    for (auto& [w, c] : p) {
        NCPoly t(c);
        for (size_t i = w.size(); i-- > 0;) t = t * star[w[i]];
        r += t;
    }
    return normal_form(r);
}

// Exhaustive diamond check: every word of length <= L with two or more
// redexes must give a single normal form whichever redex is rewritten first.
inline Report check_overlaps(const Presentation& A, int L) {
    Report rep("confluence:" + A.name);
    long tested = 0;
    std::string fails;
    size_t nfail = 0;
    std::vector<Word> cur{Word()};
    for (int len = 1; len <= L; ++len) {
        std::vector<Word> nxt;
        for (auto& w : cur)
            for (int g = 0; g < A.ngens(); ++g) nxt.push_back(w + Letter(g));
        cur.swap(nxt);
        if (len < 3) continue;
        for (auto& w : cur) {
            std::vector<int> rx;
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (A.rule_at(w[i], w[i + 1]) >= 0) rx.push_back(int(i));
            if (rx.size() < 2) continue;
            ++tested;
            NCPoly ref = A.normal_form(A.rewrite_at(w, rx[0]));
            for (size_t k = 1; k < rx.size(); ++k) {
                NCPoly alt = A.normal_form(A.rewrite_at(w, rx[k]));
                if (alt != ref) {
                    if (nfail++ < 5) fails += A.word_str(w) + "; ";
                    break;
                }
            }
        }
    }
    rep.add("overlaps L=" + std::to_string(L) + " (" + std::to_string(tested) + " ambiguous words)", nfail == 0,
            nfail ? std::to_string(nfail) + " divergent: " + fails : "");
    return rep;
}

}  // namespace qdom

#endif
