#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "goodmap/errors.hpp"
#include "goodmap/monomial.hpp"
#include "goodmap/rational.hpp"

namespace goodmap {

// Multivariate polynomial over an exact field K. Terms are kept sorted by a
// fixed canonical order (descending plain lex) with no zero coefficients, so
// equality is structural. Monomial orders enter only through the algorithms.
template <class K>
class Polynomial {
public:
    using Term = std::pair<Monomial, K>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const K& c) {
        Polynomial p(nvars);
        if (!FieldOps<K>::is_zero(c)) p.terms_.emplace_back(Monomial(nvars), c);
        return p;
    }
    static Polynomial variable(int nvars, int index, unsigned power = 1) {
        Polynomial p(nvars);
        p.terms_.emplace_back(Monomial::variable(nvars, index, power), FieldOps<K>::one());
        return p;
    }
    static Polynomial from_terms(int nvars, std::vector<Term> terms) {
        Polynomial p(nvars);
        std::map<Monomial, K, CanonGreater> acc;
        for (auto& [m, c] : terms) acc[m] = acc.count(m) ? K(acc[m] + c) : c;
        for (auto& [m, c] : acc)
            if (!FieldOps<K>::is_zero(c)) p.terms_.emplace_back(m, c);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    bool is_nonzero_constant() const { return terms_.size() == 1 && terms_[0].first.is_one(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    long total_degree() const {
        long d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    long degree_in(int var) const {
        long d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[var]));
        return d;
    }

    // Largest term with respect to `ord`; polynomial must be nonzero.
    const Term& leading_term(const MonomialOrder& ord) const {
        const Term* best = &terms_.front();
        for (const auto& t : terms_)
            if (ord.cmp(t.first, best->first) > 0) best = &t;
        return *best;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r(nvars_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = Monomial::lex_cmp(terms_[i].first, o.terms_[j].first);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                K s = terms_[i].second + o.terms_[j].second;
                if (!FieldOps<K>::is_zero(s)) r.terms_.emplace_back(terms_[i].first, s);
                ++i, ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        std::map<Monomial, K, CanonGreater> acc;
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m = ma * mb;
                auto it = acc.find(m);
                if (it == acc.end()) {
                    acc.emplace(std::move(m), K(ca * cb));
                } else {
                    it->second += ca * cb;
                }
            }
        }
        Polynomial r(nvars_);
        for (auto& [m, c] : acc)
            if (!FieldOps<K>::is_zero(c)) r.terms_.emplace_back(m, c);
        return r;
    }

    Polynomial scaled(const K& c) const {
        if (FieldOps<K>::is_zero(c)) return Polynomial(nvars_);
        Polynomial r = *this;
        for (auto& [m, k] : r.terms_) k *= c;
        return r;
    }

    Polynomial times_term(const Monomial& m, const K& c) const {
        if (FieldOps<K>::is_zero(c)) return Polynomial(nvars_);
        Polynomial r(nvars_);
        r.terms_.reserve(terms_.size());
        for (const auto& [tm, tc] : terms_) r.terms_.emplace_back(tm * m, K(tc * c));
        return r;
    }

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    K eval(const std::vector<K>& point) const {
        K total = FieldOps<K>::zero();
        for (const auto& [m, c] : terms_) {
            K v = c;
            for (int i = 0; i < nvars_; ++i)
                for (unsigned e = 0; e < m[i]; ++e) v *= point[static_cast<std::size_t>(i)];
            total += v;
        }
        return total;
    }

    // Re-index variables: old variable i becomes new_index[i] (all >= 0) in a
    // ring with new_nvars variables; -1 asserts the variable does not occur.
    Polynomial map_vars(const std::vector<int>& new_index, int new_nvars) const {
        Polynomial r(new_nvars);
        r.terms_.reserve(terms_.size());
        std::vector<Term> raw;
        raw.reserve(terms_.size());
        for (const auto& [m, c] : terms_) {
            Monomial nm(new_nvars);
            for (int i = 0; i < nvars_; ++i) {
                if (m[i] == 0) continue;
                if (new_index[static_cast<std::size_t>(i)] < 0)
                    throw MisuseError("map_vars: dropped variable occurs in polynomial");
                nm[new_index[static_cast<std::size_t>(i)]] = m[i];
            }
            raw.emplace_back(std::move(nm), c);
        }
        return from_terms(new_nvars, std::move(raw));
    }

    // True if only variables with index >= first occur.
    bool supported_on_tail(int first) const {
        for (const auto& [m, c] : terms_)
            for (int i = 0; i < first; ++i)
                if (m[i] != 0) return false;
        return true;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = FieldOps<K>::str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) out += "-", cs = cs.substr(1);
            } else {
                out += neg ? " - " : " + ";
                if (neg) cs = cs.substr(1);
            }
            first = false;
            std::string vars;
            for (int i = 0; i < nvars_; ++i) {
                if (m[i] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += names[static_cast<std::size_t>(i)];
                if (m[i] > 1) vars += "^" + std::to_string(m[i]);
            }
            if (vars.empty()) {
                out += cs;
            } else if (cs == "1") {
                out += vars;
            } else {
                out += cs + "*" + vars;
            }
        }
        return out;
    }

private:
    struct CanonGreater {
        bool operator()(const Monomial& a, const Monomial& b) const {
            return Monomial::lex_cmp(a, b) > 0;
        }
    };

    int nvars_;
    std::vector<Term> terms_;
};

using Poly = Polynomial<Rational>;

// Default variable names x1..xn used when no ring names are declared.
inline std::vector<std::string> default_var_names(int nvars) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(nvars));
    for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

}  // namespace goodmap
