#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "goodmap/errors.hpp"

namespace goodmap {

// Exponent vector; the length is fixed by the ambient ring context.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : exp_(static_cast<std::size_t>(nvars), 0u) {}
    explicit Monomial(std::vector<unsigned> exps) : exp_(std::move(exps)) {}

    static Monomial variable(int nvars, int index, unsigned power = 1) {
        Monomial m(nvars);
        m.exp_[static_cast<std::size_t>(index)] = power;
        return m;
    }

    int nvars() const { return static_cast<int>(exp_.size()); }
    unsigned operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
    unsigned& operator[](int i) { return exp_[static_cast<std::size_t>(i)]; }
    const std::vector<unsigned>& exponents() const { return exp_; }

    long total_degree() const {
        return std::accumulate(exp_.begin(), exp_.end(), 0L,
                               [](long a, unsigned b) { return a + static_cast<long>(b); });
    }

    long degree_on(int first, int count) const {
        long d = 0;
        for (int i = first; i < first + count; ++i) d += exp_[static_cast<std::size_t>(i)];
        return d;
    }

    bool is_one() const {
        return std::all_of(exp_.begin(), exp_.end(), [](unsigned e) { return e == 0; });
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exp_.size(); ++i)
            if (exp_[i] > other.exp_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] += other.exp_[i];
        return r;
    }

    // this / other; requires other.divides(*this).
    Monomial operator/(const Monomial& other) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] -= other.exp_[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exp_.size(); ++i) r.exp_[i] = std::max(r.exp_[i], b.exp_[i]);
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exp_.size(); ++i)
            if (a.exp_[i] != 0 && b.exp_[i] != 0) return false;
        return true;
    }

    bool operator==(const Monomial& other) const { return exp_ == other.exp_; }

    // Canonical storage comparison (plain lex); independent of the monomial
    // order a particular algorithm runs under.
    static int lex_cmp(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exp_.size(); ++i) {
            if (a.exp_[i] != b.exp_[i]) return a.exp_[i] < b.exp_[i] ? -1 : 1;
        }
        return 0;
    }

private:
    std::vector<unsigned> exp_;
};

// A total order on monomials compatible with multiplication and well-founded.
// Block{k} compares graded-reverse-lexicographically on the first k variables,
// breaking ties on the remaining ones; it eliminates the first k variables.
class MonomialOrder {
public:
    enum class Kind : std::uint8_t { Lex, GrevLex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
    static MonomialOrder block(int first_block_size) { return MonomialOrder(Kind::Block, first_block_size); }

    Kind kind() const { return kind_; }
    int block_size() const { return block_; }

    // <0, 0, >0 as a < b, a == b, a > b.
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::Lex:
                return Monomial::lex_cmp(a, b);
            case Kind::GrevLex:
                return grevlex_cmp(a, b, 0, a.nvars());
            case Kind::Block: {
                int c = grevlex_cmp(a, b, 0, block_);
                if (c != 0) return c;
                return grevlex_cmp(a, b, block_, a.nvars() - block_);
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && block_ == o.block_; }
    bool operator<(const MonomialOrder& o) const {
        if (kind_ != o.kind_) return static_cast<int>(kind_) < static_cast<int>(o.kind_);
        return block_ < o.block_;
    }

private:
    MonomialOrder(Kind kind, int block) : kind_(kind), block_(block) {}

    static int grevlex_cmp(const Monomial& a, const Monomial& b, int first, int count) {
        long da = a.degree_on(first, count);
        long db = b.degree_on(first, count);
        if (da != db) return da < db ? -1 : 1;
        // Equal degree: reverse lex, i.e. smaller exponent on the last
        // differing variable wins.
        for (int i = first + count - 1; i >= first; --i) {
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }

    Kind kind_;
    int block_;
};

}  // namespace goodmap
