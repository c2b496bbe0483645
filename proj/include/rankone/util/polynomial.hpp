#ifndef RANKONE_UTIL_POLYNOMIAL_HPP
#define RANKONE_UTIL_POLYNOMIAL_HPP

#include <algorithm>
#include <complex>
#include <map>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "rankone/util/rational.hpp"

namespace rankone {

// coefficient conversion used by mixed-type evaluation
template <typename V, typename C>
V coeff_as(const C& c) {
    if constexpr (std::is_same_v<C, Rational> && !std::is_same_v<V, Rational>)
        return V(c.to_double());
    else
        return V(c);
}

// Multivariate polynomial over a coefficient ring C (Rational, double,
// complex<double>). Monomials keyed by exponent vectors of fixed length.
template <typename C>
class Polynomial {
public:
    using Expo = std::vector<int>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const C& value) {
        Polynomial p(nvars);
        if (!(value == C{})) p.terms_[Expo(nvars, 0)] = value;
        return p;
    }

    static Polynomial variable(int nvars, int index, const C& coeff = C(1)) {
        Polynomial p(nvars);
        Expo e(nvars, 0);
        e[index] = 1;
        p.terms_[e] = coeff;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, C>& terms() const { return terms_; }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;  // -1 for the zero polynomial
    }

    void add_term(const Expo& e, const C& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!(c == C{})) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == C{}) terms_.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, C{} - c);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        Polynomial r(nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Expo e(nvars_);
                for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }

    Polynomial scaled(const C& s) const {
        Polynomial r(nvars_);
        if (s == C{}) return r;
        for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
        return r;
    }

    Polynomial derivative(int var) const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Expo de = e;
            de[var] -= 1;
            r.add_term(de, c * C(e[var]));
        }
        return r;
    }

    template <typename V>
    V evaluate(const std::vector<V>& x) const {
        if (static_cast<int>(x.size()) != nvars_)
            throw std::invalid_argument("Polynomial::evaluate: wrong arity");
        V acc{};
        for (const auto& [e, c] : terms_) {
            V t = coeff_as<V>(c);
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    // map coefficients into another ring
    template <typename D, typename F>
    Polynomial<D> map(F f) const {
        Polynomial<D> r(nvars_);
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

private:
    int nvars_;
    std::map<Expo, C> terms_;
};

}  // namespace rankone

#endif
