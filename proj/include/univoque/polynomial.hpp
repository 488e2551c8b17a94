#pragma once

#include <univoque/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace univoque {

/// Dense univariate polynomial with rational coefficients, c[i] = coefficient of x^i.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const Rat& v) { return Poly(std::vector<Rat>{v}); }

    /// Builds from integer coefficients listed high-to-low (the CLI/base-spec order).
    static Poly from_int_coeffs_desc(const std::vector<Int>& desc) {
        std::vector<Rat> c(desc.size());
        for (size_t i = 0; i < desc.size(); ++i) c[desc.size() - 1 - i] = Rat(desc[i]);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(size_t i) const { return c_[i]; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const { return c_.back(); }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    int sign_at(const Rat& x) const { return eval(x).sign(); }

    /// Enclosure of the range over [lo,hi]; requires lo >= 0 (bases live in (1, M+1]).
    std::pair<Rat, Rat> eval_interval(const Rat& lo, const Rat& hi) const {
        Rat a = 0, b = 0;
        Rat plo = 1, phi = 1;
        for (size_t i = 0; i < c_.size(); ++i) {
            const Rat& ci = c_[i];
            if (ci > 0) {
                a += ci * plo;
                b += ci * phi;
            } else if (ci < 0) {
                a += ci * phi;
                b += ci * plo;
            }
            plo *= lo;
            phi *= hi;
        }
        return {a, b};
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rat> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(Int(i));
        return Poly(std::move(d));
    }

    Poly operator-() const {
        std::vector<Rat> d(c_);
        for (auto& v : d) v = -v;
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> d(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
        return Poly(std::move(d));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> d(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(d));
    }

    friend Poly operator*(const Poly& a, const Rat& s) {
        std::vector<Rat> d(a.c_);
        for (auto& v : d) v *= s;
        return Poly(std::move(d));
    }

    /// Euclidean division; returns {quotient, remainder}.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        std::vector<Rat> rem(a.c_);
        const int db = b.degree();
        if (a.degree() < db) return {Poly(), a};
        std::vector<Rat> quo(a.degree() - db + 1, Rat(0));
        for (int i = a.degree(); i >= db; --i) {
            if (rem[static_cast<size_t>(i)] == 0) continue;
            Rat f = rem[static_cast<size_t>(i)] / b.leading();
            quo[static_cast<size_t>(i - db)] = f;
            for (int j = 0; j <= db; ++j)
                rem[static_cast<size_t>(i - db + j)] -= f * b.c_[static_cast<size_t>(j)];
        }
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (Rat(1) / leading());
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r).monic(); // monicize to tame coefficient growth
        }
        return a.monic();
    }

    Poly squarefree_part() const {
        if (degree() <= 1) return monic();
        Poly g = gcd(*this, derivative());
        if (g.degree() <= 0) return monic();
        return divmod(*this, g).first.monic();
    }

    /// Clears denominators and content; leading coefficient made positive.
    Poly primitive_integer() const {
        if (is_zero()) return *this;
        Int lcm = 1;
        for (const auto& v : c_) lcm = boost::multiprecision::lcm(lcm, rat_den(v));
        std::vector<Int> n(c_.size());
        Int g = 0;
        for (size_t i = 0; i < c_.size(); ++i) {
            n[i] = rat_num(c_[i]) * (lcm / rat_den(c_[i]));
            g = boost::multiprecision::gcd(g, n[i]);
        }
        if (g == 0) g = 1;
        if (n.back() < 0) g = -g;
        std::vector<Rat> d(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) d[i] = Rat(n[i] / g);
        return Poly(std::move(d));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += c_[i] > 0 ? " + " : " - ";
            else if (c_[i] < 0) s += "-";
            Rat a = c_[i] < 0 ? Rat(-c_[i]) : c_[i];
            if (a != 1 || i == 0) s += rat_to_string(a);
            if (i > 0) {
                if (a != 1) s += "*";
                s += "x";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

/// Sturm chain of a squarefree polynomial. Members are rescaled by positive
/// constants only, which leaves every sign variation count intact.
inline std::vector<Poly> sturm_chain(const Poly& f) {
    std::vector<Poly> chain;
    chain.push_back(f);
    chain.push_back(f.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        Poly r = Poly::divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        Poly next = -r;
        Rat lead = next.leading() < 0 ? Rat(-next.leading()) : next.leading();
        chain.push_back(next * (Rat(1) / lead));
    }
    return chain;
}

inline int sturm_variations(const std::vector<Poly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.is_zero() ? 0 : p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

inline int sturm_variations_at_neg_inf(const std::vector<Poly>& chain) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int s = p.leading().sign();
        if (p.degree() % 2 == 1) s = -s;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

/// Number of distinct real roots in (lo, hi]. The chain must come from a squarefree poly.
inline int sturm_count(const std::vector<Poly>& chain, const Rat& lo, const Rat& hi) {
    return sturm_variations(chain, lo) - sturm_variations(chain, hi);
}

namespace detail {

inline std::vector<Int> small_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> out;
    if (n == 0) return out;
    // trial division; constant terms of companion polynomials are tiny
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            out.push_back(n / d);
        }
        if (d > 1000000) break; // give up on huge constants; callers fall back gracefully
    }
    return out;
}

} // namespace detail

/// Strips all rational roots out of an integer-primitive polynomial.
/// Returns the stripped polynomial; the roots found are appended to `roots`.
inline Poly strip_rational_roots(Poly f, std::vector<Rat>& roots) {
    f = f.primitive_integer();
    // factor out powers of x
    while (!f.is_zero() && f.degree() >= 1 && f.coeff(0) == 0) {
        std::vector<Rat> d(f.coeffs().begin() + 1, f.coeffs().end());
        roots.push_back(Rat(0));
        f = Poly(std::move(d));
    }
    if (f.degree() < 1) return f;
    bool changed = true;
    while (changed && f.degree() >= 1) {
        changed = false;
        auto ps = detail::small_divisors(rat_num(f.coeff(0)));
        auto qs = detail::small_divisors(rat_num(f.leading()));
        for (const auto& p : ps) {
            for (const auto& q : qs) {
                for (int s = 0; s < 2 && f.degree() >= 1; ++s) {
                    Rat cand = s == 0 ? Rat(p, q) : Rat(-p, q);
                    while (f.degree() >= 1 && f.eval(cand) == 0) {
                        Poly lin(std::vector<Rat>{-cand, Rat(1)});
                        f = Poly::divmod(f, lin).first.primitive_integer();
                        roots.push_back(cand);
                        changed = true;
                    }
                }
            }
            if (f.degree() < 1) break;
        }
    }
    return f.primitive_integer();
}

} // namespace univoque
