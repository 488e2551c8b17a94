#pragma once

#include <univoque/base_value.hpp>
#include <univoque/errors.hpp>
#include <univoque/polynomial.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace univoque {

/// An element of Q(q): rational-coefficient polynomial in q reduced modulo the
/// defining polynomial of the base (plain rational arithmetic for rational bases).
class FieldElement {
public:
    FieldElement() = default;

    FieldElement(const BaseValue& base, std::vector<Rat> coeffs)
        : base_(base), coeffs_(std::move(coeffs)) {
        if (!base.is_exact())
            throw UnsupportedBase("field elements require a rational or algebraic base");
        reduce();
    }

    static FieldElement from_rational(const BaseValue& base, const Rat& v) {
        return FieldElement(base, std::vector<Rat>{v});
    }

    static FieldElement zero(const BaseValue& base) { return from_rational(base, Rat(0)); }
    static FieldElement one(const BaseValue& base) { return from_rational(base, Rat(1)); }

    /// The base itself as a field element.
    static FieldElement q(const BaseValue& base) {
        if (base.kind() == BaseKind::Rational) return from_rational(base, base.rational_value());
        return FieldElement(base, std::vector<Rat>{Rat(0), Rat(1)});
    }

    const BaseValue& base() const { return base_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool coeffs_zero() const {
        for (const auto& c : coeffs_) if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i) if (coeffs_[i] != 0) return false;
        return true;
    }

    Rat rational_part() const { return coeffs_.empty() ? Rat(0) : coeffs_[0]; }

    FieldElement operator+(const FieldElement& o) const {
        check_same_base(o);
        std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
        return FieldElement(base_, std::move(c));
    }

    FieldElement operator-() const {
        std::vector<Rat> c(coeffs_);
        for (auto& v : c) v = -v;
        return FieldElement(base_, std::move(c));
    }

    FieldElement operator-(const FieldElement& o) const { return *this + (-o); }

    FieldElement operator*(const FieldElement& o) const {
        check_same_base(o);
        if (coeffs_.empty() || o.coeffs_.empty()) return zero(base_);
        std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
        return FieldElement(base_, std::move(c));
    }

    FieldElement operator*(const Rat& s) const {
        std::vector<Rat> c(coeffs_);
        for (auto& v : c) v *= s;
        return FieldElement(base_, std::move(c));
    }

    /// Multiplication by q (a digit step of the expansion recursions).
    FieldElement times_q() const {
        if (base_.kind() == BaseKind::Rational)
            return from_rational(base_, rational_part() * base_.rational_value());
        std::vector<Rat> c(coeffs_.size() + 1, Rat(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i];
        return FieldElement(base_, std::move(c));
    }

    FieldElement inverse() const;
    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

    bool same_representative(const FieldElement& o) const { return coeffs_ == o.coeffs_; }

    double approx() const {
        if (base_.kind() == BaseKind::Rational) return to_double(rational_part());
        auto [lo, hi] = base_.refine_to_width(Rat(1, Int(1) << 48));
        Rat mid = (lo + hi) / 2;
        return to_double(as_poly().eval(mid));
    }

    Poly as_poly() const { return Poly(coeffs_); }

private:
    void check_same_base(const FieldElement& o) const {
        if (!(base_ == o.base_)) throw Error("field elements over different bases");
    }

    void reduce() {
        if (base_.kind() == BaseKind::Rational) {
            // evaluate any higher powers at the rational value
            if (coeffs_.size() > 1) {
                Rat v = Poly(coeffs_).eval(base_.rational_value());
                coeffs_.assign(1, v);
            }
            if (coeffs_.empty()) coeffs_.assign(1, Rat(0));
            return;
        }
        const Poly& f = base_.defining_polynomial();
        size_t deg = static_cast<size_t>(f.degree());
        if (coeffs_.size() > deg) {
            Poly r = Poly::divmod(Poly(coeffs_), f).second;
            coeffs_ = r.coeffs();
        }
        coeffs_.resize(deg, Rat(0));
    }

    BaseValue base_;
    std::vector<Rat> coeffs_;
};

/// Exact sign of a field element. Zero is detected through the canonical
/// coefficient vector; for defining polynomials that are not minimal a
/// gcd-with-root check keeps the answer exact. Nonzero signs are decided by
/// refining the base enclosure until the evaluated range excludes 0.
inline int field_sign(const FieldElement& e) {
    if (e.base().kind() == BaseKind::Rational) return e.rational_part().sign();
    if (e.coeffs_zero()) return 0;
    Poly p = e.as_poly();
    if (p.is_zero()) return 0;
    if (p.degree() == 0) return p.coeff(0).sign();

    const Poly& f = e.base().defining_polynomial();
    bool gcd_checked = e.base().defining_known_minimal();
    int round = 0;
    for (;;) {
        auto [lo, hi] = e.base().enclosure();
        auto [a, b] = p.eval_interval(lo, hi);
        if (a > 0) return 1;
        if (b < 0) return -1;
        if (!gcd_checked && round >= 8) {
            Poly g = Poly::gcd(p, f);
            if (g.degree() >= 1 && g.sign_at(lo) * g.sign_at(hi) < 0) return 0;
            gcd_checked = true; // definitely nonzero from here on
        }
        e.base().refine_to_width((hi - lo) / 2);
        ++round;
    }
}

inline int compare(const FieldElement& a, const FieldElement& b) { return field_sign(a - b); }

inline FieldElement FieldElement::inverse() const {
    if (base_.kind() == BaseKind::Rational) {
        Rat v = rational_part();
        if (v == 0) throw DivisionByZero("inverse of zero");
        return from_rational(base_, Rat(1) / v);
    }
    if (field_sign(*this) == 0) throw DivisionByZero("inverse of zero");
    Poly p = as_poly();
    Poly modulus = base_.defining_polynomial();
    Poly g = Poly::gcd(p, modulus);
    if (g.degree() >= 1) {
        // the defining polynomial is not minimal; invert modulo the cofactor,
        // which still vanishes at the base value
        modulus = Poly::divmod(modulus, g).first.monic();
    }
    // extended Euclid: u*p + v*modulus = 1
    Poly r0 = modulus, r1 = p;
    Poly u0, u1 = Poly::constant(Rat(1));
    while (!r1.is_zero() && r1.degree() > 0) {
        auto [quo, rem] = Poly::divmod(r0, r1);
        Poly u2 = u0 - quo * u1;
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = u2;
    }
    if (r1.is_zero()) throw DivisionByZero("element not invertible modulo defining polynomial");
    Rat c = r1.coeff(0);
    Poly u = u1 * (Rat(1) / c);
    return FieldElement(base_, u.coeffs());
}

} // namespace univoque
