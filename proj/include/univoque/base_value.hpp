#pragma once

#include <univoque/errors.hpp>
#include <univoque/polynomial.hpp>
#include <univoque/rational.hpp>

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

namespace univoque {

enum class BaseKind { Rational, Algebraic, DigitStream };

/// Enclosure with exact rational endpoints; width <= 2^(1-precision) by contract.
struct DyadicInterval {
    Rat lo, hi;
    int precision = 0;
    Rat width() const { return hi - lo; }
    double midpoint() const { return to_double((lo + hi) / 2); }
};

namespace detail {

struct ExpansionCacheSlot {
    std::shared_ptr<const void> data;
    int depth = -1;
};

struct BaseImpl {
    BaseKind kind = BaseKind::Rational;
    int alphabet_m = 1;

    // Rational
    Rat value;

    // Algebraic: squarefree defining polynomial with all rational roots stripped.
    Poly defining;
    bool minimal = false; // known irreducible over Q
    int sign_at_lo = 0;   // sign of defining at the current lower endpoint

    // DigitStream: digits(i) for i >= 1 define the base via 1 = sum digits(i) q^-i.
    std::function<int(std::uint64_t)> stream_digit;
    std::string stream_name;
    bool stream_is_alpha_of_one = false;

    // value-level identity: equal keys denote the same real number
    std::string identity_key;

    mutable std::mutex mu;
    mutable Rat lo, hi;
    mutable std::uint64_t stream_digits_used = 0;
    mutable ExpansionCacheSlot alpha_beta_cache;
    mutable std::shared_ptr<const void> j_sup_cache;
};

} // namespace detail

/// An exactly represented base q in (1, M+1]. Immutable value semantics; the
/// internal enclosure cache only ever shrinks and is safe for concurrent use.
class BaseValue {
public:
    BaseValue() : impl_(std::make_shared<detail::BaseImpl>()) { impl_->value = 2; }

    BaseKind kind() const { return impl_->kind; }
    int alphabet_m() const { return impl_->alphabet_m; }

    bool is_exact() const { return impl_->kind != BaseKind::DigitStream; }

    const Rat& rational_value() const {
        if (impl_->kind != BaseKind::Rational) throw Error("base is not rational");
        return impl_->value;
    }

    const Poly& defining_polynomial() const {
        if (impl_->kind != BaseKind::Algebraic) throw Error("base has no defining polynomial");
        return impl_->defining;
    }

    bool defining_known_minimal() const {
        return impl_->kind == BaseKind::Algebraic && impl_->minimal;
    }

    /// Field degree for Q(q) elements: 1 for rational bases.
    size_t field_degree() const {
        switch (impl_->kind) {
        case BaseKind::Rational: return 1;
        case BaseKind::Algebraic: return static_cast<size_t>(impl_->defining.degree());
        default: throw UnsupportedBase("digit-stream bases carry no finite field structure");
        }
    }

    /// Current enclosure without extra refinement work.
    std::pair<Rat, Rat> enclosure() const {
        if (impl_->kind == BaseKind::Rational) return {impl_->value, impl_->value};
        std::lock_guard<std::mutex> lock(impl_->mu);
        return {impl_->lo, impl_->hi};
    }

    double approx() const {
        if (impl_->kind == BaseKind::Rational) return to_double(impl_->value);
        int bits = impl_->kind == BaseKind::Algebraic ? 48 : 24;
        auto [lo, hi] = refine_to_width(Rat(1, Int(1) << bits));
        return to_double((lo + hi) / 2);
    }

    std::string describe() const {
        switch (impl_->kind) {
        case BaseKind::Rational: return rat_to_string(impl_->value);
        case BaseKind::Algebraic:
            return "root of " + impl_->defining.to_string() + " near " + std::to_string(approx());
        default: return impl_->stream_name;
        }
    }

    const std::string& stream_name() const { return impl_->stream_name; }
    bool stream_is_alpha_of_one() const {
        return impl_->kind == BaseKind::DigitStream && impl_->stream_is_alpha_of_one;
    }
    int stream_digit(std::uint64_t i) const {
        if (impl_->kind != BaseKind::DigitStream) throw Error("base is not digit-stream defined");
        return impl_->stream_digit(i);
    }

    /// Shrinks the cached enclosure below `width` and returns a copy of it.
    std::pair<Rat, Rat> refine_to_width(const Rat& width) const {
        if (impl_->kind == BaseKind::Rational) return {impl_->value, impl_->value};
        std::lock_guard<std::mutex> lock(impl_->mu);
        if (impl_->kind == BaseKind::Algebraic) {
            while (impl_->hi - impl_->lo > width) bisect_algebraic_locked();
        } else {
            while (impl_->hi - impl_->lo > width) {
                if (!bisect_stream_locked()) break;
            }
        }
        return {impl_->lo, impl_->hi};
    }

    /// Value identity: separately constructed descriptions of the same number
    /// (same kind, alphabet and defining data) compare equal.
    bool operator==(const BaseValue& o) const {
        return impl_ == o.impl_ || impl_->identity_key == o.impl_->identity_key;
    }

    detail::BaseImpl& impl() const { return *impl_; }

private:
    friend BaseValue base_from_rational(const Rat& v, int M);
    friend BaseValue base_from_polynomial(const std::vector<Int>& coeffs_desc, const Rat& lo,
                                          const Rat& hi, int M);
    friend BaseValue base_from_digit_stream(std::function<int(std::uint64_t)> digits, int M,
                                            std::string name, bool is_alpha_of_one);

    void bisect_algebraic_locked() const {
        Rat mid = (impl_->lo + impl_->hi) / 2;
        int s = impl_->defining.sign_at(mid);
        // rational roots were stripped at construction, so s != 0
        if (s == impl_->sign_at_lo) impl_->lo = mid;
        else impl_->hi = mid;
    }

    /// One bisection step driven by partial sums of the defining digit series.
    /// Returns false if the digit budget could not separate the midpoint.
    bool bisect_stream_locked() const {
        const int M = impl_->alphabet_m;
        Rat mid = (impl_->lo + impl_->hi) / 2;
        Rat s = 0, p = 1;
        const std::uint64_t budget = 4096;
        for (std::uint64_t i = 1; i <= budget; ++i) {
            p /= mid;
            s += Rat(impl_->stream_digit(i)) * p;
            if (i > impl_->stream_digits_used) impl_->stream_digits_used = i;
            if (s > 1) { // series exceeds 1 at mid, so the true base is larger
                impl_->lo = mid;
                return true;
            }
            if ((i & 7) == 0) {
                Rat tail = Rat(M) * p / (mid - 1);
                if (s + tail < 1) {
                    impl_->hi = mid;
                    return true;
                }
            }
        }
        return false;
    }

    std::shared_ptr<detail::BaseImpl> impl_;
};

inline BaseValue base_from_rational(const Rat& v, int M) {
    if (M < 1) throw OutOfRange("alphabet bound M must be >= 1");
    if (!(v > 1 && v <= M + 1))
        throw OutOfRange("base " + rat_to_string(v) + " outside (1, " + std::to_string(M + 1) + "]");
    BaseValue b;
    b.impl_->kind = BaseKind::Rational;
    b.impl_->alphabet_m = M;
    b.impl_->value = v;
    b.impl_->lo = b.impl_->hi = v;
    b.impl_->minimal = true;
    b.impl_->identity_key = "rat:" + std::to_string(M) + ":" + rat_to_string(v);
    return b;
}

inline BaseValue base_from_rational(const Int& num, const Int& den, int M) {
    if (den <= 0) throw OutOfRange("denominator must be positive");
    return base_from_rational(Rat(num, den), M);
}

/// Constructs the unique root of the given integer polynomial inside [lo,hi].
/// The polynomial need not be minimal; it is made squarefree and all rational
/// roots are factored out (a rational target root yields a Rational base).
inline BaseValue base_from_polynomial(const std::vector<Int>& coeffs_desc, const Rat& lo_in,
                                      const Rat& hi_in, int M) {
    if (M < 1) throw OutOfRange("alphabet bound M must be >= 1");
    Poly f0 = Poly::from_int_coeffs_desc(coeffs_desc);
    if (f0.degree() < 1) throw NotIsolating("defining polynomial must be nonconstant");
    Rat lo = lo_in, hi = hi_in;
    if (lo >= hi) throw NotIsolating("empty isolating interval");
    if (lo < 1 || hi > M + 1)
        throw OutOfRange("isolating interval must lie within [1, M+1]");

    std::vector<Rat> rational_roots;
    Poly f = strip_rational_roots(f0.squarefree_part(), rational_roots);

    int rational_in_interval = 0;
    Rat rational_root;
    for (const auto& r : rational_roots)
        if (r >= lo && r <= hi) {
            ++rational_in_interval;
            rational_root = r;
        }

    int irrational_in_interval = 0;
    std::vector<Poly> chain;
    if (f.degree() >= 1) {
        chain = sturm_chain(f);
        // endpoints are rational, and f has no rational roots left
        irrational_in_interval = sturm_count(chain, lo, hi);
    }

    if (rational_in_interval + irrational_in_interval != 1)
        throw NotIsolating("interval isolates " +
                           std::to_string(rational_in_interval + irrational_in_interval) +
                           " roots, expected exactly 1");

    if (rational_in_interval == 1) {
        if (!(rational_root > 1 && rational_root <= M + 1))
            throw OutOfRange("root " + rat_to_string(rational_root) + " outside (1, M+1]");
        return base_from_rational(rational_root, M);
    }

    // shrink until the enclosure is strictly inside (1, M+1] and endpoints are non-roots
    int s_lo = f.sign_at(lo);
    while (s_lo == 0 || sturm_count(chain, lo, hi) != 1 || lo <= 1) {
        Rat mid = (lo + hi) / 2;
        int s_mid = f.sign_at(mid);
        if (s_mid == 0) { // midpoint is a root: impossible, rational roots were stripped
            throw NotIsolating("unexpected rational root at interval midpoint");
        }
        if (sturm_count(chain, lo, mid) == 1) hi = mid;
        else lo = mid;
        s_lo = f.sign_at(lo);
        if (hi - lo == 0) throw NotIsolating("failed to shrink isolating interval");
    }

    BaseValue b;
    b.impl_->kind = BaseKind::Algebraic;
    b.impl_->alphabet_m = M;
    b.impl_->defining = f;
    b.impl_->lo = lo;
    b.impl_->hi = hi;
    b.impl_->sign_at_lo = s_lo;
    // degree 2 and 3 with no rational roots are irreducible over Q
    b.impl_->minimal = f.degree() <= 3;
    int rank = sturm_variations_at_neg_inf(chain) - sturm_variations(chain, lo);
    std::string key = "alg:" + std::to_string(M) + ":";
    for (const auto& c : f.coeffs()) key += rat_to_string(c) + ",";
    key += "#" + std::to_string(rank);
    b.impl_->identity_key = key;
    return b;
}

inline BaseValue base_from_digit_stream(std::function<int(std::uint64_t)> digits, int M,
                                        std::string name, bool is_alpha_of_one) {
    if (M < 1) throw OutOfRange("alphabet bound M must be >= 1");
    BaseValue b;
    b.impl_->kind = BaseKind::DigitStream;
    b.impl_->alphabet_m = M;
    b.impl_->stream_digit = std::move(digits);
    b.impl_->stream_name = std::move(name);
    b.impl_->stream_is_alpha_of_one = is_alpha_of_one;
    b.impl_->identity_key = "stream:" + std::to_string(M) + ":" + b.impl_->stream_name;
    b.impl_->lo = Rat(M + 2, 2); // the base exceeds the generalized golden ratio
    b.impl_->hi = M + 1;
    return b;
}

/// Shrinks the enclosure to width <= 2^(1-precision) and reports it.
/// Nested across calls: finer precision always returns a sub-interval.
inline DyadicInterval refine_interval(const BaseValue& b, int precision_bits) {
    if (precision_bits < 1) throw OutOfRange("precision must be >= 1");
    Rat w = Rat(1, Int(1) << std::min(precision_bits + 1, 1 << 20));
    auto [lo, hi] = b.refine_to_width(w);
    return DyadicInterval{lo, hi, precision_bits};
}

/// Exact ordering of two bases when it can be decided by interval refinement
/// plus shared-root detection; nullopt only for undecided digit-stream cases.
/// Distinct values separate under refinement alone, so the (costly) common
/// root test runs at most once, and only when the enclosures refuse to part.
inline std::optional<int> compare_bases(const BaseValue& a, const BaseValue& b,
                                        int max_precision = 256) {
    if (a == b) return 0;
    if (a.kind() == BaseKind::Rational && b.kind() == BaseKind::Rational) {
        Rat d = a.rational_value() - b.rational_value();
        return d.sign();
    }
    bool gcd_tried = false;
    for (int bits = 8; bits <= max_precision; bits *= 2) {
        auto ia = refine_interval(a, bits);
        auto ib = refine_interval(b, bits);
        if (ia.hi < ib.lo) return -1;
        if (ib.hi < ia.lo) return 1;
        if (bits >= 128 && !gcd_tried && a.kind() == BaseKind::Algebraic &&
            b.kind() == BaseKind::Algebraic) {
            gcd_tried = true;
            Poly g = Poly::gcd(a.defining_polynomial(), b.defining_polynomial());
            if (g.degree() >= 1) {
                Rat lo = std::max(ia.lo, ib.lo), hi = std::min(ia.hi, ib.hi);
                auto chain = sturm_chain(g);
                if (lo < hi && sturm_count(chain, lo, hi) == 1) return 0;
            }
        }
    }
    return std::nullopt;
}

} // namespace univoque
