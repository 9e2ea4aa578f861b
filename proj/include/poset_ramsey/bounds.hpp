#pragma once

// Exact evaluation of the numeric upper bounds for R(P, Q_n):
//
//   claim:    k! > 2^((r+t)(n+k)) * (s-1)^(k+1)
//   spindle:  R(S_{r,s,t}, Q_n) <= n + k*, k* the least k satisfying the claim
//   gluing:   R(P1 ^ P2, Q_n) <= R(P1, Q_{R(P2, Q_n)})
//   complete multipartite: iterate the spindle bound for K_{1,t,1} l times
//   chains:   R = n + l - 1;  antichains: n <= R <= n + alpha(t)
//
// Every comparison is big-integer exact. Logarithms only enter displayed
// quantities, and those are carried as MPFR intervals with outward rounding.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "errors.hpp"
#include "poset.hpp"

namespace poset_ramsey {

using BigCount = mpz_class;
using dimension_t = std::uint64_t;

// ---------------------------------------------------------------------------
// Certified real intervals

/// Closed interval [lo, hi] of reals with MPFR endpoints; every operation
/// rounds the lower end down and the upper end up.
class Interval {
public:
    static constexpr mpfr_prec_t precision = 256;

    Interval() { init(); }
    explicit Interval(const mpz_class& exact) : Interval() {
        mpfr_set_z(lo_, exact.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(hi_, exact.get_mpz_t(), MPFR_RNDU);
    }
    explicit Interval(const mpq_class& exact) : Interval() {
        mpfr_set_q(lo_, exact.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi_, exact.get_mpq_t(), MPFR_RNDU);
    }
    Interval(const Interval& o) : Interval() {
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval& operator=(const Interval& o) {
        if (this != &o) {
            mpfr_set(lo_, o.lo_, MPFR_RNDD);
            mpfr_set(hi_, o.hi_, MPFR_RNDU);
        }
        return *this;
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static Interval of(std::uint64_t v) { return Interval(mpz_class(std::to_string(v))); }

    double lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid() const { return 0.5 * (lower() + upper()); }

    /// Certified: every point of the interval is < / <= / > the integer.
    bool certainly_less(const mpz_class& z) const { return mpfr_cmp_z(hi_, z.get_mpz_t()) < 0; }
    bool certainly_greater(const mpz_class& z) const { return mpfr_cmp_z(lo_, z.get_mpz_t()) > 0; }
    bool certainly_at_least(const mpz_class& z) const { return mpfr_cmp_z(lo_, z.get_mpz_t()) >= 0; }
    bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }

    /// Smallest integer >= every point (an upper bound on ceil of the value).
    mpz_class ceil_upper() const {
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDU);
        return z;
    }

    friend Interval operator+(const Interval& a, const Interval& b) {
        Interval r;
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        Interval r;
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        Interval r;
        mpfr_t tmp;
        mpfr_init2(tmp, precision);
        bool first = true;
        for (auto x : {a.lo_, a.hi_}) {
            for (auto y : {b.lo_, b.hi_}) {
                mpfr_mul(tmp, x, y, MPFR_RNDD);
                if (first || mpfr_less_p(tmp, r.lo_)) mpfr_set(r.lo_, tmp, MPFR_RNDD);
                mpfr_mul(tmp, x, y, MPFR_RNDU);
                if (first || mpfr_greater_p(tmp, r.hi_)) mpfr_set(r.hi_, tmp, MPFR_RNDU);
                first = false;
            }
        }
        mpfr_clear(tmp);
        return r;
    }
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) {
            throw precondition_error("interval division by an interval containing zero");
        }
        Interval inv;
        mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
        mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
        return a * inv;
    }
    friend Interval log2(const Interval& a) {
        if (mpfr_sgn(a.lo_) <= 0) throw precondition_error("log2 of a non-positive interval");
        Interval r;
        mpfr_log2(r.lo_, a.lo_, MPFR_RNDD);
        mpfr_log2(r.hi_, a.hi_, MPFR_RNDU);
        return r;
    }
    friend Interval pow(const Interval& a, unsigned e) {
        Interval r(mpz_class(1));
        for (unsigned i = 0; i < e; ++i) r = r * a;
        return r;
    }
    friend Interval max(const Interval& a, const Interval& b) {
        Interval r;
        mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

private:
    void init() {
        mpfr_init2(lo_, precision);
        mpfr_init2(hi_, precision);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }

    mpfr_t lo_;
    mpfr_t hi_;
};

/// "1.234e+5678" rendering of a big integer (display only).
inline std::string scientific(const mpz_class& z) {
    if (z == 0) return "0";
    long exp2 = 0;
    const double mantissa = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    const double log10_value = std::log10(mantissa) + static_cast<double>(exp2) * std::log10(2.0);
    const double exponent = std::floor(log10_value);
    double lead = std::pow(10.0, log10_value - exponent);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6fe+%.0f", lead, exponent);
    return buf;
}

// ---------------------------------------------------------------------------
// The factorial claim

struct ClaimSides {
    BigCount lhs;  // k!
    BigCount rhs;  // 2^((r+t)(n+k)) * (s-1)^(k+1)
};

inline ClaimSides claim_sides(dimension_t n, dimension_t k, dimension_t r, dimension_t t, dimension_t s) {
    if (s == 0) throw precondition_error("claim needs s >= 1");
    ClaimSides sides;
    mpz_fac_ui(sides.lhs.get_mpz_t(), k);
    mpz_ui_pow_ui(sides.rhs.get_mpz_t(), s - 1, k + 1);
    mpz_mul_2exp(sides.rhs.get_mpz_t(), sides.rhs.get_mpz_t(), (r + t) * (n + k));
    return sides;
}

/// k! > 2^((r+t)(n+k)) (s-1)^(k+1), exactly. For s = 1 the right side is 0.
inline bool claim_holds(dimension_t n, dimension_t k, dimension_t r, dimension_t t, dimension_t s) {
    const auto sides = claim_sides(n, k, r, t, s);
    return sides.lhs > sides.rhs;
}

// ---------------------------------------------------------------------------
// Spindle bound

/// The least k satisfying the claim, with its certificate of minimality.
///
/// The ratio lhs/rhs changes by the factor (k+1) / (2^(r+t) (s-1)) from k to
/// k+1, so it falls and then rises, and at k = 0 it is 1/(2^((r+t)n)(s-1))
/// <= 1. Hence the claim holds exactly on an up-set {k >= k*}, and one exact
/// failure at k*-1 next to an exact success at k* pins k* down.
struct SpindleBound {
    dimension_t n = 0;
    SpindleSpec spec;
    dimension_t k_star = 0;
    dimension_t bound = 0;  // n + k*
    bool chain_rule = false;  // s == 1: bound = n + r + t
};

namespace detail {

inline double log2_claim_gap(double n, double k, double r, double t, double s) {
    // log2(k!) - log2(rhs), approximate.
    return std::lgamma(k + 1.0) / std::log(2.0) - (r + t) * (n + k) - (k + 1.0) * std::log2(s - 1.0);
}

inline dimension_t k_scan_cap(dimension_t n, const SpindleSpec& spec) {
    const dimension_t turning = (dimension_t{1} << std::min<dimension_t>(spec.r + spec.t, 40)) * spec.s;
    return 8 * std::max(n, turning) + 64;
}

} // namespace detail

inline SpindleBound spindle_bound_detail(dimension_t n, const SpindleSpec& spec) {
    spec.validate();
    SpindleBound out{n, spec, 0, 0, false};
    if (spec.s == 1) {
        // S_{r,1,t} is a chain on r+1+t vertices.
        out.chain_rule = true;
        out.k_star = spec.r + spec.t;
        out.bound = n + spec.r + spec.t;
        return out;
    }
    const auto r = spec.r, t = spec.t, s = spec.s;
    const dimension_t cap = detail::k_scan_cap(n, spec);

    // Floating-point estimate: the gap is increasing beyond the turning point,
    // so bisect there, then settle exactly.
    const double turning = std::ldexp(static_cast<double>(s - 1), static_cast<int>(r + t));
    dimension_t lo = static_cast<dimension_t>(std::max(1.0, turning));
    dimension_t hi = lo;
    while (hi < cap && detail::log2_claim_gap(double(n), double(hi), double(r), double(t), double(s)) <= 0) {
        hi = std::min(cap, hi * 2);
    }
    while (lo < hi) {
        const dimension_t mid = lo + (hi - lo) / 2;
        if (detail::log2_claim_gap(double(n), double(mid), double(r), double(t), double(s)) > 0) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    dimension_t k = std::max<dimension_t>(lo, 1);
    if (claim_holds(n, k, r, t, s)) {
        while (k > 1 && claim_holds(n, k - 1, r, t, s)) --k;
    } else {
        while (!claim_holds(n, k, r, t, s)) {
            if (++k > cap) throw invariant_violation("claim scan exceeded its cap");
        }
    }
    out.k_star = k;
    out.bound = n + k;
    return out;
}

inline dimension_t spindle_upper_bound(dimension_t n, dimension_t r, dimension_t s, dimension_t t) {
    return spindle_bound_detail(n, {r, s, t}).bound;
}

/// Derived constants of the asymptotic argument, as intervals:
/// eps = log s / log n, delta = 2(r+1)(log log n + r + t) / log n,
/// c = (r + t + delta) / (1 - eps), k_formula = c n / log n.
struct SpindleBoundParams {
    Interval eps, delta, c, k_formula;
};

inline SpindleBoundParams spindle_bound_params(dimension_t n, const SpindleSpec& spec) {
    spec.validate();
    if (n < 3) throw precondition_error("log log n needs n >= 3");
    const auto log_n = log2(Interval::of(n));
    SpindleBoundParams p;
    p.eps = log2(Interval::of(spec.s)) / log_n;
    const auto one = Interval::of(1);
    if (!(one - p.eps).certainly_positive()) throw precondition_error("eps must be below 1");
    const auto rt = Interval::of(spec.r + spec.t);
    p.delta = Interval::of(2 * (spec.r + 1)) * (log2(log_n) + rt) / log_n;
    p.c = (rt + p.delta) / (one - p.eps);
    p.k_formula = p.c * Interval::of(n) / log_n;
    return p;
}

// ---------------------------------------------------------------------------
// Baselines and composition

/// R(chain on l vertices, Q_n) = n + l - 1.
inline dimension_t chain_bound(dimension_t ell, dimension_t n) {
    if (ell == 0) throw precondition_error("chain length must be at least 1");
    return n + ell - 1;
}

/// Least alpha with C(alpha, floor(alpha/2)) >= t.
inline dimension_t antichain_alpha(dimension_t t) {
    if (t == 0) throw precondition_error("antichain size must be at least 1");
    mpz_class central;
    for (dimension_t alpha = 0;; ++alpha) {
        mpz_bin_uiui(central.get_mpz_t(), alpha, alpha / 2);
        if (central >= mpz_class(std::to_string(t))) return alpha;
    }
}

/// Integer form of gluing: R(P1 ^ P2, Q_n) <= f1(R(P2, Q_n)).
inline dimension_t compose_bound(const std::function<dimension_t(dimension_t)>& f1_bound_at,
                                 dimension_t f2_value, dimension_t n) {
    if (f2_value < n) throw precondition_error("R(P2, Q_n) is at least n");
    return f1_bound_at(f2_value);
}

/// One step N_{j-1} -> N_j of the iterated bound and its realized constant
/// (2 + eps_hat_j) = k_j log N_{j-1} / N_{j-1}.
struct GluingStep {
    dimension_t from = 0;
    dimension_t to = 0;
    dimension_t k_star = 0;
    Interval realized_factor;
};

struct Theorem1Bound {
    dimension_t n = 0;
    MultipartiteSpec spec;
    dimension_t widest = 0;
    dimension_t bound = 0;
    std::vector<GluingStep> steps;

    /// Largest per-step k_j / N_{j-1}, exactly.
    mpq_class max_ratio() const {
        mpq_class best = 0;
        for (const auto& st : steps) {
            mpq_class rho(mpz_class(std::to_string(st.k_star)), mpz_class(std::to_string(st.from)));
            rho.canonicalize();
            best = std::max(best, rho);
        }
        return best;
    }
    /// max_j (2 + eps_hat_j).
    Interval max_realized_factor() const {
        Interval best = Interval::of(0);
        for (const auto& st : steps) best = max(best, st.realized_factor);
        return best;
    }
    /// n (1 + (2 + eps_hat) / log n)^l with eps_hat the largest realized one.
    Interval closed_form() const {
        const auto log_n = log2(Interval::of(n));
        return Interval::of(n) *
               pow(Interval::of(1) + max_realized_factor() / log_n, static_cast<unsigned>(steps.size()));
    }
    /// bound <= n (1 + max_j k_j/N_{j-1})^l, in exact rationals. Since
    /// log N_{j-1} >= log n this implies bound <= closed_form().
    bool within_rational_form() const {
        mpq_class base = 1 + max_ratio();
        mpq_class rhs(mpz_class(std::to_string(n)));
        for (std::size_t j = 0; j < steps.size(); ++j) rhs *= base;
        return mpq_class(mpz_class(std::to_string(bound))) <= rhs;
    }
};

/// N_0 = n, N_j = spindle bound for K_{1,t,1} at N_{j-1}, j = 1..l, with
/// t the widest layer.
inline Theorem1Bound theorem1_bound_detail(dimension_t n, const MultipartiteSpec& spec) {
    spec.validate();
    Theorem1Bound out{n, spec, spec.widest(), n, {}};
    dimension_t current = n;
    for (std::size_t j = 0; j < spec.layers(); ++j) {
        const auto step = spindle_bound_detail(current, {1, out.widest, 1});
        GluingStep g{current, step.bound, step.k_star, Interval::of(0)};
        if (current >= 2) {
            g.realized_factor = Interval::of(step.k_star) * log2(Interval::of(current)) / Interval::of(current);
        }
        out.steps.push_back(g);
        current = step.bound;
    }
    out.bound = current;
    return out;
}

inline dimension_t theorem1_upper_bound(dimension_t n, const MultipartiteSpec& spec) {
    return theorem1_bound_detail(n, spec).bound;
}

} // namespace poset_ramsey
