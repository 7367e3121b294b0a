#include "specmod/frac_series.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace specmod {

namespace {

constexpr std::int64_t kExpGuard = std::int64_t(1) << 40;

void check_exponent(std::int64_t e)
{
    if (e > kExpGuard || e < -kExpGuard) {
        throw std::overflow_error("FracSeries: exponent lattice overflow");
    }
}

} // namespace

std::int64_t FracSeries::to_eighths(const Rational& order)
{
    const Rational scaled = order * exp_den;
    if (denominator(scaled) != 1) {
        throw std::invalid_argument("FracSeries: order is not a multiple of 1/8");
    }
    return numerator(scaled).convert_to<std::int64_t>();
}

void FracSeries::set_coeff(std::int64_t exp_eighths, const Rational& c)
{
    check_exponent(exp_eighths);
    if (exp_eighths >= trunc_ || c == 0) {
        terms_.erase(exp_eighths);
        return;
    }
    terms_[exp_eighths] = c;
}

void FracSeries::add_coeff(std::int64_t exp_eighths, const Rational& c)
{
    check_exponent(exp_eighths);
    if (exp_eighths >= trunc_) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exp_eighths, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    } else if (c == 0) {
        terms_.erase(it);
    }
}

FracSeries FracSeries::operator-() const
{
    FracSeries out(trunc_);
    for (const auto& [e, c] : terms_) {
        out.terms_.emplace(e, -c);
    }
    return out;
}

FracSeries FracSeries::operator+(const FracSeries& rhs) const
{
    FracSeries out(std::min(trunc_, rhs.trunc_));
    for (const auto& [e, c] : terms_) {
        out.add_coeff(e, c);
    }
    for (const auto& [e, c] : rhs.terms_) {
        out.add_coeff(e, c);
    }
    return out;
}

FracSeries FracSeries::operator-(const FracSeries& rhs) const
{
    return *this + (-rhs);
}

FracSeries FracSeries::operator*(const FracSeries& rhs) const
{
    // O(q^Ta)*b = O(q^{Ta+lead(b)}) and symmetrically.
    const std::int64_t trunc = std::min(trunc_ + rhs.leading_exponent_eighths(),
                                        rhs.trunc_ + leading_exponent_eighths());
    FracSeries out(trunc);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            check_exponent(ea + eb);
            if (ea + eb >= trunc) {
                break; // rhs exponents ascend; rest of this row is dropped
            }
            out.add_coeff(ea + eb, ca * cb);
        }
    }
    return out;
}

FracSeries FracSeries::scaled(const Rational& c) const
{
    FracSeries out(trunc_);
    if (c == 0) {
        return out;
    }
    for (const auto& [e, v] : terms_) {
        out.terms_.emplace(e, v * c);
    }
    return out;
}

FracSeries FracSeries::shifted(std::int64_t e) const
{
    check_exponent(trunc_ + e);
    FracSeries out(trunc_ + e);
    for (const auto& [k, c] : terms_) {
        check_exponent(k + e);
        out.terms_.emplace(k + e, c);
    }
    return out;
}

FracSeries FracSeries::q_derivative() const
{
    FracSeries out(trunc_);
    for (const auto& [e, c] : terms_) {
        if (e != 0) {
            out.terms_.emplace(e, c * Rational(e, exp_den));
        }
    }
    return out;
}

FracSeries FracSeries::reciprocal() const
{
    if (terms_.empty()) {
        throw std::domain_error("FracSeries: reciprocal of a zero series");
    }
    const std::int64_t e0 = leading_exponent_eighths();
    const Rational c0 = terms_.begin()->second;

    // Normalize to a unit series u = 1 + g with g supported on positive
    // exponents, then invert coefficient-by-coefficient in ascending order:
    //   v_0 = 1,  v_e = -sum_{0 < d <= e} g_d v_{e-d}.
    const std::int64_t rel_trunc = trunc_ - e0;
    FracSeries g(rel_trunc);
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        g.set_coeff(it->first - e0, it->second / c0);
    }

    FracSeries v(rel_trunc);
    v.set_coeff(0, 1);
    if (!g.is_zero()) {
        // Dense walk over the lattice; only exponents reachable as sums of
        // g-support elements pick up nonzero coefficients.
        for (std::int64_t e = g.leading_exponent_eighths(); e < rel_trunc; ++e) {
            Rational acc = 0;
            for (const auto& [d, gd] : g.terms_) {
                if (d > e) {
                    break;
                }
                const Rational ve = v.coeff(e - d);
                if (ve != 0) {
                    acc += gd * ve;
                }
            }
            if (acc != 0) {
                v.set_coeff(e, -acc);
            }
        }
    }

    // 1/f = v * q^{-e0} / c0, trusted below T - 2 e0.
    return v.shifted(-e0).scaled(Rational(1) / c0);
}

std::string format_exponent_eighths(std::int64_t exp_eighths)
{
    std::int64_t num = exp_eighths;
    std::int64_t den = FracSeries::exp_den;
    while (num % 2 == 0 && den > 1) {
        num /= 2;
        den /= 2;
    }
    if (den == 1) {
        return std::to_string(num);
    }
    return std::to_string(num) + "/" + std::to_string(den);
}

} // namespace specmod
