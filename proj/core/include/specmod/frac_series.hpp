#ifndef SPECMOD_FRAC_SERIES_HPP
#define SPECMOD_FRAC_SERIES_HPP

#include "specmod/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace specmod {

/// Truncated series in the nome q with exponents on the (1/8)Z lattice and
/// exact rational coefficients.
///
/// Exponents are stored as integer numerators over a fixed denominator of 8,
/// the smallest lattice containing every object in this project (theta
/// constants contribute (n+1/2)^2/2 = (2n+1)^2/8). A series is trusted only
/// for exponents strictly below its truncation order; arithmetic propagates
/// truncation conservatively and never claims precision it does not have.
/// Coefficients stay exact rationals; conversion to floating point happens
/// only at evaluation time (see modforms.hpp).
class FracSeries {
public:
    static constexpr std::int64_t exp_den = 8;

    /// Zero series trusted below `trunc_eighths`/8.
    explicit FracSeries(std::int64_t trunc_eighths) : trunc_(trunc_eighths) {}

    static FracSeries constant(const Rational& c, std::int64_t trunc_eighths)
    {
        FracSeries s(trunc_eighths);
        s.set_coeff(0, c);
        return s;
    }

    /// Convert an order in q-units to lattice units. Throws
    /// std::invalid_argument if the order is not a multiple of 1/8.
    static std::int64_t to_eighths(const Rational& order);

    std::int64_t truncation_eighths() const { return trunc_; }
    Rational truncation_order() const { return Rational(trunc_, exp_den); }

    const std::map<std::int64_t, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Leading (smallest) exponent; equal to the truncation order for the
    /// zero series, which makes truncation propagation uniform.
    std::int64_t leading_exponent_eighths() const
    {
        return terms_.empty() ? trunc_ : terms_.begin()->first;
    }

    Rational coeff(std::int64_t exp_eighths) const
    {
        auto it = terms_.find(exp_eighths);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational coeff_q(const Rational& exp) const { return coeff(to_eighths(exp)); }

    /// Stores a coefficient; silently drops exponents at or above the
    /// truncation order and erases exact zeros.
    void set_coeff(std::int64_t exp_eighths, const Rational& c);
    void add_coeff(std::int64_t exp_eighths, const Rational& c);

    FracSeries operator-() const;
    FracSeries operator+(const FracSeries& rhs) const;
    FracSeries operator-(const FracSeries& rhs) const;
    FracSeries operator*(const FracSeries& rhs) const;
    FracSeries scaled(const Rational& c) const;

    /// Shift every exponent (and the truncation order) by `e` eighths.
    FracSeries shifted(std::int64_t e) const;

    /// q d/dq: multiplies each coefficient by its exponent.
    FracSeries q_derivative() const;

    /// 1/f for a series with nonzero leading coefficient. The result is
    /// trusted below T - 2*e0 where e0 is the leading exponent of f.
    FracSeries reciprocal() const;

    /// (q d/dq f) / f.
    FracSeries log_q_derivative() const { return q_derivative() * reciprocal(); }

    /// Exact coefficient-map equality (truncation orders not compared).
    bool operator==(const FracSeries& rhs) const { return terms_ == rhs.terms_; }

private:
    std::map<std::int64_t, Rational> terms_;
    std::int64_t trunc_;
};

/// "3/8" or "2" — reduced exponent on the 1/8 lattice.
std::string format_exponent_eighths(std::int64_t exp_eighths);

} // namespace specmod

#endif
