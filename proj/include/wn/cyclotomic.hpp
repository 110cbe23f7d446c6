#pragma once

#include "wn/rat.hpp"

#include <string>
#include <vector>

namespace wn {

/// Exact element of the cyclotomic field Q(zeta_m).
///
/// Values are stored as rational coefficient vectors over the power basis
/// 1, z, ..., z^(phi(m)-1), reduced modulo the m-th cyclotomic polynomial.
/// The reduced form is unique, so equality is coefficient comparison after
/// promoting both operands to the lcm of their orders.
class Cyclo {
public:
    Cyclo() : order_(1), coeff_(1, Rat(0)) {}

    static Cyclo rational(const Rat& r);
    static Cyclo integer(long long v) { return rational(Rat(v)); }
    /// zeta_m ^ k
    static Cyclo root(int order, long long k);

    int order() const { return order_; }
    const std::vector<Rat>& coefficients() const { return coeff_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws std::domain_error when the value is irrational.
    Rat rational_value() const;

    /// Complex conjugate (zeta -> zeta^-1).
    Cyclo conj() const;
    /// Same value inside Q(zeta_M) for order_ | M.
    Cyclo promoted(int new_order) const;

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    Cyclo scaled(const Rat& r) const;

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Cyclo(int order, std::vector<Rat> reduced)
        : order_(order), coeff_(std::move(reduced)) {}
    static Cyclo from_exponents(int order, const std::vector<Rat>& poly);

    int order_;
    std::vector<Rat> coeff_;
};

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int m);

}  // namespace wn
