#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pseudocohom {

class Scalar;

/// Ground field: the rationals, or F_p for an odd prime p < 2^31.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field{0}; }
    /// Throws unless p is an odd prime.
    static Field prime(std::uint32_t p);
    /// Accepts "Q", "F5", "F_5" (case-insensitive prefix).
    static Field parse(std::string_view text);

    std::uint32_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }
    std::string name() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long n) const;
    /// Parses "3", "-2", "7/4". Denominators must be invertible in the field.
    Scalar parse_scalar(std::string_view text) const;

    bool operator==(const Field&) const = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

/// Exact field element. Binary operations require both operands to live in
/// the same field.
class Scalar {
public:
    /// Rational zero.
    Scalar() = default;
    Scalar(Field f, long n);
    Scalar(Field f, const mpq_class& q);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const;

    /// Canonical residue in [0, p). Only meaningful over F_p.
    std::int64_t residue() const { return residue_; }
    /// Only meaningful over Q.
    const mpq_class& rational() const { return rational_; }

    /// Renders with a sign: over F_p the symmetric representative is used.
    std::string to_string() const;
    /// True when to_string() would start with '-'.
    bool renders_negative() const;

private:
    void require_same_field(const Scalar& o) const;

    std::uint32_t p_ = 0;
    std::int64_t residue_ = 0;
    mpq_class rational_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace pseudocohom
