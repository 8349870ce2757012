#include "pseudocohom/scalar.hpp"

#include <cctype>
#include <ostream>

#include "pseudocohom/error.hpp"

namespace pseudocohom {

namespace {

bool is_odd_prime(std::uint32_t p)
{
    if (p < 3 || p % 2 == 0)
        return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

std::int64_t reduce(const mpz_class& z, std::uint32_t p)
{
    mpz_class r = z % p;
    if (r < 0)
        r += p;
    return static_cast<std::int64_t>(r.get_si());
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p)
{
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1)
        throw Error("element is not invertible modulo " + std::to_string(p));
    return t < 0 ? t + p : t;
}

} // namespace

Field Field::prime(std::uint32_t p)
{
    if (!is_odd_prime(p) || p >= (1u << 31))
        throw Error("field characteristic must be an odd prime below 2^31, got " + std::to_string(p));
    return Field{p};
}

Field Field::parse(std::string_view text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (t == "Q" || t == "QQ" || t == "RATIONALS")
        return rationals();
    if (!t.empty() && t[0] == 'F') {
        std::string digits = t.substr(t.size() > 1 && t[1] == '_' ? 2 : 1);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 11)
            return prime(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    throw Error("unknown scalar field '" + std::string(text) + "' (expected Q or Fp for an odd prime p)");
}

std::string Field::name() const
{
    return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

Scalar Field::zero() const { return Scalar(*this, 0L); }
Scalar Field::one() const { return Scalar(*this, 1L); }
Scalar Field::from_int(long n) const { return Scalar(*this, n); }

Scalar Field::parse_scalar(std::string_view text) const
{
    mpq_class q;
    std::string s(text);
    if (s.empty() || q.set_str(s, 10) != 0)
        throw Error("malformed rational '" + s + "'");
    if (q.get_den() == 0)
        throw Error("zero denominator in '" + s + "'");
    q.canonicalize();
    return Scalar(*this, q);
}

Scalar::Scalar(Field f, long n) : p_(f.characteristic())
{
    if (p_ == 0)
        rational_ = n;
    else
        residue_ = reduce(mpz_class(n), p_);
}

Scalar::Scalar(Field f, const mpq_class& q) : p_(f.characteristic())
{
    if (p_ == 0) {
        rational_ = q;
        rational_.canonicalize();
        return;
    }
    std::int64_t num = reduce(q.get_num(), p_);
    std::int64_t den = reduce(q.get_den(), p_);
    if (den == 0)
        throw Error("denominator of " + q.get_str() + " vanishes in F" + std::to_string(p_));
    residue_ = static_cast<std::int64_t>((static_cast<__int128>(num) * inverse_mod(den, p_)) % p_);
}

Field Scalar::field() const
{
    return p_ == 0 ? Field::rationals() : Field::prime(p_);
}

bool Scalar::is_zero() const
{
    return p_ == 0 ? sgn(rational_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const
{
    return p_ == 0 ? rational_ == 1 : residue_ == 1;
}

void Scalar::require_same_field(const Scalar& o) const
{
    if (p_ != o.p_)
        throw Error("scalar field mismatch: " + (p_ == 0 ? std::string("Q") : "F" + std::to_string(p_)) + " vs " +
                    (o.p_ == 0 ? std::string("Q") : "F" + std::to_string(o.p_)));
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    if (p_ == 0)
        r.rational_ = -rational_;
    else
        r.residue_ = residue_ == 0 ? 0 : p_ - residue_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    require_same_field(o);
    if (p_ == 0)
        rational_ += o.rational_;
    else
        residue_ = (residue_ + o.residue_) % p_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    require_same_field(o);
    if (p_ == 0)
        rational_ -= o.rational_;
    else
        residue_ = (residue_ + p_ - o.residue_) % p_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    require_same_field(o);
    if (p_ == 0)
        rational_ *= o.rational_;
    else
        residue_ = (residue_ * o.residue_) % p_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw Error("division by zero");
    Scalar r = *this;
    if (p_ == 0)
        r.rational_ = 1 / rational_;
    else
        r.residue_ = inverse_mod(residue_, p_);
    return r;
}

bool Scalar::operator==(const Scalar& o) const
{
    require_same_field(o);
    return p_ == 0 ? rational_ == o.rational_ : residue_ == o.residue_;
}

std::string Scalar::to_string() const
{
    if (p_ == 0)
        return rational_.get_str();
    std::int64_t r = residue_;
    if (r > static_cast<std::int64_t>(p_ / 2))
        r -= p_;
    return std::to_string(r);
}

bool Scalar::renders_negative() const
{
    if (p_ == 0)
        return sgn(rational_) < 0;
    return residue_ > static_cast<std::int64_t>(p_ / 2);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.to_string();
}

} // namespace pseudocohom
