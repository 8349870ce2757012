#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "pseudocohom/report.hpp"
#include "pseudocohom/scalar.hpp"
#include "pseudocohom/sparse.hpp"

namespace pseudocohom {

/// Basis label of H: an exponent vector (polynomial kind), a one-entry group
/// element index (group kind) or the empty label (trivial kind).
using Monomial = boost::container::small_vector<std::int32_t, 3>;

/// A pure tensor of basis labels, one per leg of H^{⊗n}.
using Legs = boost::container::small_vector<Monomial, 3>;

enum class HopfKind { trivial, group, polynomial };

/// One of the three supported cocommutative Hopf algebras: k, k[G] for a
/// finite group G given by its multiplication table, or k[∂_1..∂_d] with
/// primitive generators. Cheap to copy; the description is shared.
class HopfAlgebra {
public:
    HopfAlgebra() = default;

    static HopfAlgebra trivial(Field f);
    /// Validates that `table` is a group law on `labels` (closure, associativity,
    /// identity, inverses) and precomputes inverses.
    static HopfAlgebra group(Field f, std::vector<std::string> labels, std::vector<std::vector<std::int32_t>> table);
    static HopfAlgebra polynomial(Field f, std::vector<std::string> generators);

    HopfKind kind() const;
    Field field() const;
    /// Generator names (polynomial) or group element labels (group).
    const std::vector<std::string>& names() const;
    const std::vector<std::vector<std::int32_t>>& group_table() const;
    std::int32_t group_identity() const;

    bool finite_dimensional() const { return kind() != HopfKind::polynomial; }
    /// k-dimension; only for finite-dimensional kinds.
    std::size_t dimension() const;
    /// Full basis (finite-dimensional kinds) in label order.
    std::vector<Monomial> basis() const;
    /// Monomials of total degree <= max_degree (polynomial kind); the full basis otherwise.
    std::vector<Monomial> basis_up_to_degree(int max_degree) const;

    Monomial unit() const;
    bool is_unit(const Monomial& m) const;
    int degree(const Monomial& m) const;

    /// Product of two basis labels; always a single basis label for the supported kinds.
    Monomial multiply(const Monomial& a, const Monomial& b) const;
    /// Δ^{(legs-1)} of a basis label, as (pure tensor, coefficient) pairs.
    std::vector<std::pair<Legs, Scalar>> coproduct(const Monomial& m, std::size_t legs) const;
    Scalar counit(const Monomial& m) const;
    /// S(m) = sign * label.
    std::pair<Monomial, Scalar> antipode(const Monomial& m) const;

    /// Render order: descending graded-lexicographic for monomials, label order for groups.
    bool render_before(const Monomial& a, const Monomial& b) const;
    std::string render(const Monomial& m) const;
    /// Looks up a generator or group label.
    bool lookup(const std::string& ident, Monomial& out) const;

    bool operator==(const HopfAlgebra& o) const;
    std::string describe() const;

private:
    struct Impl;
    explicit HopfAlgebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    const Impl& impl() const;
    std::shared_ptr<const Impl> impl_;
};

/// Element of H in canonical basis form.
class HopfElement {
public:
    HopfElement() = default;
    explicit HopfElement(HopfAlgebra h);
    HopfElement(HopfAlgebra h, const Monomial& m, const Scalar& c);

    static HopfElement scalar(HopfAlgebra h, const Scalar& c);
    static HopfElement one(HopfAlgebra h) { return scalar(h, h.field().one()); }
    static HopfElement generator(HopfAlgebra h, std::size_t index);

    const HopfAlgebra& hopf() const { return hopf_; }
    const SparseSum<Monomial>::Map& terms() const { return sum_.terms(); }
    bool is_zero() const { return sum_.empty(); }
    void add(const Monomial& m, const Scalar& c) { sum_.add(m, c); }

    HopfElement& operator+=(const HopfElement& o);
    HopfElement& operator-=(const HopfElement& o);
    friend HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
    friend HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
    HopfElement operator-() const;
    friend HopfElement operator*(const Scalar& c, HopfElement a);
    friend HopfElement operator*(const HopfElement& a, const HopfElement& b);

    bool operator==(const HopfElement& o) const;
    std::string render() const;

private:
    void require_same(const HopfElement& o) const;
    HopfAlgebra hopf_;
    SparseSum<Monomial> sum_;
};

/// Element of H^{⊗n} expanded over pure tensors of basis labels.
class HopfTensor {
public:
    HopfTensor() = default;
    HopfTensor(HopfAlgebra h, std::size_t arity);

    /// f_1 ⊗ ... ⊗ f_n.
    static HopfTensor pure(const std::vector<HopfElement>& factors);
    static HopfTensor unit(HopfAlgebra h, std::size_t arity);

    const HopfAlgebra& hopf() const { return hopf_; }
    std::size_t arity() const { return arity_; }
    const SparseSum<Legs>::Map& terms() const { return sum_.terms(); }
    bool is_zero() const { return sum_.empty(); }
    void add(const Legs& legs, const Scalar& c);

    HopfTensor& operator+=(const HopfTensor& o);
    HopfTensor& operator-=(const HopfTensor& o);
    friend HopfTensor operator+(HopfTensor a, const HopfTensor& b) { return a += b; }
    friend HopfTensor operator-(HopfTensor a, const HopfTensor& b) { return a -= b; }
    friend HopfTensor operator*(const Scalar& c, HopfTensor a);
    /// Componentwise product in the algebra H^{⊗n}.
    friend HopfTensor operator*(const HopfTensor& a, const HopfTensor& b);

    /// σ₁₂; arity 2 only.
    HopfTensor flip() const;

    bool operator==(const HopfTensor& o) const;
    std::string render() const;

private:
    HopfAlgebra hopf_;
    std::size_t arity_ = 0;
    SparseSum<Legs> sum_;
};

/// Componentwise product of two pure tensors of equal length.
Legs multiply_legs(const HopfAlgebra& h, const Legs& a, const Legs& b);

HopfElement mul(const HopfElement& a, const HopfElement& b);
HopfTensor comul(const HopfElement& a);
Scalar counit(const HopfElement& a);
HopfElement antipode(const HopfElement& a);
/// Δ^{(n-1)}(a); n = 1 returns a itself as a one-leg tensor.
HopfTensor iterated_comul(const HopfElement& a, std::size_t n);

/// Coassociativity, counit, antipode and cocommutativity on every basis label
/// (finite-dimensional kinds) or every monomial of degree <= max_degree.
CheckReport check_hopf_axioms(const HopfAlgebra& h, int max_degree = 3);

} // namespace pseudocohom
