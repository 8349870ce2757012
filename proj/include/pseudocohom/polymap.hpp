#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "pseudocohom/report.hpp"
#include "pseudocohom/tensor.hpp"

namespace pseudocohom {

/// Basis tuple (i_1, .., i_n), one index per source module.
using Tuple = boost::container::small_vector<std::int32_t, 4>;

/// H^{⊗n}-polylinear map L_1 ⊗ .. ⊗ L_n → H^{⊗n} ⊗_H M, stored on basis
/// tuples. Absent entries are zero.
class PolyMap {
public:
    using Table = std::map<Tuple, TensorElement>;

    PolyMap() = default;
    PolyMap(std::vector<FreeModule> sources, FreeModule target);
    /// All n sources equal to `source`.
    static PolyMap uniform(const FreeModule& source, std::size_t arity, FreeModule target);

    std::size_t arity() const { return sources_.size(); }
    const std::vector<FreeModule>& sources() const { return sources_; }
    const FreeModule& source(std::size_t k) const { return sources_.at(k); }
    const FreeModule& target() const { return target_; }
    const HopfAlgebra& hopf() const { return target_.hopf(); }
    Field field() const { return target_.field(); }
    const Table& table() const { return table_; }
    bool is_zero() const { return table_.empty(); }

    TensorElement value(const Tuple& t) const;
    void set(const Tuple& t, TensorElement v);
    void add(const Tuple& t, const TensorElement& v, const Scalar& c);
    void add(const Tuple& t, const TensorElement& v) { add(t, v, field().one()); }

    PolyMap& operator+=(const PolyMap& o);
    PolyMap& operator-=(const PolyMap& o);
    friend PolyMap operator+(PolyMap a, const PolyMap& b) { return a += b; }
    friend PolyMap operator-(PolyMap a, const PolyMap& b) { return a -= b; }
    friend PolyMap operator*(const Scalar& c, PolyMap a);
    PolyMap operator-() const;
    bool operator==(const PolyMap& o) const;

    /// Every basis tuple in lexicographic order.
    std::vector<Tuple> tuples() const;
    /// Names of the basis elements in a tuple, e.g. {"x1", "z"}.
    std::vector<std::string> locator(const Tuple& t) const;
    /// Same sources and target.
    bool same_shape(const PolyMap& o) const;

private:
    void require_shape(const PolyMap& o) const;
    std::vector<FreeModule> sources_;
    FreeModule target_;
    Table table_;
};

/// Visits every tuple of the given index ranges in lexicographic order.
void for_each_tuple(const std::vector<std::size_t>& ranks, const std::function<void(const Tuple&)>& fn);

/// P(T_1, .., T_n) for arguments of arities a_k: for terms (F_k, i_k) and each
/// term (g_1..g_n, j) of P(i_1..i_n) the result has legs
/// F_1·Δ^{(a_1-1)}(g_1) ⊗ .. ⊗ F_n·Δ^{(a_n-1)}(g_n) over j. This single rule
/// realizes H-linearity, both composition formulas and argument insertion.
TensorElement evaluate(const PolyMap& P, const std::vector<TensorElement>& args);

/// evaluate, followed by moving the legs from the variable order `order`
/// (position of each produced leg group's variables) back to natural order.
TensorElement evaluate_ordered(const PolyMap& P, const std::vector<TensorElement>& args,
                               const std::vector<int>& order);

/// θ(π·t) = sign(π) · permute(π, θ(t)) for all permutations π.
TensorElement skew_image(const TensorElement& value, const LegPermutation& pi);

/// Fills all tuples of a uniform-source map from its entries on
/// nondecreasing tuples via the skew rule. Other stored entries are discarded.
PolyMap skew_complete(const PolyMap& lower);

/// Skew relation under every adjacent transposition. For arity 2 this is
/// exactly "[y*x] = −σ₁₂[x*y]", reported at the pair (i, j) with i >= j.
CheckReport check_skew(const PolyMap& B, const std::string& check = "skew");

/// H-linear map between free modules; column j is the image of e_j.
class ModuleMap {
public:
    ModuleMap() = default;
    ModuleMap(FreeModule source, FreeModule target, std::vector<TensorElement> images);

    static ModuleMap identity(const FreeModule& m);
    static ModuleMap zero(const FreeModule& source, const FreeModule& target);
    /// entries[l][j] is the coefficient of e_l in the image of e_j.
    static ModuleMap from_matrix(const FreeModule& source, const FreeModule& target,
                                 const std::vector<std::vector<HopfElement>>& entries);

    const FreeModule& source() const { return source_; }
    const FreeModule& target() const { return target_; }
    const TensorElement& image(std::size_t j) const { return images_.at(j); }
    const std::vector<TensorElement>& images() const { return images_; }
    HopfElement entry(std::size_t l, std::size_t j) const;
    void set_image(std::size_t j, TensorElement v);

    /// (id ⊗_H Θ) on an element of any arity.
    TensorElement apply(const TensorElement& t) const;
    PolyMap as_polymap() const;
    /// this ∘ inner.
    ModuleMap compose(const ModuleMap& inner) const;
    /// Two-sided inverse over H, if one exists.
    std::optional<ModuleMap> inverse() const;

    ModuleMap& operator+=(const ModuleMap& o);
    ModuleMap& operator-=(const ModuleMap& o);
    friend ModuleMap operator+(ModuleMap a, const ModuleMap& b) { return a += b; }
    friend ModuleMap operator-(ModuleMap a, const ModuleMap& b) { return a -= b; }
    friend ModuleMap operator*(const Scalar& c, ModuleMap a);
    bool operator==(const ModuleMap& o) const;
    bool is_zero() const;

    /// "x1 ↦ 2*(1) x1; x2 ↦ (d) x1 + (1) x2".
    std::string render() const;

private:
    FreeModule source_;
    FreeModule target_;
    std::vector<TensorElement> images_;
};

} // namespace pseudocohom
