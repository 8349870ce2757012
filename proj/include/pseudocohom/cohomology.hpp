#pragma once

#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "pseudocohom/pseudoalg.hpp"

namespace pseudocohom {

/// Element of C^n(L, M): a skew map for n >= 1, or the coordinates of
/// 1 ⊗_H u in k ⊗_H M ≅ k^r for n = 0.
struct Cochain {
    std::size_t degree = 0;
    PolyMap map;
    std::vector<Scalar> constant;

    bool operator==(const Cochain& o) const
    {
        return degree == o.degree && (degree == 0 ? constant == o.constant : map == o.map);
    }
};

Cochain zero_cochain(const Representation& r, std::size_t degree);
/// Wraps a skew map; throws unless it is skew with sources L and target M.
Cochain make_cochain(const Representation& r, PolyMap map);
Cochain coboundary(const Cochain& theta, const Representation& r);

/// i_P Q: Σ over (p, q−1)-shuffles σ of (−1)^σ σ_{i→σ(i)} Q(P(x_σ..), x_σ..).
PolyMap nr_insert(const PolyMap& P, const PolyMap& Q);
/// ⟦P, Q⟧ = i_P Q − (−1)^{mn} i_Q P for P ∈ C^{m+1}, Q ∈ C^{n+1}.
PolyMap nr_bracket(const PolyMap& P, const PolyMap& Q);

/// Finite sum of homogeneous maps V^{⊗k} → H^{⊗k} ⊗_H V, keyed by arity k
/// (degree k − 1 in the shifted grading).
class GradedElement {
public:
    GradedElement() = default;
    explicit GradedElement(const PolyMap& homogeneous) { add(homogeneous); }

    const std::map<std::size_t, PolyMap>& parts() const { return parts_; }
    /// The arity-k part, or a zero map of that arity over `shape_source`.
    PolyMap part(std::size_t arity, const FreeModule& module) const;
    bool is_zero() const { return parts_.empty(); }

    void add(const PolyMap& p, const Scalar& c);
    void add(const PolyMap& p) { add(p, p.field().one()); }
    GradedElement& operator+=(const GradedElement& o);
    GradedElement& operator-=(const GradedElement& o);
    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    friend GradedElement operator*(const Scalar& c, const GradedElement& a);
    bool operator==(const GradedElement& o) const { return parts_ == o.parts_; }

private:
    std::map<std::size_t, PolyMap> parts_;
};

GradedElement nr_bracket(const GradedElement& a, const GradedElement& b);

/// The bigraded dgLa g = C^{•+1}_>(L ⊕ M, M) with d = ⟦D, ·⟧, D = ρ_L + ρ_M
/// (plus any twisting MC element).
struct DgLa {
    LiePseudoalgebra L;
    LiePseudoalgebra M;
    FreeModule E;
    PolyMap differential;

    std::size_t l_rank() const { return L.module.rank(); }
    bool is_l_index(std::int32_t e) const { return static_cast<std::size_t>(e) < l_rank(); }

    GradedElement d(const GradedElement& x) const;
    GradedElement bracket(const GradedElement& a, const GradedElement& b) const { return nr_bracket(a, b); }

    /// Restriction of an E-map to L^{⊗m} ⊗ M^{⊗n} with values read in M.
    PolyMap component(const PolyMap& x, std::size_t m) const;
    /// (m, n) bidegrees on which x is nonzero.
    std::set<std::pair<std::size_t, std::size_t>> support(const GradedElement& x) const;
    /// Values in M and vanishing on tuples without an L-slot.
    CheckReport check_membership(const GradedElement& x) const;
};

DgLa build_dgla(const LiePseudoalgebra& L, const LiePseudoalgebra& M);

/// Embeds a map with sources (L^m, M^n) and values in M (or L, with
/// values_in_l) into E, filling every slot arrangement by skew-symmetry.
PolyMap embed_into_e(const DgLa& g, const PolyMap& x, std::size_t m, bool values_in_l = false);
/// g⁰ element from φ ∈ Hom_H(L, M).
GradedElement embed_degree_zero(const DgLa& g, const ModuleMap& phi);
ModuleMap extract_degree_zero(const DgLa& g, const GradedElement& beta);

/// dα + ½⟦α, α⟧ on every tuple of each bigraded component L^m ⊗ M^n,
/// scanned with increasing m; findings are named "mc(m,n)".
CheckReport check_mc(const GradedElement& alpha, const DgLa& g);
/// e^{ad_β} α + g_β with g_β = −Σ (ad_β)^n dβ / (n+1)!.
GradedElement gauge_transform(const GradedElement& alpha, const GradedElement& beta, const DgLa& g);
/// d_α = d + ⟦α, ·⟧; throws unless α is MC.
DgLa twist(const DgLa& g, const GradedElement& alpha);

/// dim H^n(L, M); finite-dimensional H only.
std::size_t cohomology_dim(const Representation& r, std::size_t n);
/// Cohomology of the dgLa g in degree k (arity k + 1); finite-dimensional H only.
std::size_t dgla_cohomology_dim(const DgLa& g, std::size_t k);

/// Basis of the skew maps V^{⊗k} → H^{⊗k} ⊗_H T whose values use only the
/// allowed target indices and whose nonzero sorted tuples satisfy `keep`.
std::vector<PolyMap> skew_basis(const FreeModule& source, std::size_t arity, const FreeModule& target,
                                const std::vector<std::int32_t>& allowed_targets,
                                const std::function<bool(const Tuple&)>& keep);
/// Coordinates of a skew map on its sorted tuples (finite-dimensional H).
std::vector<Scalar> skew_coordinates(const PolyMap& x, const std::function<bool(const Tuple&)>& keep);

} // namespace pseudocohom
