#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pseudocohom/cohomology.hpp"

namespace pseudocohom {

/// χ : L ⊗ L → H^{⊗2} ⊗_H M (skew) and ψ : L ⊗ M → H^{⊗2} ⊗_H M.
struct NonAbelianCocycle {
    PolyMap chi;
    PolyMap psi;

    static NonAbelianCocycle zero(const LiePseudoalgebra& L, const LiePseudoalgebra& M);
    bool operator==(const NonAbelianCocycle& o) const { return chi == o.chi && psi == o.psi; }
};

/// Shape and skewness of χ (throws on shape errors), then the derivation,
/// first and second identities on every basis tuple. Findings are named
/// "chi-skew", "deri-iden" (x,u,v), "first-iden" (x,y,u), "second-iden" (x,y,z).
CheckReport check_nonabelian_cocycle(const NonAbelianCocycle& c, const LiePseudoalgebra& L,
                                     const LiePseudoalgebra& M);

/// Extension presented on E = L ⊕ M (L basis first) with canonical i and p.
struct ExtensionModel {
    LiePseudoalgebra L;
    LiePseudoalgebra M;
    LiePseudoalgebra E;

    std::size_t l_rank() const { return L.module.rank(); }
    /// E-element of an L basis element plus a correction in M.
    TensorElement lift(std::size_t x, const ModuleMap& phi_s) const;
    /// Splits an E-valued element into its L and M parts.
    std::pair<TensorElement, TensorElement> split(const TensorElement& v) const;
    /// i and p are homomorphisms, M is an ideal, E is Lie.
    CheckReport validate() const;
};

/// [(x,u)*(y,v)] = ([x*y]_L, ψ(x,v) − σ₁₂ψ(y,u) + χ(x,y) + [u*v]_M).
/// Throws unless c is a cocycle.
ExtensionModel build_extension(const NonAbelianCocycle& c, const LiePseudoalgebra& L, const LiePseudoalgebra& M);
/// The same table without the cocycle precondition.
ExtensionModel build_extension_unchecked(const NonAbelianCocycle& c, const LiePseudoalgebra& L,
                                         const LiePseudoalgebra& M);
/// χ(x,y) = [sx*sy]_E − (id ⊗ s)[x*y]_L and ψ(x,u) = [sx*u]_E for s(x) = (x, φ_s x).
NonAbelianCocycle extract_cocycle(const ExtensionModel& E, const ModuleMap& phi_s);

/// The cocycle c with c − c′ given by the equivalence terms of φ:
/// ψ = ψ′ + [φx*u]_M, χ = χ′ + ψ′(x,φy) − σ₁₂ψ′(y,φx) − (id⊗φ)[x*y]_L + [φx*φy]_M.
NonAbelianCocycle apply_equivalence(const NonAbelianCocycle& c_prime, const ModuleMap& phi, const LiePseudoalgebra& L,
                                    const LiePseudoalgebra& M);
/// Both equivalence identities on all basis tuples ("equiv1" at (x,u), "equiv2" at (x,y)).
CheckReport check_cocycle_equivalence(const NonAbelianCocycle& c, const NonAbelianCocycle& c_prime,
                                      const ModuleMap& phi, const LiePseudoalgebra& L, const LiePseudoalgebra& M);

enum class SearchMode { automatic, exhaustive, linear, bounded };

struct SearchConfig {
    SearchMode mode = SearchMode::automatic;
    /// Coefficient set for bounded mode; {-1, 0, 1} when empty.
    std::vector<Scalar> coefficients;
    /// Largest monomial degree of φ's H-coefficients for polynomial H.
    int degree_bound = 1;
    std::size_t max_candidates = 2'000'000;

    /// "auto", "exhaustive", "linear", "bounded:-1,0,1" (braces optional).
    static SearchConfig parse(const std::string& text, Field f);
};

enum class Verdict { found, not_equivalent, inconclusive };
std::string to_string(Verdict v);

struct EquivalenceResult {
    Verdict verdict = Verdict::inconclusive;
    std::optional<ModuleMap> phi;
    std::string detail;
    std::size_t candidates = 0;
    SearchMode mode = SearchMode::automatic;
};

/// Looks for φ with apply_equivalence(c′, φ) = c. "found" carries a verified
/// witness; "not-equivalent" is only returned when the searched space covers
/// all φ.
EquivalenceResult find_equivalence(const NonAbelianCocycle& c, const NonAbelianCocycle& c_prime,
                                   const LiePseudoalgebra& L, const LiePseudoalgebra& M,
                                   const SearchConfig& search = {});

/// Θ(x, u) = (x, φx + u) as a map on E.
ModuleMap theta_from_phi(const ExtensionModel& E, const ModuleMap& phi);
/// Θ is a homomorphism E → E′ with Θ∘i = i′ and p′∘Θ = p.
CheckReport check_extension_equivalence(const ExtensionModel& E, const ExtensionModel& E_prime,
                                        const ModuleMap& theta);

/// χ in L^{⊗2}, ψ in L ⊗ M, as a degree-1 element of g.
GradedElement cocycle_as_mc(const DgLa& g, const NonAbelianCocycle& c);
NonAbelianCocycle mc_as_cocycle(const DgLa& g, const GradedElement& alpha);

/// Coefficients a with Σ a_j columns[j] = target, if any (exact solve).
std::optional<std::vector<Scalar>> solve_combination(const std::vector<PolyMap>& columns, const PolyMap& target);

/// All maps L → M whose coordinates over the given H-labels lie in `coefficients`,
/// in lexicographic coordinate order (first L basis element, then label, then M index).
/// The visitor returns true to stop.
std::size_t enumerate_maps(const FreeModule& L, const FreeModule& M, const std::vector<Monomial>& labels,
                           const std::vector<Scalar>& coefficients,
                           const std::function<bool(const ModuleMap&)>& visit);

} // namespace pseudocohom
