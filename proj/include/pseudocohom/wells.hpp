#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pseudocohom/nonabelian.hpp"

namespace pseudocohom {

/// (β, α) ∈ Aut(M) × Aut(L).
struct AutPair {
    ModuleMap beta;
    ModuleMap alpha;

    bool operator==(const AutPair& o) const { return beta == o.beta && alpha == o.alpha; }
    /// (β, α)·(β′, α′) = (ββ′, αα′).
    AutPair compose(const AutPair& inner) const { return {beta.compose(inner.beta), alpha.compose(inner.alpha)}; }
    std::string render() const;
};

/// Homomorphism findings plus a "not-invertible" finding when Θ has no inverse over H.
CheckReport check_automorphism(const ModuleMap& theta, const LiePseudoalgebra& a);
/// Throws unless β and α are automorphisms of M and L.
AutPair make_aut_pair(ModuleMap beta, ModuleMap alpha, const LiePseudoalgebra& L, const LiePseudoalgebra& M);

/// γ(M) ⊆ M.
bool preserves_m(const ExtensionModel& E, const ModuleMap& gamma);
/// (γ|_M, pγs) with s(x) = (x, φ_s x). Throws unless γ preserves M.
AutPair tau(const ExtensionModel& E, const ModuleMap& gamma, const ModuleMap& phi_s);

/// χ_{(β,α)}(x,y) = β χ(α⁻¹x, α⁻¹y), ψ_{(β,α)}(x,u) = β ψ(α⁻¹x, β⁻¹u).
NonAbelianCocycle transform_cocycle(const NonAbelianCocycle& c, const AutPair& pair, const LiePseudoalgebra& L,
                                    const LiePseudoalgebra& M);

struct WellsResult {
    NonAbelianCocycle cocycle;
    NonAbelianCocycle transformed;
    /// found: W = 0 with witness φ, apply_equivalence(cocycle, φ) = transformed.
    EquivalenceResult equivalence;
    bool zero() const { return equivalence.verdict == Verdict::found; }
};

WellsResult wells_obstruction(const ExtensionModel& E, const ModuleMap& phi_s, const AutPair& pair,
                              const SearchConfig& search = {});

/// γ(x, u) = (αx, βu − βφ_s x + φαx + φ_s αx); throws unless γ is a verified
/// automorphism preserving M with τ(γ) = pair.
ModuleMap construct_lift(const ExtensionModel& E, const ModuleMap& phi_s, const AutPair& pair, const ModuleMap& phi);

enum class Inducibility { inducible, not_inducible, inconclusive };
std::string to_string(Inducibility v);

struct InducibilityResult {
    Inducibility verdict = Inducibility::inconclusive;
    std::optional<ModuleMap> gamma;
    WellsResult wells;
};

InducibilityResult check_inducible(const ExtensionModel& E, const AutPair& pair, const SearchConfig& search = {},
                                   const std::optional<ModuleMap>& phi_s = std::nullopt);

/// (id ⊗ β) ψ(x, u) = ψ(αx, βu) on all basis pairs.
bool check_C_psi(const AutPair& pair, const Representation& r);

struct AbelianWellsResult {
    /// χ_{(β,α)} − χ.
    PolyMap difference;
    bool zero = false;
    /// δφ = difference (the δ of coboundary()); the equivalence witness is −φ.
    std::optional<ModuleMap> phi;
};

/// Abelian M, pair in C_ψ, finite-dimensional H: exact coboundary test.
AbelianWellsResult abelian_wells(const ExtensionModel& E, const ModuleMap& phi_s, const AutPair& pair);

/// Every map A → B over F_p with finite H, in lexicographic coordinate order.
std::size_t enumerate_all_maps(const FreeModule& A, const FreeModule& B, const std::function<bool(const ModuleMap&)>& visit);
/// Aut(A) by full enumeration (F_p, finite H); throws beyond `max_candidates`.
std::vector<ModuleMap> enumerate_automorphisms(const LiePseudoalgebra& a, std::size_t max_candidates = 2'000'000);

struct ExactSequenceReport {
    CheckReport report;
    bool exhaustive = false;
    std::size_t candidates = 0;   // M-preserving module maps examined
    std::size_t aut_m = 0;        // |Aut_M(E)|
    std::size_t ker_tau = 0;      // γ ∈ Aut_M(E) with τ(γ) = (id, id)
    std::size_t shape_kernel = 0; // automorphisms of the form (x, u) ↦ (x, φx + u)
    std::size_t im_tau = 0;
    std::size_t pairs = 0;        // |Aut(M) × Aut(L)|
    std::size_t ker_w = 0;
    std::string summary() const;
};

/// Exactness of 1 → Aut_M^{M,L}(E) → Aut_M(E) → Aut(M)×Aut(L) → H²_nab.
/// Exhaustive over F_p with finite H; otherwise checks the supplied pairs and
/// automorphisms only.
ExactSequenceReport check_exact_sequence(const ExtensionModel& E, const std::vector<AutPair>& sample_pairs = {},
                                         const std::vector<ModuleMap>& sample_gammas = {},
                                         std::size_t max_candidates = 2'000'000);

} // namespace pseudocohom
