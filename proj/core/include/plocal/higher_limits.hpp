#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plocal/category.hpp"
#include "plocal/fp_linear.hpp"
#include "plocal/homology.hpp"

namespace plocal {

class OmegaPoset;

inline constexpr std::size_t kDefaultLimitDegree = 3;

/// A contravariant functor from a finite category to finite-dimensional F_p
/// vector spaces. The matrix of f : a -> b maps F(b) to F(a), so it has
/// dim F(a) rows and dim F(b) columns, and F(f then g) = F(f) F(g).
class AbFunctor {
 public:
  AbFunctor(CategoryPtr base, unsigned prime, std::vector<std::size_t> dims, std::vector<DenseMatrix> matrices);

  const FiniteCategory& base() const noexcept { return *base_; }
  const CategoryPtr& base_ptr() const noexcept { return base_; }
  unsigned prime() const noexcept { return prime_; }
  std::size_t dim(ObjId c) const { return dims_[c]; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const DenseMatrix& matrix(MorId f) const { return matrices_[f]; }

  /// Exhaustive functoriality check; throws NotAFunctor on the first failure.
  void verify() const;
  bool is_functor() const;

 private:
  CategoryPtr base_;
  unsigned prime_;
  std::vector<std::size_t> dims_;
  std::vector<DenseMatrix> matrices_;
};

/// F composed with a functor into its base category.
AbFunctor pull_back(const AbFunctor& f, const CategoryFunctor& along);
/// Keeps F on the objects flagged in `support` and sets it to zero elsewhere.
/// Only a functor when no morphism leaves the support into its complement
/// and back; callers verify.
AbFunctor restrict_support(const AbFunctor& f, const std::vector<bool>& support);

/// Higher-limit dimensions lim^n for n = 0..top-1 of a cochain complex
/// truncated at degree top.
struct LimitsProfile {
  std::vector<std::size_t> dims;
  std::size_t exact_max() const { return dims.empty() ? 0 : dims.size() - 1; }
  bool vanishes() const;
  friend bool operator==(const LimitsProfile&, const LimitsProfile&) = default;
};

std::string to_string(const LimitsProfile& profile);

/// Normalized cochain complex C^n = ⊕ F(c_0) over chains c_0 -> ... -> c_n
/// of non-identity morphisms, degrees 0..max_degree.
FpComplex functor_cochain(const AbFunctor& f, std::size_t max_degree, std::size_t budget = kDefaultBasisBudget);
/// lim^n for n < limit_degree, from the cochain complex truncated at
/// limit_degree.
LimitsProfile higher_limits(const AbFunctor& f, std::size_t limit_degree = kDefaultLimitDegree,
                            std::size_t budget = kDefaultBasisBudget);
/// Dimension of the space of compatible families, solved directly.
std::size_t inverse_limit_dimension(const AbFunctor& f);

/// H^n(BP; F_p) with trivial coefficients, from normalized bar cochains on
/// the non-identity elements of P, with a fixed basis of representative
/// cocycles.
class GroupCohomology {
 public:
  GroupCohomology(const Subgroup& p, unsigned prime, std::size_t degree);

  const Subgroup& subgroup() const noexcept { return subgroup_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t dimension() const noexcept { return basis_.cols(); }
  /// Representative cocycles, one per column, over (P - 1)^degree in
  /// lexicographic order.
  const DenseMatrix& basis() const noexcept { return basis_; }
  /// Coordinates of the class of a cocycle in the basis.
  std::vector<FpValue> coordinates(const std::vector<FpValue>& cocycle) const;
  /// Matrix of H^n(BQ) -> H^n(BP) induced by the homomorphism P -> Q,
  /// x -> g^-1 x g, where `target` is the cohomology of Q and P^g <= Q.
  DenseMatrix induced_from(const GroupCohomology& target, ElemId g) const;

 private:
  std::size_t tuple_index(std::span<const ElemId> tuple) const;

  Subgroup subgroup_;
  PrimeField field_;
  std::size_t degree_;
  std::vector<ElemId> nonidentity_;
  std::vector<std::int64_t> position_;
  DenseMatrix basis_;
  // Rows map a cocycle to its coordinates in the basis.
  DenseMatrix coordinate_map_;
};

/// Cache of cohomology computations keyed by subgroup members.
class CohomologyCache {
 public:
  CohomologyCache(unsigned prime, std::size_t degree) : prime_(prime), degree_(degree) {}
  const GroupCohomology& get(const Subgroup& p);

 private:
  unsigned prime_;
  std::size_t degree_;
  std::map<std::vector<ElemId>, std::unique_ptr<GroupCohomology>> cache_;
};

/// F_i(P) = H^i(BP; F_p) on a group-backed orbit category, zero off
/// `support` (all objects when empty); morphisms act by the witness
/// homomorphism. Functoriality is verified before returning.
AbFunctor cohomology_functor(const CategoryPtr& orbit_category, unsigned prime, std::size_t degree,
                             std::vector<bool> support = {}, CohomologyCache* cache = nullptr);

/// Skeletal orbit category of all p-subgroups: one object per conjugacy
/// class, representatives taken inside the given Sylow subgroup, in
/// canonical order (the trivial subgroup first).
CategoryPtr p_subgroup_orbit_category(const Subgroup& sylow, unsigned prime);
/// Skeletal orbit category on Ω: the canonical representative of each class.
CategoryPtr omega_orbit_category(const OmegaPoset& omega);

/// A G-module over F_p: the matrix of each generator of G, in the order of
/// PermutationGroup::generators(). g -> matrix is a homomorphism for the
/// product order "apply left factor first".
struct ModuleData {
  std::size_t dim = 0;
  std::vector<DenseMatrix> generator_action;

  static ModuleData trivial(const PermutationGroup& g, std::size_t dim = 1);
};

/// Matrix of every element, in element order. Throws NotAFunctor when the
/// generator matrices do not define an action.
std::vector<DenseMatrix> module_action(const PermutationGroup& g, const ModuleData& m, const PrimeField& field);

/// Λ_p^n(G; M) for n < limit_degree: higher limits over the skeletal orbit
/// category of p-subgroups of the functor that is M on the trivial subgroup
/// and zero elsewhere.
LimitsProfile lambda_star(const GroupPtr& g, unsigned prime, const ModuleData& m,
                          std::size_t limit_degree = kDefaultLimitDegree);

/// Whether the kernel of the action contains an element of order p.
bool kernel_has_order_p_element(const PermutationGroup& g, const ModuleData& m, unsigned prime);

// ---------------------------------------------------------------------------
// Verdict records.

struct PuncturedVerdict {
  bool applicable = true;
  LimitsProfile over_omega;
  LimitsProfile over_p_subgroups;
  bool ok() const {
    return applicable && over_omega.vanishes() && over_p_subgroups.vanishes() && over_omega == over_p_subgroups;
  }
};

/// F_i^[Q] over the skeletal O_Ω(G) and O_p(G). Returns applicable = false
/// when Q is centric or not in Ω.
PuncturedVerdict punctured_vanishing(const OmegaPoset& omega, const Subgroup& q, std::size_t degree,
                                     std::size_t limit_degree = kDefaultLimitDegree);

struct NormalizerQuotientVerdict {
  LimitsProfile orbit_side;
  LimitsProfile quotient_side;
  std::size_t quotient_order = 0;
  std::size_t module_dim = 0;
  bool ok() const { return orbit_side == quotient_side; }
};

/// lim over O_p(G) of F_i^[Q] against Λ_p(N_G(Q)/Q; H^i(BQ)), both computed
/// from scratch.
NormalizerQuotientVerdict normalizer_quotient_check(const Subgroup& sylow, unsigned prime, const Subgroup& q, std::size_t degree,
                                 std::size_t limit_degree = kDefaultLimitDegree);

struct RestrictionVerdict {
  bool vanishes_off_subcollection = true;
  LimitsProfile full;
  LimitsProfile restricted;
  bool ok() const { return vanishes_off_subcollection && full == restricted; }
};

/// Compares lim over the base orbit category of F with lim over the full
/// subcategory on `kept`. Throws UpwardClosureViolated if some morphism
/// leaves `kept`.
RestrictionVerdict restriction_check(const AbFunctor& f, const std::vector<ObjId>& kept,
                                     std::size_t limit_degree = kDefaultLimitDegree);

struct FiltrationStage {
  std::string added;  ///< label of Q_{r+1}
  std::size_t order = 0;
  bool upward_closed = true;
  bool kernel_is_punctured = true;
  LimitsProfile kernel_limits;
  LimitsProfile before;  ///< over O_r of F_i
  LimitsProfile after;   ///< over O_{r+1} of F_i
  bool ok() const { return upward_closed && kernel_is_punctured && kernel_limits.vanishes() && before == after; }
};

struct FiltrationVerdict {
  std::vector<FiltrationStage> stages;
  LimitsProfile centric_end;
  LimitsProfile omega_end;
  bool ok() const;
  /// Index of the first failing stage, if any.
  std::optional<std::size_t> first_failure() const;
};

/// Adds the non-centric classes of Ω one at a time, by decreasing order, and
/// checks each step of the filtration O_Ω^c = O_0 ⊆ ... ⊆ O_Ω for F_i.
FiltrationVerdict filtration_pipeline(const OmegaPoset& omega, std::size_t degree,
                                      std::size_t limit_degree = kDefaultLimitDegree);

}  // namespace plocal
