#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "plocal/category.hpp"
#include "plocal/fp_linear.hpp"

namespace plocal {

inline constexpr std::size_t kDefaultBasisBudget = 2'000'000;

/// Enumerates the composable chains c_0 -> ... -> c_d of non-identity
/// morphisms of a finite category, degree by degree, in lexicographic order of
/// morphism ids. Degree-0 chains are the objects.
class ChainIndex {
 public:
  /// Throws BudgetExceeded when some degree would hold more than `budget`
  /// chains.
  ChainIndex(CategoryPtr category, std::size_t max_degree, std::size_t budget = kDefaultBasisBudget);

  const FiniteCategory& category() const noexcept { return *category_; }
  const CategoryPtr& category_ptr() const noexcept { return category_; }
  std::size_t max_degree() const noexcept { return counts_.size() - 1; }
  std::size_t count(std::size_t degree) const { return counts_[degree]; }

  /// Morphisms of chain k in degree d >= 1.
  std::span<const MorId> chain(std::size_t degree, std::size_t k) const {
    return {chains_[degree].data() + degree * k, degree};
  }
  ObjId first_object(std::size_t degree, std::size_t k) const;
  ObjId last_object(std::size_t degree, std::size_t k) const;
  /// Position of a chain of non-identity composable morphisms; the degree is
  /// the span length (an empty span is not allowed: use objects directly).
  std::size_t index(std::span<const MorId> chain) const;

 private:
  CategoryPtr category_;
  std::vector<std::size_t> counts_;
  std::vector<std::vector<MorId>> chains_;
  // starts_[d][k]: first index in degree d of the extensions of chain k of
  // degree d-1.
  std::vector<std::vector<std::size_t>> starts_;
  std::vector<std::uint32_t> nonid_rank_;
  std::vector<std::uint32_t> out_position_;
  std::vector<std::vector<MorId>> nonid_out_;
};

/// A bounded complex of F_p vector spaces in degrees 0..top.
struct FpComplex {
  enum class Orientation { chain, cochain };

  unsigned prime = 2;
  Orientation orientation = Orientation::chain;
  std::vector<std::size_t> dims;
  /// chain: maps[d] is the boundary C_d -> C_{d-1} (maps[0] maps to zero).
  /// cochain: maps[d] is the coboundary C^d -> C^{d+1}, d < top.
  std::vector<SparseMatrix> maps;

  std::size_t top_degree() const noexcept { return dims.size() - 1; }
  /// Exact check of ∂∂ = 0 (or δδ = 0).
  bool squares_to_zero() const;
};

/// Homology (or cohomology) dimensions in degrees 0..top-1 of a complex
/// truncated at degree top; the top degree is dropped because the next
/// differential is unknown.
struct HomologyProfile {
  std::vector<std::size_t> dims;
  /// Largest degree whose dimension is exact.
  std::size_t exact_max() const { return dims.empty() ? 0 : dims.size() - 1; }
};

HomologyProfile fp_homology(const FpComplex& complex);

/// Normalized nerve complex of a category with its chain enumeration.
struct NerveComplex {
  FpComplex complex;
  std::shared_ptr<const ChainIndex> index;
};

NerveComplex nerve_complex(const CategoryPtr& category, unsigned prime, std::size_t max_degree,
                           std::size_t budget = kDefaultBasisBudget);
/// Normalized bar complex of G, i.e. the nerve of the one-object category G.
NerveComplex bar_complex(const GroupPtr& group, unsigned prime, std::size_t max_degree,
                         std::size_t budget = kDefaultBasisBudget);

/// Degree-wise matrices of a chain map A -> B; components[d] : A_d -> B_d.
struct ChainMap {
  std::vector<SparseMatrix> components;
  bool commutes_with(const FpComplex& source, const FpComplex& target) const;
};

/// Map of normalized nerves induced by a functor. Chains whose image
/// contains an identity are degenerate and go to zero.
ChainMap induced_chain_map(const CategoryFunctor& functor, const NerveComplex& source,
                           const NerveComplex& target);

/// Algebraic mapping cone: Cone_d = A_{d-1} ⊕ B_d with
/// ∂(a, b) = (-∂a, f(a) + ∂b), in degrees up to `max_degree` when the inputs
/// reach that far.
FpComplex mapping_cone(const FpComplex& source, const FpComplex& target, const ChainMap& map,
                       std::size_t max_degree = static_cast<std::size_t>(-1));

struct IsoVerdict {
  HomologyProfile source;
  HomologyProfile target;
  HomologyProfile cone;
  /// Rank of H_d(f) for each degree with exact data.
  std::vector<std::size_t> induced_rank;
  /// iso[d] for d = 0..certified_max.
  std::vector<bool> iso;
  std::size_t certified_max = 0;
  bool all_iso() const;
};

/// Per-degree isomorphism verdict from the long exact sequence of the cone:
/// h_d(cone) = dim coker H_d(f) + dim ker H_{d-1}(f). Verdicts cover the
/// degrees d <= top - 2, where top is the common truncation degree.
IsoVerdict homology_iso_verdict(const FpComplex& source, const FpComplex& target, const ChainMap& map);

/// Text dump: sizes per degree and the sparse triplets of each map.
void write_complex_text(std::ostream& out, const FpComplex& complex);
FpComplex read_complex_text(std::istream& in);

}  // namespace plocal
