#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <optional>
#include <ranges>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plocal/group.hpp"

namespace plocal {

class OmegaPoset;

using ObjId = std::uint32_t;
using MorId = std::uint32_t;

inline constexpr ElemId kNoWitness = std::numeric_limits<ElemId>::max();

/// Which quotient of the transporter sets a morphism token lives in.
enum class KernelTag : std::uint8_t {
  none,     ///< transporter: one token per element of N_G(P,Q)
  linking,  ///< left cosets O^p(C_G(P)) g
  orbit,    ///< left cosets gQ of the target
  abstract  ///< no group behind the category
};

const char* to_string(KernelTag tag);

struct MorphismToken {
  ObjId source;
  ObjId target;
  /// Canonical (minimal) group element of the coset, or kNoWitness.
  ElemId witness;
};

/// A finite category with every morphism materialized. Morphism ids are
/// grouped by (source, target) so each hom set is a contiguous id range.
///
/// Composition is written in diagrammatic order: compose(f, g) is "f then g"
/// and requires target(f) == source(g). For group-backed categories the
/// composite of witnesses g and h is the token containing g·h.
class FiniteCategory {
 public:
  using HomRange = std::ranges::iota_view<MorId, MorId>;

  /// Explicit description of an abstract category.
  struct Table {
    std::vector<std::string> objects;
    /// (source, target) per morphism.
    std::vector<std::pair<ObjId, ObjId>> morphisms;
    std::vector<MorId> identities;
    /// (f, g, f-then-g) for every composable pair; pairs involving an
    /// identity may be omitted.
    std::vector<std::tuple<MorId, MorId, MorId>> compositions;
  };

  /// Validates shape only; use check_category_laws for the axioms. Morphisms
  /// are renumbered into (source, target) order; the returned vector maps old
  /// ids to new ids when `renumbering` is non-null.
  static FiniteCategory from_table(const Table& table, std::vector<MorId>* renumbering = nullptr);

  /// Objects are subgroups P_i; morphisms P_i -> P_j are the double cosets
  /// left[i] · g · right[j] for g in N_G(P_i, P_j).
  static FiniteCategory from_transporters(std::vector<Subgroup> objects, KernelTag tag,
                                          std::vector<Subgroup> left_kernels,
                                          std::vector<Subgroup> right_kernels);

  std::size_t object_count() const noexcept { return labels_.size(); }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }
  const std::string& label(ObjId i) const { return labels_[i]; }
  KernelTag kind() const noexcept { return kind_; }
  bool has_group() const noexcept { return group_ != nullptr; }
  const GroupPtr& group() const noexcept { return group_; }
  /// Object subgroups; empty for abstract categories.
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
  const Subgroup& left_kernel(ObjId i) const { return left_[i]; }
  const Subgroup& right_kernel(ObjId i) const { return right_[i]; }

  const MorphismToken& morphism(MorId f) const { return morphisms_[f]; }
  ObjId source(MorId f) const { return morphisms_[f].source; }
  ObjId target(MorId f) const { return morphisms_[f].target; }
  HomRange hom(ObjId i, ObjId j) const {
    const std::size_t k = static_cast<std::size_t>(i) * labels_.size() + j;
    return HomRange(hom_offset_[k], hom_offset_[k + 1]);
  }
  /// All morphisms with the given source.
  HomRange out(ObjId i) const {
    const std::size_t n = labels_.size();
    return HomRange(hom_offset_[i * n], hom_offset_[i * n + n]);
  }
  std::size_t hom_size(ObjId i, ObjId j) const { return hom(i, j).size(); }
  MorId identity(ObjId i) const { return identities_[i]; }
  bool is_identity(MorId f) const { return identities_[source(f)] == f; }

  MorId compose(MorId f, MorId g) const;

  /// Token of hom(i, j) containing group element x.
  std::optional<MorId> find(ObjId i, ObjId j, ElemId x) const;
  /// Every group element in the coset represented by f.
  std::vector<ElemId> coset(MorId f) const;

  /// A one-line size summary: objects and morphisms.
  std::string summary() const;

 private:
  FiniteCategory() = default;

  KernelTag kind_ = KernelTag::abstract;
  std::vector<std::string> labels_;
  std::vector<MorphismToken> morphisms_;
  std::vector<MorId> hom_offset_;
  std::vector<MorId> identities_;

  // Group-backed categories.
  GroupPtr group_;
  std::vector<Subgroup> subgroups_;
  std::vector<Subgroup> left_;
  std::vector<Subgroup> right_;
  // Per (i, j): group element -> local index in hom(i, j), or -1.
  std::vector<std::vector<std::int32_t>> lookup_;

  // Abstract categories: composition keyed by f * morphism_count + g.
  std::unordered_map<std::uint64_t, MorId> table_;
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

std::string subgroup_label(const Subgroup& s);

/// Transporter category: Mor(P, Q) = N_G(P, Q).
CategoryPtr build_transporter(std::vector<Subgroup> collection);
/// Centric linking system: Mor(P, Q) = N_G(P, Q) / O^p(C_G(P)). Throws
/// NotCentric when a member is not p-centric.
CategoryPtr build_linking(unsigned prime, std::vector<Subgroup> collection);
/// Orbit category: Mor(P, Q) = N_G(P, Q) / Q, realized as cosets gQ.
CategoryPtr build_orbit(std::vector<Subgroup> collection);
/// One object with automorphism group G; its nerve is the bar construction.
CategoryPtr build_group_category(const GroupPtr& group);
/// The thin category of pairs (Q, xQ) with (P, xP) -> (Q, yQ) whenever
/// x^-1 y lies in N_G(P, Q). Its nerve is the homotopy colimit of G/- over
/// the orbit category on `collection`.
CategoryPtr build_coset_category(const std::vector<Subgroup>& collection);

/// A functor between finite categories, stored as explicit maps.
struct CategoryFunctor {
  CategoryPtr source;
  CategoryPtr target;
  std::vector<ObjId> object_map;
  std::vector<MorId> morphism_map;

  /// Exhaustively checks identities, endpoints and composition.
  bool is_functor() const;
};

CategoryFunctor identity_functor(const CategoryPtr& c);
/// Composite "first then second".
CategoryFunctor compose_functors(const CategoryFunctor& first, const CategoryFunctor& second);

struct Subcategory {
  CategoryPtr category;
  CategoryFunctor inclusion;
};

/// Full subcategory on the listed objects (kept in the given order).
Subcategory full_subcategory(const CategoryPtr& c, const std::vector<ObjId>& objects);

/// Partition of the objects into isomorphism classes, ordered by smallest
/// member.
std::vector<std::vector<ObjId>> isomorphism_classes(const FiniteCategory& c);
/// Full subcategory on the first object of each isomorphism class.
Subcategory skeleton(const CategoryPtr& c);

/// Projection T^c -> L^c: identity on objects, g -> O^p(C_G(P)) g.
CategoryFunctor quotient_projection(const CategoryPtr& transporter, unsigned prime);
/// Transporter-type category -> one-object category of G, f -> witness.
CategoryFunctor forget_to_group(const CategoryPtr& transporter, const CategoryPtr& group_category);
/// One-object category of G -> Aut(object) in a transporter category whose
/// object is normal in G.
CategoryFunctor automorphism_inclusion(const CategoryPtr& group_category, const CategoryPtr& c,
                                       ObjId object);

struct LawReport {
  bool identities = true;
  bool endpoints = true;
  bool associativity = true;
  /// Composite tokens do not depend on the coset representatives.
  bool well_defined = true;
  std::size_t triples_checked = 0;
  bool ok() const { return identities && endpoints && associativity && well_defined; }
};

LawReport check_category_laws(const FiniteCategory& c);

struct KernelLemmaVerdict {
  bool bijective_on_iso_classes = true;
  bool surjective_on_morphisms = true;
  /// Every kernel K(c) has order prime to p.
  bool kernels_prime_to_p = true;
  /// Fibers of each morphism map are exactly the K(c)-orbits.
  bool fibers_are_kernel_orbits = true;
  std::vector<std::size_t> kernel_orders;
  bool ok() const {
    return bijective_on_iso_classes && surjective_on_morphisms && kernels_prime_to_p &&
           fibers_are_kernel_orbits;
  }
};

KernelLemmaVerdict verify_kernel_lemma(const CategoryFunctor& psi, unsigned prime);

struct AdjunctionVerdict {
  bool circ_is_functor = true;
  bool unit_natural = true;
  bool bijections = true;
  std::size_t pairs_checked = 0;
  bool ok() const { return circ_is_functor && unit_natural && bijections; }
};

/// Checks that precomposition with P -> P° gives bijections
/// Mor_O(P°, Q) -> Mor_O(P, Q) for every P in `tests` and Q in Ω, natural
/// in P, with (-)° a functor on the orbit category.
AdjunctionVerdict circ_adjunction_check(const OmegaPoset& omega, const std::vector<Subgroup>& tests);

/// Plain-text category format used to feed the homology code directly.
void write_category_text(std::ostream& out, const FiniteCategory& c);
FiniteCategory read_category_text(std::istream& in);

}  // namespace plocal
