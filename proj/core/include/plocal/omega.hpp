#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "plocal/group.hpp"

namespace plocal {

/// The poset of intersections of Sylow p-subgroups of a finite group, with
/// its conjugacy classes and the fixed Sylow subgroup S used for Ω_S.
class OmegaPoset {
 public:
  OmegaPoset(GroupPtr group, unsigned prime);

  const GroupPtr& group() const noexcept { return group_; }
  unsigned prime() const noexcept { return prime_; }
  const Subgroup& sylow() const noexcept { return sylow_; }
  std::span<const Subgroup> sylows() const noexcept { return sylows_; }

  /// Members in canonical order (by order, then member ids).
  std::span<const Subgroup> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::optional<std::size_t> index_of(const Subgroup& s) const;
  bool contains(const Subgroup& s) const { return index_of(s).has_value(); }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * members_.size() + j]; }
  /// Index of the intersection of all Sylow subgroups.
  std::size_t minimum() const noexcept { return minimum_; }

  /// Partition of member indices under G-conjugation. Classes are ordered by
  /// their first member; the first member of each class is its canonical
  /// representative.
  const std::vector<std::vector<std::size_t>>& classes() const noexcept { return classes_; }
  std::size_t class_of(std::size_t member) const { return class_of_[member]; }
  /// Members contained in the fixed Sylow subgroup S.
  std::vector<std::size_t> inside_sylow() const;
  /// Covering relations of the containment order, as (smaller, larger).
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

 private:
  GroupPtr group_;
  unsigned prime_;
  Subgroup sylow_;
  std::vector<Subgroup> sylows_;
  std::vector<Subgroup> members_;
  std::vector<bool> leq_;
  std::size_t minimum_ = 0;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
};

OmegaPoset build_omega(const GroupPtr& group, unsigned prime);

/// P°: the intersection of all Sylow p-subgroups containing P. Throws
/// NotPSubgroup unless P is a p-group.
Subgroup circ_closure(const OmegaPoset& omega, const Subgroup& p);

struct CentricityEntry {
  Subgroup subgroup;
  bool is_centric;
  Subgroup centralizer;
  Subgroup center;
  /// O^p(C_G(P)).
  Subgroup residual;
};

using CentricityTable = std::vector<CentricityEntry>;

/// P is p-centric when |C_G(P)| / |Z(P)| is prime to p, i.e. Z(P) is a Sylow
/// p-subgroup of C_G(P).
bool is_centric(const Subgroup& p, unsigned prime);
CentricityEntry centricity_entry(const Subgroup& p, unsigned prime);
CentricityTable classify_centric(unsigned prime, std::span<const Subgroup> collection);

/// For a centric entry: Z(P) ∩ O^p(C_G(P)) = 1, the factors commute, their
/// product is C_G(P) and O^p(C_G(P)) has order prime to p.
bool decomposition_holds(const CentricityEntry& entry, unsigned prime);

/// Length of the longest strict containment chain in Ω_S(G).
std::size_t chain_length(const OmegaPoset& omega);

/// Exhaustive check of the closure properties of P -> P° over a list of
/// p-subgroups (usually every subgroup of S).
struct ClosureVerdict {
  /// P <= P°, and P <= Q implies P° <= Q°.
  bool extensive_and_monotone = true;
  /// (P°)° = P°, P° lies in Ω, and P° = P for P in Ω.
  bool idempotent = true;
  /// N_G(P, Q) is contained in N_G(P°, Q°).
  bool transporters_grow = true;
  /// N_G(P°, Q) = N_G(P, Q) for every Q in Ω.
  bool transporters_agree = true;
  /// (P°)^g = (P^g)° for the generators g of G.
  bool conjugation_equivariant = true;
  std::size_t subgroups_tested = 0;
  bool ok() const {
    return extensive_and_monotone && idempotent && transporters_grow && transporters_agree &&
           conjugation_equivariant;
  }
};

ClosureVerdict check_closure_properties(const OmegaPoset& omega, std::span<const Subgroup> tests);

}  // namespace plocal
