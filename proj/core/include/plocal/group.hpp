#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "plocal/permutation.hpp"

namespace plocal {

/// Index of an element in PermutationGroup::elements(). Id 0 is always the
/// identity, since the identity is the lexicographically smallest image array.
using ElemId = std::uint32_t;

inline constexpr std::size_t kDefaultOrderBound = 10'000;

class PermutationGroup;
using GroupPtr = std::shared_ptr<const PermutationGroup>;

/// A finite permutation group with every element enumerated, sorted
/// lexicographically by image array.
class PermutationGroup {
 public:
  /// Closure of `generators` by breadth-first products. Throws
  /// OrderBoundExceeded when more than `order_bound` elements are reached and
  /// InvalidPermutation when a generator has the wrong degree.
  static GroupPtr enumerate(std::size_t degree, std::vector<Permutation> generators,
                            std::size_t order_bound = kDefaultOrderBound);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::span<const Permutation> generators() const noexcept { return generators_; }
  std::span<const ElemId> generator_ids() const noexcept { return generator_ids_; }
  std::span<const Permutation> elements() const noexcept { return elements_; }
  const Permutation& element(ElemId id) const { return elements_[id]; }
  std::optional<ElemId> find(const Permutation& p) const;

  static constexpr ElemId identity() noexcept { return 0; }
  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const { return inverse_[a]; }
  /// g^-1 x g.
  ElemId conj(ElemId x, ElemId g) const { return mul(mul(inv(g), x), g); }
  std::size_t element_order(ElemId a) const { return element_order_[a]; }

 private:
  PermutationGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElemId> generator_ids_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElemId, PermutationHash> index_;
  std::vector<ElemId> inverse_;
  std::vector<std::uint32_t> element_order_;
  // Dense product table, filled only for small groups.
  std::vector<std::uint16_t> table_;
};

/// A subgroup of a parent group, held as the sorted list of member ids.
class Subgroup {
 public:
  /// `members` must be closed under products and inverses; use
  /// Subgroup::generated when that is not known.
  Subgroup(GroupPtr parent, std::vector<ElemId> members);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);
  static Subgroup generated(GroupPtr parent, std::span<const ElemId> generators);

  const PermutationGroup& parent() const noexcept { return *parent_; }
  const GroupPtr& parent_ptr() const noexcept { return parent_; }
  std::span<const ElemId> members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(ElemId x) const { return mask_[x]; }
  bool is_subgroup_of(const Subgroup& other) const;
  bool is_closed() const;
  /// A small generating set picked greedily in element order.
  std::vector<ElemId> generators() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  /// Canonical order: by order, then lexicographically by member ids.
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  GroupPtr parent_;
  std::vector<ElemId> members_;
  std::vector<bool> mask_;
};

// Element-wise subgroup operations. All of them are exact filters over the
// parent group's element list.

Subgroup conjugate(const Subgroup& p, ElemId g);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// C_G(P) with G the parent group.
Subgroup centralizer(const Subgroup& p);
/// C_H(P) = H ∩ C_G(P).
Subgroup centralizer_in(const Subgroup& h, const Subgroup& p);
Subgroup normalizer(const Subgroup& p);
Subgroup normalizer_in(const Subgroup& h, const Subgroup& p);
Subgroup center(const Subgroup& p);
/// N_G(P, Q) = { g : P^g <= Q }, sorted.
std::vector<ElemId> transporter(const Subgroup& p, const Subgroup& q);
bool is_normal_in(const Subgroup& n, const Subgroup& h);

/// O^p(H): generated by the elements of H whose order is prime to p.
Subgroup op_residual(const Subgroup& h, unsigned p);

bool is_prime(unsigned p);
/// Largest power of p dividing n.
std::size_t p_part(std::size_t n, unsigned p);
bool is_p_group(const Subgroup& s, unsigned p);
bool is_p_power(std::size_t n, unsigned p);

/// Sylow p-subgroup built by normalizer ascent.
Subgroup sylow_subgroup(const GroupPtr& g, unsigned p);
bool is_sylow(const Subgroup& s, unsigned p);
/// Distinct conjugates of s, in canonical order.
std::vector<Subgroup> sylow_conjugates(const Subgroup& s);
/// Distinct G-conjugates of any subgroup, in canonical order.
std::vector<Subgroup> conjugacy_class(const Subgroup& s);

/// Every subgroup of a (small) group given as a subgroup, canonical order.
std::vector<Subgroup> all_subgroups(const Subgroup& s);
/// One representative per G-conjugacy class from `subgroups`, keeping the
/// first of each class.
std::vector<Subgroup> conjugacy_representatives(std::span<const Subgroup> subgroups);
/// Index of the entry of `candidates` that is G-conjugate to `s`.
std::optional<std::size_t> find_conjugate(std::span<const Subgroup> candidates, const Subgroup& s);
bool are_conjugate(const Subgroup& a, const Subgroup& b);

/// The quotient N/Q as a permutation group acting regularly on the cosets of
/// Q, together with the image of every member of N (indexed by position in
/// n.members()).
struct QuotientGroup {
  GroupPtr group;
  std::vector<ElemId> image;
};
QuotientGroup quotient(const Subgroup& n, const Subgroup& q);

}  // namespace plocal
