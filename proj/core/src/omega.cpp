#include "plocal/omega.hpp"

#include <algorithm>
#include <set>

#include "plocal/errors.hpp"

namespace plocal {

namespace {

unsigned checked_prime(unsigned p) {
  if (!is_prime(p)) throw Error("not a prime: " + std::to_string(p));
  return p;
}

std::vector<ElemId> key_of(const Subgroup& s) { return {s.members().begin(), s.members().end()}; }

}  // namespace

OmegaPoset::OmegaPoset(GroupPtr group, unsigned prime)
    : group_(std::move(group)), prime_(checked_prime(prime)), sylow_(sylow_subgroup(group_, prime)) {
  sylows_ = sylow_conjugates(sylow_);

  // Worklist closure under pairwise intersection.
  std::set<std::vector<ElemId>> seen;
  for (const auto& s : sylows_) {
    seen.insert(key_of(s));
    members_.push_back(s);
  }
  for (std::size_t head = 0; head < members_.size(); ++head) {
    for (std::size_t other = 0; other < head; ++other) {
      Subgroup meet = intersection(members_[head], members_[other]);
      if (seen.insert(key_of(meet)).second) members_.push_back(std::move(meet));
    }
  }
  std::sort(members_.begin(), members_.end());

  const std::size_t n = members_.size();
  leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) leq_[i * n + j] = members_[i].is_subgroup_of(members_[j]);
  }
  // The smallest member is contained in every other one.
  minimum_ = 0;

  class_of_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (class_of_[i] != n) continue;
    const std::size_t cls = classes_.size();
    classes_.emplace_back();
    for (const auto& c : conjugacy_class(members_[i])) {
      const auto j = index_of(c);
      if (!j) throw Error("Ω is not closed under conjugation");
      if (class_of_[*j] == n) {
        class_of_[*j] = cls;
        classes_[cls].push_back(*j);
      }
    }
    std::sort(classes_[cls].begin(), classes_[cls].end());
  }
}

std::optional<std::size_t> OmegaPoset::index_of(const Subgroup& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

std::vector<std::size_t> OmegaPoset::inside_sylow() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].is_subgroup_of(sylow_)) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> OmegaPoset::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = members_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) {
        if (k != i && k != j && leq(i, k) && leq(k, j)) covered = false;
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

OmegaPoset build_omega(const GroupPtr& group, unsigned prime) { return OmegaPoset(group, prime); }

Subgroup circ_closure(const OmegaPoset& omega, const Subgroup& p) {
  if (!is_p_group(p, omega.prime())) throw NotPSubgroup("subgroup is not a p-group");
  std::optional<Subgroup> meet;
  for (const auto& s : omega.sylows()) {
    if (!p.is_subgroup_of(s)) continue;
    meet = meet ? intersection(*meet, s) : s;
  }
  if (!meet) throw NotPSubgroup("p-subgroup lies in no Sylow subgroup");
  return *meet;
}

bool is_centric(const Subgroup& p, unsigned prime) {
  const std::size_t c = centralizer(p).order();
  const std::size_t z = center(p).order();
  return (c / z) % prime != 0;
}

CentricityEntry centricity_entry(const Subgroup& p, unsigned prime) {
  Subgroup c = centralizer(p);
  Subgroup z = center(p);
  Subgroup k = op_residual(c, prime);
  const bool centric = (c.order() / z.order()) % prime != 0;
  return CentricityEntry{p, centric, std::move(c), std::move(z), std::move(k)};
}

CentricityTable classify_centric(unsigned prime, std::span<const Subgroup> collection) {
  CentricityTable table;
  table.reserve(collection.size());
  for (const auto& p : collection) {
    if (!is_p_group(p, prime)) throw NotPSubgroup("collection member is not a p-group");
    table.push_back(centricity_entry(p, prime));
  }
  return table;
}

bool decomposition_holds(const CentricityEntry& e, unsigned prime) {
  const auto& G = e.subgroup.parent();
  if (intersection(e.center, e.residual).order() != 1) return false;
  if (e.residual.order() % prime == 0) return false;
  for (ElemId z : e.center.members()) {
    for (ElemId k : e.residual.members()) {
      if (G.mul(z, k) != G.mul(k, z)) return false;
    }
  }
  // With trivial intersection and commuting factors, |ZK| = |Z||K|.
  if (e.center.order() * e.residual.order() != e.centralizer.order()) return false;
  return e.center.is_subgroup_of(e.centralizer) && e.residual.is_subgroup_of(e.centralizer);
}

std::size_t chain_length(const OmegaPoset& omega) {
  const auto inside = omega.inside_sylow();
  // Members are sorted by order, so strict containment only goes forward.
  std::vector<std::size_t> longest(inside.size(), 0);
  std::size_t best = 0;
  for (std::size_t a = 0; a < inside.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (omega.leq(inside[b], inside[a]) && inside[b] != inside[a]) {
        longest[a] = std::max(longest[a], longest[b] + 1);
      }
    }
    best = std::max(best, longest[a]);
  }
  return best;
}

}  // namespace plocal

namespace plocal {

ClosureVerdict check_closure_properties(const OmegaPoset& omega, std::span<const Subgroup> tests) {
  ClosureVerdict v;
  v.subgroups_tested = tests.size();
  std::vector<Subgroup> closures;
  closures.reserve(tests.size());
  for (const auto& p : tests) closures.push_back(circ_closure(omega, p));

  auto subset = [](const std::vector<ElemId>& a, const std::vector<ElemId>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };

  for (std::size_t i = 0; i < tests.size(); ++i) {
    const auto& p = tests[i];
    const auto& pc = closures[i];
    if (!p.is_subgroup_of(pc)) v.extensive_and_monotone = false;
    if (!omega.contains(pc) || !(circ_closure(omega, pc) == pc)) v.idempotent = false;
    if (omega.contains(p) && !(pc == p)) v.idempotent = false;
    for (ElemId g : omega.group()->generator_ids()) {
      if (!(circ_closure(omega, conjugate(p, g)) == conjugate(pc, g))) v.conjugation_equivariant = false;
    }
    for (std::size_t j = 0; j < tests.size(); ++j) {
      const auto& q = tests[j];
      if (p.is_subgroup_of(q) && !pc.is_subgroup_of(closures[j])) v.extensive_and_monotone = false;
      if (!subset(transporter(p, q), transporter(pc, closures[j]))) v.transporters_grow = false;
    }
    for (const auto& q : omega.members()) {
      if (transporter(pc, q) != transporter(p, q)) v.transporters_agree = false;
    }
  }
  return v;
}

}  // namespace plocal
