#include "plocal/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "plocal/errors.hpp"

namespace plocal {

namespace {

constexpr std::size_t kTableLimit = 2048;

}  // namespace

GroupPtr PermutationGroup::enumerate(std::size_t degree, std::vector<Permutation> generators,
                                     std::size_t order_bound) {
  if (degree == 0) throw InvalidPermutation("degree must be positive");
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InvalidPermutation("generator degree mismatch");
  }
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  const Permutation id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : generators) {
      Permutation y = x * s;
      if (seen.insert(y).second) {
        if (seen.size() > order_bound) throw OrderBoundExceeded(order_bound);
        queue.push_back(std::move(y));
      }
    }
  }

  auto group = std::shared_ptr<PermutationGroup>(new PermutationGroup());
  group->degree_ = degree;
  group->elements_.assign(seen.begin(), seen.end());
  std::sort(group->elements_.begin(), group->elements_.end());
  const std::size_t n = group->elements_.size();
  group->index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) group->index_.emplace(group->elements_[i], static_cast<ElemId>(i));

  if (n <= kTableLimit) {
    group->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        group->table_[a * n + b] =
            static_cast<std::uint16_t>(group->index_.at(group->elements_[a] * group->elements_[b]));
      }
    }
  }
  group->inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) group->inverse_[i] = group->index_.at(group->elements_[i].inverse());
  group->element_order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t k = 1;
    ElemId x = static_cast<ElemId>(i);
    while (x != identity()) {
      x = group->mul(x, static_cast<ElemId>(i));
      ++k;
    }
    group->element_order_[i] = k;
  }
  for (const auto& s : generators) group->generator_ids_.push_back(group->index_.at(s));
  group->generators_ = std::move(generators);
  return group;
}

std::optional<ElemId> PermutationGroup::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElemId PermutationGroup::mul(ElemId a, ElemId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<ElemId> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign(parent_->order(), false);
  for (ElemId x : members_) mask_[x] = true;
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return Subgroup(std::move(parent), {PermutationGroup::identity()});
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<ElemId> all(parent->order());
  std::iota(all.begin(), all.end(), ElemId{0});
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::generated(GroupPtr parent, std::span<const ElemId> generators) {
  std::vector<bool> seen(parent->order(), false);
  std::vector<ElemId> members{PermutationGroup::identity()};
  seen[PermutationGroup::identity()] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (ElemId s : generators) {
      const ElemId y = parent->mul(members[head], s);
      if (!seen[y]) {
        seen[y] = true;
        members.push_back(y);
      }
    }
  }
  return Subgroup(std::move(parent), std::move(members));
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (order() > other.order()) return false;
  return std::all_of(members_.begin(), members_.end(), [&](ElemId x) { return other.contains(x); });
}

bool Subgroup::is_closed() const {
  if (!contains(PermutationGroup::identity())) return false;
  for (ElemId a : members_) {
    if (!contains(parent_->inv(a))) return false;
    for (ElemId b : members_) {
      if (!contains(parent_->mul(a, b))) return false;
    }
  }
  return true;
}

std::vector<ElemId> Subgroup::generators() const {
  std::vector<ElemId> gens;
  std::vector<bool> covered(parent_->order(), false);
  covered[PermutationGroup::identity()] = true;
  for (ElemId x : members_) {
    if (covered[x]) continue;
    gens.push_back(x);
    const Subgroup span = generated(parent_, gens);
    for (ElemId y : span.members()) covered[y] = true;
  }
  return gens;
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members_ < b.members_;
}

// ---------------------------------------------------------------------------

Subgroup conjugate(const Subgroup& p, ElemId g) {
  const auto& G = p.parent();
  std::vector<ElemId> out;
  out.reserve(p.order());
  for (ElemId x : p.members()) out.push_back(G.conj(x, g));
  return Subgroup(p.parent_ptr(), std::move(out));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<ElemId> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return Subgroup(a.parent_ptr(), std::move(out));
}

Subgroup centralizer_in(const Subgroup& h, const Subgroup& p) {
  const auto& G = h.parent();
  const auto gens = p.generators();
  std::vector<ElemId> out;
  for (ElemId g : h.members()) {
    const bool commutes =
        std::all_of(gens.begin(), gens.end(), [&](ElemId x) { return G.mul(g, x) == G.mul(x, g); });
    if (commutes) out.push_back(g);
  }
  return Subgroup(h.parent_ptr(), std::move(out));
}

Subgroup centralizer(const Subgroup& p) { return centralizer_in(Subgroup::whole(p.parent_ptr()), p); }

Subgroup normalizer_in(const Subgroup& h, const Subgroup& p) {
  const auto& G = h.parent();
  const auto gens = p.generators();
  std::vector<ElemId> out;
  for (ElemId g : h.members()) {
    const bool normalizes =
        std::all_of(gens.begin(), gens.end(), [&](ElemId x) { return p.contains(G.conj(x, g)); });
    if (normalizes) out.push_back(g);
  }
  return Subgroup(h.parent_ptr(), std::move(out));
}

Subgroup normalizer(const Subgroup& p) { return normalizer_in(Subgroup::whole(p.parent_ptr()), p); }

Subgroup center(const Subgroup& p) { return centralizer_in(p, p); }

std::vector<ElemId> transporter(const Subgroup& p, const Subgroup& q) {
  std::vector<ElemId> out;
  if (p.order() > q.order() || q.order() % p.order() != 0) return out;
  const auto& G = p.parent();
  const auto gens = p.generators();
  for (ElemId g = 0; g < G.order(); ++g) {
    const bool inside =
        std::all_of(gens.begin(), gens.end(), [&](ElemId x) { return q.contains(G.conj(x, g)); });
    if (inside) out.push_back(g);
  }
  return out;
}

bool is_normal_in(const Subgroup& n, const Subgroup& h) {
  if (!n.is_subgroup_of(h)) return false;
  const auto& G = h.parent();
  const auto gens = h.generators();
  for (ElemId g : gens) {
    for (ElemId x : n.members()) {
      if (!n.contains(G.conj(x, g))) return false;
    }
  }
  return true;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::size_t p_part(std::size_t n, unsigned p) {
  std::size_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

bool is_p_power(std::size_t n, unsigned p) { return n > 0 && p_part(n, p) == n; }

bool is_p_group(const Subgroup& s, unsigned p) { return is_p_power(s.order(), p); }

Subgroup op_residual(const Subgroup& h, unsigned p) {
  const auto& G = h.parent();
  std::vector<ElemId> coprime;
  for (ElemId x : h.members()) {
    if (G.element_order(x) % p != 0) coprime.push_back(x);
  }
  return Subgroup::generated(h.parent_ptr(), coprime);
}

Subgroup sylow_subgroup(const GroupPtr& g, unsigned p) {
  const std::size_t target = p_part(g->order(), p);
  Subgroup current = Subgroup::trivial(g);
  while (current.order() < target) {
    const Subgroup n = normalizer(current);
    std::optional<ElemId> step;
    for (ElemId x : n.members()) {
      if (current.contains(x)) continue;
      ElemId power = x;
      for (unsigned k = 1; k < p; ++k) power = g->mul(power, x);
      if (current.contains(power)) {
        step = x;
        break;
      }
    }
    // N_G(P)/P has order divisible by p whenever P is not Sylow, so a step
    // always exists.
    if (!step) throw Error("Sylow ascent stalled");
    std::vector<ElemId> gens = current.generators();
    gens.push_back(*step);
    current = Subgroup::generated(g, gens);
  }
  return current;
}

bool is_sylow(const Subgroup& s, unsigned p) {
  return s.order() == p_part(s.parent().order(), p) && is_p_group(s, p);
}

std::vector<Subgroup> conjugacy_class(const Subgroup& s) {
  std::set<std::vector<ElemId>> seen;
  std::vector<Subgroup> out;
  for (ElemId g = 0; g < s.parent().order(); ++g) {
    Subgroup c = conjugate(s, g);
    std::vector<ElemId> key(c.members().begin(), c.members().end());
    if (seen.insert(std::move(key)).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> sylow_conjugates(const Subgroup& s) { return conjugacy_class(s); }

std::vector<Subgroup> all_subgroups(const Subgroup& s) {
  std::set<std::vector<ElemId>> seen;
  std::vector<Subgroup> out{Subgroup::trivial(s.parent_ptr())};
  seen.insert({PermutationGroup::identity()});
  for (std::size_t head = 0; head < out.size(); ++head) {
    const auto base = out[head].generators();
    for (ElemId x : s.members()) {
      if (out[head].contains(x)) continue;
      std::vector<ElemId> gens = base;
      gens.push_back(x);
      Subgroup h = Subgroup::generated(s.parent_ptr(), gens);
      std::vector<ElemId> key(h.members().begin(), h.members().end());
      if (seen.insert(std::move(key)).second) out.push_back(std::move(h));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool are_conjugate(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return false;
  for (ElemId g = 0; g < a.parent().order(); ++g) {
    if (conjugate(a, g) == b) return true;
  }
  return false;
}

std::optional<std::size_t> find_conjugate(std::span<const Subgroup> candidates, const Subgroup& s) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (are_conjugate(candidates[i], s)) return i;
  }
  return std::nullopt;
}

std::vector<Subgroup> conjugacy_representatives(std::span<const Subgroup> subgroups) {
  std::vector<Subgroup> reps;
  for (const auto& s : subgroups) {
    if (!find_conjugate(reps, s)) reps.push_back(s);
  }
  return reps;
}

QuotientGroup quotient(const Subgroup& n, const Subgroup& q) {
  const auto& G = n.parent();
  // Label each right coset Qx; members are visited in increasing order, so
  // the first member seen in a coset is its minimum.
  std::vector<std::int64_t> coset_of(G.order(), -1);
  std::vector<ElemId> reps;
  for (ElemId x : n.members()) {
    if (coset_of[x] >= 0) continue;
    for (ElemId y : q.members()) coset_of[G.mul(y, x)] = static_cast<std::int64_t>(reps.size());
    reps.push_back(x);
  }
  const std::size_t cosets = reps.size();

  auto action = [&](ElemId element) {
    std::vector<Point> images(cosets);
    for (std::size_t c = 0; c < cosets; ++c) {
      images[c] = static_cast<Point>(coset_of[G.mul(reps[c], element)]);
    }
    return Permutation::from_images(std::move(images));
  };
  std::vector<Permutation> gens;
  for (ElemId x : n.generators()) gens.push_back(action(x));
  QuotientGroup out;
  out.group = PermutationGroup::enumerate(cosets, std::move(gens), n.order());
  out.image.reserve(n.order());
  for (ElemId x : n.members()) out.image.push_back(*out.group->find(action(x)));
  return out;
}

}  // namespace plocal
