#include "plocal/category.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "plocal/errors.hpp"
#include "plocal/omega.hpp"

namespace plocal {

const char* to_string(KernelTag tag) {
  switch (tag) {
    case KernelTag::none: return "transporter";
    case KernelTag::linking: return "linking";
    case KernelTag::orbit: return "orbit";
    case KernelTag::abstract: return "abstract";
  }
  return "unknown";
}

std::string subgroup_label(const Subgroup& s) {
  const auto gens = s.generators();
  if (gens.empty()) return "1";
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += s.parent().element(gens[i]).to_cycles();
  }
  return out + ">";
}

// ---------------------------------------------------------------------------

FiniteCategory FiniteCategory::from_table(const Table& t, std::vector<MorId>* renumbering) {
  FiniteCategory c;
  c.kind_ = KernelTag::abstract;
  c.labels_ = t.objects;
  const std::size_t n = t.objects.size();
  const std::size_t m = t.morphisms.size();
  if (t.identities.size() != n) throw Error("category table: one identity per object required");

  std::vector<MorId> order(m);
  std::iota(order.begin(), order.end(), MorId{0});
  for (const auto& [s, d] : t.morphisms) {
    if (s >= n || d >= n) throw Error("category table: morphism endpoint out of range");
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](MorId a, MorId b) { return t.morphisms[a] < t.morphisms[b]; });
  std::vector<MorId> new_id(m);
  for (std::size_t k = 0; k < m; ++k) new_id[order[k]] = static_cast<MorId>(k);

  c.morphisms_.resize(m);
  for (std::size_t old = 0; old < m; ++old) {
    c.morphisms_[new_id[old]] = {t.morphisms[old].first, t.morphisms[old].second, kNoWitness};
  }
  c.hom_offset_.assign(n * n + 1, 0);
  for (const auto& tok : c.morphisms_) ++c.hom_offset_[tok.source * n + tok.target + 1];
  std::partial_sum(c.hom_offset_.begin(), c.hom_offset_.end(), c.hom_offset_.begin());

  c.identities_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const MorId id = t.identities[i];
    if (id >= m || t.morphisms[id].first != i || t.morphisms[id].second != i) {
      throw Error("category table: identity of object " + std::to_string(i) + " is not an endomorphism");
    }
    c.identities_[i] = new_id[id];
  }
  for (const auto& [f, g, h] : t.compositions) {
    if (f >= m || g >= m || h >= m) throw Error("category table: composition index out of range");
    c.table_[static_cast<std::uint64_t>(new_id[f]) * m + new_id[g]] = new_id[h];
  }
  if (renumbering) *renumbering = std::move(new_id);
  return c;
}

FiniteCategory FiniteCategory::from_transporters(std::vector<Subgroup> objects, KernelTag tag,
                                                 std::vector<Subgroup> left_kernels,
                                                 std::vector<Subgroup> right_kernels) {
  if (objects.empty()) throw Error("category needs at least one object");
  FiniteCategory c;
  c.kind_ = tag;
  c.group_ = objects.front().parent_ptr();
  const auto& G = *c.group_;
  const std::size_t n = objects.size();
  c.subgroups_ = std::move(objects);
  c.left_ = std::move(left_kernels);
  c.right_ = std::move(right_kernels);
  for (const auto& s : c.subgroups_) c.labels_.push_back(subgroup_label(s));

  c.hom_offset_.assign(n * n + 1, 0);
  c.lookup_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = i * n + j;
      c.hom_offset_[k] = static_cast<MorId>(c.morphisms_.size());
      const auto transport = transporter(c.subgroups_[i], c.subgroups_[j]);
      if (transport.empty()) continue;
      auto& lookup = c.lookup_[k];
      lookup.assign(G.order(), -1);
      std::int32_t local = 0;
      // Ascending scan: the first unassigned element is its coset's minimum.
      for (ElemId g : transport) {
        if (lookup[g] >= 0) continue;
        for (ElemId l : c.left_[i].members()) {
          const ElemId lg = G.mul(l, g);
          for (ElemId r : c.right_[j].members()) lookup[G.mul(lg, r)] = local;
        }
        c.morphisms_.push_back({static_cast<ObjId>(i), static_cast<ObjId>(j), g});
        ++local;
      }
    }
  }
  c.hom_offset_[n * n] = static_cast<MorId>(c.morphisms_.size());
  c.identities_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.identities_[i] = *c.find(static_cast<ObjId>(i), static_cast<ObjId>(i), PermutationGroup::identity());
  }
  return c;
}

MorId FiniteCategory::compose(MorId f, MorId g) const {
  if (target(f) != source(g)) throw Error("composing non-composable morphisms");
  if (group_) {
    const ElemId x = group_->mul(morphisms_[f].witness, morphisms_[g].witness);
    const auto h = find(source(f), target(g), x);
    if (!h) throw Error("composite witness outside the transporter set");
    return *h;
  }
  const auto it = table_.find(static_cast<std::uint64_t>(f) * morphisms_.size() + g);
  if (it != table_.end()) return it->second;
  if (is_identity(f)) return g;
  if (is_identity(g)) return f;
  throw Error("composition table has no entry for (" + std::to_string(f) + ", " + std::to_string(g) + ")");
}

std::optional<MorId> FiniteCategory::find(ObjId i, ObjId j, ElemId x) const {
  if (!group_) return std::nullopt;
  const auto& lookup = lookup_[static_cast<std::size_t>(i) * labels_.size() + j];
  if (lookup.empty() || lookup[x] < 0) return std::nullopt;
  return hom(i, j).front() + static_cast<MorId>(lookup[x]);
}

std::vector<ElemId> FiniteCategory::coset(MorId f) const {
  if (!group_) return {};
  const auto& tok = morphisms_[f];
  std::vector<ElemId> out;
  for (ElemId l : left_[tok.source].members()) {
    const ElemId lg = group_->mul(l, tok.witness);
    for (ElemId r : right_[tok.target].members()) out.push_back(group_->mul(lg, r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string FiniteCategory::summary() const {
  return std::to_string(object_count()) + " objects, " + std::to_string(morphism_count()) + " morphisms";
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Subgroup> trivial_kernels(const std::vector<Subgroup>& objects) {
  std::vector<Subgroup> out;
  out.reserve(objects.size());
  for (const auto& s : objects) out.push_back(Subgroup::trivial(s.parent_ptr()));
  return out;
}

}  // namespace

CategoryPtr build_transporter(std::vector<Subgroup> collection) {
  auto left = trivial_kernels(collection);
  auto right = left;
  return std::make_shared<const FiniteCategory>(
      FiniteCategory::from_transporters(std::move(collection), KernelTag::none, std::move(left), std::move(right)));
}

CategoryPtr build_linking(unsigned prime, std::vector<Subgroup> collection) {
  std::vector<Subgroup> left;
  for (const auto& p : collection) {
    const auto entry = centricity_entry(p, prime);
    if (!is_p_group(p, prime) || !entry.is_centric) {
      throw NotCentric("object " + subgroup_label(p) + " is not p-centric");
    }
    left.push_back(entry.residual);
  }
  auto right = trivial_kernels(collection);
  return std::make_shared<const FiniteCategory>(FiniteCategory::from_transporters(
      std::move(collection), KernelTag::linking, std::move(left), std::move(right)));
}

CategoryPtr build_orbit(std::vector<Subgroup> collection) {
  auto left = trivial_kernels(collection);
  auto right = collection;
  return std::make_shared<const FiniteCategory>(
      FiniteCategory::from_transporters(std::move(collection), KernelTag::orbit, std::move(left), std::move(right)));
}

CategoryPtr build_group_category(const GroupPtr& group) {
  return build_transporter({Subgroup::trivial(group)});
}

CategoryPtr build_coset_category(const std::vector<Subgroup>& collection) {
  if (collection.empty()) throw Error("coset category needs a nonempty collection");
  const auto& G = collection.front().parent();
  struct Node {
    std::size_t subgroup;
    ElemId rep;
  };
  std::vector<Node> nodes;
  FiniteCategory::Table table;
  for (std::size_t q = 0; q < collection.size(); ++q) {
    std::vector<bool> covered(G.order(), false);
    for (ElemId x = 0; x < G.order(); ++x) {
      if (covered[x]) continue;
      for (ElemId y : collection[q].members()) covered[G.mul(x, y)] = true;
      nodes.push_back({q, x});
      table.objects.push_back(G.element(x).to_cycles() + subgroup_label(collection[q]));
    }
  }
  std::vector<std::vector<bool>> transport(collection.size() * collection.size());
  for (std::size_t a = 0; a < collection.size(); ++a) {
    for (std::size_t b = 0; b < collection.size(); ++b) {
      auto& row = transport[a * collection.size() + b];
      row.assign(G.order(), false);
      for (ElemId g : transporter(collection[a], collection[b])) row[g] = true;
    }
  }
  const std::size_t n = nodes.size();
  std::vector<std::int64_t> arrow(n * n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const ElemId diff = G.mul(G.inv(nodes[a].rep), nodes[b].rep);
      if (transport[nodes[a].subgroup * collection.size() + nodes[b].subgroup][diff]) {
        arrow[a * n + b] = static_cast<std::int64_t>(table.morphisms.size());
        table.morphisms.emplace_back(static_cast<ObjId>(a), static_cast<ObjId>(b));
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) table.identities.push_back(static_cast<MorId>(arrow[a * n + a]));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (arrow[a * n + b] < 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (arrow[b * n + c] < 0) continue;
        if (arrow[a * n + c] < 0) throw Error("coset category is not transitive");
        table.compositions.emplace_back(static_cast<MorId>(arrow[a * n + b]), static_cast<MorId>(arrow[b * n + c]),
                                        static_cast<MorId>(arrow[a * n + c]));
      }
    }
  }
  return std::make_shared<const FiniteCategory>(FiniteCategory::from_table(table));
}

// ---------------------------------------------------------------------------

bool CategoryFunctor::is_functor() const {
  const auto& s = *source;
  const auto& t = *target;
  if (object_map.size() != s.object_count() || morphism_map.size() != s.morphism_count()) return false;
  for (ObjId i = 0; i < s.object_count(); ++i) {
    if (object_map[i] >= t.object_count()) return false;
    if (morphism_map[s.identity(i)] != t.identity(object_map[i])) return false;
  }
  for (MorId f = 0; f < s.morphism_count(); ++f) {
    const MorId img = morphism_map[f];
    if (img >= t.morphism_count()) return false;
    if (t.source(img) != object_map[s.source(f)] || t.target(img) != object_map[s.target(f)]) return false;
  }
  for (MorId f = 0; f < s.morphism_count(); ++f) {
    for (MorId g : s.out(s.target(f))) {
      if (morphism_map[s.compose(f, g)] != t.compose(morphism_map[f], morphism_map[g])) return false;
    }
  }
  return true;
}

CategoryFunctor identity_functor(const CategoryPtr& c) {
  CategoryFunctor f{c, c, {}, {}};
  f.object_map.resize(c->object_count());
  std::iota(f.object_map.begin(), f.object_map.end(), ObjId{0});
  f.morphism_map.resize(c->morphism_count());
  std::iota(f.morphism_map.begin(), f.morphism_map.end(), MorId{0});
  return f;
}

CategoryFunctor compose_functors(const CategoryFunctor& first, const CategoryFunctor& second) {
  CategoryFunctor out{first.source, second.target, {}, {}};
  for (ObjId i : first.object_map) out.object_map.push_back(second.object_map[i]);
  for (MorId f : first.morphism_map) out.morphism_map.push_back(second.morphism_map[f]);
  return out;
}

Subcategory full_subcategory(const CategoryPtr& c, const std::vector<ObjId>& objects) {
  CategoryPtr sub;
  if (c->has_group()) {
    std::vector<Subgroup> subgroups, left, right;
    for (ObjId i : objects) {
      subgroups.push_back(c->subgroups()[i]);
      left.push_back(c->left_kernel(i));
      right.push_back(c->right_kernel(i));
    }
    sub = std::make_shared<const FiniteCategory>(
        FiniteCategory::from_transporters(std::move(subgroups), c->kind(), std::move(left), std::move(right)));
    CategoryFunctor inc{sub, c, objects, {}};
    inc.morphism_map.resize(sub->morphism_count());
    for (MorId f = 0; f < sub->morphism_count(); ++f) {
      const auto& tok = sub->morphism(f);
      inc.morphism_map[f] = *c->find(objects[tok.source], objects[tok.target], tok.witness);
    }
    return {sub, std::move(inc)};
  }

  FiniteCategory::Table table;
  std::vector<MorId> old_of_new;
  std::map<MorId, MorId> new_of_old;
  for (ObjId a = 0; a < objects.size(); ++a) table.objects.push_back(c->label(objects[a]));
  for (ObjId a = 0; a < objects.size(); ++a) {
    for (ObjId b = 0; b < objects.size(); ++b) {
      for (MorId f : c->hom(objects[a], objects[b])) {
        new_of_old[f] = static_cast<MorId>(table.morphisms.size());
        old_of_new.push_back(f);
        table.morphisms.emplace_back(a, b);
      }
    }
  }
  for (ObjId a = 0; a < objects.size(); ++a) table.identities.push_back(new_of_old.at(c->identity(objects[a])));
  for (MorId f = 0; f < old_of_new.size(); ++f) {
    const ObjId b = table.morphisms[f].second;
    for (ObjId k = 0; k < objects.size(); ++k) {
      for (MorId g : c->hom(objects[b], objects[k])) {
        table.compositions.emplace_back(f, new_of_old.at(g), new_of_old.at(c->compose(old_of_new[f], g)));
      }
    }
  }
  std::vector<MorId> renumber;
  sub = std::make_shared<const FiniteCategory>(FiniteCategory::from_table(table, &renumber));
  CategoryFunctor inc{sub, c, objects, std::vector<MorId>(sub->morphism_count())};
  for (MorId f = 0; f < old_of_new.size(); ++f) inc.morphism_map[renumber[f]] = old_of_new[f];
  return {sub, std::move(inc)};
}

namespace {

bool isomorphic(const FiniteCategory& c, ObjId i, ObjId j) {
  if (i == j) return true;
  if (c.has_group() && c.subgroups()[i].order() != c.subgroups()[j].order()) return false;
  for (MorId f : c.hom(i, j)) {
    for (MorId g : c.hom(j, i)) {
      if (c.compose(f, g) == c.identity(i) && c.compose(g, f) == c.identity(j)) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<ObjId>> isomorphism_classes(const FiniteCategory& c) {
  std::vector<std::vector<ObjId>> classes;
  for (ObjId i = 0; i < c.object_count(); ++i) {
    bool placed = false;
    for (auto& cls : classes) {
      if (isomorphic(c, cls.front(), i)) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

Subcategory skeleton(const CategoryPtr& c) {
  std::vector<ObjId> reps;
  for (const auto& cls : isomorphism_classes(*c)) reps.push_back(cls.front());
  return full_subcategory(c, reps);
}

CategoryFunctor quotient_projection(const CategoryPtr& transporter_cat, unsigned prime) {
  if (transporter_cat->kind() != KernelTag::none) throw Error("projection needs a transporter category");
  CategoryPtr linking = build_linking(prime, transporter_cat->subgroups());
  CategoryFunctor psi{transporter_cat, linking, {}, {}};
  psi.object_map.resize(transporter_cat->object_count());
  std::iota(psi.object_map.begin(), psi.object_map.end(), ObjId{0});
  psi.morphism_map.resize(transporter_cat->morphism_count());
  for (MorId f = 0; f < transporter_cat->morphism_count(); ++f) {
    const auto& tok = transporter_cat->morphism(f);
    psi.morphism_map[f] = *linking->find(tok.source, tok.target, tok.witness);
  }
  return psi;
}

CategoryFunctor forget_to_group(const CategoryPtr& c, const CategoryPtr& group_category) {
  if (c->kind() != KernelTag::none) throw Error("only transporter categories map to the group");
  CategoryFunctor f{c, group_category, std::vector<ObjId>(c->object_count(), 0), {}};
  f.morphism_map.resize(c->morphism_count());
  for (MorId m = 0; m < c->morphism_count(); ++m) f.morphism_map[m] = *group_category->find(0, 0, c->morphism(m).witness);
  return f;
}

CategoryFunctor automorphism_inclusion(const CategoryPtr& group_category, const CategoryPtr& c, ObjId object) {
  CategoryFunctor f{group_category, c, {object}, {}};
  for (MorId m = 0; m < group_category->morphism_count(); ++m) {
    const auto img = c->find(object, object, group_category->morphism(m).witness);
    if (!img) throw Error("object is not normalized by the whole group");
    f.morphism_map.push_back(*img);
  }
  return f;
}

// ---------------------------------------------------------------------------

LawReport check_category_laws(const FiniteCategory& c) {
  LawReport r;
  for (ObjId i = 0; i < c.object_count(); ++i) {
    const MorId id = c.identity(i);
    if (c.source(id) != i || c.target(id) != i) r.identities = false;
  }
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    if (c.compose(c.identity(c.source(f)), f) != f || c.compose(f, c.identity(c.target(f))) != f) {
      r.identities = false;
    }
  }
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    const ObjId a = c.source(f);
    for (MorId g : c.out(c.target(f))) {
      const MorId fg = c.compose(f, g);
      if (c.source(fg) != a || c.target(fg) != c.target(g)) r.endpoints = false;
      for (MorId h : c.out(c.target(g))) {
        ++r.triples_checked;
        if (c.compose(fg, h) != c.compose(f, c.compose(g, h))) r.associativity = false;
      }
      if (c.has_group()) {
        const auto& G = *c.group();
        const auto cf = c.coset(f);
        const auto cg = c.coset(g);
        for (ElemId x : cf) {
          for (ElemId y : cg) {
            if (c.find(a, c.target(g), G.mul(x, y)) != fg) r.well_defined = false;
          }
        }
      }
    }
  }
  return r;
}

namespace {

std::vector<MorId> automorphisms(const FiniteCategory& c, ObjId i) {
  std::vector<MorId> out;
  for (MorId f : c.hom(i, i)) {
    for (MorId g : c.hom(i, i)) {
      if (c.compose(f, g) == c.identity(i) && c.compose(g, f) == c.identity(i)) {
        out.push_back(f);
        break;
      }
    }
  }
  return out;
}

std::size_t morphism_order(const FiniteCategory& c, MorId f) {
  const MorId id = c.identity(c.source(f));
  std::size_t k = 1;
  MorId x = f;
  while (x != id) {
    x = c.compose(x, f);
    if (++k > c.morphism_count() + 1) return 0;
  }
  return k;
}

}  // namespace

KernelLemmaVerdict verify_kernel_lemma(const CategoryFunctor& psi, unsigned prime) {
  KernelLemmaVerdict v;
  const auto& s = *psi.source;
  const auto& t = *psi.target;

  // (i) bijection on isomorphism classes, surjection on hom sets.
  const auto src_classes = isomorphism_classes(s);
  const auto tgt_classes = isomorphism_classes(t);
  std::vector<std::size_t> tgt_class_of(t.object_count());
  for (std::size_t k = 0; k < tgt_classes.size(); ++k) {
    for (ObjId o : tgt_classes[k]) tgt_class_of[o] = k;
  }
  std::set<std::size_t> hit;
  for (const auto& cls : src_classes) {
    if (!hit.insert(tgt_class_of[psi.object_map[cls.front()]]).second) v.bijective_on_iso_classes = false;
  }
  if (hit.size() != tgt_classes.size()) v.bijective_on_iso_classes = false;
  for (ObjId a = 0; a < s.object_count(); ++a) {
    for (ObjId b = 0; b < s.object_count(); ++b) {
      std::set<MorId> images;
      for (MorId f : s.hom(a, b)) images.insert(psi.morphism_map[f]);
      if (images.size() != t.hom_size(psi.object_map[a], psi.object_map[b])) v.surjective_on_morphisms = false;
    }
  }

  // (ii) and (iii).
  for (ObjId a = 0; a < s.object_count(); ++a) {
    std::vector<MorId> kernel;
    const MorId target_id = t.identity(psi.object_map[a]);
    for (MorId sigma : automorphisms(s, a)) {
      if (psi.morphism_map[sigma] == target_id) kernel.push_back(sigma);
    }
    v.kernel_orders.push_back(kernel.size());
    if (kernel.size() % prime == 0) v.kernels_prime_to_p = false;
    for (MorId sigma : kernel) {
      const std::size_t ord = morphism_order(s, sigma);
      if (ord == 0 || ord % prime == 0) v.kernels_prime_to_p = false;
    }
    for (ObjId b = 0; b < s.object_count(); ++b) {
      std::map<MorId, std::set<MorId>> fibers;
      for (MorId f : s.hom(a, b)) fibers[psi.morphism_map[f]].insert(f);
      for (MorId f : s.hom(a, b)) {
        std::set<MorId> orbit;
        for (MorId sigma : kernel) orbit.insert(s.compose(sigma, f));
        if (orbit != fibers[psi.morphism_map[f]]) v.fibers_are_kernel_orbits = false;
      }
    }
  }
  return v;
}

AdjunctionVerdict circ_adjunction_check(const OmegaPoset& omega, const std::vector<Subgroup>& tests) {
  AdjunctionVerdict v;
  std::vector<Subgroup> objects = tests;
  for (const auto& q : omega.members()) {
    if (std::find(objects.begin(), objects.end(), q) == objects.end()) objects.push_back(q);
  }
  const CategoryPtr big = build_orbit(objects);
  auto index_of = [&](const Subgroup& s) {
    return static_cast<ObjId>(std::find(objects.begin(), objects.end(), s) - objects.begin());
  };

  std::vector<ObjId> test_ids, omega_ids;
  for (const auto& p : tests) test_ids.push_back(index_of(p));
  for (const auto& q : omega.members()) omega_ids.push_back(index_of(q));
  std::vector<ObjId> circ_of(objects.size());
  std::vector<MorId> unit(objects.size());
  for (ObjId p : test_ids) {
    circ_of[p] = index_of(circ_closure(omega, objects[p]));
    unit[p] = *big->find(p, circ_of[p], PermutationGroup::identity());
  }

  // (-)° on morphisms between test objects: gP2 -> gP2°.
  auto circ_morphism = [&](MorId f) -> std::optional<MorId> {
    const auto& tok = big->morphism(f);
    return big->find(circ_of[tok.source], circ_of[tok.target], tok.witness);
  };
  for (ObjId a : test_ids) {
    if (circ_morphism(big->identity(a)) != big->identity(circ_of[a])) v.circ_is_functor = false;
    for (ObjId b : test_ids) {
      for (MorId f : big->hom(a, b)) {
        const auto cf = circ_morphism(f);
        if (!cf) {
          v.circ_is_functor = false;
          continue;
        }
        for (ObjId c : test_ids) {
          for (MorId g : big->hom(b, c)) {
            if (circ_morphism(big->compose(f, g)) != big->compose(*cf, *circ_morphism(g))) v.circ_is_functor = false;
          }
        }
        // Unit naturality: P1 -> P1° -> P2° equals P1 -> P2 -> P2°.
        if (big->compose(unit[a], *cf) != big->compose(f, unit[b])) v.unit_natural = false;
      }
    }
  }
  if (!v.circ_is_functor) return v;

  auto transpose = [&](ObjId p, MorId phi) { return big->compose(unit[p], phi); };
  for (ObjId p : test_ids) {
    for (ObjId q : omega_ids) {
      ++v.pairs_checked;
      std::set<MorId> image;
      for (MorId phi : big->hom(circ_of[p], q)) image.insert(transpose(p, phi));
      if (image.size() != big->hom_size(circ_of[p], q) || image.size() != big->hom_size(p, q)) v.bijections = false;
      // Naturality in Q.
      for (ObjId q2 : omega_ids) {
        for (MorId beta : big->hom(q, q2)) {
          for (MorId phi : big->hom(circ_of[p], q)) {
            if (transpose(p, big->compose(phi, beta)) != big->compose(transpose(p, phi), beta)) v.bijections = false;
          }
        }
      }
    }
  }
  // Naturality in P: transpose(alpha° then phi) = alpha then transpose(phi).
  for (ObjId a : test_ids) {
    for (ObjId b : test_ids) {
      for (MorId alpha : big->hom(a, b)) {
        const MorId ca = *circ_morphism(alpha);
        for (ObjId q : omega_ids) {
          for (MorId phi : big->hom(circ_of[b], q)) {
            if (transpose(a, big->compose(ca, phi)) != big->compose(alpha, transpose(b, phi))) v.unit_natural = false;
          }
        }
      }
    }
  }
  return v;
}

// ---------------------------------------------------------------------------

void write_category_text(std::ostream& out, const FiniteCategory& c) {
  out << "plocal-category 1\n";
  out << "objects " << c.object_count() << '\n';
  for (ObjId i = 0; i < c.object_count(); ++i) out << c.label(i) << '\n';
  out << "morphisms " << c.morphism_count() << '\n';
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    out << c.source(f) << ' ' << c.target(f) << ' ' << (c.is_identity(f) ? 1 : 0) << '\n';
  }
  std::vector<std::tuple<MorId, MorId, MorId>> comps;
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    if (c.is_identity(f)) continue;
    for (MorId g : c.out(c.target(f))) {
      if (!c.is_identity(g)) comps.emplace_back(f, g, c.compose(f, g));
    }
  }
  out << "compositions " << comps.size() << '\n';
  for (const auto& [f, g, h] : comps) out << f << ' ' << g << ' ' << h << '\n';
}

FiniteCategory read_category_text(std::istream& in) {
  auto expect = [&](const std::string& word) {
    std::string token;
    if (!(in >> token) || token != word) throw Error("category text: expected '" + word + "'");
  };
  expect("plocal-category");
  int version = 0;
  if (!(in >> version) || version != 1) throw Error("category text: unsupported version");
  FiniteCategory::Table t;
  std::size_t n = 0, m = 0, k = 0;
  expect("objects");
  if (!(in >> n)) throw Error("category text: bad object count");
  std::string line;
  std::getline(in, line);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw Error("category text: missing object label");
    t.objects.push_back(line);
  }
  expect("morphisms");
  if (!(in >> m)) throw Error("category text: bad morphism count");
  t.identities.assign(n, std::numeric_limits<MorId>::max());
  for (std::size_t f = 0; f < m; ++f) {
    ObjId s = 0, d = 0;
    int is_id = 0;
    if (!(in >> s >> d >> is_id)) throw Error("category text: bad morphism line");
    if (s >= n || d >= n) throw Error("category text: morphism endpoint out of range");
    if (is_id) t.identities[s] = static_cast<MorId>(f);
    t.morphisms.emplace_back(s, d);
  }
  expect("compositions");
  if (!(in >> k)) throw Error("category text: bad composition count");
  for (std::size_t e = 0; e < k; ++e) {
    MorId f = 0, g = 0, h = 0;
    if (!(in >> f >> g >> h)) throw Error("category text: bad composition line");
    t.compositions.emplace_back(f, g, h);
  }
  return FiniteCategory::from_table(t);
}

}  // namespace plocal
