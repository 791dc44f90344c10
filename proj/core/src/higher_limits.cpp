#include "plocal/higher_limits.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "plocal/errors.hpp"
#include "plocal/omega.hpp"

namespace plocal {

namespace {

constexpr std::size_t kDenseEntryBudget = 50'000'000;

DenseMatrix zero(std::size_t rows, std::size_t cols) { return DenseMatrix(rows, cols); }

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

AbFunctor::AbFunctor(CategoryPtr base, unsigned prime, std::vector<std::size_t> dims,
                     std::vector<DenseMatrix> matrices)
    : base_(std::move(base)), prime_(prime), dims_(std::move(dims)), matrices_(std::move(matrices)) {
  if (dims_.size() != base_->object_count()) throw NotAFunctor("one dimension per object required");
  if (matrices_.size() != base_->morphism_count()) throw NotAFunctor("one matrix per morphism required");
}

void AbFunctor::verify() const {
  const auto& c = *base_;
  const PrimeField field(prime_);
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    const auto& m = matrices_[f];
    if (m.rows() != dims_[c.source(f)] || m.cols() != dims_[c.target(f)]) {
      throw NotAFunctor("matrix of morphism " + std::to_string(f) + " has the wrong shape");
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j) >= prime_) throw NotAFunctor("matrix entry out of range");
      }
    }
  }
  for (ObjId a = 0; a < c.object_count(); ++a) {
    if (!(matrices_[c.identity(a)] == DenseMatrix::identity(dims_[a]))) {
      throw NotAFunctor("identity of " + c.label(a) + " is not sent to the identity");
    }
  }
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    if (c.is_identity(f)) continue;
    for (MorId g : c.out(c.target(f))) {
      if (c.is_identity(g)) continue;
      const MorId h = c.compose(f, g);
      if (!(matrices_[h] == matrices_[f].multiply(matrices_[g], field))) {
        throw NotAFunctor("composition of morphisms " + std::to_string(f) + " and " + std::to_string(g) +
                          " is not preserved");
      }
    }
  }
}

bool AbFunctor::is_functor() const {
  try {
    verify();
    return true;
  } catch (const NotAFunctor&) {
    return false;
  }
}

AbFunctor pull_back(const AbFunctor& f, const CategoryFunctor& along) {
  if (along.target.get() != f.base_ptr().get()) throw Error("functor does not land in the base category");
  const auto& c = *along.source;
  std::vector<std::size_t> dims(c.object_count());
  for (ObjId a = 0; a < c.object_count(); ++a) dims[a] = f.dim(along.object_map[a]);
  std::vector<DenseMatrix> matrices(c.morphism_count());
  for (MorId m = 0; m < c.morphism_count(); ++m) matrices[m] = f.matrix(along.morphism_map[m]);
  return AbFunctor(along.source, f.prime(), std::move(dims), std::move(matrices));
}

AbFunctor restrict_support(const AbFunctor& f, const std::vector<bool>& support) {
  const auto& c = f.base();
  std::vector<std::size_t> dims(c.object_count());
  for (ObjId a = 0; a < c.object_count(); ++a) dims[a] = support[a] ? f.dim(a) : 0;
  std::vector<DenseMatrix> matrices(c.morphism_count());
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    const ObjId s = c.source(m), t = c.target(m);
    matrices[m] = support[s] && support[t] ? f.matrix(m) : zero(dims[s], dims[t]);
  }
  return AbFunctor(f.base_ptr(), f.prime(), std::move(dims), std::move(matrices));
}

bool LimitsProfile::vanishes() const {
  return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

std::string to_string(const LimitsProfile& profile) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < profile.dims.size(); ++i) out << (i ? ", " : "") << profile.dims[i];
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------------------

FpComplex functor_cochain(const AbFunctor& f, std::size_t max_degree, std::size_t budget) {
  const auto& c = f.base();
  const PrimeField field(f.prime());
  const ChainIndex index(f.base_ptr(), std::max<std::size_t>(max_degree, 1), budget);

  // offsets[n][k]: first coordinate of chain k in C^n.
  std::vector<std::vector<std::size_t>> offsets(max_degree + 1);
  FpComplex out;
  out.prime = f.prime();
  out.orientation = FpComplex::Orientation::cochain;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    std::size_t total = 0;
    offsets[n].resize(index.count(n));
    for (std::size_t k = 0; k < index.count(n); ++k) {
      offsets[n][k] = total;
      total += f.dim(index.first_object(n, k));
    }
    if (total > budget) throw BudgetExceeded(n, total, budget);
    out.dims.push_back(total);
  }

  std::vector<MorId> face;
  for (std::size_t n = 0; n < max_degree; ++n) {
    std::vector<Triplet> triplets;
    const std::size_t d = n + 1;
    auto identity_block = [&](std::size_t row0, std::size_t col0, std::size_t size, long long sign) {
      const FpValue v = field.from_int(sign);
      for (std::size_t r = 0; r < size; ++r) {
        triplets.push_back({static_cast<std::uint32_t>(row0 + r), static_cast<std::uint32_t>(col0 + r), v});
      }
    };
    auto face_offset = [&](std::span<const MorId> chain) {
      return chain.empty() ? 0 : offsets[n][index.index(chain)];
    };
    for (std::size_t k = 0; k < index.count(d); ++k) {
      const auto chain = index.chain(d, k);
      const std::size_t row0 = offsets[d][k];
      const ObjId c0 = c.source(chain[0]);
      const std::size_t dim0 = f.dim(c0);
      if (dim0 == 0) continue;

      // Drop the first morphism: F(f_1) carries the value at c_1 back to c_0.
      const auto& m = f.matrix(chain[0]);
      const std::size_t col0 = n == 0 ? offsets[0][c.target(chain[0])] : offsets[n][index.index(chain.subspan(1))];
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t s = 0; s < m.cols(); ++s) {
          if (m(r, s) != 0) {
            triplets.push_back({static_cast<std::uint32_t>(row0 + r), static_cast<std::uint32_t>(col0 + s), m(r, s)});
          }
        }
      }
      for (std::size_t i = 1; i < d; ++i) {
        const MorId h = c.compose(chain[i - 1], chain[i]);
        if (c.is_identity(h)) continue;
        face.assign(chain.begin(), chain.end());
        face[i - 1] = h;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        identity_block(row0, face_offset(face), dim0, (i % 2) ? -1 : 1);
      }
      const std::size_t last = n == 0 ? offsets[0][c0] : offsets[n][index.index(chain.first(n))];
      identity_block(row0, last, dim0, (d % 2) ? -1 : 1);
    }
    out.maps.push_back(SparseMatrix::from_triplets(out.dims[d], out.dims[n], std::move(triplets), field));
  }
  return out;
}

LimitsProfile higher_limits(const AbFunctor& f, std::size_t limit_degree, std::size_t budget) {
  if (limit_degree == 0) return {};
  const auto complex = functor_cochain(f, limit_degree, budget);
  return {fp_homology(complex).dims};
}

std::size_t inverse_limit_dimension(const AbFunctor& f) {
  const auto& c = f.base();
  const PrimeField field(f.prime());
  std::vector<std::size_t> offset(c.object_count() + 1, 0);
  for (ObjId a = 0; a < c.object_count(); ++a) offset[a + 1] = offset[a] + f.dim(a);
  const std::size_t unknowns = offset.back();

  // One block row per non-identity f : a -> b, stating x_a = F(f) x_b.
  std::vector<Triplet> triplets;
  std::uint32_t row = 0;
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    const ObjId a = c.source(m), b = c.target(m);
    const auto& mat = f.matrix(m);
    for (std::size_t r = 0; r < f.dim(a); ++r, ++row) {
      triplets.push_back({row, static_cast<std::uint32_t>(offset[a] + r), field.from_int(-1)});
      for (std::size_t s = 0; s < f.dim(b); ++s) {
        if (mat(r, s) != 0) triplets.push_back({row, static_cast<std::uint32_t>(offset[b] + s), mat(r, s)});
      }
    }
  }
  const auto system = SparseMatrix::from_triplets(row, unknowns, std::move(triplets), field);
  return unknowns - rank(system, field);
}

// ---------------------------------------------------------------------------

GroupCohomology::GroupCohomology(const Subgroup& p, unsigned prime, std::size_t degree)
    : subgroup_(p), field_(prime), degree_(degree), position_(p.parent().order(), -1) {
  const auto& G = p.parent();
  for (ElemId x : p.members()) {
    if (x == PermutationGroup::identity()) continue;
    position_[x] = static_cast<std::int64_t>(nonidentity_.size());
    nonidentity_.push_back(x);
  }
  const std::size_t m = nonidentity_.size();
  const std::size_t cochains = power(m, degree);
  if (power(m, degree + 1) * cochains > kDenseEntryBudget) {
    throw BudgetExceeded(degree + 1, power(m, degree + 1), kDenseEntryBudget / std::max<std::size_t>(cochains, 1));
  }

  // Coboundary C^k -> C^{k+1} over tuples of non-identity elements.
  auto coboundary = [&](std::size_t k) {
    const std::size_t rows = power(m, k + 1), cols = power(m, k);
    DenseMatrix delta(rows, cols);
    std::vector<ElemId> tuple(k + 1), face;
    for (std::size_t r = 0; r < rows; ++r) {
      std::size_t code = r;
      for (std::size_t t = k + 1; t-- > 0;) {
        tuple[t] = nonidentity_[code % m];
        code /= m;
      }
      auto add = [&](std::span<const ElemId> f, long long sign) {
        const std::size_t col = tuple_index(f);
        delta(r, col) = field_.add(delta(r, col), field_.from_int(sign));
      };
      add(std::span<const ElemId>(tuple).subspan(1), 1);
      for (std::size_t i = 1; i <= k; ++i) {
        const ElemId prod = G.mul(tuple[i - 1], tuple[i]);
        if (prod == PermutationGroup::identity()) continue;
        face.assign(tuple.begin(), tuple.end());
        face[i - 1] = prod;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        add(face, (i % 2) ? -1 : 1);
      }
      add(std::span<const ElemId>(tuple).first(k), ((k + 1) % 2) ? -1 : 1);
    }
    return delta;
  };

  const DenseMatrix cocycles = m == 0 && degree > 0 ? DenseMatrix(0, 0) : nullspace(coboundary(degree), field_);
  const DenseMatrix boundaries = degree > 0 && m > 0 ? coboundary(degree - 1) : DenseMatrix(cochains, 0);

  // Greedy selection: pivots of the echelon form of [boundaries | cocycles].
  DenseMatrix joined(cochains, boundaries.cols() + cocycles.cols());
  for (std::size_t i = 0; i < cochains; ++i) {
    for (std::size_t j = 0; j < boundaries.cols(); ++j) joined(i, j) = boundaries(i, j);
    for (std::size_t j = 0; j < cocycles.cols(); ++j) joined(i, boundaries.cols() + j) = cocycles(i, j);
  }
  DenseMatrix echelon = joined;
  const auto pivots = row_reduce(echelon, field_);
  std::vector<std::size_t> chosen_b, chosen_z;
  for (std::size_t c : pivots) (c < boundaries.cols() ? chosen_b : chosen_z).push_back(c);

  basis_ = DenseMatrix(cochains, chosen_z.size());
  for (std::size_t k = 0; k < chosen_z.size(); ++k) {
    for (std::size_t i = 0; i < cochains; ++i) basis_(i, k) = joined(i, chosen_z[k]);
  }

  // Left inverse of [chosen boundaries | basis], read off the reduction of
  // [reducer | identity].
  const std::size_t r = pivots.size();
  DenseMatrix aug(cochains, r + cochains);
  for (std::size_t i = 0; i < cochains; ++i) {
    for (std::size_t k = 0; k < r; ++k) aug(i, k) = joined(i, pivots[k]);
    aug(i, r + i) = 1;
  }
  row_reduce(aug, field_);
  coordinate_map_ = DenseMatrix(chosen_z.size(), cochains);
  for (std::size_t k = 0; k < chosen_z.size(); ++k) {
    for (std::size_t j = 0; j < cochains; ++j) coordinate_map_(k, j) = aug(chosen_b.size() + k, r + j);
  }
}

std::size_t GroupCohomology::tuple_index(std::span<const ElemId> tuple) const {
  std::size_t idx = 0;
  for (ElemId x : tuple) idx = idx * nonidentity_.size() + static_cast<std::size_t>(position_[x]);
  return idx;
}

std::vector<FpValue> GroupCohomology::coordinates(const std::vector<FpValue>& cocycle) const {
  std::vector<FpValue> out(dimension(), 0);
  for (std::size_t k = 0; k < dimension(); ++k) {
    FpValue v = 0;
    for (std::size_t j = 0; j < cocycle.size(); ++j) v = field_.add(v, field_.mul(coordinate_map_(k, j), cocycle[j]));
    out[k] = v;
  }
  return out;
}

DenseMatrix GroupCohomology::induced_from(const GroupCohomology& target, ElemId g) const {
  const auto& G = subgroup_.parent();
  const std::size_t m = nonidentity_.size();
  const std::size_t cochains = basis_.rows();
  DenseMatrix out(dimension(), target.dimension());
  if (dimension() == 0 || target.dimension() == 0) return out;

  // Image tuple index in the target for every source tuple.
  std::vector<std::size_t> image_index(cochains);
  std::vector<ElemId> tuple(degree_);
  for (std::size_t t = 0; t < cochains; ++t) {
    std::size_t code = t;
    for (std::size_t s = degree_; s-- > 0;) {
      const ElemId x = nonidentity_[code % m];
      code /= m;
      const ElemId y = G.conj(x, g);
      if (!target.subgroup_.contains(y)) throw Error("conjugation does not map into the target subgroup");
      tuple[s] = y;
    }
    image_index[t] = target.tuple_index(tuple);
  }
  std::vector<FpValue> pulled(cochains);
  for (std::size_t k = 0; k < target.dimension(); ++k) {
    for (std::size_t t = 0; t < cochains; ++t) pulled[t] = target.basis_(image_index[t], k);
    const auto coords = coordinates(pulled);
    for (std::size_t i = 0; i < coords.size(); ++i) out(i, k) = coords[i];
  }
  return out;
}

const GroupCohomology& CohomologyCache::get(const Subgroup& p) {
  std::vector<ElemId> key(p.members().begin(), p.members().end());
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    it = cache_.emplace(std::move(key), std::make_unique<GroupCohomology>(p, prime_, degree_)).first;
  }
  return *it->second;
}

AbFunctor cohomology_functor(const CategoryPtr& orbit_category, unsigned prime, std::size_t degree,
                             std::vector<bool> support, CohomologyCache* cache) {
  const auto& c = *orbit_category;
  if (!c.has_group()) throw Error("cohomology functor needs a group-backed category");
  if (support.empty()) support.assign(c.object_count(), true);
  CohomologyCache local(prime, degree);
  CohomologyCache& store = cache ? *cache : local;

  std::vector<const GroupCohomology*> coh(c.object_count(), nullptr);
  std::vector<std::size_t> dims(c.object_count(), 0);
  for (ObjId a = 0; a < c.object_count(); ++a) {
    if (!support[a]) continue;
    coh[a] = &store.get(c.subgroups()[a]);
    dims[a] = coh[a]->dimension();
  }
  std::vector<DenseMatrix> matrices(c.morphism_count());
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    const ObjId a = c.source(f), b = c.target(f);
    matrices[f] = coh[a] && coh[b] ? coh[a]->induced_from(*coh[b], c.morphism(f).witness) : zero(dims[a], dims[b]);
  }
  AbFunctor out(orbit_category, prime, std::move(dims), std::move(matrices));
  out.verify();
  return out;
}

CategoryPtr p_subgroup_orbit_category(const Subgroup& sylow, unsigned prime) {
  if (!is_p_group(sylow, prime)) throw NotPSubgroup("expected a p-subgroup");
  const auto subgroups = all_subgroups(sylow);
  return build_orbit(conjugacy_representatives(subgroups));
}

CategoryPtr omega_orbit_category(const OmegaPoset& omega) {
  std::vector<Subgroup> reps;
  for (const auto& cls : omega.classes()) reps.push_back(omega.members()[cls.front()]);
  return build_orbit(std::move(reps));
}

// ---------------------------------------------------------------------------

ModuleData ModuleData::trivial(const PermutationGroup& g, std::size_t dim) {
  ModuleData m;
  m.dim = dim;
  m.generator_action.assign(g.generators().size(), DenseMatrix::identity(dim));
  return m;
}

std::vector<DenseMatrix> module_action(const PermutationGroup& g, const ModuleData& m, const PrimeField& field) {
  const auto gens = g.generator_ids();
  if (m.generator_action.size() != gens.size()) throw NotAFunctor("one matrix per generator required");
  for (const auto& a : m.generator_action) {
    if (a.rows() != m.dim || a.cols() != m.dim) throw NotAFunctor("generator matrix has the wrong shape");
  }
  std::vector<DenseMatrix> rho(g.order());
  std::vector<bool> seen(g.order(), false);
  rho[PermutationGroup::identity()] = DenseMatrix::identity(m.dim);
  seen[PermutationGroup::identity()] = true;
  std::deque<ElemId> queue{PermutationGroup::identity()};
  while (!queue.empty()) {
    const ElemId x = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const ElemId y = g.mul(x, gens[s]);
      auto candidate = rho[x].multiply(m.generator_action[s], field);
      if (!seen[y]) {
        seen[y] = true;
        rho[y] = std::move(candidate);
        queue.push_back(y);
      } else if (!(rho[y] == candidate)) {
        throw NotAFunctor("generator matrices do not satisfy the group relations");
      }
    }
  }
  return rho;
}

LimitsProfile lambda_star(const GroupPtr& g, unsigned prime, const ModuleData& m, std::size_t limit_degree) {
  const PrimeField field(prime);
  const auto rho = module_action(*g, m, field);
  const auto orbit = p_subgroup_orbit_category(sylow_subgroup(g, prime), prime);
  const auto& c = *orbit;
  std::vector<std::size_t> dims(c.object_count(), 0);
  dims[0] = m.dim;
  std::vector<DenseMatrix> matrices(c.morphism_count());
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    const ObjId a = c.source(f), b = c.target(f);
    matrices[f] = a == 0 && b == 0 ? rho[c.morphism(f).witness] : zero(dims[a], dims[b]);
  }
  AbFunctor functor(orbit, prime, std::move(dims), std::move(matrices));
  functor.verify();
  return higher_limits(functor, limit_degree);
}

bool kernel_has_order_p_element(const PermutationGroup& g, const ModuleData& m, unsigned prime) {
  const PrimeField field(prime);
  const auto rho = module_action(g, m, field);
  const auto id = DenseMatrix::identity(m.dim);
  for (ElemId x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == prime && rho[x] == id) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<bool> single_support(std::size_t n, std::size_t object) {
  std::vector<bool> s(n, false);
  s[object] = true;
  return s;
}

}  // namespace

PuncturedVerdict punctured_vanishing(const OmegaPoset& omega, const Subgroup& q, std::size_t degree,
                                     std::size_t limit_degree) {
  PuncturedVerdict v;
  if (!omega.contains(q) || is_centric(q, omega.prime())) {
    v.applicable = false;
    return v;
  }
  const unsigned p = omega.prime();
  const auto over_omega = omega_orbit_category(omega);
  const auto i = find_conjugate(over_omega->subgroups(), q);
  v.over_omega = higher_limits(
      cohomology_functor(over_omega, p, degree, single_support(over_omega->object_count(), *i)), limit_degree);

  const auto over_p = p_subgroup_orbit_category(omega.sylow(), p);
  const auto j = find_conjugate(over_p->subgroups(), q);
  v.over_p_subgroups =
      higher_limits(cohomology_functor(over_p, p, degree, single_support(over_p->object_count(), *j)), limit_degree);
  return v;
}

NormalizerQuotientVerdict normalizer_quotient_check(const Subgroup& sylow, unsigned prime, const Subgroup& q,
                                                    std::size_t degree, std::size_t limit_degree) {
  if (!is_p_group(q, prime)) throw NotPSubgroup("expected a p-subgroup");
  const auto orbit = p_subgroup_orbit_category(sylow, prime);
  const auto found = find_conjugate(orbit->subgroups(), q);
  if (!found) throw NotPSubgroup("subgroup is not conjugate into the Sylow subgroup");
  const ObjId obj = static_cast<ObjId>(*found);
  const auto functor = cohomology_functor(orbit, prime, degree, single_support(orbit->object_count(), obj));

  NormalizerQuotientVerdict v;
  v.orbit_side = higher_limits(functor, limit_degree);

  const Subgroup& r = orbit->subgroups()[obj];
  const Subgroup n = normalizer(r);
  const auto quo = quotient(n, r);
  const auto& gamma = *quo.group;
  ModuleData module;
  module.dim = functor.dim(obj);
  for (ElemId gen : gamma.generator_ids()) {
    std::size_t pos = 0;
    while (quo.image[pos] != gen) ++pos;
    const auto f = orbit->find(obj, obj, n.members()[pos]);
    module.generator_action.push_back(functor.matrix(*f));
  }
  v.quotient_order = gamma.order();
  v.module_dim = module.dim;
  v.quotient_side = lambda_star(quo.group, prime, module, limit_degree);
  return v;
}

RestrictionVerdict restriction_check(const AbFunctor& f, const std::vector<ObjId>& kept, std::size_t limit_degree) {
  const auto& c = f.base();
  std::vector<bool> in(c.object_count(), false);
  for (ObjId a : kept) in[a] = true;
  for (ObjId a : kept) {
    for (ObjId b = 0; b < c.object_count(); ++b) {
      if (!in[b] && c.hom_size(a, b) > 0) {
        throw UpwardClosureViolated("morphism from " + c.label(a) + " to " + c.label(b) + " leaves the subcollection");
      }
    }
  }
  RestrictionVerdict v;
  for (ObjId b = 0; b < c.object_count(); ++b) {
    if (!in[b] && f.dim(b) != 0) v.vanishes_off_subcollection = false;
  }
  v.full = higher_limits(f, limit_degree);
  const auto sub = full_subcategory(f.base_ptr(), kept);
  v.restricted = higher_limits(pull_back(f, sub.inclusion), limit_degree);
  return v;
}

// ---------------------------------------------------------------------------

namespace {

// Kernel of the natural transformation `eta` : F -> F', eta_a given as a
// dim F'(a) x dim F(a) matrix, as a functor in its own right.
AbFunctor kernel_functor(const AbFunctor& f, const std::vector<DenseMatrix>& eta) {
  const auto& c = f.base();
  const PrimeField field(f.prime());
  std::vector<DenseMatrix> kernels(c.object_count());
  std::vector<std::size_t> dims(c.object_count());
  for (ObjId a = 0; a < c.object_count(); ++a) {
    kernels[a] = nullspace(eta[a], field);
    dims[a] = kernels[a].cols();
  }
  std::vector<DenseMatrix> matrices(c.morphism_count());
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    const ObjId a = c.source(m), b = c.target(m);
    const auto image = f.matrix(m).multiply(kernels[b], field);
    DenseMatrix k(dims[a], dims[b]);
    for (std::size_t j = 0; j < dims[b]; ++j) {
      const auto col = image.column(j);
      const auto x = solve(kernels[a], col, field);
      if (!x) throw NotAFunctor("morphism does not preserve the kernel");
      for (std::size_t i = 0; i < dims[a]; ++i) k(i, j) = (*x)[i];
    }
    matrices[m] = std::move(k);
  }
  return AbFunctor(f.base_ptr(), f.prime(), std::move(dims), std::move(matrices));
}

bool same_functor(const AbFunctor& a, const AbFunctor& b) {
  if (a.dims() != b.dims()) return false;
  for (MorId m = 0; m < a.base().morphism_count(); ++m) {
    if (!(a.matrix(m) == b.matrix(m))) return false;
  }
  return true;
}

}  // namespace

bool FiltrationVerdict::ok() const { return !first_failure() && centric_end == omega_end; }

std::optional<std::size_t> FiltrationVerdict::first_failure() const {
  for (std::size_t r = 0; r < stages.size(); ++r) {
    if (!stages[r].ok()) return r;
  }
  return std::nullopt;
}

FiltrationVerdict filtration_pipeline(const OmegaPoset& omega, std::size_t degree, std::size_t limit_degree) {
  const unsigned p = omega.prime();
  const PrimeField field(p);
  const auto orbit = omega_orbit_category(omega);
  const auto& c = *orbit;
  CohomologyCache cache(p, degree);
  const auto full = cohomology_functor(orbit, p, degree, {}, &cache);

  std::vector<ObjId> current, pending;
  for (ObjId a = 0; a < c.object_count(); ++a) {
    (is_centric(c.subgroups()[a], p) ? current : pending).push_back(a);
  }
  std::stable_sort(pending.begin(), pending.end(), [&](ObjId x, ObjId y) {
    return c.subgroups()[x].order() > c.subgroups()[y].order();
  });

  auto limits_on = [&](const std::vector<ObjId>& objects) {
    const auto sub = full_subcategory(orbit, objects);
    return higher_limits(pull_back(full, sub.inclusion), limit_degree);
  };

  FiltrationVerdict v;
  v.centric_end = limits_on(current);
  v.omega_end = higher_limits(full, limit_degree);

  for (ObjId q : pending) {
    FiltrationStage stage;
    stage.added = c.label(q);
    stage.order = c.subgroups()[q].order();

    std::vector<bool> in(c.object_count(), false);
    for (ObjId a : current) in[a] = true;
    for (ObjId a : current) {
      for (ObjId b = 0; b < c.object_count(); ++b) {
        if (!in[b] && c.hom_size(a, b) > 0) stage.upward_closed = false;
      }
    }

    auto next = current;
    next.push_back(q);
    const auto sub = full_subcategory(orbit, next);
    const auto f_next = pull_back(full, sub.inclusion);
    const ObjId added = static_cast<ObjId>(next.size() - 1);
    std::vector<bool> support(next.size(), true);
    support[added] = false;
    const auto f_r = restrict_support(f_next, support);

    if (stage.upward_closed && f_r.is_functor()) {
      const auto& s = *sub.category;
      std::vector<DenseMatrix> eta(s.object_count());
      for (ObjId a = 0; a < s.object_count(); ++a) {
        eta[a] = a == added ? zero(0, f_next.dim(a)) : DenseMatrix::identity(f_next.dim(a));
      }
      bool natural = true;
      for (MorId m = 0; m < s.morphism_count() && natural; ++m) {
        const ObjId a = s.source(m), b = s.target(m);
        natural = eta[a].multiply(f_next.matrix(m), field) == f_r.matrix(m).multiply(eta[b], field);
      }
      const auto kernel = kernel_functor(f_next, eta);
      const auto punctured =
          cohomology_functor(sub.category, p, degree, single_support(s.object_count(), added), &cache);
      stage.kernel_is_punctured = natural && kernel.is_functor() && same_functor(kernel, punctured);
      stage.kernel_limits = higher_limits(kernel, limit_degree);
    } else {
      stage.kernel_is_punctured = false;
    }
    stage.before = limits_on(current);
    stage.after = higher_limits(f_next, limit_degree);
    v.stages.push_back(std::move(stage));
    current = std::move(next);
  }
  return v;
}

}  // namespace plocal
