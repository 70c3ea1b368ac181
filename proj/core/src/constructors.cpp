#include "crystden/constructors.hpp"

#include <utility>

#include "crystden/poly.hpp"
#include "internal_catalog.hpp"
#include "internal_json.hpp"

namespace crystden {

CrystGroup gamma_m(long long m) {
  if (m < 2) throw DimensionOutOfRange("gamma_m requires m >= 2");
  const IntMatrix t = companion(cyclotomic(m));
  const int dim = t.n;
  if (mat_order(t) != m) {
    throw ConstructionInvariantFailed("companion matrix order is not m");
  }
  IntMatrix power = t;
  for (long long i = 1; i < m; ++i) {
    if (has_eigenvalue_one(power)) {
      throw ConstructionInvariantFailed(
          "companion power has eigenvalue 1 below order");
    }
    power = mat_mul(power, t);
  }
  std::vector<AffineElement> gens;
  for (int i = 0; i < dim; ++i) {
    RatVector e(dim);
    e[i] = 1;
    gens.push_back(AffineElement{std::move(e), IntMatrix::identity(dim)});
  }
  gens.push_back(AffineElement{RatVector(dim), t});
  return make_cryst_group(dim, std::move(gens));
}

namespace {

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.n + b.n);
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) out.at(i, j) = a.at(i, j);
  }
  for (int i = 0; i < b.n; ++i) {
    for (int j = 0; j < b.n; ++j) out.at(a.n + i, a.n + j) = b.at(i, j);
  }
  return out;
}

// N-ary product in a single emission pass. A left fold of direct_product
// would materialize every intermediate element list; here each output
// matrix is written once, blocks straight into their offsets. Counting
// with the last factor fastest keeps the list sorted for the same reason
// as in direct_product.
CrystGroup product_of(const std::vector<CrystGroup>& factors) {
  int dim = 0;
  std::vector<int> off(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) {
    off[i] = dim;
    dim += factors[i].dim;
  }
  std::vector<AffineElement> gens;
  std::vector<IntMatrix> point_gens;
  for (size_t i = 0; i < factors.size(); ++i) {
    const CrystGroup& f = factors[i];
    for (const AffineElement& g : f.gens) {
      RatVector t(dim);
      for (int k = 0; k < f.dim; ++k) t[off[i] + k] = g.trans[k];
      IntMatrix lin = IntMatrix::identity(dim);
      for (int r = 0; r < f.dim; ++r) {
        for (int c = 0; c < f.dim; ++c) {
          lin.at(off[i] + r, off[i] + c) = g.lin.at(r, c);
        }
      }
      gens.push_back(AffineElement{std::move(t), std::move(lin)});
    }
    for (const IntMatrix& g : f.point_group.generators) {
      IntMatrix lin = IntMatrix::identity(dim);
      for (int r = 0; r < f.dim; ++r) {
        for (int c = 0; c < f.dim; ++c) {
          lin.at(off[i] + r, off[i] + c) = g.at(r, c);
        }
      }
      point_gens.push_back(std::move(lin));
    }
  }
  size_t order = 1;
  for (const CrystGroup& f : factors) order *= f.point_group.elements.size();
  std::vector<IntMatrix> elements;
  elements.reserve(order);
  std::vector<size_t> ix(factors.size(), 0);
  for (size_t n = 0; n < order; ++n) {
    IntMatrix e(dim);
    for (size_t i = 0; i < factors.size(); ++i) {
      const IntMatrix& blk = factors[i].point_group.elements[ix[i]];
      for (int r = 0; r < blk.n; ++r) {
        for (int c = 0; c < blk.n; ++c) {
          e.at(off[i] + r, off[i] + c) = blk.at(r, c);
        }
      }
    }
    elements.push_back(std::move(e));
    for (size_t i = factors.size(); i-- > 0;) {
      if (++ix[i] < factors[i].point_group.elements.size()) break;
      ix[i] = 0;
    }
  }
  PointGroup pg{dim, std::move(point_gens), std::move(elements)};
  return CrystGroup{dim, std::move(gens), std::move(pg)};
}

}  // namespace

CrystGroup direct_product(const CrystGroup& g1, const CrystGroup& g2) {
  const int dim = g1.dim + g2.dim;
  std::vector<AffineElement> gens;
  gens.reserve(g1.gens.size() + g2.gens.size());
  for (const AffineElement& g : g1.gens) {
    RatVector t(dim);
    for (int i = 0; i < g1.dim; ++i) t[i] = g.trans[i];
    gens.push_back(
        AffineElement{std::move(t),
                      block_diag(g.lin, IntMatrix::identity(g2.dim))});
  }
  for (const AffineElement& g : g2.gens) {
    RatVector t(dim);
    for (int i = 0; i < g2.dim; ++i) t[g1.dim + i] = g.trans[i];
    gens.push_back(
        AffineElement{std::move(t),
                      block_diag(IntMatrix::identity(g1.dim), g.lin)});
  }

  // The point group is assembled element by element; closing the embedded
  // generators again would redo work that block structure already gives.
  // Emitting pairs in factor order also keeps the element list sorted:
  // the entry tuple of block_diag(a, b) compares first on a, then on b,
  // and distinct pairs give distinct matrices, so no sort or dedup.
  std::vector<IntMatrix> elements;
  elements.reserve(g1.point_group.elements.size() *
                   g2.point_group.elements.size());
  for (const IntMatrix& a : g1.point_group.elements) {
    for (const IntMatrix& b : g2.point_group.elements) {
      elements.push_back(block_diag(a, b));
    }
  }
  std::vector<IntMatrix> point_gens;
  for (const IntMatrix& a : g1.point_group.generators) {
    point_gens.push_back(block_diag(a, IntMatrix::identity(g2.dim)));
  }
  for (const IntMatrix& b : g2.point_group.generators) {
    point_gens.push_back(block_diag(IntMatrix::identity(g1.dim), b));
  }
  PointGroup pg{dim, std::move(point_gens), std::move(elements)};
  return CrystGroup{dim, std::move(gens), std::move(pg)};
}

CrystGroup rational_density_group(long long p, long long q) {
  if (q < 1 || p < 0 || p >= q) {
    throw InvalidRational("density must satisfy 0 <= p/q < 1");
  }
  if (p == 0) return zn_group(1);
  if (q == p + 1) return gamma_m(q);
  std::vector<CrystGroup> factors;
  for (long long m = p + 1; m <= q; ++m) factors.push_back(gamma_m(m));
  return product_of(factors);
}

std::vector<CatalogEntry> load_catalog() {
  const nlohmann::json doc =
      internal::json_from_text(internal::catalog_json());
  std::vector<CatalogEntry> entries;
  for (const auto& item : doc) {
    if (!item.contains("name") || !item["name"].is_string() ||
        !item.contains("expected_density") ||
        !item["expected_density"].is_string()) {
      throw CatalogValidationFailed(
          "catalog entry lacks name or expected_density");
    }
    CatalogEntry entry{item["name"].get<std::string>(),
                       internal::group_from_json(item),
                       parse_rational(item["expected_density"].get<std::string>())};
    const DensityValue check = density_value(entry.group.point_group);
    if (check.density != entry.expected_density) {
      throw CatalogValidationFailed(
          "catalog entry \"" + entry.name + "\" recomputes to " +
          format_rational(check.density) + ", expected " +
          format_rational(entry.expected_density));
    }
    entries.push_back(std::move(entry));
  }
  if (entries.size() != 17) {
    throw CatalogValidationFailed("catalog must hold all 17 groups");
  }
  return entries;
}

CatalogEntry catalog_entry(const std::string& name) {
  std::vector<CatalogEntry> entries = load_catalog();
  for (CatalogEntry& e : entries) {
    if (e.name == name) return std::move(e);
  }
  std::string known;
  for (const CatalogEntry& e : entries) {
    known += known.empty() ? e.name : (", " + e.name);
  }
  throw CatalogValidationFailed("unknown catalog entry \"" + name +
                                "\"; known: " + known);
}

}  // namespace crystden
