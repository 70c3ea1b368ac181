#include "crystden/point_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace crystden {

namespace {

bool entry_tuple_less(const IntMatrix& x, const IntMatrix& y) {
  if (x.n != y.n) return x.n < y.n;
  for (size_t i = 0; i < x.a.size(); ++i) {
    if (x.a[i] != y.a[i]) return x.a[i] < y.a[i];
  }
  return false;
}

}  // namespace

PointGroup closure(int dim, const std::vector<IntMatrix>& generators,
                   long long cap) {
  for (const IntMatrix& g : generators) {
    if (g.n != dim) throw DimensionMismatch("generator dimension mismatch");
    try {
      mat_order(g);
    } catch (const OrderExceedsCap&) {
      throw InfiniteOrderGenerator("generator has no finite order");
    }
  }
  std::vector<IntMatrix> elements;
  std::unordered_set<std::string> seen;
  std::deque<IntMatrix> frontier;
  IntMatrix id = IntMatrix::identity(dim);
  seen.insert(id.key());
  frontier.push_back(id);
  elements.push_back(std::move(id));
  while (!frontier.empty()) {
    IntMatrix cur = std::move(frontier.front());
    frontier.pop_front();
    for (const IntMatrix& g : generators) {
      IntMatrix next = mat_mul(cur, g);
      if (!seen.insert(next.key()).second) continue;
      if (static_cast<long long>(elements.size()) >= cap) {
        throw GroupTooLarge("closure exceeds cap " + std::to_string(cap));
      }
      frontier.push_back(next);
      elements.push_back(std::move(next));
    }
  }
  std::sort(elements.begin(), elements.end(), entry_tuple_less);
  return PointGroup{dim, generators, std::move(elements)};
}

PointGroup closure(const std::vector<IntMatrix>& generators, long long cap) {
  if (generators.empty()) {
    throw DimensionMismatch("cannot infer dimension from no generators");
  }
  return closure(generators.front().n, generators, cap);
}

PointGroup group_from_elements(int dim, std::vector<IntMatrix> elements,
                               std::vector<IntMatrix> generators) {
  std::sort(elements.begin(), elements.end(), entry_tuple_less);
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  return PointGroup{dim, std::move(generators), std::move(elements)};
}

DensityReport density_exact(const PointGroup& g) {
  DensityReport report;
  report.group_order = g.order();
  report.per_element.reserve(g.elements.size());
  for (const IntMatrix& e : g.elements) {
    ElementCensusRow row;
    row.element = e;
    row.has_eigenvalue_one = has_eigenvalue_one(e);
    row.order = mat_order(e);
    if (!row.has_eigenvalue_one) ++report.m;
    report.per_element.push_back(std::move(row));
  }
  report.density = Rat(Int(report.m), Int(report.group_order));
  return report;
}

DensityValue density_value(const PointGroup& g) {
  DensityValue value;
  value.group_order = g.order();
  for (const IntMatrix& e : g.elements) {
    if (!has_eigenvalue_one(e)) ++value.m;
  }
  value.density = Rat(Int(value.m), Int(value.group_order));
  return value;
}

bool odd_dim_bound_check(const PointGroup& g) {
  if (g.dim % 2 == 0) {
    throw DimensionNotOdd("check requires odd ambient dimension");
  }
  for (const IntMatrix& e : g.elements) {
    if (mat_det(e) == 1 && !has_eigenvalue_one(e)) return false;
  }
  return density_value(g).density <= Rat(1, 2);
}

}  // namespace crystden
