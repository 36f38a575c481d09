#include <superlie/table_builder.hpp>

namespace superlie {

void axpy(SparseVector& dst, const Scalar& c, const SparseVector& src) {
  if (c == 0) return;
  for (const auto& [k, v] : src) {
    auto [it, inserted] = dst.try_emplace(k, c * v);
    if (!inserted) {
      it->second += c * v;
      if (it->second == 0) dst.erase(it);
    }
  }
}

CoordinateSolver::CoordinateSolver(const std::vector<SparseVector>& basis,
                                   const std::vector<SparseVector>& modulus)
    : basis_dim_(static_cast<Index>(basis.size())) {
  const std::size_t total = basis.size() + modulus.size();
  for (std::size_t k = 0; k < total; ++k) {
    Row row{k < basis.size() ? basis[k] : modulus[k - basis.size()],
            SparseVector{{static_cast<Index>(k), Scalar(1)}}};
    std::vector<Index> hits;
    for (const auto& [key, value] : row.vector)
      if (rows_.count(key)) hits.push_back(key);
    for (Index p : hits) {
      const auto it = row.vector.find(p);
      if (it == row.vector.end()) continue;
      const Scalar c = -it->second;
      axpy(row.vector, c, rows_.at(p).vector);
      axpy(row.combination, c, rows_.at(p).combination);
    }
    if (row.vector.empty())
      throw Error(Errc::ConstructionFailed,
                  "basis vector " + std::to_string(k) + " is dependent on the previous ones");
    const Index pivot = row.vector.begin()->first;
    const Scalar inv = Scalar(1) / row.vector.begin()->second;
    for (auto& [key, value] : row.vector) value *= inv;
    for (auto& [key, value] : row.combination) value *= inv;
    for (auto& [p, other] : rows_) {
      const auto it = other.vector.find(pivot);
      if (it == other.vector.end()) continue;
      const Scalar c = -it->second;
      axpy(other.vector, c, row.vector);
      axpy(other.combination, c, row.combination);
    }
    rows_.emplace(pivot, std::move(row));
  }
}

std::optional<SparseVector> CoordinateSolver::solve(const SparseVector& v) const {
  SparseVector rest = v;
  SparseVector combination;
  for (const auto& [key, value] : v) {
    const auto row = rows_.find(key);
    if (row == rows_.end()) continue;
    const auto it = rest.find(key);
    if (it == rest.end()) continue;
    const Scalar c = it->second;
    axpy(rest, -c, row->second.vector);
    axpy(combination, c, row->second.combination);
  }
  if (!rest.empty()) return std::nullopt;
  for (auto it = combination.begin(); it != combination.end();)
    it = it->first >= basis_dim_ ? combination.erase(it) : std::next(it);
  return combination;
}

SuperAlgebra build_table(const TableInput& input) {
  const Index n = static_cast<Index>(input.basis.size());
  const CoordinateSolver solver(input.basis, input.modulus);

  StructureTable table(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const auto coords = solver.solve(input.bracket(i, j));
      if (!coords)
        throw Error(Errc::ConstructionFailed, input.name + ": bracket of basis vectors " +
                                                  input.labels[static_cast<std::size_t>(i)] +
                                                  " and " +
                                                  input.labels[static_cast<std::size_t>(j)] +
                                                  " leaves the span");
      auto& entry = table[static_cast<std::size_t>(i * n + j)];
      for (const auto& [k, c] : *coords) entry.push_back({k, c});
    }

  std::vector<Weight> weights(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    auto& w = weights[static_cast<std::size_t>(i)].values;
    for (Index h : input.cartan) {
      const auto& entry = table[static_cast<std::size_t>(h * n + i)];
      if (entry.empty()) {
        w.emplace_back(0);
      } else if (entry.size() == 1 && entry[0].index == i) {
        w.push_back(entry[0].coeff);
      } else {
        throw Error(Errc::NotDiagonal, input.name + ": " + input.labels[static_cast<std::size_t>(i)] +
                                           " is not an eigenvector of " +
                                           input.labels[static_cast<std::size_t>(h)]);
      }
    }
  }

  SuperAlgebraParts parts;
  parts.name = input.name;
  parts.family = input.family;
  parts.parity = input.parity;
  parts.labels = input.labels;
  parts.cartan = input.cartan;
  parts.weights = std::move(weights);
  parts.degree = input.degree;
  parts.component = input.component;
  parts.structure = std::move(table);
  return SuperAlgebra(std::move(parts));
}

}  // namespace superlie
