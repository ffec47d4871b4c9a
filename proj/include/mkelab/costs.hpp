#pragma once

#include <stdexcept>
#include <string>

#include "mkelab/measures.hpp"
#include "mkelab/types.hpp"

namespace mkelab {

enum class CostKind { SqEuclidean, Euclidean };

struct GroundCost {
  CostKind kind = CostKind::SqEuclidean;
};

inline GroundCost make_cost(const std::string& name) {
  if (name == "sqeuclidean") return {CostKind::SqEuclidean};
  if (name == "euclidean") return {CostKind::Euclidean};
  throw std::invalid_argument("unknown cost kind: " + name);
}

inline const char* cost_name(GroundCost c) {
  return c.kind == CostKind::SqEuclidean ? "sqeuclidean" : "euclidean";
}

namespace detail {
inline void check_same_dim(Index a, Index b, const char* who) {
  if (a != b)
    throw std::invalid_argument(std::string(who) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
}
}  // namespace detail

// Ground cost c(x, y).
template <typename DA, typename DB>
typename DA::Scalar cost(GroundCost c, const Eigen::MatrixBase<DA>& x,
                         const Eigen::MatrixBase<DB>& y) {
  detail::check_same_dim(x.size(), y.size(), "cost");
  if (c.kind == CostKind::SqEuclidean) return (x - y).squaredNorm();
  return (x - y).norm();
}

// Gradient of c in its first argument. The euclidean cost is nonsmooth at
// x = y; the zero subgradient is returned there.
template <typename DA, typename DB>
Vec<typename DA::Scalar> grad1(GroundCost c, const Eigen::MatrixBase<DA>& x,
                               const Eigen::MatrixBase<DB>& y) {
  using Scalar = typename DA::Scalar;
  detail::check_same_dim(x.size(), y.size(), "grad1");
  Vec<Scalar> diff = x - y;
  if (c.kind == CostKind::SqEuclidean) return Scalar(2) * diff;
  const Scalar n = diff.norm();
  if (n == Scalar(0)) return Vec<Scalar>::Zero(x.size());
  return diff / n;
}

// Pairwise cost matrix over two discrete supports: entry (i, j) = c(x_i, y_j).
template <typename Scalar>
Mat<Scalar> cost_matrix(GroundCost c, const DiscreteMeasure<Scalar>& mu,
                        const DiscreteMeasure<Scalar>& nu) {
  detail::check_same_dim(mu.dim(), nu.dim(), "cost_matrix");
  Mat<Scalar> C(mu.size(), nu.size());
  for (Index i = 0; i < mu.size(); ++i)
    for (Index j = 0; j < nu.size(); ++j)
      C(i, j) = cost(c, mu.points.row(i), nu.points.row(j));
  return C;
}

}  // namespace mkelab
