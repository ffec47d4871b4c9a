#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "mkelab/types.hpp"

namespace mkelab {

// Finitely supported probability measure: one support point per row of
// `points`, nonnegative `weights` summing to one.
template <typename Scalar>
struct DiscreteMeasure {
  Mat<Scalar> points;   // n x d
  Vec<Scalar> weights;  // n

  Index size() const { return points.rows(); }
  Index dim() const { return points.cols(); }
};

// Validating constructor. Weights within 1e-9 of unit mass are renormalized
// (final sum holds to 1e-12); anything further off is rejected.
template <typename Scalar>
DiscreteMeasure<Scalar> make_measure(Mat<Scalar> points, Vec<Scalar> weights) {
  if (points.rows() == 0) throw std::invalid_argument("measure: empty support");
  if (points.cols() == 0) throw std::invalid_argument("measure: zero-dimensional points");
  if (weights.size() != points.rows())
    throw std::invalid_argument("measure: weight count does not match point count");
  if ((weights.array() < Scalar(0)).any())
    throw std::invalid_argument("measure: negative weight");
  const Scalar total = weights.sum();
  if (std::abs(total - Scalar(1)) > Scalar(1e-9))
    throw std::invalid_argument("measure: weights sum to " + std::to_string(double(total)) +
                                ", outside the 1e-9 normalization tolerance");
  weights /= total;
  return DiscreteMeasure<Scalar>{std::move(points), std::move(weights)};
}

// Empirical measure (1/n) sum_j delta_{y_j}.
template <typename Scalar>
DiscreteMeasure<Scalar> empirical(Mat<Scalar> points) {
  if (points.rows() == 0) throw std::invalid_argument("empirical: empty point list");
  if (points.cols() == 0) throw std::invalid_argument("empirical: zero-dimensional points");
  const Index n = points.rows();
  Vec<Scalar> w = Vec<Scalar>::Constant(n, Scalar(1) / Scalar(n));
  return DiscreteMeasure<Scalar>{std::move(points), std::move(w)};
}

enum class LatentFamily { UniformBox, StandardGaussian };

inline const char* latent_family_name(LatentFamily f) {
  return f == LatentFamily::UniformBox ? "uniform-box" : "standard-gaussian";
}

inline LatentFamily parse_latent_family(const std::string& name) {
  if (name == "uniform-box") return LatentFamily::UniformBox;
  if (name == "standard-gaussian") return LatentFamily::StandardGaussian;
  throw std::invalid_argument("unknown latent family: " + name);
}

// Seeded sampler for the latent distribution zeta. Stateful stream: two
// samplers built from the same (family, dim, seed) produce bit-identical
// output, a single sampler advances.
template <typename Scalar>
class LatentSampler {
 public:
  LatentSampler(LatentFamily family, int dim, std::uint64_t seed)
      : family_(family), dim_(dim), seed_(seed), rng_(seed) {
    if (dim < 1) throw std::invalid_argument("latent sampler: dimension must be >= 1");
  }

  Mat<Scalar> sample(Index m) {
    if (m < 1) throw std::invalid_argument("latent sampler: sample count must be >= 1");
    Mat<Scalar> out(m, dim_);
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < dim_; ++j)
        out(i, j) = family_ == LatentFamily::UniformBox ? Scalar(rng_.uniform01())
                                                        : Scalar(rng_.gaussian());
    return out;
  }

  LatentFamily family() const { return family_; }
  int dim() const { return dim_; }
  std::uint64_t seed() const { return seed_; }

 private:
  LatentFamily family_;
  int dim_;
  std::uint64_t seed_;
  Rng rng_;
};

// Pushforward map#mu: applies `map` to every atom, weights untouched.
// Coincident images are kept as duplicate atoms.
template <typename Scalar, typename MapT>
DiscreteMeasure<Scalar> pushforward(const MapT& map, const DiscreteMeasure<Scalar>& mu) {
  if (map.input_dim() != mu.dim())
    throw std::invalid_argument("pushforward: map input dimension " +
                                std::to_string(map.input_dim()) + " != measure dimension " +
                                std::to_string(mu.dim()));
  Mat<Scalar> out(mu.size(), map.output_dim());
  for (Index i = 0; i < mu.size(); ++i)
    out.row(i) = map.forward(mu.points.row(i).transpose()).transpose();
  return DiscreteMeasure<Scalar>{std::move(out), mu.weights};
}

}  // namespace mkelab
