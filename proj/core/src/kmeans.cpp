#include "graphharm/cluster.hpp"
#include "graphharm/error.hpp"

#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace graphharm {

std::vector<std::size_t> Clustering::cluster_sizes() const {
  std::vector<std::size_t> sizes(clusters, 0);
  for (std::size_t id : assignment) ++sizes.at(id);
  return sizes;
}

namespace {

double within_sum(const Eigen::MatrixXd& points, const Eigen::MatrixXd& centroids,
                  const std::vector<std::size_t>& assign) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    total += (points.row(i) - centroids.row(static_cast<Eigen::Index>(assign[static_cast<std::size_t>(i)])))
                 .squaredNorm();
  }
  return total;
}

}  // namespace

KMeansResult kmeans(const Eigen::MatrixXd& points, std::size_t c, std::uint64_t seed,
                    std::size_t max_iters) {
  const auto n = static_cast<std::size_t>(points.rows());
  const auto d = points.cols();
  if (d == 0) throw InvalidArgument("kmeans: points have dimension 0");
  if (c == 0) throw InvalidArgument("kmeans: cluster count must be >= 1");
  if (max_iters == 0) throw InvalidArgument("kmeans: max_iters must be >= 1");
  if (c > n) {
    throw InvalidArgument("kmeans: " + std::to_string(c) + " clusters requested for " +
                          std::to_string(n) + " points");
  }

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> pick(n);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  for (std::size_t i = 0; i < c; ++i) {
    std::uniform_int_distribution<std::size_t> draw(i, n - 1);
    std::swap(pick[i], pick[draw(rng)]);
  }
  Eigen::MatrixXd centroids(static_cast<Eigen::Index>(c), d);
  for (std::size_t j = 0; j < c; ++j) {
    centroids.row(static_cast<Eigen::Index>(j)) = points.row(static_cast<Eigen::Index>(pick[j]));
  }

  KMeansResult result;
  std::vector<std::size_t> assign(n, c);  // c = "unassigned" for the first pass
  std::vector<double> dist(n, 0.0);
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < c; ++j) {
        const double dd =
            (points.row(static_cast<Eigen::Index>(i)) - centroids.row(static_cast<Eigen::Index>(j))).squaredNorm();
        if (dd < best_d) {
          best_d = dd;
          best = j;
        }
      }
      if (best != assign[i]) changed = true;
      assign[i] = best;
      dist[i] = best_d;
    }

    std::vector<std::size_t> sizes(c, 0);
    for (std::size_t a : assign) ++sizes[a];
    bool reseeded = false;
    for (std::size_t j = 0; j < c; ++j) {
      if (sizes[j] != 0) continue;
      // Farthest point (from its own centroid) among clusters that can spare one.
      std::size_t far = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (sizes[assign[i]] > 1 && (far == n || dist[i] > dist[far])) far = i;
      }
      if (far == n) break;
      --sizes[assign[far]];
      assign[far] = j;
      sizes[j] = 1;
      dist[far] = 0.0;
      reseeded = true;
    }

    for (std::size_t j = 0; j < c; ++j) {
      if (sizes[j] != 0) centroids.row(static_cast<Eigen::Index>(j)).setZero();
    }
    for (std::size_t i = 0; i < n; ++i) {
      centroids.row(static_cast<Eigen::Index>(assign[i])) += points.row(static_cast<Eigen::Index>(i));
    }
    for (std::size_t j = 0; j < c; ++j) {
      if (sizes[j] != 0) centroids.row(static_cast<Eigen::Index>(j)) /= static_cast<double>(sizes[j]);
    }
    result.inertia_history.push_back(within_sum(points, centroids, assign));
    result.iterations = iter + 1;
    if (!changed && !reseeded) break;
  }

  result.centroids = std::move(centroids);
  result.inertia = result.inertia_history.empty() ? 0.0 : result.inertia_history.back();
  result.clustering.assignment = std::move(assign);
  result.clustering.clusters = c;
  result.clustering.provenance = {"kmeans", {{"clusters", std::to_string(c)}}, seed};
  return result;
}

}  // namespace graphharm
