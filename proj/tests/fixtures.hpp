#pragma once

// Random inputs with a nontrivial pruned core: an equality configuration
// under a random similarity, plus filler points strictly inside the
// diameter.

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "diamgraph/extremal.hpp"

namespace fixture {

inline diamgraph::PointSet structured(std::uint64_t seed, std::size_t fillers = 6) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(4, 14);
  const std::size_t m = pick(rng);
  const diamgraph::PointSet base = seed % 3 == 0 ? diamgraph::gen_tetrahedron() : diamgraph::gen_spindle(m);

  std::normal_distribution<double> g;
  Eigen::Matrix3d a;
  for (int i = 0; i < 9; ++i) a(i / 3, i % 3) = g(rng);
  const Eigen::Matrix3d rot = Eigen::HouseholderQR<Eigen::Matrix3d>(a).householderQ();
  std::uniform_real_distribution<double> scale(0.2, 50.0);
  const double s = scale(rng);
  const Eigen::Vector3d shift(g(rng), g(rng), g(rng));

  std::vector<Eigen::Vector3d> pts;
  for (std::size_t i = 0; i < base.size(); ++i) pts.emplace_back(base[i][0], base[i][1], base[i][2]);
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const auto& p : pts) centroid += p;
  centroid /= double(pts.size());
  std::uniform_real_distribution<double> u(-0.35, 0.35);
  for (std::size_t f = 0, tries = 0; f < fillers && tries < 1000; ++tries) {
    const Eigen::Vector3d q = centroid + Eigen::Vector3d(u(rng), u(rng), u(rng));
    bool ok = true;
    for (const auto& p : pts) ok = ok && (p - q).norm() < 0.98 && (p - q).norm() > 1e-3;
    if (!ok) continue;
    pts.push_back(q);
    ++f;
  }
  std::vector<double> out;
  for (const auto& p : pts) {
    const Eigen::Vector3d t = s * (rot * p) + shift;
    out.insert(out.end(), {t.x(), t.y(), t.z()});
  }
  return diamgraph::PointSet(3, out);
}

}  // namespace fixture
