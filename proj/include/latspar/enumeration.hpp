#pragma once

#include <functional>
#include <vector>

#include "latspar/body.hpp"
#include "latspar/lattice.hpp"

namespace latspar {

// Deterministic, duplicate-free sequence of lattice points in lexicographic
// coefficient order.
struct PointStream {
  std::vector<LatticePoint> points;

  size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  auto begin() const { return points.begin(); }
  auto end() const { return points.end(); }
};

// Visits every y in L with ||y - center||_2^2 <= rho_sq, DFS order (not
// sorted); the visitor returns false to stop early.
void enum_ball_visit(const Lattice& lat, const QVec& center, const Rat& rho_sq,
                     const std::function<bool(LatticePoint&&)>& visit);
std::vector<LatticePoint> enum_ball(const Lattice& lat, const QVec& center, const Rat& rho_sq);

struct CvpL2Result {
  std::vector<LatticePoint> points;  // the complete argmin set
  Rat dist_sq;
};
// Exact l2 CVP by branch-and-bound coefficient enumeration; stands in for
// the Voronoi-cell solver by output contract.
CvpL2Result cvp_l2(const Lattice& lat, const QVec& target);

struct SvpL2Result {
  std::vector<LatticePoint> points;  // all shortest nonzero vectors
  Rat norm_sq;
};
SvpL2Result svp_l2(const Lattice& lat);

// Lattice-Enum contract: emits S with
//   (scale*K + center) cap L  <=  S  <=  (scale*K + center + eps*B2) cap L.
// Built-in bodies decide membership exactly, so S is the left-hand set.
PointStream lattice_enum(const ConvexBody& k, const QVec& center, const Rat& scale,
                         const Lattice& lat, const Rat& eps);
void lattice_enum_visit(const ConvexBody& k, const QVec& center, const Rat& scale,
                        const Lattice& lat, const Rat& eps,
                        const std::function<bool(LatticePoint&&)>& visit);

struct ShortestVectorsResult {
  std::vector<LatticePoint> points;  // the exact SVP(K, L) set
  GaugeValue lambda1;
};
// Shortest-Vectors contract for a symmetric body: scaling search seeded by
// an l2-shortest vector, factor-2 bracketing, one exact enumeration.
ShortestVectorsResult shortest_vectors(const ConvexBody& k, const Lattice& lat, const Rat& eps);

}  // namespace latspar
