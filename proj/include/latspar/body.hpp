#pragma once

#include <memory>
#include <optional>
#include <string>

#include "latspar/linalg.hpp"
#include "latspar/rational.hpp"

namespace latspar {

// Weak distance oracle output: |value - ||x||_K| <= eps * min(1, ||x||_K).
// eps == 0 marks an exact answer.
struct DistanceEstimate {
  Rat value;
  Rat eps;
};

enum class Membership { inside, outside };

enum class LpKind { L1, L2, Linf };

// Norm-defining convex body with 0 in its interior.  Three families: lp
// balls (p in {1,2,inf}), polytopes {x : Ax <= b} with b > 0, and the
// symmetrization K cap -K of another body.  All oracle answers are exact
// w.r.t. the body; the eps parameters exist to honour the weak-oracle
// interface.
class ConvexBody {
 public:
  enum class Kind { Lp, Polytope, Symmetrized };

  static ConvexBody lp_ball(LpKind p, const Rat& radius, int dim);
  static ConvexBody polytope(QMat a, QVec b);
  static ConvexBody symmetrized(const ConvexBody& inner);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }

  // (0, r, R)-centering data and the symmetry parameter gamma; gamma is
  // metadata and never steers control flow.
  const Rat& inradius() const { return r_; }
  const Rat& circumradius() const { return big_r_; }
  const Rat& gamma() const { return gamma_; }
  bool symmetric() const { return symmetric_; }

  ConvexBody with_metadata(std::optional<Rat> r, std::optional<Rat> big_r,
                           std::optional<Rat> gamma) const;

  // Exact gauge ||x||_K as a rational or the square root of one.
  GaugeValue gauge_exact(const QVec& x) const;
  // ||x||_K <= s, decided exactly.
  bool gauge_leq_scale(const QVec& x, const Rat& s) const;

  DistanceEstimate gauge(const QVec& x, const Rat& eps) const;
  Membership membership(const QVec& x, const Rat& eps) const;

  LpKind lp_kind() const;
  const QMat& facet_matrix() const;
  const QVec& facet_rhs() const;
  const Rat& lp_radius() const;
  const ConvexBody& inner() const;

  std::string describe() const;

 private:
  ConvexBody() = default;

  Kind kind_ = Kind::Lp;
  int dim_ = 0;
  bool symmetric_ = false;
  Rat r_, big_r_, gamma_;
  // Lp
  LpKind lp_ = LpKind::Linf;
  Rat radius_;
  // Polytope
  QMat a_;
  QVec b_;
  // Symmetrized
  std::shared_ptr<const ConvexBody> inner_;
};

// K cap -K; exact gauge max(||x||_K, ||-x||_K), gamma = 1.  Symmetric bodies
// come back unchanged apart from gamma.
ConvexBody symmetrize(const ConvexBody& k);

// Body spec files: {"type":"lp","p":"inf"|"1"|"2","radius":...},
// {"type":"polytope","A":[[...]],"b":[...]},
// {"type":"symmetrized","inner":{...}}, optional "r", "R", "gamma"
// overrides.  Rationals are strings "num/den" or JSON integers.
// expected_dim supplies the ambient dimension for lp bodies without an
// explicit "dim" field and cross-checks the rest; pass -1 to skip.
ConvexBody body_from_json_text(const std::string& text, int expected_dim = -1);
ConvexBody body_from_json_file(const std::string& path, int expected_dim = -1);

}  // namespace latspar
