#pragma once

#include <string>
#include <vector>

#include "latspar/approx_cvp.hpp"
#include "latspar/lattice.hpp"
#include "latspar/oracle.hpp"
#include "latspar/sparsifier.hpp"

namespace latspar {

// stdout result grammar: one "POINT <coeffs> | <ambient>" line per lattice
// point, exact rationals throughout.
std::string format_point(const LatticePoint& p);
std::string format_points(const std::vector<LatticePoint>& pts);

// JSON serializations (schema versioned, deterministic key order).
std::string report_to_json(const SparsifierReport& rep);
std::string sparsify_result_to_json(const QMat& hnf_basis, const SparsifierReport& rep);
std::string verification_to_json(const SparsifierVerification& v);
std::string cvp_result_to_json(const CvpResult& res);
std::string points_to_json(const std::vector<LatticePoint>& pts);

}  // namespace latspar
