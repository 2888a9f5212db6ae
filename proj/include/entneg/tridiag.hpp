#pragma once

#include "entneg/types.hpp"

namespace entneg {

// Result of the bath-side Householder reduction. Mode 0 is never touched:
//   tridiagonal = (1 (+) bath_unitary)^dag  C  (1 (+) bath_unitary)
// with real nonnegative subdiagonal entries and (0,0) preserved bitwise.
struct TridiagonalizationResult {
  CorrelationMatrix tridiagonal;
  Eigen::MatrixXcd bath_unitary;  // (m-1) x (m-1), acts on modes 1..m-1

  Eigen::MatrixXcd full_unitary() const;  // 1 (+) bath_unitary, m x m
};

TridiagonalizationResult householder_tridiagonalize(const CorrelationMatrix& c);

// Leading (cutoff+1) x (cutoff+1) block of the tridiagonal form. Only the
// first cutoff reflections are run; the skipped ones act strictly below the
// block, so the result matches the full reduction there.
Eigen::MatrixXcd leading_tridiagonal_block(const Eigen::MatrixXcd& c, int cutoff);

}  // namespace entneg
