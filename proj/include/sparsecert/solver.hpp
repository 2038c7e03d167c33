#pragma once

// Result types shared by the greedy solvers.

#include <string_view>
#include <vector>

#include "sparsecert/sensing.hpp"

namespace sparsecert {

enum class HaltReason { IterationBudget, StoppingCriterion, ZeroResidual };

std::string_view to_string(HaltReason h);

struct SolverResult {
  /// Final estimate; exact zeros are dropped so it may be sparser than the support.
  SparseSignal estimate;
  /// Support estimate after each iteration (iteration 1 first).
  std::vector<SupportSet> support_trace;
  /// Residual norms ||r^j||_2 for j = 0 .. iterations.
  std::vector<double> residual_norms;
  Index iterations = 0;
  HaltReason halted_by = HaltReason::IterationBudget;

  /// Last entry of support_trace, or the empty set when no iteration ran.
  SupportSet final_support() const {
    return support_trace.empty() ? SupportSet::empty(estimate.ambient()) : support_trace.back();
  }
};

/// Indices of the k largest |values|, ties broken by the smaller index,
/// returned as a sorted support over `ambient`. `labels` maps positions of
/// `values` to ambient indices (identity when empty).
SupportSet top_k_magnitudes(const Vector& values, Index k, Index ambient,
                            const std::vector<Index>& labels = {});

}  // namespace sparsecert
