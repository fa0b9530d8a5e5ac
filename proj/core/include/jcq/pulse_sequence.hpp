// Copyright 2026 The jcqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <limits>
#include <span>
#include <vector>

#include "jcq/error_metrics.hpp"

namespace jcq {

/// One pulse of an open-loop sequence. Each step draws a fresh coherent
/// field of mean `field_n` with phase pi/2.
struct SequenceStep {
  double theta = 0.0;
  double field_n = 0.0;
  PulseMode mode = PulseMode::BiasFree;
  double explicit_vartheta = std::numeric_limits<double>::quiet_NaN();
};

struct SequenceReport {
  // Per step, all measured against the running classical target.
  std::vector<double> target_angle;
  std::vector<double> vartheta_used;
  std::vector<double> per_step_error;   // exact, cumulative up to the step
  std::vector<double> per_step_mixture;  // two-branch composition
  std::vector<double> per_step_asymptote;  // running sum of 1/N terms

  double cumulative_exact = 0.0;
  double cumulative_mixture = 0.0;
  double cumulative_asymptote = 0.0;
  QubitState final_state = QubitState::ground();
};

/// Runs `steps` on rho0. theta0 is the altitude of the classical reference
/// trajectory; targets are R(theta0 + sum theta_i)|0>. The field is traced
/// out after every step.
///
/// The mixture column treats the state after each step as
/// (1 - p)|target><target| + p|target_perp><target_perp| and propagates
///   p' = (1 - p) P(t, theta) + p (1 - P(t + pi/2, theta)),
/// where the second term is the orthogonal branch rotated back onto the
/// new orthogonal direction.
SequenceReport run_sequence(const QubitState& rho0, double theta0,
                            std::span<const SequenceStep> steps,
                            double tail_tol = kDefaultTailTol);

/// Same, starting from the pure state R(theta0)|0>.
SequenceReport run_sequence(double theta0, std::span<const SequenceStep> steps,
                            double tail_tol = kDefaultTailTol);

/// `count` equal steps of theta each, budget mean_photon_number per step.
std::vector<SequenceStep> uniform_steps(std::size_t count, double theta,
                                        double mean_photon_number,
                                        PulseMode mode = PulseMode::BiasFree);

struct SequenceComparison {
  double two_step = 0.0;   // two halves of theta_total, N photons each
  double single_n = 0.0;   // one pulse of theta_total with N photons
  double single_2n = 0.0;  // one pulse of theta_total with 2N photons
};

/// Splits theta_total into two equal pulses and compares against a single
/// pulse with the same per-pulse budget and with the same total energy.
SequenceComparison compare_sequence_vs_single(
    double theta_total, double theta0, double mean_photon_number,
    PulseMode mode = PulseMode::BiasFree, double tail_tol = kDefaultTailTol);

}  // namespace jcq
