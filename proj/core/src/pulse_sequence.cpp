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

#include "jcq/pulse_sequence.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jcq {

namespace {

void validate(const SequenceStep& step) {
  if (!(step.field_n > 0.0) || !std::isfinite(step.field_n)) {
    throw std::invalid_argument("sequence step needs field_n > 0");
  }
  if (!std::isfinite(step.theta)) {
    throw std::invalid_argument("sequence step theta must be finite");
  }
}

}  // namespace

SequenceReport run_sequence(const QubitState& rho0, double theta0,
                            std::span<const SequenceStep> steps,
                            double tail_tol) {
  if (!rho0.is_valid(1e-10)) {
    throw std::invalid_argument("initial qubit state is not a density matrix");
  }
  for (const auto& s : steps) validate(s);

  SequenceReport report;
  QubitState rho = rho0;
  double target = theta0;
  double mixture = error_against_target(rho0, theta0);
  double asymptote = 0.0;

  for (const auto& step : steps) {
    const ControlSpec control{target, step.theta};
    const PulseSpec pulse = resolve_pulse(step.mode, control, step.field_n,
                                          step.explicit_vartheta);
    const FieldState field =
        make_coherent(step.field_n, kRotationPhase, tail_tol);
    const KrausSet kraus = build_kraus(field, pulse);

    rho = apply_channel(rho, kraus);

    const double on_target = error_rate_exact(control, kraus);
    const double orthogonal =
        error_rate_exact({target + std::numbers::pi / 2, step.theta}, kraus);
    mixture = (1.0 - mixture) * on_target + mixture * (1.0 - orthogonal);
    asymptote += landscape_asymptote(control.midpoint_altitude(), step.theta,
                                     step.field_n);
    target += step.theta;

    report.target_angle.push_back(target);
    report.vartheta_used.push_back(pulse.vartheta);
    report.per_step_error.push_back(error_against_target(rho, target));
    report.per_step_mixture.push_back(mixture);
    report.per_step_asymptote.push_back(asymptote);
  }

  report.cumulative_exact =
      report.per_step_error.empty() ? error_against_target(rho0, theta0)
                                    : report.per_step_error.back();
  report.cumulative_mixture = mixture;
  report.cumulative_asymptote = asymptote;
  report.final_state = rho;
  return report;
}

SequenceReport run_sequence(double theta0, std::span<const SequenceStep> steps,
                            double tail_tol) {
  return run_sequence(QubitState::pure(theta0), theta0, steps, tail_tol);
}

std::vector<SequenceStep> uniform_steps(std::size_t count, double theta,
                                        double mean_photon_number,
                                        PulseMode mode) {
  SequenceStep step;
  step.theta = theta;
  step.field_n = mean_photon_number;
  step.mode = mode;
  return std::vector<SequenceStep>(count, step);
}

SequenceComparison compare_sequence_vs_single(double theta_total,
                                              double theta0,
                                              double mean_photon_number,
                                              PulseMode mode,
                                              double tail_tol) {
  const auto steps =
      uniform_steps(2, 0.5 * theta_total, mean_photon_number, mode);
  SequenceComparison c;
  c.two_step = run_sequence(theta0, steps, tail_tol).cumulative_exact;
  const ControlSpec single{theta0, theta_total};
  c.single_n = evaluate_control(single, mean_photon_number,
                                PulseMode::QuarterPi, tail_tol)
                   .exact;
  c.single_2n = evaluate_control(single, 2.0 * mean_photon_number,
                                 PulseMode::QuarterPi, tail_tol)
                    .exact;
  return c;
}

}  // namespace jcq
