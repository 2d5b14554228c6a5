#ifndef FIE_REPORTING_HPP
#define FIE_REPORTING_HPP

#include <ostream>
#include <string>
#include <vector>

#include "fie/analysis.hpp"
#include "fie/problem.hpp"
#include "fie/solver.hpp"

namespace fie {

/// Scientific notation with 15 significant digits, e.g. 4.08248290463863e-01.
std::string format_number(double v);

/// Rows `iteration,l2_error` for n = 1..len(errors).
void write_table_csv(std::ostream& out, const std::vector<double>& errors);

/// Rows `quad_points,iteration,l2_error`.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Solution samples at `sample_count` uniform points with a '#'-prefixed
/// report summary, then rows `t,y`.
void write_solve_csv(std::ostream& out, const ProblemSpec& spec,
                     const SolveReport& report, int sample_count);

/// Full report object with keys problem, config, contraction,
/// residual_history, error_history, termination, samples.
void write_solve_json(std::ostream& out, const ProblemSpec& spec,
                      const SolverConfig& config, const SolveReport& report,
                      int sample_count);

/// Structured text report of the contraction diagnostics.
void write_contraction_text(std::ostream& out, const ProblemSpec& spec,
                            const ContractionReport& report);

void write_contraction_json(std::ostream& out, const ProblemSpec& spec,
                            const ContractionReport& report);

}  // namespace fie

#endif  // FIE_REPORTING_HPP
