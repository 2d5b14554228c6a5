#include "fie/reporting.hpp"

#include <cstdio>

#include <json.hpp>

namespace fie {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.14e", v);
  return buf;
}

void write_table_csv(std::ostream& out, const std::vector<double>& errors) {
  out << "iteration,l2_error\n";
  for (std::size_t n = 0; n < errors.size(); ++n) {
    out << n + 1 << ',' << format_number(errors[n]) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "quad_points,iteration,l2_error\n";
  for (const SweepRow& row : rows) {
    out << row.quad_points << ',' << row.iteration << ','
        << format_number(row.l2_error) << '\n';
  }
}

namespace {

std::vector<std::pair<double, double>> sample_solution(const ProblemSpec& spec,
                                                       const SolveReport& report,
                                                       int sample_count) {
  std::vector<std::pair<double, double>> samples;
  samples.reserve(sample_count);
  const Interval& iv = spec.interval;
  for (int j = 0; j < sample_count; ++j) {
    const double t = iv.a + iv.width() * j / (sample_count - 1);
    samples.emplace_back(t, report.final(t));
  }
  return samples;
}

}  // namespace

void write_solve_csv(std::ostream& out, const ProblemSpec& spec,
                     const SolveReport& report, int sample_count) {
  out << "# problem: " << spec.name << '\n';
  out << "# termination: " << to_string(report.termination) << '\n';
  out << "# iterations_run: " << report.iterations_run << '\n';
  if (!report.residual_history.empty()) {
    out << "# final_residual: " << format_number(report.residual_history.back())
        << '\n';
  }
  if (!report.error_history.empty()) {
    out << "# final_l2_error: " << format_number(report.error_history.back()) << '\n';
  }
  if (report.contraction) {
    out << "# contraction_N: " << format_number(report.contraction->N) << '\n';
  }
  out << "# y1_norm: " << format_number(report.y1_norm) << '\n';
  auto history_line = [&](const char* label, const std::vector<double>& values) {
    if (values.empty()) return;
    out << "# " << label << ':';
    for (double v : values) out << ' ' << format_number(v);
    out << '\n';
  };
  history_line("residual_history", report.residual_history);
  history_line("error_history", report.error_history);
  history_line("apriori_history", report.apriori_history);
  out << "t,y\n";
  for (const auto& [t, y] : sample_solution(spec, report, sample_count)) {
    out << format_number(t) << ',' << format_number(y) << '\n';
  }
}

namespace {

nlohmann::json contraction_to_json(const ContractionReport& report) {
  nlohmann::json j;
  j["N"] = report.N;
  j["is_contraction"] = report.is_contraction;
  j["lambda_max"] = report.lambda_max;
  j["p"] = report.p;
  if (report.is_contraction) {
    j["default_lambda"] = report.default_lambda();
    j["alpha_at_default_lambda"] = report.alpha_for_lambda(report.default_lambda());
  }
  auto samples = nlohmann::json::array();
  for (const auto& [t, v] : report.M1_samples) {
    samples.push_back({t, v});
  }
  j["M1_samples"] = samples;
  return j;
}

}  // namespace

void write_solve_json(std::ostream& out, const ProblemSpec& spec,
                      const SolverConfig& config, const SolveReport& report,
                      int sample_count) {
  nlohmann::json j;
  j["problem"] = {{"name", spec.name},
                  {"a", spec.interval.a},
                  {"b", spec.interval.b},
                  {"has_exact", spec.has_exact()}};
  j["config"] = {{"degree_M", config.degree_M},
                 {"quad_points_N", config.quad_points_N},
                 {"tol", config.tol},
                 {"max_iter", config.max_iter},
                 {"residual_p", config.residual_p}};
  if (report.contraction) {
    nlohmann::json c = contraction_to_json(*report.contraction);
    c["y1_norm"] = report.y1_norm;
    c["apriori_history"] = report.apriori_history;
    j["contraction"] = c;
  } else {
    j["contraction"] = nullptr;
  }
  j["residual_history"] = report.residual_history;
  j["error_history"] = report.error_history;
  j["termination"] = to_string(report.termination);
  auto samples = nlohmann::json::array();
  for (const auto& [t, y] : sample_solution(spec, report, sample_count)) {
    samples.push_back({t, y});
  }
  j["samples"] = samples;
  out << j.dump(2) << '\n';
}

void write_contraction_text(std::ostream& out, const ProblemSpec& spec,
                            const ContractionReport& report) {
  out << "problem: " << spec.name << '\n';
  out << "N: " << format_number(report.N) << '\n';
  out << "is_contraction: " << (report.is_contraction ? "true" : "false") << '\n';
  if (report.is_contraction) {
    out << "lambda_admissible: (1, " << format_number(report.lambda_max) << ")\n";
    const double lambda = report.default_lambda();
    out << "default_lambda: " << format_number(lambda) << '\n';
    out << "alpha_at_default_lambda: " << format_number(report.alpha_for_lambda(lambda))
        << '\n';
  } else {
    out << "lambda_admissible: none (N >= 1)\n";
  }
  out << "M1_samples:\n";
  out << "t,M1\n";
  for (const auto& [t, v] : report.M1_samples) {
    out << format_number(t) << ',' << format_number(v) << '\n';
  }
}

void write_contraction_json(std::ostream& out, const ProblemSpec& spec,
                            const ContractionReport& report) {
  nlohmann::json j = contraction_to_json(report);
  j["problem"] = spec.name;
  out << j.dump(2) << '\n';
}

}  // namespace fie
