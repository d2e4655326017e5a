#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "skewlab/inequality.hpp"

namespace skewlab::io {

/// 17 significant digits ("%.17g"); non-finite values become JSON null.
std::string format_double(double x);

/// {"dim": n, "re": [[...]], "im": [[...]]}; "im" is optional and treated as zero when absent.
ComplexMatrix parse_matrix(std::string_view json_text);
ComplexMatrix load_matrix(const std::filesystem::path& path);
/// "im" is written only when some entry has a nonzero imaginary part.
std::string matrix_to_json(const ComplexMatrix& m);
void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m);

/// {"alpha","beta","region","V","I","J","U","dual_path_delta"}
std::string report_to_json(const QuantityReport& r);

/// {"name","lhs","rhs","slack","holds","tol"}
std::string verdict_to_json(const Verdict& v);
Verdict parse_verdict(std::string_view json_text);

std::string trial_record_to_json(const TrialRecord& r);
TrialRecord parse_trial_record(std::string_view json_text);

std::string aggregate_to_json(const TrialAggregate& a);

inline constexpr std::string_view kSweepHeader = "alpha,beta,region,trials,min_slack,mean_slack,violations";
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

std::string scalar_suite_to_json(const std::vector<ScalarSummary>& rows);

/// Writes `content` to `path`, or to standard output when path is empty or "-".
void write_output(const std::string& content, const std::filesystem::path& path, std::ostream& out);

}  // namespace skewlab::io
