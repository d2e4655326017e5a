#include "skewlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "skewlab/errors.hpp"

namespace skewlab::io {

namespace {

using nlohmann::json;

std::string json_quote(std::string_view s) { return json(std::string(s)).dump(); }

std::string bool_text(bool b) { return b ? "true" : "false"; }

const json& require_field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

double number_field(const json& obj, const char* key) {
  const json& v = require_field(obj, key);
  if (v.is_null()) return std::nan("");
  if (!v.is_number()) throw FormatError(std::string("field \"") + key + "\" is not a number");
  return v.get<double>();
}

std::vector<double> read_grid(const json& rows, std::size_t dim, const char* key) {
  if (!rows.is_array() || rows.size() != dim) {
    throw FormatError(std::string("\"") + key + "\" must be an array of " + std::to_string(dim) + " rows");
  }
  std::vector<double> out;
  out.reserve(dim * dim);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != dim) {
      throw FormatError(std::string("\"") + key + "\" rows must have " + std::to_string(dim) + " entries");
    }
    for (const auto& x : row) {
      if (!x.is_number()) throw FormatError(std::string("\"") + key + "\" holds a non-numeric entry");
      out.push_back(x.get<double>());
    }
  }
  return out;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("matrix: expected a JSON object");
  const json& dim_field = require_field(j, "dim");
  if (!dim_field.is_number_integer() || dim_field.get<long long>() < 1) {
    throw FormatError("matrix: \"dim\" must be a positive integer");
  }
  const auto dim = static_cast<std::size_t>(dim_field.get<long long>());
  const std::vector<double> re = read_grid(require_field(j, "re"), dim, "re");
  std::vector<double> im(dim * dim, 0.0);
  if (const auto it = j.find("im"); it != j.end()) im = read_grid(*it, dim, "im");

  std::vector<complex_t> entries(dim * dim);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (!std::isfinite(re[k]) || !std::isfinite(im[k])) throw FormatError("matrix: non-finite entry");
    entries[k] = {re[k], im[k]};
  }
  return ComplexMatrix(dim, std::move(entries));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  v.name = require_field(j, "name").get<std::string>();
  v.lhs = number_field(j, "lhs");
  v.rhs = number_field(j, "rhs");
  v.slack = number_field(j, "slack");
  v.holds = require_field(j, "holds").get<bool>();
  v.tol = number_field(j, "tol");
  return v;
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ComplexMatrix parse_matrix(std::string_view json_text) {
  return matrix_from_json(parse_json(json_text));
}

ComplexMatrix load_matrix(const std::filesystem::path& path) {
  try {
    return parse_matrix(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::string matrix_to_json(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  bool complex_entries = false;
  for (const auto& z : m.entries()) complex_entries = complex_entries || z.imag() != 0.0;

  auto grid = [&](auto part) {
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < n; ++j) {
        if (j) s += ',';
        s += format_double(part(m(i, j)));
      }
      s += ']';
    }
    return s + ']';
  };

  std::string s = "{\"dim\":" + std::to_string(n) + ",\"re\":" + grid([](complex_t z) { return z.real(); });
  if (complex_entries) s += ",\"im\":" + grid([](complex_t z) { return z.imag(); });
  return s + '}';
}

void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << matrix_to_json(m) << '\n';
}

std::string report_to_json(const QuantityReport& r) {
  return "{\"alpha\":" + format_double(r.params.alpha()) +
         ",\"beta\":" + format_double(r.params.beta()) +
         ",\"region\":" + json_quote(to_string(r.params.region())) +
         ",\"V\":" + format_double(r.variance) + ",\"I\":" + format_double(r.skew_i) +
         ",\"J\":" + format_double(r.skew_j) + ",\"U\":" + format_double(r.skew_u) +
         ",\"dual_path_delta\":" + format_double(r.dual_path_delta) + '}';
}

std::string verdict_to_json(const Verdict& v) {
  return "{\"name\":" + json_quote(v.name) + ",\"lhs\":" + format_double(v.lhs) +
         ",\"rhs\":" + format_double(v.rhs) + ",\"slack\":" + format_double(v.slack) +
         ",\"holds\":" + bool_text(v.holds) + ",\"tol\":" + format_double(v.tol) + '}';
}

Verdict parse_verdict(std::string_view json_text) {
  try {
    return verdict_from_json(parse_json(json_text));
  } catch (const json::exception& e) {
    throw FormatError(std::string("verdict: ") + e.what());
  }
}

std::string trial_record_to_json(const TrialRecord& r) {
  std::string s = "{\"target\":" + json_quote(to_string(r.target)) + ",\"seed\":" + std::to_string(r.seed) +
                  ",\"trial_index\":" + std::to_string(r.trial_index) +
                  ",\"dim\":" + std::to_string(r.dim) + ",\"eigen_floor\":" + format_double(r.eigen_floor);
  if (r.params) {
    s += ",\"alpha\":" + format_double(r.params->alpha()) + ",\"beta\":" + format_double(r.params->beta()) +
         ",\"region\":" + json_quote(to_string(r.params->region()));
  } else {
    s += ",\"alpha\":null,\"beta\":null,\"region\":null";
  }
  s += ",\"refined\":" + bool_text(r.refined) + ",\"verdict\":" + verdict_to_json(r.verdict);
  if (r.witness) {
    s += ",\"witness\":{\"rho\":" + matrix_to_json(r.witness->rho) + ",\"a\":" + matrix_to_json(r.witness->a) +
         ",\"b\":" + matrix_to_json(r.witness->b) + '}';
  } else {
    s += ",\"witness\":null";
  }
  return s + '}';
}

TrialRecord parse_trial_record(std::string_view json_text) {
  const json j = parse_json(json_text);
  try {
    TrialRecord r;
    r.target = parse_target(require_field(j, "target").get<std::string>());
    r.seed = require_field(j, "seed").get<std::uint64_t>();
    r.trial_index = require_field(j, "trial_index").get<std::uint64_t>();
    r.dim = require_field(j, "dim").get<std::size_t>();
    r.eigen_floor = number_field(j, "eigen_floor");
    if (const json& a = require_field(j, "alpha"); !a.is_null()) {
      r.params = SkewParams(a.get<double>(), number_field(j, "beta"));
    }
    r.refined = require_field(j, "refined").get<bool>();
    r.verdict = verdict_from_json(require_field(j, "verdict"));
    if (const json& w = require_field(j, "witness"); !w.is_null()) {
      r.witness = Witness{matrix_from_json(require_field(w, "rho")), matrix_from_json(require_field(w, "a")),
                          matrix_from_json(require_field(w, "b"))};
    }
    return r;
  } catch (const json::exception& e) {
    throw FormatError(std::string("trial record: ") + e.what());
  }
}

std::string aggregate_to_json(const TrialAggregate& a) {
  std::string dims = "[";
  for (std::size_t k = 0; k < a.dims.size(); ++k) dims += (k ? "," : "") + std::to_string(a.dims[k]);
  dims += ']';
  return "{\"target\":" + json_quote(to_string(a.target)) + ",\"region\":" + json_quote(to_string(a.region)) +
         ",\"seed\":" + std::to_string(a.seed) + ",\"dims\":" + dims +
         ",\"trials\":" + std::to_string(a.trials) + ",\"violations\":" + std::to_string(a.violations) +
         ",\"min_slack\":" + format_double(a.min_slack) +
         ",\"min_relative_slack\":" + format_double(a.min_relative_slack) +
         ",\"worst\":" + (a.worst ? trial_record_to_json(*a.worst) : std::string("null")) + '}';
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string s(kSweepHeader);
  s += '\n';
  for (const SweepRow& r : rows) {
    s += format_double(r.alpha) + ',' + format_double(r.beta) + ',' + std::string(to_string(r.region)) + ',' +
         std::to_string(r.trials) + ',' + format_double(r.min_slack) + ',' + format_double(r.mean_slack) +
         ',' + std::to_string(r.violations) + '\n';
  }
  return s;
}

std::string scalar_suite_to_json(const std::vector<ScalarSummary>& rows) {
  std::size_t total = 0;
  std::string s = "{\"checks\":[";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const ScalarSummary& r = rows[k];
    total += r.violations;
    s += (k ? "," : "");
    s += "{\"name\":" + json_quote(r.name) + ",\"evaluations\":" + std::to_string(r.evaluations) +
         ",\"violations\":" + std::to_string(r.violations) + ",\"extreme\":" + format_double(r.extreme) + '}';
  }
  return s + "],\"violations\":" + std::to_string(total) + '}';
}

void write_output(const std::string& content, const std::filesystem::path& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw FormatError("cannot write " + path.string());
  file << content;
  if (!file) throw FormatError("write failed for " + path.string());
}

}  // namespace skewlab::io
