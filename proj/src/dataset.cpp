#include "rio/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rio/errors.hpp"
#include "rio/rng.hpp"

namespace rio {

namespace {

bool parse_double(std::string_view token, double* out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, *out);
  return ec == std::errc{} && ptr == last;
}

std::string trim(std::string s) {
  const auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

std::vector<std::string> split_fields(const std::string& line, char delim) {
  std::vector<std::string> out;
  if (delim == ' ') {
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
  }
  std::string tok;
  std::istringstream is(line);
  while (std::getline(is, tok, delim)) out.push_back(trim(tok));
  return out;
}

char detect_delimiter(const std::string& header) {
  if (header.find(';') != std::string::npos) return ';';
  if (header.find(',') != std::string::npos) return ',';
  return ' ';
}

}  // namespace

void Dataset::validate() const {
  if (features.rows() < 2) throw DataError("dataset needs at least 2 rows, got " + std::to_string(features.rows()));
  if (features.cols() < 1) throw DataError("dataset needs at least 1 feature column");
  if (targets.size() != features.rows()) throw DataError("targets length does not match feature row count");
  if (!features.allFinite() || !targets.allFinite()) throw DataError("dataset contains non-finite values");
  if (static_cast<Eigen::Index>(feature_names.size()) != features.cols())
    throw DataError("feature name count does not match feature columns");
}

Dataset load_dataset(const std::string& path, const std::string& target_column) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw DataError("empty dataset file: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const char delim = detect_delimiter(line);
  std::vector<std::string> names = split_fields(line, delim);
  if (names.empty()) throw DataError("header row has no columns: " + path);

  // Resolve the target column: by name first, then as a 0-based index.
  Eigen::Index target_idx = -1;
  for (std::size_t j = 0; j < names.size(); ++j)
    if (names[j] == target_column) target_idx = static_cast<Eigen::Index>(j);
  if (target_idx < 0) {
    double as_num = 0.0;
    if (parse_double(target_column, &as_num) && as_num == std::floor(as_num) &&
        as_num >= 0 && as_num < static_cast<double>(names.size()))
      target_idx = static_cast<Eigen::Index>(as_num);
  }
  if (target_idx < 0)
    throw DataError("target column '" + target_column + "' not found in " + path);

  const std::size_t ncols = names.size();
  std::vector<std::vector<double>> rows;
  std::size_t data_row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    ++data_row;
    std::vector<std::string> fields = split_fields(line, delim);
    if (fields.size() != ncols)
      throw DataError("row " + std::to_string(data_row) + " has " +
                      std::to_string(fields.size()) + " fields, expected " +
                      std::to_string(ncols) + " in " + path);
    std::vector<double> vals(ncols);
    for (std::size_t j = 0; j < ncols; ++j) {
      if (!parse_double(fields[j], &vals[j]))
        throw DataError("non-numeric value '" + fields[j] + "' at row " +
                        std::to_string(data_row) + ", column '" + names[j] +
                        "' in " + path);
      if (!std::isfinite(vals[j]))
        throw DataError("non-finite value at row " + std::to_string(data_row) +
                        ", column '" + names[j] + "' in " + path);
    }
    rows.push_back(std::move(vals));
  }

  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  if (n < 2) throw DataError("dataset needs at least 2 rows, got " + std::to_string(n) + " in " + path);
  if (ncols < 2) throw DataError("dataset needs at least one feature besides the target: " + path);

  Dataset ds;
  ds.name = path;
  ds.features.resize(n, static_cast<Eigen::Index>(ncols) - 1);
  ds.targets.resize(n);
  for (std::size_t j = 0; j < ncols; ++j)
    if (static_cast<Eigen::Index>(j) != target_idx) ds.feature_names.push_back(names[j]);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index c = 0;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (static_cast<Eigen::Index>(j) == target_idx)
        ds.targets[i] = rows[i][j];
      else
        ds.features(i, c++) = rows[i][j];
    }
  }
  ds.validate();
  return ds;
}

SplitIndices split(Eigen::Index n, std::uint64_t seed, double test_frac, double val_frac) {
  if (!(test_frac > 0.0 && test_frac < 1.0))
    throw DataError("test fraction must be in (0,1), got " + std::to_string(test_frac));
  if (!(val_frac >= 0.0 && val_frac < 1.0))
    throw DataError("validation fraction must be in [0,1), got " + std::to_string(val_frac));

  const Eigen::Index n_test = static_cast<Eigen::Index>(std::lround(static_cast<double>(n) * test_frac));
  const Eigen::Index n_rest = n - n_test;
  const Eigen::Index n_val = static_cast<Eigen::Index>(std::lround(static_cast<double>(n_rest) * val_frac));
  const Eigen::Index n_train = n_rest - n_val;
  if (n_test <= 0 || n_val <= 0 || n_train <= 0)
    throw DataError("split produced an empty part (train=" + std::to_string(n_train) +
                    ", val=" + std::to_string(n_val) + ", test=" + std::to_string(n_test) + ")");

  Rng rng(seed);
  const std::vector<std::size_t> perm = rng.permutation(static_cast<std::size_t>(n));

  SplitIndices s;
  s.seed = seed;
  s.test.reserve(n_test);
  s.validation.reserve(n_val);
  s.train.reserve(n_train);
  for (Eigen::Index i = 0; i < n_test; ++i) s.test.push_back(static_cast<Eigen::Index>(perm[i]));
  for (Eigen::Index i = n_test; i < n_test + n_val; ++i) s.validation.push_back(static_cast<Eigen::Index>(perm[i]));
  for (Eigen::Index i = n_test + n_val; i < n; ++i) s.train.push_back(static_cast<Eigen::Index>(perm[i]));
  return s;
}

Standardizer::Standardizer(Eigen::VectorXd means, Eigen::VectorXd stddevs)
    : means_(std::move(means)), stddevs_(std::move(stddevs)) {
  for (Eigen::Index j = 0; j < stddevs_.size(); ++j)
    if (!(stddevs_[j] > 0.0)) throw DataError("standardizer stddev must be positive");
}

Standardizer Standardizer::fit(const Eigen::MatrixXd& features,
                               const std::vector<Eigen::Index>& rows) {
  return fit(detail::select_rows(features, rows));
}

Standardizer Standardizer::fit(const Eigen::MatrixXd& features) {
  const Eigen::Index n = features.rows();
  if (n < 2) throw DataError("standardizer needs at least 2 rows");
  Standardizer s;
  s.means_ = features.colwise().mean();
  s.stddevs_.resize(features.cols());
  for (Eigen::Index j = 0; j < features.cols(); ++j) {
    const double var = (features.col(j).array() - s.means_[j]).square().mean();
    double sd = std::sqrt(var);
    if (sd <= 1e-14 * std::max(1.0, std::abs(s.means_[j]))) sd = 1.0;  // constant column
    s.stddevs_[j] = sd;
  }
  return s;
}

Eigen::MatrixXd Standardizer::transform(const Eigen::MatrixXd& features) const {
  if (features.cols() != means_.size()) throw DataError("standardizer dimension mismatch");
  return (features.rowwise() - means_.transpose()).array().rowwise() /
         stddevs_.transpose().array();
}

Eigen::VectorXd Standardizer::transform_row(const Eigen::VectorXd& row) const {
  if (row.size() != means_.size()) throw DataError("standardizer dimension mismatch");
  return (row - means_).cwiseQuotient(stddevs_);
}

Eigen::MatrixXd Standardizer::inverse_transform(const Eigen::MatrixXd& features) const {
  if (features.cols() != means_.size()) throw DataError("standardizer dimension mismatch");
  return (features.array().rowwise() * stddevs_.transpose().array()).rowwise() +
         means_.transpose().array();
}

Eigen::VectorXd load_predictions(const std::string& path, Eigen::Index expected_n) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open prediction file: " + path);
  std::vector<double> vals;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    line = trim(line);
    if (line.empty()) continue;
    double v = 0.0;
    if (!parse_double(line, &v)) {
      if (first) { first = false; continue; }  // optional header
      throw DataError("non-numeric prediction '" + line + "' in " + path);
    }
    first = false;
    if (!std::isfinite(v)) throw DataError("non-finite prediction in " + path);
    vals.push_back(v);
  }
  if (static_cast<Eigen::Index>(vals.size()) != expected_n)
    throw DataError("prediction file " + path + " has " + std::to_string(vals.size()) +
                    " rows, expected " + std::to_string(expected_n));
  return Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<Eigen::Index>(vals.size()));
}

void save_predictions(const std::string& path, const Eigen::VectorXd& values) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write prediction file: " + path);
  out.precision(17);
  for (Eigen::Index i = 0; i < values.size(); ++i) out << values[i] << "\n";
}

namespace detail {

Eigen::MatrixXd select_rows(const Eigen::MatrixXd& m, const std::vector<Eigen::Index>& rows) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = m.row(rows[i]);
  return out;
}

Eigen::VectorXd select(const Eigen::VectorXd& v, const std::vector<Eigen::Index>& rows) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[rows[i]];
  return out;
}

}  // namespace detail

}  // namespace rio
