#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

namespace rio {

/// A fully loaded regression table: n x d features plus a length-n target.
struct Dataset {
  Eigen::MatrixXd features;
  Eigen::VectorXd targets;
  std::vector<std::string> feature_names;
  std::string name;

  Eigen::Index n() const { return features.rows(); }
  Eigen::Index dim() const { return features.cols(); }

  /// Throws DataError unless n >= 2, d >= 1, all values finite and aligned.
  void validate() const;
};

/// Disjoint train/validation/test index partition of 0..n-1.
struct SplitIndices {
  std::vector<Eigen::Index> train;
  std::vector<Eigen::Index> validation;
  std::vector<Eigen::Index> test;
  std::uint64_t seed = 0;
};

/// Per-column affine map fitted on training rows only. Population (divide by
/// n) standard deviation; constant columns keep stddev 1 so the transform is
/// a pure shift.
class Standardizer {
 public:
  Standardizer() = default;
  Standardizer(Eigen::VectorXd means, Eigen::VectorXd stddevs);

  static Standardizer fit(const Eigen::MatrixXd& features,
                          const std::vector<Eigen::Index>& rows);
  /// Fit on all rows.
  static Standardizer fit(const Eigen::MatrixXd& features);

  Eigen::MatrixXd transform(const Eigen::MatrixXd& features) const;
  Eigen::VectorXd transform_row(const Eigen::VectorXd& row) const;
  Eigen::MatrixXd inverse_transform(const Eigen::MatrixXd& features) const;

  const Eigen::VectorXd& means() const { return means_; }
  const Eigen::VectorXd& stddevs() const { return stddevs_; }
  Eigen::Index dim() const { return means_.size(); }

 private:
  Eigen::VectorXd means_;
  Eigen::VectorXd stddevs_;
};

/// Loads a delimited numeric table (header row required; delimiter
/// auto-detected among comma/semicolon/whitespace). The target column is
/// named or given as a 0-based index and is removed from the features.
Dataset load_dataset(const std::string& path, const std::string& target_column);

/// Deterministic split: |test| = round(n*test_frac), |validation| =
/// round(remaining*val_frac), rest train. All three parts must be non-empty.
SplitIndices split(Eigen::Index n, std::uint64_t seed, double test_frac,
                   double val_frac);

/// Single numeric column (optional header), exactly expected_n finite rows.
Eigen::VectorXd load_predictions(const std::string& path, Eigen::Index expected_n);

/// Writes one value per line at full round-trip precision.
void save_predictions(const std::string& path, const Eigen::VectorXd& values);

namespace detail {
/// Rows of `m` selected by `rows`, in order.
Eigen::MatrixXd select_rows(const Eigen::MatrixXd& m,
                            const std::vector<Eigen::Index>& rows);
Eigen::VectorXd select(const Eigen::VectorXd& v,
                       const std::vector<Eigen::Index>& rows);
}  // namespace detail

}  // namespace rio
