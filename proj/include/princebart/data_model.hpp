#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace princebart {

enum class ColumnRole { kAssignment, kTreatment, kOutcome, kCovariate };
enum class ColumnKind { kBinary, kOrdinal, kContinuous, kCategorical };

std::string to_string(ColumnRole role);
std::string to_string(ColumnKind kind);
ColumnRole column_role_from_string(const std::string& s);
ColumnKind column_kind_from_string(const std::string& s);

struct ColumnSpec {
  std::string name;
  ColumnRole role = ColumnRole::kCovariate;
  ColumnKind kind = ColumnKind::kContinuous;
};

// Optional standardization transform recorded per covariate column.
struct ColumnTransform {
  bool applied = false;
  double mean = 0.0;
  double sd = 1.0;  // population scale
};

// Immutable after ingestion; shared read-only across chains. Covariates are
// stored column-major. Categorical inputs arrive already expanded to
// indicator columns (reference level dropped), so every stored column is
// numeric.
class Dataset {
 public:
  std::size_t n() const { return n_; }
  std::size_t p() const { return specs_.size(); }

  std::span<const double> covariate(std::size_t j) const {
    return {x_.data() + j * n_, n_};
  }
  double value(std::size_t row, std::size_t col) const {
    return x_[col * n_ + row];
  }

  const std::vector<std::uint8_t>& z() const { return z_; }
  const std::vector<std::uint8_t>& w() const { return w_; }
  const std::vector<std::uint8_t>& y() const { return y_; }

  const std::vector<ColumnSpec>& covariate_specs() const { return specs_; }
  // Pre-expansion covariate name a column derives from (equal to the column
  // name except for categorical indicators).
  const std::vector<std::string>& source_names() const { return source_; }
  const std::vector<ColumnTransform>& transforms() const {
    return transforms_;
  }
  const std::vector<std::string>& warnings() const { return warnings_; }

  int covariate_index(const std::string& name) const;  // -1 when absent

  // Returns a copy with an extra continuous covariate column appended.
  Dataset with_extra_column(const std::string& name,
                            std::span<const double> values) const;
  // Returns a copy restricted to the rows where keep[i] != 0.
  Dataset subset_rows(const std::vector<std::uint8_t>& keep) const;

  static Dataset from_parts(std::vector<ColumnSpec> specs,
                            std::vector<std::string> source_names,
                            std::vector<double> x_col_major,
                            std::vector<std::uint8_t> z,
                            std::vector<std::uint8_t> w,
                            std::vector<std::uint8_t> y);

 private:
  friend Dataset standardize_covariates(const Dataset& d);

  std::size_t n_ = 0;
  std::vector<double> x_;  // column-major, p * n
  std::vector<std::uint8_t> z_, w_, y_;
  std::vector<ColumnSpec> specs_;
  std::vector<std::string> source_;
  std::vector<ColumnTransform> transforms_;
  std::vector<std::string> warnings_;
};

// Reads a header CSV and validates it against the supplied column specs.
// Categorical covariates are expanded to indicators with the first level
// (after numeric-aware level sort) dropped. Any missing cell, missing
// column, non-binary z/w/y value, or unparseable numeric is rejected with a
// message naming the row and column.
Dataset ingest_csv(const std::string& path,
                   const std::vector<ColumnSpec>& specs);

// Centers and scales continuous covariate columns in-place on a copy,
// recording the transform. Binary, indicator, and ordinal columns are left
// untouched. Zero-variance continuous columns are left untouched and
// reported in the warning list. Idempotent.
Dataset standardize_covariates(const Dataset& d);

// Writes the dataset back out with its post-expansion columns; re-ingesting
// the result with derived specs reproduces the dataset exactly.
void write_csv(const Dataset& d, const std::string& path);
std::vector<ColumnSpec> roundtrip_specs(const Dataset& d);

enum class Backend { kBart, kLinear };
enum class Dependence { kIndependent, kDependent };
enum class LinkFunction { kProbit, kLogistic };

struct RunConfig {
  int chains = 20;
  int iterations = 250;
  int burn_in = 100;
  int trees = 200;
  double k = 2.0;
  double alpha = 0.95;
  double beta = 2.0;
  std::uint64_t seed = 1;
  Backend backend = Backend::kBart;
  Dependence dependence = Dependence::kIndependent;

  // Comparator options.
  LinkFunction link = LinkFunction::kProbit;
  double prior_scale = 2.5;

  int threads = 0;  // 0 = hardware concurrency
  // Per-unit draw matrices (needed for posterior bands on discovered
  // segments) are kept only while draws * units stays under this bound.
  std::size_t retain_max_cells = 20'000'000;

  int retained() const { return iterations - burn_in; }
  void validate() const;  // throws UsageError
};

}  // namespace princebart
