#include "princebart/data_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "princebart/errors.hpp"

namespace princebart {

std::string to_string(ColumnRole role) {
  switch (role) {
    case ColumnRole::kAssignment: return "assignment";
    case ColumnRole::kTreatment: return "treatment";
    case ColumnRole::kOutcome: return "outcome";
    case ColumnRole::kCovariate: return "covariate";
  }
  return "covariate";
}

std::string to_string(ColumnKind kind) {
  switch (kind) {
    case ColumnKind::kBinary: return "binary";
    case ColumnKind::kOrdinal: return "ordinal";
    case ColumnKind::kContinuous: return "continuous";
    case ColumnKind::kCategorical: return "categorical";
  }
  return "continuous";
}

ColumnRole column_role_from_string(const std::string& s) {
  if (s == "assignment") return ColumnRole::kAssignment;
  if (s == "treatment") return ColumnRole::kTreatment;
  if (s == "outcome") return ColumnRole::kOutcome;
  if (s == "covariate") return ColumnRole::kCovariate;
  throw DataError("unknown column role '" + s + "'");
}

ColumnKind column_kind_from_string(const std::string& s) {
  if (s == "binary") return ColumnKind::kBinary;
  if (s == "ordinal") return ColumnKind::kOrdinal;
  if (s == "continuous") return ColumnKind::kContinuous;
  if (s == "categorical") return ColumnKind::kCategorical;
  throw DataError("unknown column kind '" + s + "'");
}

int Dataset::covariate_index(const std::string& name) const {
  for (std::size_t j = 0; j < specs_.size(); ++j) {
    if (specs_[j].name == name) return static_cast<int>(j);
  }
  return -1;
}

Dataset Dataset::from_parts(std::vector<ColumnSpec> specs,
                            std::vector<std::string> source_names,
                            std::vector<double> x_col_major,
                            std::vector<std::uint8_t> z,
                            std::vector<std::uint8_t> w,
                            std::vector<std::uint8_t> y) {
  Dataset d;
  d.n_ = z.size();
  if (d.n_ == 0) throw DataError("dataset has no rows");
  if (specs.empty()) throw DataError("dataset has no covariates");
  if (x_col_major.size() != specs.size() * d.n_ || w.size() != d.n_ ||
      y.size() != d.n_) {
    throw DataError("dataset parts have inconsistent sizes");
  }
  if (source_names.empty()) {
    for (const auto& s : specs) source_names.push_back(s.name);
  }
  d.specs_ = std::move(specs);
  d.source_ = std::move(source_names);
  d.x_ = std::move(x_col_major);
  d.z_ = std::move(z);
  d.w_ = std::move(w);
  d.y_ = std::move(y);
  d.transforms_.assign(d.specs_.size(), ColumnTransform{});
  return d;
}

Dataset Dataset::with_extra_column(const std::string& name,
                                   std::span<const double> values) const {
  if (values.size() != n_) throw DataError("extra column length mismatch");
  Dataset d = *this;
  d.specs_.push_back({name, ColumnRole::kCovariate, ColumnKind::kContinuous});
  d.source_.push_back(name);
  d.transforms_.push_back(ColumnTransform{});
  d.x_.insert(d.x_.end(), values.begin(), values.end());
  return d;
}

Dataset Dataset::subset_rows(const std::vector<std::uint8_t>& keep) const {
  if (keep.size() != n_) throw DataError("subset mask length mismatch");
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < n_; ++i) {
    if (keep[i]) rows.push_back(i);
  }
  if (rows.empty()) throw DataError("subset removes every row");
  Dataset d;
  d.n_ = rows.size();
  d.specs_ = specs_;
  d.source_ = source_;
  d.transforms_ = transforms_;
  d.x_.resize(specs_.size() * rows.size());
  for (std::size_t j = 0; j < specs_.size(); ++j) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      d.x_[j * rows.size() + i] = x_[j * n_ + rows[i]];
    }
  }
  auto pick = [&](const std::vector<std::uint8_t>& src) {
    std::vector<std::uint8_t> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) out[i] = src[rows[i]];
    return out;
  };
  d.z_ = pick(z_);
  d.w_ = pick(w_);
  d.y_ = pick(y_);
  return d;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (const char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  out.push_back(field);
  for (auto& f : out) {
    const auto b = f.find_first_not_of(" \t");
    const auto e = f.find_last_not_of(" \t");
    f = (b == std::string::npos) ? std::string() : f.substr(b, e - b + 1);
  }
  return out;
}

bool parse_number(const std::string& s, double* out) {
  if (s.empty()) return false;
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + s.size() || !std::isfinite(v)) return false;
  *out = v;
  return true;
}

bool is_missing(const std::string& s) {
  return s.empty() || s == "NA" || s == "na" || s == "NaN" || s == "nan";
}

std::string cell_ref(std::size_t data_row, const std::string& col) {
  // data_row is zero-based over data rows; report the 1-based file line
  // (header is line 1).
  std::ostringstream os;
  os << "row " << (data_row + 2) << ", column '" << col << "'";
  return os.str();
}

}  // namespace

Dataset ingest_csv(const std::string& path,
                   const std::vector<ColumnSpec>& specs) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open data file '" + path + "'");

  std::string line;
  if (!std::getline(in, line)) throw DataError("empty data file '" + path + "'");
  const std::vector<std::string> header = split_csv_line(line);

  int z_spec = -1, w_spec = -1, y_spec = -1;
  std::vector<int> file_col(specs.size(), -1);
  for (std::size_t s = 0; s < specs.size(); ++s) {
    for (std::size_t h = 0; h < header.size(); ++h) {
      if (header[h] == specs[s].name) {
        file_col[s] = static_cast<int>(h);
        break;
      }
    }
    if (file_col[s] < 0) {
      throw DataError("missing column '" + specs[s].name + "' in '" + path +
                      "'");
    }
    switch (specs[s].role) {
      case ColumnRole::kAssignment:
        if (z_spec >= 0) throw DataError("duplicate assignment column");
        z_spec = static_cast<int>(s);
        break;
      case ColumnRole::kTreatment:
        if (w_spec >= 0) throw DataError("duplicate treatment column");
        w_spec = static_cast<int>(s);
        break;
      case ColumnRole::kOutcome:
        if (y_spec >= 0) throw DataError("duplicate outcome column");
        y_spec = static_cast<int>(s);
        break;
      case ColumnRole::kCovariate:
        break;
    }
  }
  if (z_spec < 0 || w_spec < 0 || y_spec < 0) {
    throw DataError("column specs must name one assignment, one treatment, "
                    "and one outcome column");
  }

  // First pass: raw cells for the spec'd columns.
  std::vector<std::vector<std::string>> raw(specs.size());
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      std::ostringstream os;
      os << "row " << (row + 2) << " has " << fields.size()
         << " fields, expected " << header.size();
      throw DataError(os.str());
    }
    for (std::size_t s = 0; s < specs.size(); ++s) {
      const std::string& cell = fields[file_col[s]];
      if (is_missing(cell)) {
        throw DataError("missing value at " + cell_ref(row, specs[s].name));
      }
      raw[s].push_back(cell);
    }
    ++row;
  }
  if (row == 0) throw DataError("no data rows in '" + path + "'");
  const std::size_t n = row;

  auto parse_binary_col = [&](int s) {
    std::vector<std::uint8_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      double v = 0.0;
      if (!parse_number(raw[s][i], &v) || (v != 0.0 && v != 1.0)) {
        throw DataError("value '" + raw[s][i] + "' at " +
                        cell_ref(i, specs[s].name) + " is not 0/1");
      }
      out[i] = static_cast<std::uint8_t>(v);
    }
    return out;
  };

  std::vector<std::uint8_t> z = parse_binary_col(z_spec);
  std::vector<std::uint8_t> w = parse_binary_col(w_spec);
  std::vector<std::uint8_t> y = parse_binary_col(y_spec);

  // Second pass: covariates, expanding categoricals in spec order.
  std::vector<ColumnSpec> out_specs;
  std::vector<std::string> out_source;
  std::vector<std::vector<double>> out_cols;
  for (std::size_t s = 0; s < specs.size(); ++s) {
    if (specs[s].role != ColumnRole::kCovariate) continue;
    if (specs[s].kind == ColumnKind::kCategorical) {
      std::vector<std::string> levels = raw[s];
      std::sort(levels.begin(), levels.end());
      levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
      // Numeric-aware level order when every level parses as a number.
      std::vector<double> numeric(levels.size());
      bool all_numeric = true;
      for (std::size_t l = 0; l < levels.size(); ++l) {
        all_numeric = all_numeric && parse_number(levels[l], &numeric[l]);
      }
      if (all_numeric) {
        std::vector<std::size_t> order(levels.size());
        for (std::size_t l = 0; l < order.size(); ++l) order[l] = l;
        std::sort(order.begin(), order.end(), [&](std::size_t a,
                                                  std::size_t b) {
          return numeric[a] < numeric[b];
        });
        std::vector<std::string> sorted;
        for (const std::size_t l : order) sorted.push_back(levels[l]);
        levels = std::move(sorted);
      }
      if (levels.size() < 2) {
        throw DataError("categorical column '" + specs[s].name +
                        "' has a single level");
      }
      for (std::size_t l = 1; l < levels.size(); ++l) {  // drop reference
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i) {
          col[i] = (raw[s][i] == levels[l]) ? 1.0 : 0.0;
        }
        out_specs.push_back({specs[s].name + "=" + levels[l],
                             ColumnRole::kCovariate, ColumnKind::kBinary});
        out_source.push_back(specs[s].name);
        out_cols.push_back(std::move(col));
      }
      continue;
    }
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!parse_number(raw[s][i], &col[i])) {
        throw DataError("value '" + raw[s][i] + "' at " +
                        cell_ref(i, specs[s].name) + " is not numeric");
      }
      if (specs[s].kind == ColumnKind::kBinary && col[i] != 0.0 &&
          col[i] != 1.0) {
        throw DataError("value '" + raw[s][i] + "' at " +
                        cell_ref(i, specs[s].name) + " is not 0/1");
      }
    }
    out_specs.push_back(specs[s]);
    out_source.push_back(specs[s].name);
    out_cols.push_back(std::move(col));
  }
  if (out_specs.empty()) throw DataError("no covariate columns in spec");

  std::vector<double> x;
  x.reserve(out_specs.size() * n);
  for (const auto& col : out_cols) x.insert(x.end(), col.begin(), col.end());

  return Dataset::from_parts(std::move(out_specs), std::move(out_source),
                             std::move(x), std::move(z), std::move(w),
                             std::move(y));
}

Dataset standardize_covariates(const Dataset& d) {
  Dataset out = d;
  for (std::size_t j = 0; j < d.p(); ++j) {
    if (d.covariate_specs()[j].kind != ColumnKind::kContinuous) continue;
    double* col = out.x_.data() + j * d.n();
    double mean = 0.0;
    for (std::size_t i = 0; i < d.n(); ++i) mean += col[i];
    mean /= static_cast<double>(d.n());
    double var = 0.0;
    for (std::size_t i = 0; i < d.n(); ++i) {
      var += (col[i] - mean) * (col[i] - mean);
    }
    var /= static_cast<double>(d.n());
    if (var <= 0.0) {
      out.warnings_.push_back("covariate '" + d.covariate_specs()[j].name +
                              "' has zero variance; left unstandardized");
      continue;
    }
    const double sd = std::sqrt(var);
    // Already-standardized columns are an exact fixed point.
    if (std::fabs(mean) <= 1e-12 && std::fabs(sd - 1.0) <= 1e-12) continue;
    for (std::size_t i = 0; i < d.n(); ++i) col[i] = (col[i] - mean) / sd;
    auto& t = out.transforms_[j];
    // Compose with any prior transform so standardize() is idempotent.
    t.mean = t.applied ? t.mean + mean * t.sd : mean;
    t.sd = t.applied ? t.sd * sd : sd;
    t.applied = true;
  }
  return out;
}

void write_csv(const Dataset& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  for (std::size_t j = 0; j < d.p(); ++j) {
    out << d.covariate_specs()[j].name << ',';
  }
  out << "z,w,y\n";
  char buf[40];
  for (std::size_t i = 0; i < d.n(); ++i) {
    for (std::size_t j = 0; j < d.p(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", d.value(i, j));
      out << buf << ',';
    }
    out << int(d.z()[i]) << ',' << int(d.w()[i]) << ',' << int(d.y()[i])
        << '\n';
  }
}

std::vector<ColumnSpec> roundtrip_specs(const Dataset& d) {
  std::vector<ColumnSpec> specs = d.covariate_specs();
  specs.push_back({"z", ColumnRole::kAssignment, ColumnKind::kBinary});
  specs.push_back({"w", ColumnRole::kTreatment, ColumnKind::kBinary});
  specs.push_back({"y", ColumnRole::kOutcome, ColumnKind::kBinary});
  return specs;
}

void RunConfig::validate() const {
  if (chains < 1) throw UsageError("chains must be >= 1");
  if (iterations < 1) throw UsageError("iterations must be >= 1");
  if (burn_in < 0 || burn_in >= iterations) {
    throw UsageError("burn_in must satisfy 0 <= burn_in < iterations");
  }
  if (trees < 1) throw UsageError("trees must be >= 1");
  if (!(k > 0.0)) throw UsageError("k must be positive");
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw UsageError("alpha must lie in (0,1)");
  }
  if (beta < 0.0) throw UsageError("beta must be nonnegative");
  if (!(prior_scale > 0.0)) throw UsageError("prior_scale must be positive");
}

}  // namespace princebart
