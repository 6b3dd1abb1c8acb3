#ifndef CATKIT_SWEEP_HPP
#define CATKIT_SWEEP_HPP

#include <string>
#include <utility>
#include <vector>

namespace catkit {

/// Formats a double with 17 significant digits ('.' decimal, no locale).
std::string format_full(double v);

/// Labeled table of parameter tuples -> observables. CSV bodies are
/// byte-stable across runs; metadata (which may carry a timestamp) is kept
/// out of the body.
class SweepResult {
 public:
  explicit SweepResult(std::vector<std::string> columns);

  void add_row(std::vector<double> row);
  void add_metadata(const std::string& key, const std::string& value);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& metadata() const {
    return metadata_;
  }

  /// Header + data rows, LF line endings, 17 significant digits.
  std::string body_csv() const;
  /// '#'-prefixed metadata lines followed by the body.
  std::string to_csv() const;
  /// Numbers serialized as decimal strings at full precision.
  std::string to_json() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::pair<std::string, std::string>> metadata_;
};

}  // namespace catkit

#endif
