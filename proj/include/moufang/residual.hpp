#ifndef MOUFANG_RESIDUAL_HPP
#define MOUFANG_RESIDUAL_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace moufang {

/// Outcome of checking one identity over a sample campaign.
/// Invariant: pass <=> max_residual <= tolerance.
struct ResidualRecord {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::int64_t samples = 0;
  bool pass = true;

  static ResidualRecord make(std::string name, double max_residual, double tolerance,
                             std::int64_t samples) {
    ResidualRecord r;
    r.name = std::move(name);
    r.max_residual = max_residual;
    r.tolerance = tolerance;
    r.samples = samples;
    r.pass = max_residual <= tolerance;
    return r;
  }
};

/// Running maximum plus sample count; merge is max-of-maxima.
class ResidualAccumulator {
public:
  explicit ResidualAccumulator(std::string name, double tolerance)
      : name_(std::move(name)), tolerance_(tolerance) {}

  void observe(double residual) {
    max_ = std::max(max_, residual);
    ++count_;
  }

  void observe_batch(double residual, std::int64_t n) {
    max_ = std::max(max_, residual);
    count_ += n;
  }

  ResidualRecord finish() const {
    return ResidualRecord::make(name_, max_, tolerance_, count_);
  }

  double current_max() const { return max_; }

private:
  std::string name_;
  double tolerance_;
  double max_ = 0.0;
  std::int64_t count_ = 0;
};

inline bool all_pass(const std::vector<ResidualRecord>& records) {
  return std::all_of(records.begin(), records.end(),
                     [](const ResidualRecord& r) { return r.pass; });
}

}

#endif
