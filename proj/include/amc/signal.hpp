#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "amc/modclass.hpp"

namespace amc {

inline constexpr double kProtocolSnrMinDb = -10.0;
inline constexpr double kProtocolSnrMaxDb = 10.0;

// Sentinel used by report tables for the noiseless condition.
inline constexpr double kNoiselessSentinelDb = 100.0;

// Target channel condition. Noiseless is distinct from "very high SNR": no
// noise is injected at all.
class SnrSpec {
 public:
  static SnrSpec noiseless() { return SnrSpec(std::nullopt); }
  static SnrSpec db(double target) { return SnrSpec(target); }

  bool is_noiseless() const { return !target_db_.has_value(); }

  double target_db() const {
    if (!target_db_) throw std::logic_error("SnrSpec: noiseless has no target dB");
    return *target_db_;
  }

  // Value used in report tables: the target dB, or 100 for noiseless.
  double report_value() const {
    return is_noiseless() ? kNoiselessSentinelDb : *target_db_;
  }

  // Dataset protocol conformance range; out-of-range targets are legal but
  // worth a warning.
  bool within_protocol_range() const {
    return is_noiseless() ||
           (*target_db_ >= kProtocolSnrMinDb && *target_db_ <= kProtocolSnrMaxDb);
  }

  friend bool operator==(const SnrSpec&, const SnrSpec&) = default;

 private:
  explicit SnrSpec(std::optional<double> t) : target_db_(t) {}
  std::optional<double> target_db_;
};

struct ComplexSignal {
  std::vector<std::complex<double>> samples;
  ModClass label = ModClass::Ask4;
  SnrSpec snr = SnrSpec::noiseless();
  std::uint64_t seed = 0;

  std::size_t n() const { return samples.size(); }
};

enum class Split { exemplar, test };

std::string_view to_string(Split s);
Split split_from_string(std::string_view s);

struct SignalRecord {
  ComplexSignal signal;
  Split split = Split::test;
};

}  // namespace amc
