#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "amc/rng.hpp"
#include "amc/signal.hpp"

namespace amc {

// Amplitude-level convention for the ASK classes. `unipolar` places the
// levels at {1, 3, ..., 2M-1}, which keeps ASK statistically separable from
// the bipolar PAM classes (a signed level set for 8ASK would coincide with
// the 16PAM constellation). `bipolar` folds ASK onto the PAM convention.
enum class AskLevels { unipolar, bipolar };

std::string_view to_string(AskLevels a);
AskLevels ask_levels_from_string(std::string_view s);

struct WaveformConfig {
  int samples_per_symbol = 8;
  // Root-raised-cosine shaping for the linearly modulated classes.
  double rrc_rolloff = 0.35;
  int rrc_span_symbols = 8;  // total taps = span * sps + 1
  // Frequency-modulated classes.
  double cpfsk_mod_index = 0.5;
  double gfsk_bt = 0.35;
  double gfsk_mod_index = 1.0;
  double gmsk_bt = 0.3;  // GMSK modulation index fixed at 0.5 (minimum shift)
  AskLevels ask_levels = AskLevels::unipolar;

  friend bool operator==(const WaveformConfig&, const WaveformConfig&) = default;
};

// True for the classes shaped by the RRC filter (ASK/PAM/OOK/DQPSK/OQPSK);
// false for the constant-envelope FM classes (CPFSK/GFSK/GMSK).
bool is_linear_class(ModClass c);

// Pre-pulse-shaping symbol alphabet, normalized to unit average power.
// FM classes report their binary +-1 frequency alphabet.
std::vector<std::complex<double>> constellation(ModClass c,
                                                const WaveformConfig& cfg = {});

// The symbol sequence fed to the pulse-shaping filter (linear classes) or to
// the phase modulator (FM classes). DQPSK output is differentially encoded.
std::vector<std::complex<double>> draw_symbols(ModClass c, std::size_t count,
                                               Rng& rng,
                                               const WaveformConfig& cfg = {});

// Deterministic in (class, snr, n, seed, cfg). The clean waveform is
// normalized to unit average power; injected noise is rescaled so that its
// measured power equals clean_power * 10^(-target/10) exactly, which makes
// measure_snr() against the noiseless twin reproduce the target.
ComplexSignal generate(ModClass c, SnrSpec snr, std::size_t n, std::uint64_t seed,
                       const WaveformConfig& cfg = {});

// 10*log10(P_signal / P_noise) with P_noise taken from (noisy - clean).
// Returns +infinity when the two waveforms are identical.
double measure_snr(const ComplexSignal& clean, const ComplexSignal& noisy);

struct SnrCondition {
  bool noiseless = true;
  double low = kProtocolSnrMinDb;
  double high = kProtocolSnrMaxDb;

  static SnrCondition make_noiseless() { return {}; }
  static SnrCondition uniform(double lo, double hi) { return {false, lo, hi}; }

  friend bool operator==(const SnrCondition&, const SnrCondition&) = default;
};

struct DatasetProtocol {
  int test_count = 2000;         // must divide evenly over the 10 classes
  int exemplars_per_class = 2;   // 20 context samples at defaults
  SnrCondition snr;              // noiseless, or per-record uniform draw
  std::uint64_t master_seed = 42;
  std::size_t samples_per_signal = 1024;
  WaveformConfig waveform;

  // Non-fatal protocol issues (e.g. SNR range outside [-10, 10] dB).
  std::vector<std::string> warnings() const;

  friend bool operator==(const DatasetProtocol&, const DatasetProtocol&) = default;
};

// Exemplar records first, then test records, each block ordered by
// (class, item index). Per-record seeds derive from the master seed through
// disjoint exemplar/test streams; the whole dataset is a pure function of the
// protocol.
std::vector<SignalRecord> make_dataset(const DatasetProtocol& protocol);

}  // namespace amc
