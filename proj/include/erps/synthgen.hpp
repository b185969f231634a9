#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>

#include "erps/paradigm.hpp"
#include "erps/types.hpp"

namespace erps {

enum class ErpComponent { P300, N700 };

/// Gaussian-in-time ERP bump with a fixed scalp topography and one signed
/// peak amplitude per condition.
struct ErpTemplate {
    ErpComponent name = ErpComponent::P300;
    double peak_ms = 300.0;
    double sigma_ms = 60.0;
    std::array<double, 3> amplitude_uv{};  // indexed by condition_index()
    Vector topography;                     // kNumChannels gains in [0, 1]

    double amplitude(Condition c) const { return amplitude_uv[condition_index(c)]; }
};

struct NoiseModel {
    double white_sigma = 0.0;  // microvolts, per sample
    double pink_sigma = 0.0;   // microvolts, per sample
    std::uint64_t seed = 0;
};

/// Everything needed to synthesize one simulated subject's raw EEG.
struct SubjectProfile {
    ErpTemplate p300;
    ErpTemplate n700;
    NoiseModel noise;
    double global_gain = 1.0;

    /// Throws std::invalid_argument when the template invariants are broken:
    /// the P300 topography must peak over central/parietal channels and its
    /// amplitude must not depend on the condition; the N700 topography must
    /// peak frontally with |amp(cond3)| > |amp(cond2)| > |amp(cond1)|.
    void validate(const Montage& montage) const;
};

/// Zero-mean unit-variance 1/f noise of length n, deterministic in the seed.
/// Synthesized by spectrally shaping white Gaussian noise.
Vector pink_noise(int n, std::uint64_t seed);

/// Renders one trial's stimulus timeline into a continuous 32-channel stream:
/// background noise plus, for every flash whose group contains the target,
/// a P300 and an N700 bump at the flash onset. Overlaps add linearly. The
/// stream starts lead_ms before the first onset and extends epoch_end past
/// the last, so every flash of the trial can be epoched.
Stream render_stream(const FlashSchedule& schedule, Condition condition, int true_target,
                     const SubjectProfile& profile, const TimingConfig& cfg,
                     double lead_ms = 200.0);

/// Calibrated default subject. Condition-agnostic: the returned templates
/// carry all three per-condition amplitudes. Distinct seeds produce mild
/// subject-to-subject gain and noise variation.
SubjectProfile default_profile(std::uint64_t seed);

/// CSV export: time_ms, then one column per montage channel.
void write_stream_csv(std::ostream& out, const Stream& stream, const Montage& montage);

}  // namespace erps
