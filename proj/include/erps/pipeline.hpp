#pragma once

#include <iosfwd>
#include <vector>

#include "erps/paradigm.hpp"
#include "erps/types.hpp"

namespace erps {

inline constexpr int kNumWindows = 10;
inline constexpr int kFeatureDim = kNumChannels * kNumWindows;

/// Spatio-temporal feature vector: per channel, the mean amplitude of each of
/// the 10 contiguous 80 ms post-stimulus windows, ordered channel-major
/// (channel 0 windows 0..9, channel 1 windows 0..9, ...).
struct FeatureVector {
    Vector values;  // kFeatureDim
    bool is_target = false;
    int sequence_index = 0;
    int flash_index = 0;
    long trial_id = 0;
    FlashGroup object_flags{};
};

/// Cuts the [epoch_start, epoch_end) window around onset_ms out of a stream.
/// The cut is aligned to the stream grid by flooring. Throws std::out_of_range
/// when the stream does not cover the whole window.
Epoch cut_epoch(const Stream& stream, double onset_ms, const TimingConfig& cfg);

/// Subtracts each channel's pre-stimulus mean from the whole channel.
Epoch baseline_correct(const Epoch& epoch, const TimingConfig& cfg);

/// Post-stimulus window means of a baseline-corrected epoch. Metadata is
/// copied from the epoch.
FeatureVector extract_features(const Epoch& epoch, const TimingConfig& cfg);

/// Cuts the 120 raw epochs of one trial out of a stream and attaches flash
/// metadata from the schedule. Epochs are not baseline-corrected.
Trial epoch_trial(const Stream& stream, const FlashSchedule& schedule, Condition condition,
                  int true_target, const TimingConfig& cfg, long trial_id = 0);

/// Baseline-corrects and featurizes every epoch of a trial.
std::vector<FeatureVector> featurize_trial(const Trial& trial, const TimingConfig& cfg);

/// CSV export, one row per epoch: trial_id,sequence,flash,is_target,f0..f319.
void write_features_csv(std::ostream& out, const std::vector<FeatureVector>& features);

}  // namespace erps
