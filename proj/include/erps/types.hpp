#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace erps {

using Scalar = double;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr int kNumChannels = 32;
inline constexpr int kNumObjects = 36;

enum class Region { Frontal, Central, Parietal, Occipital };

std::string region_name(Region r);

/// Fixed 32-channel recording montage. Channel order is the canonical
/// serialization order used by every matrix in the project (row c of a
/// channels-by-time matrix is channels()[c]).
class Montage {
public:
    Montage();

    const std::array<std::string, kNumChannels>& channels() const { return labels_; }
    const std::string& label(int channel) const { return labels_.at(channel); }
    Region region(int channel) const { return regions_.at(channel); }
    Region region(const std::string& label) const;

    /// Index of a channel label, -1 if unknown.
    int index_of(const std::string& label) const;

    /// All channel indices belonging to one scalp region (8 per region).
    std::vector<int> region_channels(Region r) const;

private:
    std::array<std::string, kNumChannels> labels_;
    std::array<Region, kNumChannels> regions_;
};

/// Stimulus and epoch timing. Defaults follow the recording protocol:
/// 100 Hz sampling, 50 ms flashes with 135 ms ISI, epochs of [-200, 800) ms,
/// 10 sequences of 12 flashes covering 36 objects twice each.
struct TimingConfig {
    double sample_rate = 100.0;   // Hz
    double stim_duration = 50.0;  // ms
    double isi = 135.0;           // ms
    double epoch_start = -200.0;  // ms relative to flash onset
    double epoch_end = 800.0;     // ms, half-open
    int flashes_per_sequence = 12;
    int sequences_per_trial = 10;
    int objects_per_flash = 6;
    int n_objects = kNumObjects;

    double soa() const { return stim_duration + isi; }
    double sample_period_ms() const { return 1000.0 / sample_rate; }
    int epoch_samples() const;
    int baseline_samples() const;
    int flashes_per_trial() const { return flashes_per_sequence * sequences_per_trial; }

    /// Throws std::invalid_argument when any structural invariant is broken.
    void validate() const;
};

enum class Condition : int {
    ErpOnly = 1,
    ErpPlusMeaningless = 2,
    ErpPlusMeaningful = 3,
};

inline int condition_index(Condition c) { return static_cast<int>(c) - 1; }
Condition condition_from_id(int id);
std::string condition_name(Condition c);

inline constexpr std::array<Condition, 3> kAllConditions = {
    Condition::ErpOnly, Condition::ErpPlusMeaningless, Condition::ErpPlusMeaningful};

using FlashGroup = std::array<int, 6>;

/// One channels-by-time cutout around a flash onset, plus the flash metadata
/// the decoder and the analyses need. samples(c, j) is the value of channel c
/// at epoch_start + j * sample_period_ms() relative to the onset.
struct Epoch {
    Matrix samples;  // kNumChannels x epoch_samples(), microvolts
    double onset_ms = 0.0;
    FlashGroup object_flags{};
    bool is_target = false;
    Condition condition = Condition::ErpOnly;
    int sequence_index = 0;
    int flash_index = 0;
    long trial_id = 0;

    void validate(const TimingConfig& cfg) const;
};

/// Continuous multichannel recording. Column j holds the samples taken at
/// start_ms + j * (1000 / sample_rate).
struct Stream {
    double start_ms = 0.0;
    double sample_rate = 100.0;
    Matrix data;  // kNumChannels x T, microvolts

    int samples() const { return static_cast<int>(data.cols()); }
    double end_ms() const { return start_ms + samples() * 1000.0 / sample_rate; }
};

/// Sample index of time t within an epoch; floors non-aligned times.
/// Throws std::out_of_range for t outside [epoch_start, epoch_end).
int ms_to_sample(double t_ms, const TimingConfig& cfg);

/// Time of epoch column j. Inverse of ms_to_sample on aligned times.
double sample_to_ms(int sample, const TimingConfig& cfg);

}  // namespace erps
