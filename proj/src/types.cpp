#include "erps/types.hpp"

#include <algorithm>
#include <cmath>

namespace erps {

namespace {

constexpr std::array<const char*, kNumChannels> kChannelLabels = {
    "Fp1", "Fp2", "F3",  "Fz",  "F4",  "FC1", "FCz", "FC2",
    "FC5", "FC6", "T7",  "T8",  "C3",  "C1",  "Cz",  "C2",
    "C4",  "CP1", "CPz", "CP2", "CP5", "CP6", "P7",  "P8",
    "P3",  "P1",  "Pz",  "P2",  "P4",  "O1",  "Oz",  "O2"};

Region region_of_label(const std::string& label) {
    static const std::array<const char*, 8> frontal = {"Fp1", "Fp2", "F3", "Fz",
                                                       "F4",  "FC1", "FCz", "FC2"};
    static const std::array<const char*, 8> central = {"C3",  "C1",  "Cz",  "C2",
                                                       "C4",  "CP1", "CPz", "CP2"};
    static const std::array<const char*, 8> parietal = {"FC5", "FC6", "T7",  "T8",
                                                        "CP5", "CP6", "P7",  "P8"};
    auto has = [&](const auto& set) {
        return std::find(set.begin(), set.end(), label) != set.end();
    };
    if (has(frontal)) return Region::Frontal;
    if (has(central)) return Region::Central;
    if (has(parietal)) return Region::Parietal;
    return Region::Occipital;
}

}  // namespace

std::string region_name(Region r) {
    switch (r) {
        case Region::Frontal: return "frontal";
        case Region::Central: return "central";
        case Region::Parietal: return "parietal";
        case Region::Occipital: return "occipital";
    }
    return "unknown";
}

Montage::Montage() {
    for (int c = 0; c < kNumChannels; ++c) {
        labels_[c] = kChannelLabels[c];
        regions_[c] = region_of_label(labels_[c]);
    }
}

Region Montage::region(const std::string& label) const {
    int idx = index_of(label);
    if (idx < 0) throw std::invalid_argument("unknown channel label: " + label);
    return regions_[idx];
}

int Montage::index_of(const std::string& label) const {
    for (int c = 0; c < kNumChannels; ++c)
        if (labels_[c] == label) return c;
    return -1;
}

std::vector<int> Montage::region_channels(Region r) const {
    std::vector<int> out;
    for (int c = 0; c < kNumChannels; ++c)
        if (regions_[c] == r) out.push_back(c);
    return out;
}

int TimingConfig::epoch_samples() const {
    double n = (epoch_end - epoch_start) * sample_rate / 1000.0;
    return static_cast<int>(std::llround(n));
}

int TimingConfig::baseline_samples() const {
    double n = -epoch_start * sample_rate / 1000.0;
    return static_cast<int>(std::llround(n));
}

void TimingConfig::validate() const {
    if (sample_rate <= 0.0) throw std::invalid_argument("sample_rate must be positive");
    if (stim_duration <= 0.0 || isi < 0.0)
        throw std::invalid_argument("stimulus timing must be positive");
    if (!(epoch_start < 0.0 && 0.0 < epoch_end))
        throw std::invalid_argument("epoch span must straddle the onset");
    double n = (epoch_end - epoch_start) * sample_rate / 1000.0;
    if (std::abs(n - std::llround(n)) > 1e-9)
        throw std::invalid_argument("epoch span must contain a whole number of samples");
    if (flashes_per_sequence <= 0 || sequences_per_trial <= 0 || objects_per_flash <= 0 ||
        n_objects <= 0)
        throw std::invalid_argument("counts must be positive");
    if (flashes_per_sequence * objects_per_flash != 2 * n_objects)
        throw std::invalid_argument(
            "flashes_per_sequence * objects_per_flash must equal 2 * n_objects");
}

Condition condition_from_id(int id) {
    if (id < 1 || id > 3) throw std::invalid_argument("condition id must be 1, 2 or 3");
    return static_cast<Condition>(id);
}

std::string condition_name(Condition c) {
    switch (c) {
        case Condition::ErpOnly: return "erp_only";
        case Condition::ErpPlusMeaningless: return "erp_plus_meaningless";
        case Condition::ErpPlusMeaningful: return "erp_plus_meaningful";
    }
    return "unknown";
}

void Epoch::validate(const TimingConfig& cfg) const {
    if (samples.rows() != kNumChannels)
        throw std::invalid_argument("epoch must have one row per montage channel");
    if (samples.cols() != cfg.epoch_samples())
        throw std::invalid_argument("epoch has wrong number of sample columns");
    FlashGroup sorted = object_flags;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("object_flags must be distinct");
    for (int id : sorted)
        if (id < 0 || id >= cfg.n_objects)
            throw std::invalid_argument("object id out of range");
}

int ms_to_sample(double t_ms, const TimingConfig& cfg) {
    if (t_ms < cfg.epoch_start || t_ms >= cfg.epoch_end)
        throw std::out_of_range("time outside the epoch span");
    return static_cast<int>(std::floor((t_ms - cfg.epoch_start) * cfg.sample_rate / 1000.0));
}

double sample_to_ms(int sample, const TimingConfig& cfg) {
    return cfg.epoch_start + sample * cfg.sample_period_ms();
}

}  // namespace erps
