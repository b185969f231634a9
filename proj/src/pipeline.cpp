#include "erps/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace erps {

Epoch cut_epoch(const Stream& stream, double onset_ms, const TimingConfig& cfg) {
    const double dt = 1000.0 / stream.sample_rate;
    const int n = cfg.epoch_samples();
    const int first =
        static_cast<int>(std::floor((onset_ms + cfg.epoch_start - stream.start_ms) / dt));
    if (first < 0 || first + n > stream.samples())
        throw std::out_of_range("stream does not cover the epoch span around this onset");

    Epoch epoch;
    epoch.samples = stream.data.middleCols(first, n);
    epoch.onset_ms = onset_ms;
    return epoch;
}

Epoch baseline_correct(const Epoch& epoch, const TimingConfig& cfg) {
    const int nb = cfg.baseline_samples();
    if (nb < 1 || nb > epoch.samples.cols())
        throw std::invalid_argument("epoch lacks baseline samples");
    Epoch out = epoch;
    out.samples.colwise() -= epoch.samples.leftCols(nb).rowwise().mean();
    return out;
}

FeatureVector extract_features(const Epoch& epoch, const TimingConfig& cfg) {
    const int post = epoch.samples.cols() - cfg.baseline_samples();
    if (post % kNumWindows != 0)
        throw std::invalid_argument("post-stimulus span must split into equal windows");
    const int window = post / kNumWindows;

    FeatureVector f;
    f.values.resize(epoch.samples.rows() * kNumWindows);
    for (int c = 0; c < epoch.samples.rows(); ++c)
        for (int w = 0; w < kNumWindows; ++w)
            f.values[c * kNumWindows + w] =
                epoch.samples.row(c)
                    .segment(cfg.baseline_samples() + w * window, window)
                    .mean();
    f.is_target = epoch.is_target;
    f.sequence_index = epoch.sequence_index;
    f.flash_index = epoch.flash_index;
    f.trial_id = epoch.trial_id;
    f.object_flags = epoch.object_flags;
    return f;
}

Trial epoch_trial(const Stream& stream, const FlashSchedule& schedule, Condition condition,
                  int true_target, const TimingConfig& cfg, long trial_id) {
    Trial trial;
    trial.trial_id = trial_id;
    trial.condition = condition;
    trial.true_target = true_target;
    trial.schedule = schedule;
    trial.epochs.reserve(schedule.flashes.size());
    for (std::size_t k = 0; k < schedule.flashes.size(); ++k) {
        Epoch e = cut_epoch(stream, static_cast<double>(k) * cfg.soa(), cfg);
        e.object_flags = schedule.flashes[k];
        e.is_target = std::find(e.object_flags.begin(), e.object_flags.end(), true_target) !=
                      e.object_flags.end();
        e.condition = condition;
        e.sequence_index = static_cast<int>(k) / cfg.flashes_per_sequence;
        e.flash_index = static_cast<int>(k) % cfg.flashes_per_sequence;
        e.trial_id = trial_id;
        trial.epochs.push_back(std::move(e));
    }
    return trial;
}

std::vector<FeatureVector> featurize_trial(const Trial& trial, const TimingConfig& cfg) {
    std::vector<FeatureVector> out;
    out.reserve(trial.epochs.size());
    for (const Epoch& e : trial.epochs)
        out.push_back(extract_features(baseline_correct(e, cfg), cfg));
    return out;
}

namespace {

void put_value(std::ostream& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    out << buf;
}

}  // namespace

void write_features_csv(std::ostream& out, const std::vector<FeatureVector>& features) {
    out << "trial_id,sequence,flash,is_target";
    const int dim = features.empty() ? kFeatureDim : static_cast<int>(features[0].values.size());
    for (int i = 0; i < dim; ++i) out << ",f" << i;
    out << '\n';
    for (const FeatureVector& f : features) {
        out << f.trial_id << ',' << f.sequence_index << ',' << f.flash_index << ','
            << (f.is_target ? 1 : 0);
        for (int i = 0; i < f.values.size(); ++i) {
            out << ',';
            put_value(out, f.values[i]);
        }
        out << '\n';
    }
}

}  // namespace erps
