#include "erps/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "erps/rng.hpp"

namespace erps {

namespace {

double max_gain_over(const Vector& topo, const std::vector<int>& channels) {
    double m = 0.0;
    for (int c : channels) m = std::max(m, topo[c]);
    return m;
}

void check_topography(const ErpTemplate& t, const Montage& montage) {
    if (t.topography.size() != kNumChannels)
        throw std::invalid_argument("topography must have one gain per channel");
    if (t.topography.minCoeff() < 0.0 || t.topography.maxCoeff() > 1.0)
        throw std::invalid_argument("topography gains must lie in [0, 1]");
    const double overall = t.topography.maxCoeff();
    if (t.name == ErpComponent::N700) {
        if (max_gain_over(t.topography, montage.region_channels(Region::Frontal)) < overall)
            throw std::invalid_argument("N700 topography must peak over frontal channels");
    } else {
        double cp = std::max(
            max_gain_over(t.topography, montage.region_channels(Region::Central)),
            max_gain_over(t.topography, montage.region_channels(Region::Parietal)));
        if (cp < overall)
            throw std::invalid_argument("P300 topography must peak over central/parietal channels");
    }
}

}  // namespace

void SubjectProfile::validate(const Montage& montage) const {
    if (global_gain <= 0.0) throw std::invalid_argument("global_gain must be positive");
    if (noise.white_sigma < 0.0 || noise.pink_sigma < 0.0)
        throw std::invalid_argument("noise sigmas must be non-negative");
    if (p300.name != ErpComponent::P300 || n700.name != ErpComponent::N700)
        throw std::invalid_argument("profile templates are mislabeled");
    check_topography(p300, montage);
    check_topography(n700, montage);
    if (!(p300.amplitude_uv[0] == p300.amplitude_uv[1] &&
          p300.amplitude_uv[1] == p300.amplitude_uv[2]))
        throw std::invalid_argument("P300 amplitude must not depend on the condition");
    const auto& a = n700.amplitude_uv;
    if (!(std::abs(a[2]) > std::abs(a[1]) && std::abs(a[1]) > std::abs(a[0])))
        throw std::invalid_argument("N700 amplitude must grow in magnitude with the condition");
}

Vector pink_noise(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("pink noise needs at least two samples");
    Rng rng(seed);
    std::vector<double> white(n);
    for (double& v : white) v = rng.next_normal();

    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> spectrum;
    fft.fwd(spectrum, white);

    // 1/sqrt(f) amplitude shaping; symmetric in k so the inverse stays real.
    spectrum[0] = 0.0;
    for (int k = 1; k < n; ++k) {
        int bin = std::min(k, n - k);
        spectrum[k] /= std::sqrt(static_cast<double>(bin));
    }
    std::vector<double> shaped;
    fft.inv(shaped, spectrum);

    Eigen::Map<Vector> out(shaped.data(), n);
    Vector noise = out;
    double sd = std::sqrt(noise.squaredNorm() / n);
    if (sd > 0.0) noise /= sd;
    return noise;
}

Stream render_stream(const FlashSchedule& schedule, Condition condition, int true_target,
                     const SubjectProfile& profile, const TimingConfig& cfg, double lead_ms) {
    static const Montage montage;
    profile.validate(montage);
    schedule.validate(cfg);
    if (true_target < 0 || true_target >= cfg.n_objects)
        throw std::invalid_argument("target object id out of range");

    const double dt = cfg.sample_period_ms();
    const double last_onset = (static_cast<double>(schedule.flashes.size()) - 1.0) * cfg.soa();
    const int n = static_cast<int>(std::ceil((lead_ms + last_onset + cfg.epoch_end) / dt));

    Stream stream;
    stream.start_ms = -lead_ms;
    stream.sample_rate = cfg.sample_rate;
    stream.data.setZero(kNumChannels, n);

    for (int c = 0; c < kNumChannels; ++c) {
        if (profile.noise.white_sigma > 0.0) {
            Rng rng(derive_seed(profile.noise.seed, {static_cast<std::uint64_t>(c), 1}));
            for (int j = 0; j < n; ++j)
                stream.data(c, j) += profile.noise.white_sigma * rng.next_normal();
        }
        if (profile.noise.pink_sigma > 0.0)
            stream.data.row(c) +=
                profile.noise.pink_sigma *
                pink_noise(n, derive_seed(profile.noise.seed, {static_cast<std::uint64_t>(c), 2}))
                    .transpose();
    }

    auto add_bump = [&](const ErpTemplate& t, double onset_ms) {
        const double amp = t.amplitude(condition) * profile.global_gain;
        if (amp == 0.0) return;
        const double center = onset_ms + t.peak_ms;
        const double reach = 5.0 * t.sigma_ms;
        int j0 = std::max(0, static_cast<int>(std::ceil((center - reach - stream.start_ms) / dt)));
        int j1 = std::min(n - 1,
                          static_cast<int>(std::floor((center + reach - stream.start_ms) / dt)));
        if (j0 > j1) return;
        Eigen::RowVectorXd bump(j1 - j0 + 1);
        for (int j = j0; j <= j1; ++j) {
            double x = (stream.start_ms + j * dt - center) / t.sigma_ms;
            bump[j - j0] = std::exp(-0.5 * x * x);
        }
        stream.data.middleCols(j0, bump.size()) += (amp * t.topography) * bump;
    };

    for (std::size_t k = 0; k < schedule.flashes.size(); ++k) {
        const FlashGroup& group = schedule.flashes[k];
        if (std::find(group.begin(), group.end(), true_target) == group.end()) continue;
        const double onset = static_cast<double>(k) * cfg.soa();
        add_bump(profile.p300, onset);
        add_bump(profile.n700, onset);
    }
    return stream;
}

SubjectProfile default_profile(std::uint64_t seed) {
    static const Montage montage;

    auto region_topo = [&](double frontal, double central, double parietal, double occipital) {
        Vector topo(kNumChannels);
        for (int c = 0; c < kNumChannels; ++c) {
            switch (montage.region(c)) {
                case Region::Frontal: topo[c] = frontal; break;
                case Region::Central: topo[c] = central; break;
                case Region::Parietal: topo[c] = parietal; break;
                case Region::Occipital: topo[c] = occipital; break;
            }
        }
        return topo;
    };

    SubjectProfile profile;
    profile.p300.name = ErpComponent::P300;
    profile.p300.peak_ms = 300.0;
    profile.p300.sigma_ms = 60.0;
    profile.p300.amplitude_uv = {4.0, 4.0, 4.0};
    profile.p300.topography = region_topo(0.45, 1.0, 0.85, 0.55);

    profile.n700.name = ErpComponent::N700;
    profile.n700.peak_ms = 700.0;
    profile.n700.sigma_ms = 70.0;
    profile.n700.amplitude_uv = {-1.8, -3.4, -5.0};
    profile.n700.topography = region_topo(1.0, 0.55, 0.45, 0.25);

    // Mild subject-to-subject variation: +-10% on gain and on noise level.
    Rng rng(derive_seed(seed, {0x50f11eu}));
    profile.global_gain = 0.9 + 0.2 * rng.next_unit();
    const double noise_scale = 0.9 + 0.2 * rng.next_unit();
    profile.noise.white_sigma = 4.0 * noise_scale;
    profile.noise.pink_sigma = 8.0 * noise_scale;
    profile.noise.seed = derive_seed(seed, {0x4015eu});

    profile.validate(montage);
    return profile;
}

void write_stream_csv(std::ostream& out, const Stream& stream, const Montage& montage) {
    out << "time_ms";
    for (const std::string& label : montage.channels()) out << ',' << label;
    out << '\n';
    char buf[32];
    const double dt = 1000.0 / stream.sample_rate;
    for (int j = 0; j < stream.samples(); ++j) {
        std::snprintf(buf, sizeof(buf), "%.6f", stream.start_ms + j * dt);
        out << buf;
        for (int c = 0; c < stream.data.rows(); ++c) {
            std::snprintf(buf, sizeof(buf), "%.6f", stream.data(c, j));
            out << ',' << buf;
        }
        out << '\n';
    }
}

}  // namespace erps
