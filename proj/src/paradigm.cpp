#include "erps/paradigm.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "erps/rng.hpp"

namespace erps {

namespace {

bool contains(const FlashGroup& g, int object) {
    return std::find(g.begin(), g.end(), object) != g.end();
}

/// Random partition of 0..n_objects-1 into groups of group_size.
std::vector<FlashGroup> random_partition(Rng& rng, int n_objects, int group_size) {
    std::vector<int> ids(n_objects);
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids);
    std::vector<FlashGroup> groups(n_objects / group_size);
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (int s = 0; s < group_size; ++s)
            groups[g][s] = ids[g * group_size + s];
    return groups;
}

/// Swap-repairs adjacency violations inside one sequence, treating `prev`
/// (the last flash of the preceding sequence) as a fixed left neighbor.
/// Swaps stay within one partition half (flashes of equal parity), which
/// preserves the twice-per-sequence coverage invariant.
bool repair_adjacency(std::vector<FlashGroup>& fl, const FlashGroup* prev, Rng& rng,
                      const TimingConfig& cfg) {
    const int n_flashes = static_cast<int>(fl.size());
    const int half = n_flashes / 2;
    if (half < 2) return false;  // no swap partner exists

    auto fits_at = [&](int idx, int object) {
        if (idx > 0 && contains(fl[idx - 1], object)) return false;
        if (idx == 0 && prev != nullptr && contains(*prev, object)) return false;
        if (idx + 1 < n_flashes && contains(fl[idx + 1], object)) return false;
        return true;
    };

    constexpr int kMaxPasses = 60;
    constexpr int kSwapTries = 40;
    for (int pass = 0; pass < kMaxPasses; ++pass) {
        int unresolved = 0;
        for (int j = 0; j < n_flashes; ++j) {
            const FlashGroup* left = (j == 0) ? prev : &fl[j - 1];
            if (left == nullptr) continue;
            for (int s = 0; s < cfg.objects_per_flash; ++s) {
                if (!contains(*left, fl[j][s])) continue;
                bool fixed = false;
                for (int t = 0; t < kSwapTries && !fixed; ++t) {
                    // Same-parity flash other than j; groups of one partition
                    // are disjoint, so the swapped objects stay distinct.
                    int k = rng.next_below(half - 1);
                    int g = (j % 2) + 2 * (k + (k >= j / 2 ? 1 : 0));
                    int s2 = rng.next_below(cfg.objects_per_flash);
                    if (fits_at(j, fl[g][s2]) && fits_at(g, fl[j][s])) {
                        std::swap(fl[j][s], fl[g][s2]);
                        fixed = true;
                    }
                }
                if (!fixed) ++unresolved;
            }
        }
        if (unresolved == 0) return true;
    }
    return false;
}

}  // namespace

void FlashSchedule::validate(const TimingConfig& cfg) const {
    if (static_cast<int>(flashes.size()) != cfg.flashes_per_trial())
        throw std::invalid_argument("schedule must cover the whole trial");
    for (int seq = 0; seq < cfg.sequences_per_trial; ++seq) {
        std::vector<int> counts(cfg.n_objects, 0);
        for (int f = 0; f < cfg.flashes_per_sequence; ++f) {
            const FlashGroup& group = flashes[seq * cfg.flashes_per_sequence + f];
            for (int object : group) {
                if (object < 0 || object >= cfg.n_objects)
                    throw std::invalid_argument("object id out of range");
                ++counts[object];
            }
            FlashGroup sorted = group;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw std::invalid_argument("flash group has duplicate objects");
        }
        for (int count : counts)
            if (count != 2)
                throw std::invalid_argument("each object must flash exactly twice per sequence");
    }
    for (std::size_t k = 1; k < flashes.size(); ++k)
        for (int object : flashes[k])
            if (contains(flashes[k - 1], object))
                throw std::invalid_argument("object repeats in consecutive flashes");
}

void Trial::validate(const TimingConfig& cfg) const {
    schedule.validate(cfg);
    if (static_cast<int>(epochs.size()) != cfg.flashes_per_trial())
        throw std::invalid_argument("trial must have one epoch per flash");
    std::vector<int> targets_per_sequence(cfg.sequences_per_trial, 0);
    for (std::size_t k = 0; k < epochs.size(); ++k) {
        const Epoch& e = epochs[k];
        e.validate(cfg);
        bool flagged = contains(e.object_flags, true_target);
        if (flagged != e.is_target)
            throw std::invalid_argument("is_target inconsistent with object_flags");
        if (e.is_target) ++targets_per_sequence[e.sequence_index];
    }
    for (int count : targets_per_sequence)
        if (count != 2)
            throw std::invalid_argument("each sequence must contain exactly two target epochs");
}

FlashSchedule generate_schedule(std::uint64_t seed, const TimingConfig& cfg) {
    cfg.validate();
    if (cfg.flashes_per_sequence % 2 != 0)
        throw std::invalid_argument("schedule construction needs an even flash count");

    constexpr int kMaxRetries = 1000;
    Rng rng(derive_seed(seed, {0x5c4edu}));

    FlashSchedule schedule;
    schedule.seed = seed;
    schedule.flashes.reserve(cfg.flashes_per_trial());

    for (int seq = 0; seq < cfg.sequences_per_trial; ++seq) {
        const FlashGroup* prev = schedule.flashes.empty() ? nullptr : &schedule.flashes.back();
        bool placed = false;
        for (int attempt = 0; attempt < kMaxRetries && !placed; ++attempt) {
            auto p1 = random_partition(rng, cfg.n_objects, cfg.objects_per_flash);
            auto p2 = random_partition(rng, cfg.n_objects, cfg.objects_per_flash);
            std::vector<FlashGroup> fl(cfg.flashes_per_sequence);
            for (std::size_t g = 0; g < p1.size(); ++g) {
                fl[2 * g] = p1[g];
                fl[2 * g + 1] = p2[g];
            }
            if (repair_adjacency(fl, prev, rng, cfg)) {
                schedule.flashes.insert(schedule.flashes.end(), fl.begin(), fl.end());
                placed = true;
            }
        }
        if (!placed)
            throw std::runtime_error("schedule constraint repair exhausted its retry budget");
    }
    return schedule;
}

StimulusTimeline timeline(const FlashSchedule& schedule, const TimingConfig& cfg) {
    StimulusTimeline tl;
    tl.events.reserve(schedule.flashes.size());
    for (std::size_t k = 0; k < schedule.flashes.size(); ++k)
        tl.events.push_back({static_cast<double>(k) * cfg.soa(), schedule.flashes[k]});
    return tl;
}

void write_schedule(std::ostream& out, const FlashSchedule& schedule, const TimingConfig& cfg,
                    long trial_id) {
    for (std::size_t k = 0; k < schedule.flashes.size(); ++k) {
        out << trial_id << ',' << k / cfg.flashes_per_sequence << ','
            << k % cfg.flashes_per_sequence;
        for (int object : schedule.flashes[k]) out << ',' << object;
        out << '\n';
    }
}

std::vector<FlashSchedule> read_schedules(std::istream& in, const TimingConfig& cfg) {
    std::vector<FlashSchedule> out;
    long current_trial = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<long> fields;
        std::string tok;
        while (std::getline(ls, tok, ',')) fields.push_back(std::stol(tok));
        if (static_cast<int>(fields.size()) != 3 + cfg.objects_per_flash)
            throw std::runtime_error("schedule line " + std::to_string(line_no) +
                                     ": wrong field count");
        if (fields[0] != current_trial) {
            current_trial = fields[0];
            out.emplace_back();
        }
        FlashGroup group{};
        for (int s = 0; s < cfg.objects_per_flash; ++s)
            group[s] = static_cast<int>(fields[3 + s]);
        out.back().flashes.push_back(group);
    }
    for (const FlashSchedule& schedule : out) schedule.validate(cfg);
    return out;
}

}  // namespace erps
