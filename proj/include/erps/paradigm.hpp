#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "erps/types.hpp"

namespace erps {

/// Flash order for one trial: sequences_per_trial x flashes_per_sequence
/// groups of objects_per_flash object ids. Within every sequence each object
/// appears exactly twice, and no object appears in two consecutive flashes,
/// sequence boundaries included.
struct FlashSchedule {
    std::vector<FlashGroup> flashes;  // flashes_per_trial() groups
    std::uint64_t seed = 0;

    const FlashGroup& flash(int sequence, int flash, const TimingConfig& cfg) const {
        return flashes.at(static_cast<std::size_t>(sequence) * cfg.flashes_per_sequence + flash);
    }

    /// Throws std::invalid_argument if any schedule constraint is violated.
    void validate(const TimingConfig& cfg) const;
};

/// Absolute flash onsets for one trial: flash k starts at k * soa().
struct StimulusTimeline {
    struct Event {
        double onset_ms;
        FlashGroup objects;
    };
    std::vector<Event> events;
};

/// One fully epoched trial.
struct Trial {
    long trial_id = 0;
    Condition condition = Condition::ErpOnly;
    int true_target = 0;
    FlashSchedule schedule;
    std::vector<Epoch> epochs;  // flashes_per_trial() entries

    void validate(const TimingConfig& cfg) const;
};

/// Builds a constraint-satisfying random schedule, deterministic in the seed.
/// Throws std::runtime_error if the bounded repair/retry budget is exhausted
/// (statistically negligible for the default configuration).
FlashSchedule generate_schedule(std::uint64_t seed, const TimingConfig& cfg);

StimulusTimeline timeline(const FlashSchedule& schedule, const TimingConfig& cfg);

/// Line format: trial,sequence,flash,obj1,obj2,obj3,obj4,obj5,obj6
void write_schedule(std::ostream& out, const FlashSchedule& schedule, const TimingConfig& cfg,
                    long trial_id = 0);

/// Parses one or more trials from the line format and validates each.
std::vector<FlashSchedule> read_schedules(std::istream& in, const TimingConfig& cfg);

}  // namespace erps
