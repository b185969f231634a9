#pragma once

#include <string>
#include <vector>

#include "erps/types.hpp"

namespace erps {

/// Inclusive analysis window over post-stimulus time.
struct ComponentWindow {
    std::string name;
    double start_ms;
    double end_ms;
};

inline ComponentWindow p300_window() { return {"P300", 200.0, 400.0}; }
inline ComponentWindow n700_window() { return {"N700", 600.0, 800.0}; }

struct TestResult {
    double statistic = 0.0;
    int df = 0;  // Kruskal-Wallis only
    double p_value = 1.0;
    std::string method;
};

/// Euclidean distance between a target and a non-target mean waveform.
double component_l2(const Vector& target_mean, const Vector& nontarget_mean);

/// Pointwise mean across epochs of one channel restricted to a window.
/// The window is sampled at the epoch grid; epoch columns outside the epoch
/// span cannot contribute (the [-200, 800) epoch has no 800 ms sample).
Vector window_mean_series(const std::vector<Epoch>& epochs, int channel,
                          const ComponentWindow& window, const TimingConfig& cfg);

/// Chi-square upper tail for integer degrees of freedom.
double chi2_survival(double x, int df);

/// Midranks of values (ties averaged), 1-based.
std::vector<double> midranks(const std::vector<double>& values);

/// Kruskal-Wallis H with midrank tie correction; p from the chi-square
/// approximation with df = groups - 1. All-identical data gives H = 0, p = 1.
TestResult kruskal_wallis(const std::vector<std::vector<double>>& groups);

/// Two-sided rank-sum test. Small untied samples (max size <= 10) use the
/// exact permutation distribution of the rank sum; everything else uses the
/// normal approximation with tie-corrected variance and continuity
/// correction. The statistic is the rank sum of the first sample.
TestResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b);

/// flag[i] = (p[i] < alpha / m), m = p.size().
std::vector<bool> bonferroni(const std::vector<double>& p_values, double alpha = 0.05);

struct AccuracyRecord {
    int subject;
    Condition condition;
    int sequence;  // 1..10
    bool correct;
};

struct AccuracyCell {
    Condition condition;
    int sequence;
    double mean;  // mean across subjects of per-subject accuracy
    double sd;    // sample standard deviation across subjects
    int n_subjects;
};

std::vector<AccuracyCell> accuracy_table(const std::vector<AccuracyRecord>& records);

/// Rank-based ROC AUC (midranks, so ties count half).
double roc_auc(const std::vector<double>& scores, const std::vector<bool>& is_positive);

}  // namespace erps
