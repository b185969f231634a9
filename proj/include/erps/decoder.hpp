#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "erps/pipeline.hpp"
#include "erps/types.hpp"

namespace erps {

/// Trained regularized linear discriminant. Higher score means more
/// target-like; the bias centers the decision boundary at the midpoint of the
/// projected class means.
struct RldaModel {
    Vector weights;
    double bias = 0.0;
    double lambda = 0.0;  // shrinkage intensity in [0, 1]
    double nu = 0.0;      // shrinkage target scale: mean pooled-covariance diagonal
    Vector mean_target;
    Vector mean_nontarget;

    int dim() const { return static_cast<int>(weights.size()); }
};

/// Fits the discriminant on rows of class features. The pooled covariance is
/// class-centered and normalized by (n - 2), then shrunk toward nu * I:
///   sigma_shrunk = (1 - lambda) * sigma_pooled + lambda * nu * I
///   weights = sigma_shrunk^-1 (mu_target - mu_nontarget)
/// When lambda is not given it is set by the Ledoit-Wolf analytic estimate.
/// Throws std::runtime_error when sigma_shrunk is singular (possible only at
/// lambda = 0 with rank-deficient data, or when the data has zero scatter).
RldaModel train_rlda(const Matrix& features_target, const Matrix& features_nontarget,
                     std::optional<double> lambda = std::nullopt);

/// Analytic shrinkage intensity for rows of class-centered data.
double ledoit_wolf_lambda(const Matrix& centered_rows);

double score(const RldaModel& model, const Vector& features);
double score(const RldaModel& model, const FeatureVector& features);

/// Cumulative per-object evidence over the flashes seen so far.
struct ScoreBoard {
    Vector scores = Vector::Zero(kNumObjects);
    int flashes_seen = 0;
};

/// Adds one epoch's score to every object flashed in it.
ScoreBoard accumulate(ScoreBoard board, double epoch_score, const FlashGroup& object_flags);

/// Argmax of cumulative evidence; ties go to the lowest object id. Requires
/// at least one full sequence of flashes.
int select_target(const ScoreBoard& board, const TimingConfig& cfg);

/// Trains one model per condition from labeled feature rows.
RldaModel train_from_features(const std::vector<FeatureVector>& features,
                              std::optional<double> lambda = std::nullopt);

void write_model_json(std::ostream& out, const RldaModel& model);
RldaModel read_model_json(std::istream& in);

}  // namespace erps
