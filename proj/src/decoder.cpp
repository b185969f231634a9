#include "erps/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace erps {

namespace {

Matrix center_rows(const Matrix& rows, const Eigen::RowVectorXd& mean) {
    return rows.rowwise() - mean;
}

}  // namespace

double ledoit_wolf_lambda(const Matrix& centered_rows) {
    const int n = static_cast<int>(centered_rows.rows());
    const int d = static_cast<int>(centered_rows.cols());
    if (n < 2) return 1.0;

    // Ledoit-Wolf (2004) toward m*I, on the 1/n-normalized scatter.
    Matrix s = (centered_rows.transpose() * centered_rows) / static_cast<double>(n);
    const double m = s.trace() / d;
    Matrix deviation = s;
    deviation.diagonal().array() -= m;
    const double d2 = deviation.squaredNorm() / d;
    if (d2 <= 0.0) return 1.0;

    double fourth = 0.0;
    for (int k = 0; k < n; ++k) {
        double q = centered_rows.row(k).squaredNorm();
        fourth += q * q;
    }
    const double b2 = (fourth / (static_cast<double>(n) * n) - s.squaredNorm() / n) / d;
    return std::clamp(std::min(b2, d2) / d2, 0.0, 1.0);
}

RldaModel train_rlda(const Matrix& features_target, const Matrix& features_nontarget,
                     std::optional<double> lambda) {
    const int n_t = static_cast<int>(features_target.rows());
    const int n_nt = static_cast<int>(features_nontarget.rows());
    const int d = static_cast<int>(features_target.cols());
    if (n_t < 2 || n_nt < 2)
        throw std::invalid_argument("training needs at least two samples per class");
    if (features_nontarget.cols() != d)
        throw std::invalid_argument("class feature dimensions disagree");
    if (lambda && (*lambda < 0.0 || *lambda > 1.0))
        throw std::invalid_argument("lambda must lie in [0, 1]");

    RldaModel model;
    model.mean_target = features_target.colwise().mean();
    model.mean_nontarget = features_nontarget.colwise().mean();

    Matrix centered(n_t + n_nt, d);
    centered.topRows(n_t) = center_rows(features_target, model.mean_target.transpose());
    centered.bottomRows(n_nt) = center_rows(features_nontarget, model.mean_nontarget.transpose());

    const int n = n_t + n_nt;
    Matrix sigma = (centered.transpose() * centered) / static_cast<double>(n - 2);
    model.nu = sigma.trace() / d;
    model.lambda = lambda ? *lambda : ledoit_wolf_lambda(centered);

    Matrix shrunk = (1.0 - model.lambda) * sigma;
    shrunk.diagonal().array() += model.lambda * model.nu;

    Eigen::LLT<Matrix> llt(shrunk);
    Vector mean_diff = model.mean_target - model.mean_nontarget;
    if (llt.info() != Eigen::Success)
        throw std::runtime_error(
            "shrunk covariance is singular; retrain with lambda > 0 or richer data");
    model.weights = llt.solve(mean_diff);
    model.bias = -0.5 * model.weights.dot(model.mean_target + model.mean_nontarget);
    return model;
}

double score(const RldaModel& model, const Vector& features) {
    if (features.size() != model.weights.size())
        throw std::invalid_argument("feature dimension does not match the model");
    return model.weights.dot(features) + model.bias;
}

double score(const RldaModel& model, const FeatureVector& features) {
    return score(model, features.values);
}

ScoreBoard accumulate(ScoreBoard board, double epoch_score, const FlashGroup& object_flags) {
    FlashGroup sorted = object_flags;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("object_flags must be distinct");
    for (int object : object_flags) {
        if (object < 0 || object >= kNumObjects)
            throw std::invalid_argument("object id out of range");
        board.scores[object] += epoch_score;
    }
    ++board.flashes_seen;
    return board;
}

int select_target(const ScoreBoard& board, const TimingConfig& cfg) {
    if (board.flashes_seen < cfg.flashes_per_sequence)
        throw std::logic_error("selection needs at least one full sequence of flashes");
    int best = 0;
    for (int object = 1; object < board.scores.size(); ++object)
        if (board.scores[object] > board.scores[best]) best = object;
    return best;
}

RldaModel train_from_features(const std::vector<FeatureVector>& features,
                              std::optional<double> lambda) {
    const long n_t = std::count_if(features.begin(), features.end(),
                                   [](const FeatureVector& f) { return f.is_target; });
    const long n_nt = static_cast<long>(features.size()) - n_t;
    if (n_t < 2 || n_nt < 2)
        throw std::invalid_argument("training needs at least two samples per class");
    const int d = static_cast<int>(features.front().values.size());
    Matrix target(n_t, d), nontarget(n_nt, d);
    long row_t = 0, row_nt = 0;
    for (const FeatureVector& f : features) {
        if (f.is_target)
            target.row(row_t++) = f.values.transpose();
        else
            nontarget.row(row_nt++) = f.values.transpose();
    }
    return train_rlda(target, nontarget, lambda);
}

void write_model_json(std::ostream& out, const RldaModel& model) {
    static const Montage montage;
    nlohmann::json j;
    j["lambda"] = model.lambda;
    j["nu"] = model.nu;
    j["bias"] = model.bias;
    j["weights"] = std::vector<double>(model.weights.begin(), model.weights.end());
    j["class_means"] = {
        {"target", std::vector<double>(model.mean_target.begin(), model.mean_target.end())},
        {"nontarget",
         std::vector<double>(model.mean_nontarget.begin(), model.mean_nontarget.end())}};
    j["channel_order"] =
        std::vector<std::string>(montage.channels().begin(), montage.channels().end());
    j["window_spec"] = {{"start_ms", 0.0}, {"window_ms", 80.0}, {"count", kNumWindows}};
    out << j.dump(2) << '\n';
}

RldaModel read_model_json(std::istream& in) {
    nlohmann::json j;
    in >> j;
    RldaModel model;
    model.lambda = j.at("lambda").get<double>();
    model.nu = j.at("nu").get<double>();
    model.bias = j.at("bias").get<double>();
    auto weights = j.at("weights").get<std::vector<double>>();
    model.weights = Eigen::Map<Vector>(weights.data(), static_cast<long>(weights.size()));
    if (j.contains("class_means")) {
        auto t = j["class_means"].at("target").get<std::vector<double>>();
        auto nt = j["class_means"].at("nontarget").get<std::vector<double>>();
        model.mean_target = Eigen::Map<Vector>(t.data(), static_cast<long>(t.size()));
        model.mean_nontarget = Eigen::Map<Vector>(nt.data(), static_cast<long>(nt.size()));
    }
    return model;
}

}  // namespace erps
