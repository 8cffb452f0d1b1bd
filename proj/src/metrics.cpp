#include "cvd/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "cvd/common.hpp"

namespace cvd::metrics {
namespace {

double safe_div(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_accuracy(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f%%", v * 100.0);
    return buf;
}

}  // namespace

ConfusionMatrix confusion(const std::vector<int>& y_true,
                          const std::vector<int>& y_pred) {
    if (y_true.empty()) throw DataError("confusion: empty label vectors");
    if (y_true.size() != y_pred.size())
        throw DataError("confusion: length mismatch (" +
                        std::to_string(y_true.size()) + " vs " +
                        std::to_string(y_pred.size()) + ")");
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const int t = y_true[i];
        const int p = y_pred[i];
        if ((t != 0 && t != 1) || (p != 0 && p != 1))
            throw DataError("confusion: labels must be 0 or 1 (row " +
                            std::to_string(i) + ")");
        if (t == 1 && p == 1)
            ++cm.tp;
        else if (t == 0 && p == 1)
            ++cm.fp;
        else if (t == 1 && p == 0)
            ++cm.fn;
        else
            ++cm.tn;
    }
    return cm;
}

MetricsReport evaluate(const ConfusionMatrix& cm) {
    if (cm.total() == 0) throw DataError("evaluate: empty confusion matrix");
    const double tp = static_cast<double>(cm.tp);
    const double fp = static_cast<double>(cm.fp);
    const double fn = static_cast<double>(cm.fn);
    const double tn = static_cast<double>(cm.tn);
    const double n = tp + fp + fn + tn;

    MetricsReport r;
    r.accuracy = (tp + tn) / n;
    r.precision = safe_div(tp, tp + fp);
    r.recall = safe_div(tp, tp + fn);
    r.f1 = safe_div(2.0 * r.precision * r.recall, r.precision + r.recall);

    const double denom2 = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn);
    r.mcc = denom2 == 0.0 ? 0.0 : (tp * tn - fp * fn) / std::sqrt(denom2);

    // Chance agreement from marginal products.
    const double pe = ((tp + fp) * (tp + fn) + (tn + fn) * (tn + fp)) / (n * n);
    r.kappa = safe_div(r.accuracy - pe, 1.0 - pe);
    return r;
}

std::string metrics_table_csv(
    const std::vector<std::pair<std::string, MetricsReport>>& rows) {
    if (rows.empty()) throw DataError("metrics_table: no rows");
    std::ostringstream out;
    out << "Model,Test Accuracy,Precision,Recall,F1,MCC,CK\n";
    for (const auto& [name, r] : rows) {
        out << name << ',' << fmt_accuracy(r.accuracy) << ',' << fmt2(r.precision)
            << ',' << fmt2(r.recall) << ',' << fmt2(r.f1) << ',' << fmt2(r.mcc)
            << ',' << fmt2(r.kappa) << '\n';
    }
    return out.str();
}

std::string metrics_table_text(
    const std::vector<std::pair<std::string, MetricsReport>>& rows) {
    if (rows.empty()) throw DataError("metrics_table: no rows");
    const char* headers[7] = {"Model",  "Test Accuracy", "Precision", "Recall",
                              "F1",     "MCC",           "CK"};
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const auto& [name, r] : rows) {
        cells.push_back({name, fmt_accuracy(r.accuracy), fmt2(r.precision),
                         fmt2(r.recall), fmt2(r.f1), fmt2(r.mcc), fmt2(r.kappa)});
    }
    std::size_t width[7];
    for (int c = 0; c < 7; ++c) {
        width[c] = std::string(headers[c]).size();
        for (const auto& row : cells)
            if (row[c].size() > width[c]) width[c] = row[c].size();
    }
    std::ostringstream out;
    auto emit_row = [&](const std::vector<std::string>& row) {
        for (int c = 0; c < 7; ++c) {
            out << (c == 0 ? "" : "  ") << row[c]
                << std::string(width[c] - row[c].size(), ' ');
        }
        out << '\n';
    };
    std::vector<std::string> head(headers, headers + 7);
    emit_row(head);
    std::size_t rule = 0;
    for (int c = 0; c < 7; ++c) rule += width[c];
    out << std::string(rule + 2 * 6, '-') << '\n';
    for (const auto& row : cells) emit_row(row);
    return out.str();
}

}  // namespace cvd::metrics
