#pragma once

#include <cstddef>
#include <vector>

#include "misinfo/errors.hpp"

namespace misinfo {

struct ClassMetrics {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

struct MetricsReport {
  double accuracy = 0;
  std::vector<ClassMetrics> per_class;
  double macro_f1 = 0;          // mean over all classes, absent ones count 0
  double macro_f1_present = 0;  // mean over classes seen in truth or prediction
  double balanced_accuracy = 0; // mean per-class recall over classes in truth
  std::vector<std::vector<std::size_t>> confusion;  // [true][pred]
};

// pred/truth hold class indices in [0, n_classes). All 0/0 rates are 0.
inline MetricsReport compute_metrics(const std::vector<std::size_t>& pred,
                                     const std::vector<std::size_t>& truth,
                                     std::size_t n_classes) {
  if (pred.size() != truth.size())
    throw ValidationError("compute_metrics: prediction/truth length mismatch");
  if (pred.empty()) throw ValidationError("compute_metrics: empty input");
  MetricsReport r;
  r.confusion.assign(n_classes, std::vector<std::size_t>(n_classes, 0));
  std::size_t correct = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] >= n_classes || truth[i] >= n_classes)
      throw ValidationError("compute_metrics: class index out of range");
    r.confusion[truth[i]][pred[i]] += 1;
    if (pred[i] == truth[i]) ++correct;
  }
  r.accuracy = double(correct) / double(pred.size());
  r.per_class.resize(n_classes);
  double f1_sum = 0, f1_present_sum = 0, recall_sum = 0;
  std::size_t present = 0, truth_classes = 0;
  for (std::size_t c = 0; c < n_classes; ++c) {
    std::size_t tp = r.confusion[c][c], fn = 0, fp = 0;
    for (std::size_t k = 0; k < n_classes; ++k) {
      if (k != c) {
        fn += r.confusion[c][k];
        fp += r.confusion[k][c];
      }
    }
    ClassMetrics& m = r.per_class[c];
    m.precision = (tp + fp) ? double(tp) / double(tp + fp) : 0.0;
    m.recall = (tp + fn) ? double(tp) / double(tp + fn) : 0.0;
    m.f1 = (m.precision + m.recall > 0)
               ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
               : 0.0;
    f1_sum += m.f1;
    bool in_truth = (tp + fn) > 0;
    bool in_pred = (tp + fp) > 0;
    if (in_truth || in_pred) {
      f1_present_sum += m.f1;
      ++present;
    }
    if (in_truth) {
      recall_sum += m.recall;
      ++truth_classes;
    }
  }
  r.macro_f1 = f1_sum / double(n_classes);
  r.macro_f1_present = present ? f1_present_sum / double(present) : 0.0;
  r.balanced_accuracy = truth_classes ? recall_sum / double(truth_classes) : 0.0;
  return r;
}

}  // namespace misinfo
