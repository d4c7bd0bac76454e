#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spaudit/common.hpp"

namespace spaudit {

// One (class, attribute) partition of a dataset. Spurious groups are the ones
// whose attribute disagrees with the class's majority pattern.
struct GroupSpec {
  int group_id = 0;
  int class_id = 0;
  int attribute_id = 0;
  int64_t count = 0;
  bool is_spurious = false;
};

struct SyntheticConfig {
  int n_classes = 2;
  int d_core = 10;
  int d_spur = 5;
  int d_noise = 5;
  double core_sep = 1.0;
  double spur_sep = 2.0;
  double core_std = 1.0;
  double spur_std = 1.0;
  double noise_std = 1.0;
  double spur_strength = 0.95;  // p_maj: P(attribute == pattern(class)) in train
  int64_t n_train = 2000;
  int64_t n_test = 2000;
  uint64_t seed = 0;

  int total_dims() const { return d_core + d_spur + d_noise; }
};

struct DatasetManifest {
  std::string name;
  int64_t n_samples = 0;
  int n_classes = 0;
  std::vector<GroupSpec> groups;
  std::optional<SyntheticConfig> generator;  // nullopt = "external"
  uint64_t seed = 0;

  const GroupSpec* find_group(int group_id) const {
    for (const auto& g : groups)
      if (g.group_id == group_id) return &g;
    return nullptr;
  }
};

struct SampleRecord {
  int64_t sample_id = 0;
  std::vector<double> features;
  int label = 0;
  int group = 0;
  int attribute = 0;
};

struct Dataset {
  DatasetManifest manifest;
  std::vector<SampleRecord> samples;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

inline ValidationReport validate_manifest(const DatasetManifest& manifest,
                                          const std::vector<SampleRecord>& samples) {
  ValidationReport report;
  auto add = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  if (samples.empty()) {
    add("count mismatch: no samples supplied");
    return report;
  }
  if (static_cast<int64_t>(samples.size()) != manifest.n_samples)
    add("count mismatch: manifest n_samples=" + std::to_string(manifest.n_samples) +
        ", samples supplied=" + std::to_string(samples.size()));

  int64_t group_total = 0;
  for (const auto& g : manifest.groups) group_total += g.count;
  if (group_total != manifest.n_samples)
    add("count mismatch: group counts sum to " + std::to_string(group_total) +
        ", manifest n_samples=" + std::to_string(manifest.n_samples));

  const size_t dims = samples.front().features.size();
  for (const auto& s : samples) {
    const GroupSpec* g = manifest.find_group(s.group);
    if (g == nullptr) {
      add("unknown group: sample " + std::to_string(s.sample_id) + " has group_id=" +
          std::to_string(s.group));
      continue;
    }
    if (s.label != g->class_id || s.attribute != g->attribute_id)
      add("group mismatch: sample " + std::to_string(s.sample_id) + " (label=" +
          std::to_string(s.label) + ", attribute=" + std::to_string(s.attribute) +
          ") inconsistent with group " + std::to_string(s.group));
    if (s.label < 0 || s.label >= manifest.n_classes)
      add("unknown class: sample " + std::to_string(s.sample_id) + " has label=" +
          std::to_string(s.label));
    if (s.features.size() != dims)
      add("dimension mismatch: sample " + std::to_string(s.sample_id) + " has " +
          std::to_string(s.features.size()) + " features, expected " + std::to_string(dims));
  }
  return report;
}

// Column-matrix view of a dataset for the numeric code paths.
struct DataView {
  Eigen::MatrixXd X;       // n x d
  Eigen::VectorXi y;       // labels
  Eigen::VectorXi group;   // group ids
  Eigen::VectorXi attr;    // attribute ids
  std::vector<int64_t> ids;
  int n_classes = 0;
  int n_groups = 0;

  int64_t n() const { return X.rows(); }
  int dims() const { return static_cast<int>(X.cols()); }
};

inline DataView to_view(const Dataset& ds) {
  DataView v;
  const int64_t n = static_cast<int64_t>(ds.samples.size());
  const int d = n > 0 ? static_cast<int>(ds.samples.front().features.size()) : 0;
  v.X.resize(n, d);
  v.y.resize(n);
  v.group.resize(n);
  v.attr.resize(n);
  v.ids.resize(n);
  for (int64_t i = 0; i < n; ++i) {
    const SampleRecord& s = ds.samples[i];
    if (static_cast<int>(s.features.size()) != d)
      throw ValidationError("dimension mismatch in sample " + std::to_string(s.sample_id));
    for (int j = 0; j < d; ++j) v.X(i, j) = s.features[j];
    v.y(i) = s.label;
    v.group(i) = s.group;
    v.attr(i) = s.attribute;
    v.ids[i] = s.sample_id;
  }
  v.n_classes = ds.manifest.n_classes;
  v.n_groups = static_cast<int>(ds.manifest.groups.size());
  return v;
}

}  // namespace spaudit
