#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "dsta/objective.hpp"

namespace dsta::test {

// Returns the scripted costs in order, cycling.
class ScriptedObjective final : public Objective {
 public:
  ScriptedObjective(std::vector<double> costs, std::size_t n = 4, int m = 3)
      : costs_(std::move(costs)), n_(n), m_(m) {}
  Representation representation() const override { return Representation::Value; }
  std::size_t dimension() const override { return n_; }
  int alphabet_size() const override { return m_; }
  double evaluate(std::span<const int>) const override {
    return costs_[next_++ % costs_.size()];
  }

 private:
  std::vector<double> costs_;
  std::size_t n_;
  int m_;
  mutable std::size_t next_ = 0;
};

inline std::vector<int> iota_vector(std::size_t n, int first = 0) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), first);
  return v;
}

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("dsta-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace dsta::test
