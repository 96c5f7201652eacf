#pragma once

#include "qconf/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qconf {

struct SuiteOptions {
  int hopf_order = 6;
  std::size_t confluence_length = 4;
  std::size_t cocycle_instances = 100;
  std::uint32_t seed = 20240611;
};

/// jacobi, cybe, reality, basis-maps, subalgebras, hopf, comparisons, dimensions, all.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// Check groups making up a suite, in report order.
std::vector<CheckGroup> suite_groups(const std::string& name, const SuiteOptions& options = {});

std::vector<Check> jacobi_checks();
/// delta([x,y]) = x.delta(y) - y.delta(x) on seeded random (x, y, r) per algebra.
std::vector<Check> cocycle_checks(std::size_t instances, std::uint32_t seed);
/// Hopf-level groups at truncation order `order`; the tabulated antipode is
/// compared only when `compare_printed` is set.
std::vector<CheckGroup> hopf_groups(int order, bool compare_printed, std::size_t confluence_length);

}  // namespace qconf
