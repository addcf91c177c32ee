#ifndef PTLAB_CLI_VERIFY_SUITE_HPP
#define PTLAB_CLI_VERIFY_SUITE_HPP

#include <optional>
#include <vector>

#include "ptlab/fock.hpp"
#include "ptlab/params.hpp"
#include "ptlab/pseudoherm.hpp"

namespace ptlab::cli {

/// Hermiticity and PT symmetry must fail (lower bounds); pseudo-Hermiticity
/// under P1, P2, T, PT must hold; under P it is only reported.
std::vector<CheckResult> symmetry_checks(const ModelParams& p, int n_max, std::optional<double> perturbation = {},
                                         std::optional<MetricName> only_metric = {});

/// Diagonalization through the intermediate and final variables. CaseI only;
/// returns nothing otherwise. Form residuals are relative to max(1, ||C||).
std::vector<CheckResult> pipeline_checks(const ModelParams& p);

/// Mode swap of the Hamiltonian, the branch flip it induces and its action on
/// the derived quantities. CaseI only; returns nothing otherwise.
std::vector<CheckResult> permutation_checks(const ModelParams& p);

struct VerifyOptions
{
    AppendixOptions appendix;
    std::optional<MetricName> metric;
};

/// All groups, run concurrently and concatenated in a fixed order.
std::vector<CheckResult> verification_suite(const ModelParams& p, const VerifyOptions& options);

bool asserted_checks_pass(const std::vector<CheckResult>& checks);

} // namespace ptlab::cli

#endif
