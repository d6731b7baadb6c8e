#pragma once

// Verification suites: each assembles module checks into a CheckReport.

#include <string>
#include <vector>

#include "cuntz/construct.hpp"
#include "cuntz/report.hpp"

namespace cuntz {

enum class Backend { exact, numeric };

std::string to_string(Backend b);

/// spectral, cyclic-fixed, exchange, nogo, algebra-laws.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite or an n outside its bounds:
/// spectral and cyclic-fixed 2..6, exchange even ranks 2..6, nogo 2 only,
/// algebra-laws 2..6.
void validate_suite_request(const std::string& suite, unsigned n);

/// Runs one suite. The numeric backend must be configured beforehand
/// (configure_numeric) if non-default precision or tolerance is wanted.
CheckReport run_suite(const std::string& suite, unsigned n, Backend backend, const SuiteOptions& options = {});

template <CoefficientField S>
std::vector<Check> spectral_checks(unsigned n, const SuiteOptions& options);

template <CoefficientField S>
std::vector<Check> algebra_law_checks(unsigned n, const SuiteOptions& options);

/// Statuses that differ between two reports of the same suite, as
/// "id: exact=pass numeric=fail" lines; ids present in only one report count.
std::vector<std::string> verdict_differences(const CheckReport& a, const CheckReport& b);

}  // namespace cuntz
