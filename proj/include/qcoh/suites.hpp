#pragma once

// Named check suites behind the CLI's `check` subcommand.  Each returns a
// CheckReport whose violations are failures of the suite's own assertion;
// for the expected-violation suites (mono-gio, strong-mono) the assertion
// is that the documented counterexample inequality is present.

#include <cstdint>
#include <vector>

#include "qcoh/harness.hpp"

namespace qcoh::suites {

struct Config {
    int trials = 200;
    int dim = 3;
    std::uint64_t seed = 42;
};

// Every measure instance exercised by positivity/faithfulness, built over
// the standard grid {0.2, 0.5, 0.8, 1.3, 1.7, 2.0} intersected with each
// measure's domain.
std::vector<CoherenceMeasureId> measure_catalog();

CheckReport positivity(const Config& cfg);
CheckReport faithfulness(const Config& cfg);
CheckReport comparison(const Config& cfg);
CheckReport invariance(const Config& cfg);
CheckReport mono_gio(const Config& cfg);
CheckReport strong_mono(const Config& cfg);
CheckReport modified_strong(const Config& cfg);
CheckReport additivity(const Config& cfg);
CheckReport continuity(const Config& cfg);
CheckReport oracle(const Config& cfg);

// name -> suite; throws ParamOutOfRange for an unknown name.
CheckReport run_suite(const std::string& name, const Config& cfg);
std::vector<std::string> suite_names();

} // namespace qcoh::suites
