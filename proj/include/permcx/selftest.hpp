#pragma once

#include <string>
#include <vector>

namespace permcx::selftest {

struct CriterionResult {
    std::string id;     // "C1".."C10"
    std::string name;
    std::string tags;   // space-separated filter keywords
    bool pass = false;
    std::string detail; // console summary, may mention timings
    std::string report; // deterministic report body, written to report files
};

/// Runs the acceptance criteria (all, or those whose id/name/tags contain the
/// filter substring). The determinism criterion reruns the others and
/// compares report bytes, so expect roughly double runtime when it is
/// included.
std::vector<CriterionResult> run_acceptance(const std::string& filter = "");

/// Writes one report file per criterion into the directory (created if
/// needed). Returns false with a message on I/O failure.
bool write_reports(const std::vector<CriterionResult>& results, const std::string& out_dir,
                   std::string* error);

} // namespace permcx::selftest
