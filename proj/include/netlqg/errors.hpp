#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace netlqg {

/// Configuration rejected by model::validate. Carries every violated
/// invariant as a "field.path: message" string.
class InvalidConfig : public std::runtime_error {
public:
    explicit InvalidConfig(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "invalid config:";
        for (const auto& s : v) out += "\n  " + s;
        return out;
    }
    std::vector<std::string> violations_;
};

/// A Riccati-type recursion left the admissible region (unbounded iterate).
class Diverged : public std::runtime_error {
public:
    explicit Diverged(const std::string& what) : std::runtime_error(what) {}
};

/// Requested cost is at or below the classical minimum; no finite rate achieves it.
class CostNotAchievable : public std::domain_error {
public:
    explicit CostNotAchievable(const std::string& what) : std::domain_error(what) {}
};

/// Requested rate is at or below log2|A|, the stabilization threshold.
class RateBelowStabilization : public std::domain_error {
public:
    explicit RateBelowStabilization(const std::string& what) : std::domain_error(what) {}
};

/// Every Monte Carlo trial hit the divergence threshold.
class AllTrialsDiverged : public std::runtime_error {
public:
    explicit AllTrialsDiverged(const std::string& what) : std::runtime_error(what) {}
};

/// Quantizer training set cannot support the requested level count.
class DegenerateSamples : public std::invalid_argument {
public:
    explicit DegenerateSamples(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace netlqg
