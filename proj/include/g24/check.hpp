#pragma once

#include <stdexcept>
#include <string>

namespace g24 {

/// Outcome of a pass/fail verification; `witness` names the first offending
/// object when `ok` is false.
struct CheckResult {
    bool ok = true;
    std::string witness;

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

/// Thrown by operations that return a verified object and cannot produce one.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Selects the serial reference path or the OpenMP path of a kernel.
/// Both produce identical results.
enum class Exec { serial, parallel };

}  // namespace g24
