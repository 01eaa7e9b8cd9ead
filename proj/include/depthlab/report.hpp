#pragma once

#include <string>
#include <vector>

namespace depthlab {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;  // counterexample or statistics
};

struct CheckReport {
    bool pass = true;
    std::vector<CheckResult> checks;
    void add(CheckResult c) {
        pass = pass && c.pass;
        checks.push_back(std::move(c));
    }
};

}  // namespace depthlab
