// Acceptance suite: one result per criterion, exercised over a window.

#pragma once

#include <string>
#include <vector>

#include "kq/window.hpp"

namespace kq::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // first failure witness, or timing/summary info
};

std::vector<CriterionResult> run_acceptance(const WindowConfig& w);

}  // namespace kq::selftest
