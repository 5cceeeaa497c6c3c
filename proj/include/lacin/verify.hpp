// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lacin/cin.hpp"

namespace lacin {

struct VerifyFailure {
    CinKind kind;
    std::uint32_t n;
    std::string check;
    std::string detail;
};

/// Structural, classification, factor, router-vs-oracle and layout checks
/// on one matrix. Empty result means every check passed.
std::vector<VerifyFailure> verify_matrix(const PairingMatrix& m);

/// Builds and verifies each (kind, n) with lo <= n <= hi. Xor only visits
/// powers of two. Failures come back in (kind, n) order.
std::vector<VerifyFailure> verify_sweep(const std::vector<CinKind>& kinds, std::uint32_t lo, std::uint32_t hi);

}  // namespace lacin
