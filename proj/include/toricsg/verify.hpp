#pragma once

#include "toricsg/report.hpp"

namespace toricsg {

struct VerifyOptions {
    i64 bound = 200;    // enumeration window for oracle checks
    i64 budget = 64;    // per-class / per-witness search budget
    i64 cell_cap = Oracle::kDefaultCellCap;
    int index_samples = 3;  // elements sampled for the index-map cross-check
};

struct VerifyOutcome {
    json checks;                    // name -> {status, ...}
    bool mismatch = false;          // formula vs brute force disagreed
    bool budget_exhausted = false;  // some check ended without a conclusion
    bool all_verified() const { return !mismatch && !budget_exhausted; }
};

/// Runs every lemma-level oracle check against the K-theory formula:
/// structure-matrix identities, the S/F quotient with witnesses, the cone
/// and translator certificates, face exactness, the class decomposition,
/// the L4 bijection and the index-map consistency checks.
VerifyOutcome verify_instance(const ToricSemigroup& S, const VerifyOptions& opt = {});

}  // namespace toricsg
