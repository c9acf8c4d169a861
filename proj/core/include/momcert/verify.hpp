#ifndef MOMCERT_VERIFY_HPP
#define MOMCERT_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "momcert/decomp.hpp"
#include "momcert/instance.hpp"
#include "momcert/moments.hpp"

namespace momcert {

struct CheckedFactor {
    FactorEntry entry;
    bool endpoints_agree = false;  // W(a) == W(b)
};

/// Verdicts for one instance. Failures are recorded here, never thrown.
///
/// counterexample_established is endpoints_ok && moments_all_zero &&
/// claim1_certified && !composition_condition.
struct Report {
    bool endpoints_ok = false;
    std::size_t moments_checked = 0;
    bool moments_all_zero = false;
    std::vector<MomentResult<CycElem>> moments;
    bool claim1_certified = false;
    std::vector<CheckedFactor> factor_entries;
    bool composition_condition = false;
    bool counterexample_established = false;

    // Present only when the numeric shadow was requested.
    std::optional<double> numeric_max_abs;
    // max |numeric - exact| / max(1, |exact|) over the checked indices
    std::optional<double> numeric_max_deviation;
    std::optional<double> numeric_tolerance;
    std::optional<bool> numeric_within_tolerance;
};

struct VerifyOptions {
    std::size_t max_moment = 20;
    bool numeric = false;
    double tolerance = 1e-6;
};

/// True iff the instance carries witnesses B, D with Q = B + D, deg P > 1,
/// P = A(B) and P = C(D) for some A, C, B(a) = B(b) and D(a) = D(b).
/// A true result proves m_i(P, Q, a, b) = 0 for every i >= 1.
bool verify_claim1_witness(const Instance& inst);

Report verify_instance(const Instance& inst, const VerifyOptions& options = {});

}  // namespace momcert

#endif  // MOMCERT_VERIFY_HPP
