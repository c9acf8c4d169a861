#include "momcert/verify.hpp"

#include <algorithm>
#include <cmath>

namespace momcert {

bool verify_claim1_witness(const Instance& inst) {
    if (!inst.witness_b || !inst.witness_d) return false;
    const auto& wb = *inst.witness_b;
    const auto& wd = *inst.witness_d;
    if (inst.p.degree() <= 1) return false;
    if (wb + wd != inst.q) return false;
    if (wb.degree() < 1 || wd.degree() < 1) return false;
    if (!outer_factor(inst.p, wb) || !outer_factor(inst.p, wd)) return false;
    return eval(wb, inst.a) == eval(wb, inst.b) && eval(wd, inst.a) == eval(wd, inst.b);
}

Report verify_instance(const Instance& inst, const VerifyOptions& options) {
    Report report;
    const CycElem& a = inst.a;
    const CycElem& b = inst.b;

    report.endpoints_ok = a != b && eval(inst.p, a) == eval(inst.p, b) && eval(inst.q, a) == eval(inst.q, b);

    report.moments_checked = options.max_moment;
    report.moments = moment_sequence(inst.p, inst.q, a, b, options.max_moment);
    report.moments_all_zero =
        std::all_of(report.moments.begin(), report.moments.end(), [](const auto& m) { return m.value.is_zero(); });

    report.claim1_certified = verify_claim1_witness(inst);

    if (inst.p.degree() > 1) {
        for (auto& entry : common_right_factors(inst.p, inst.q)) {
            const bool agree = eval(entry.inner, a) == eval(entry.inner, b);
            report.composition_condition = report.composition_condition || agree;
            report.factor_entries.push_back({std::move(entry), agree});
        }
    }

    if (options.numeric) {
        const ComplexApprox na = to_complex(a), nb = to_complex(b);
        double max_abs = 0.0, max_dev = 0.0;
        for (auto& m : report.moments) {
            m.numeric = moment_numeric(inst.p, inst.q, na, nb, m.index);
            max_abs = std::max(max_abs, std::abs(*m.numeric));
            const ComplexApprox exact = to_complex(m.value);
            max_dev = std::max(max_dev, std::abs(*m.numeric - exact) / std::max(1.0, std::abs(exact)));
        }
        report.numeric_max_abs = max_abs;
        report.numeric_max_deviation = max_dev;
        report.numeric_tolerance = options.tolerance;
        report.numeric_within_tolerance =
            report.moments_all_zero ? max_abs < options.tolerance : max_dev < options.tolerance;
    }

    report.counterexample_established = report.endpoints_ok && report.moments_all_zero &&
                                        report.claim1_certified && !report.composition_condition;
    return report;
}

}  // namespace momcert
