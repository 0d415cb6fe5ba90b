// Acceptance suite: one criterion per run line, each with its pinned
// tolerance and runtime budget. Exit status 0 iff every selected criterion
// passes.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run a single criterion
//   acceptance --list          list criteria

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bhlab/bhlab.hpp"

using namespace bhlab;

namespace {

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;
    std::function<bool(std::string&)> run;
};

double rel_err(double got, double want) {
    if (want == 0.0) return std::abs(got);
    return std::abs(got - want) / std::abs(want);
}

bool criterion_constants(std::string& detail) {
    const double c2 = c_constant_closed(2, 1.0, Field::Complex);
    const double want2 = 2.0 / std::sqrt(std::numbers::pi);
    const double c3 = c_constant_closed(3, 1.0, Field::Complex);
    const double want3 = 1.2183754370074189; // 40-digit Gamma product, frozen
    std::ostringstream os;
    os << "C(2,1)=" << format17(c2) << " C(3,1)=" << format17(c3);
    detail = os.str();
    return rel_err(c2, want2) <= 1e-12 && std::abs(c3 - want3) <= 1e-3;
}

bool criterion_closed_vs_recursive(std::string& detail) {
    int equal = 0, improved = 0;
    for (Field f : {Field::Real, Field::Complex})
        for (int ti = 0; ti <= 9; ++ti) {
            const double t = 1.0 + 0.1 * ti;
            for (int m = 1; m <= 30; ++m) {
                const double closed = c_constant_closed(m, t, f);
                const double recursive = c_constant_recursive(m, t, f);
                if (closed > recursive * (1.0 + 1e-10)) {
                    detail = "closed exceeds recursive at m=" + std::to_string(m);
                    return false;
                }
                if (rel_err(closed, recursive) <= 1e-12)
                    ++equal;
                else
                    ++improved;
            }
        }
    detail = "closed <= recursive on 600 grid points (" + std::to_string(improved) +
             " strictly improved, " + std::to_string(equal) + " equal; equality iff m <= 2)";
    return improved == 2 * 10 * 28 && equal == 2 * 10 * 2;
}

bool criterion_omega_f(std::string& detail) {
    Rng rng(2024);
    double worst = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        Rng sub = rng.derive(trial);
        const int n = sub.uniform_int(1, 8);
        const double q = sub.uniform(2.0, 4.0);
        std::vector<double> rs(n);
        for (auto& r : rs) r = sub.uniform(1.0, q - 1e-9);
        double R = 0.0;
        for (double r : rs) R += r / (q - r);
        const double w_rec = omega_n(rs, q, EvalMode::Recursive);
        worst = std::max(worst, rel_err(w_rec, q * R / (1.0 + R)));
        const auto f_rec = f_n(rs, q, EvalMode::Recursive);
        double sum = 0.0;
        for (int k = 0; k < n; ++k) {
            worst = std::max(worst, rel_err(f_rec[k], rs[k] / (R * (q - rs[k]))));
            sum += f_rec[k];
        }
        worst = std::max(worst, std::abs(sum - 1.0));
        if (worst > 1e-12) {
            detail = "identity broken at trial " + std::to_string(trial);
            return false;
        }
    }
    std::ostringstream os;
    os << "10^4 draws, worst deviation " << format17(worst);
    detail = os.str();
    return true;
}

bool criterion_p_zero(std::string& detail) {
    const double p0 = p_zero();
    const double residual = std::abs(gamma_fn((p0 + 1.0) / 2.0) - std::sqrt(std::numbers::pi) / 2.0);
    std::ostringstream os;
    os << "p0=" << format17(p0) << " residual=" << format17(residual);
    detail = os.str();
    return residual < 1e-13 && p0 > 1.84 && p0 < 1.86;
}

bool criterion_khinchine(std::string& detail) {
    std::vector<double> x11 = {1.0, 1.0};
    const double exact = khinchine_exact_small(std::span<const double>(x11), 1.0).ratio;
    if (rel_err(exact, khinchine(1.0, Field::Real)) > 1e-12) {
        detail = "equality case x=(1,1), p=1 failed";
        return false;
    }
    std::vector<double> flat(64, 1.0 / 8.0);
    const auto mc = khinchine_mc(std::span<const double>(flat), 1.9, 1000000, 777);
    const double a19 = khinchine(1.9, Field::Real);
    if (std::abs(mc.ratio - a19) > 0.05 * a19) {
        detail = "MC ratio " + format17(mc.ratio) + " not within 5% of " + format17(a19);
        return false;
    }
    std::vector<std::complex<double>> ones4(4, {1.0, 0.0});
    const double quad = khinchine_exact_small(std::span<const std::complex<double>>(ones4), 1.0).ratio;
    if (quad > khinchine(1.0, Field::Complex) + 1e-6) {
        detail = "complex quadrature ratio exceeds the constant";
        return false;
    }
    std::ostringstream os;
    os << "exact=" << format17(exact) << " mc=" << format17(mc.ratio) << " quad=" << format17(quad);
    detail = os.str();
    return true;
}

bool criterion_interpolation_fuzz(std::string& detail) {
    double worst = -1.0;
    for (Field f : {Field::Real, Field::Complex}) {
        VerifyConfig cfg;
        cfg.trials = 500;
        cfg.field = f;
        cfg.seed = 6;
        const auto out = fuzz_interpolation(cfg);
        if (out.verdict != Verdict::Pass) {
            detail = "violation in field " + std::string(to_string(f));
            return false;
        }
        worst = std::max(worst, out.worst_slack);
    }
    detail = "10^3 trials, worst slack " + format17(worst);
    return true;
}

bool criterion_minkowski_blei_fuzz(std::string& detail) {
    double worst = -1.0;
    for (Field f : {Field::Real, Field::Complex}) {
        VerifyConfig cfg;
        cfg.trials = 500;
        cfg.field = f;
        cfg.seed = 7;
        const auto mk = fuzz_minkowski(cfg);
        const auto bl = fuzz_blei(cfg);
        if (mk.verdict != Verdict::Pass || bl.verdict != Verdict::Pass) {
            detail = "violation in field " + std::string(to_string(f));
            return false;
        }
        worst = std::max({worst, mk.worst_slack, bl.worst_slack});
    }
    detail = "10^3 trials each, worst slack " + format17(worst);
    return true;
}

bool criterion_bh_fuzz(std::string& detail) {
    for (double t : {1.0, 1.5})
        for (int m : {2, 3}) {
            VerifyConfig cfg;
            cfg.trials = 500;
            cfg.field = Field::Real;
            cfg.m = m;
            cfg.dim = 2;
            cfg.t = t;
            cfg.seed = 8;
            const auto out = fuzz_bh(cfg);
            if (out.verdict != Verdict::Pass || out.inconclusive != 0) {
                detail = "ratio above constant at m=" + std::to_string(m);
                return false;
            }
        }
    const auto id2 = bh_ratio(MultilinearForm<double>(identity_matrix<double>(2)), 1.0);
    if (rel_err(id2.ratio, std::pow(2.0, -0.25)) > 1e-12 || !id2.norm_exact) {
        detail = "identity-form ratio != 2^{-1/4}";
        return false;
    }
    detail = "2000 forms with exact norms, identity ratio " + format17(id2.ratio);
    return true;
}

bool criterion_summing_bound(std::string& detail) {
    Rng rng(9);
    const double r = bh_exponent(2, 1.0);
    const double c = c_constant_closed(2, 1.0, Field::Real);
    double worst_margin = 1e300;
    for (int trial = 0; trial < 200; ++trial) {
        Rng sub = rng.derive(trial);
        MultilinearForm<double> u(random_tensor<double>(
            sub, {2, 2}, trial % 2 ? Ensemble::Signs : Ensemble::Gaussian));
        const double lower = summing_lower_bound(u, r, 25, 5, 9000 + trial);
        const double norm = sup_norm(u, SupNormMethod::ExactSigns).value;
        if (lower > c * norm + 1e-9) {
            detail = "lower bound exceeds C*norm at trial " + std::to_string(trial);
            return false;
        }
        worst_margin = std::min(worst_margin, c * norm - lower);
    }
    detail = "200 bilinear instances, smallest margin " + format17(worst_margin);
    return true;
}

bool criterion_exponent_grid(std::string& detail) {
    int strict_count = 0, equal_count = 0;
    for (int n = 2; n < 12; ++n)
        for (int N = n + 1; N <= 12; ++N)
            for (double q : {2.0, 3.0})
                for (double r : {1.0, 1.5}) {
                    const auto cmp = exponent_comparison(n, N, q, r);
                    const bool divides = N % n == 0;
                    if (divides) {
                        if (rel_err(cmp.old_exponent, cmp.new_exponent) > 1e-12 || cmp.strict) {
                            detail = "expected equality at n=" + std::to_string(n) +
                                     " N=" + std::to_string(N);
                            return false;
                        }
                        ++equal_count;
                    } else {
                        if (!cmp.strict) {
                            detail = "expected strict improvement at n=" + std::to_string(n) +
                                     " N=" + std::to_string(N);
                            return false;
                        }
                        ++strict_count;
                    }
                }
    detail = std::to_string(strict_count) + " strict, " + std::to_string(equal_count) +
             " equal; strict iff n does not divide N";
    return true;
}

bool criterion_asymptotics(std::string& detail) {
    std::ostringstream os;
    for (double t : {1.0, 1.5}) {
        const auto env = asymptotic_envelope(t, Field::Complex, 10000);
        if (env.last_decade_increase >= 0.01) {
            detail = "running max grew by >= 1% in the last decade at t=" + format17(t);
            return false;
        }
        os << "t=" << t << ": kappa=" << format17(env.kappa)
           << " last-decade increase=" << format17(env.last_decade_increase) << "  ";
    }
    detail = os.str();
    return true;
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "constant recovery at t=1 (complex closed form)", 1.0, criterion_constants},
        {2, "closed form never exceeds the recursion (m <= 30, t grid, both fields)", 5.0,
         criterion_closed_vs_recursive},
        {3, "omega/f recursion matches closed forms on 10^4 draws", 5.0, criterion_omega_f},
        {4, "p0 solves its defining Gamma equation", 0.1, criterion_p_zero},
        {5, "Khinchine orientation and extremality (exact, MC, quadrature)", 30.0,
         criterion_khinchine},
        {6, "interpolation bound fuzz, 10^3 tensors, both fields", 10.0,
         criterion_interpolation_fuzz},
        {7, "Minkowski and Blei fuzz, 10^3 trials each", 10.0, criterion_minkowski_blei_fuzz},
        {8, "power-sum ratio fuzz with exact norms (m = 2, 3; t = 1, 1.5)", 60.0,
         criterion_bh_fuzz},
        {9, "summing lower bound never beats C * exact norm (200 bilinear forms)", 60.0,
         criterion_summing_bound},
        {10, "block-chaining vs direct exponents on the full grid", 1.0, criterion_exponent_grid},
        {11, "asymptotic envelope running max stabilizes (complex, m <= 10^4)", 30.0,
         criterion_asymptotics},
    };

    int selected = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--list") == 0) {
            for (const auto& c : criteria) std::printf("%2d  %s\n", c.id, c.name.c_str());
            return 0;
        }
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) selected = std::atoi(argv[++i]);
    }

    int failures = 0;
    for (const auto& c : criteria) {
        if (selected != 0 && c.id != selected) continue;
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.time_limit_s) {
            ok = false;
            detail += " [exceeded " + std::to_string(c.time_limit_s) + " s budget]";
        }
        std::printf("%s criterion %2d: %s (%.2f s) %s\n", ok ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), elapsed, detail.c_str());
        if (!ok) ++failures;
    }
    if (selected == 0)
        std::printf("%s: %d/%zu criteria passed\n", failures ? "FAIL" : "PASS",
                    static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
