#pragma once

// Seeded fuzz campaigns for every inequality in the toolkit, with JSON
// reports and witness replay. A campaign never flags a violation unless the
// compared sides are exact (or certified one-sided); everything else is
// counted as inconclusive.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "bhlab/constants.hpp"
#include "bhlab/forms_lab.hpp"
#include "bhlab/generate.hpp"
#include "bhlab/interpolation.hpp"
#include "bhlab/mixed_norms.hpp"
#include "bhlab/tensor_io.hpp"

namespace bhlab {

struct VerifyConfig {
    std::uint64_t seed = 42;
    int trials = 1000;
    Field field = Field::Real;
    double tol = 0.0; // 0 = per-check default
    int m = 2;        // form order (bh) / block setup (dps)
    int dim = 2;      // slot dimension (bh)
    double t = 1.0;   // power-sum parameter (bh, dps)
};

enum class Verdict { Pass, Violation };

inline std::string_view to_string(Verdict v) {
    return v == Verdict::Pass ? "pass" : "violation";
}

struct CheckOutcome {
    std::string check;
    std::uint64_t seed = 0;
    int trials = 0;
    Field field = Field::Real;
    double tol = 0.0;
    double worst_slack = -std::numeric_limits<double>::infinity();
    double worst_ratio = 0.0;
    int inconclusive = 0;
    Verdict verdict = Verdict::Pass;
    nlohmann::json params;
    nlohmann::json witness;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["check"] = check;
        j["seed"] = seed;
        j["trials"] = trials;
        j["field"] = std::string(to_string(field));
        j["tol"] = tol;
        j["worst_slack"] = worst_slack;
        j["worst_ratio"] = worst_ratio;
        j["inconclusive"] = inconclusive;
        j["verdict"] = std::string(to_string(verdict));
        j["params"] = params;
        j["witness"] = witness;
        return j;
    }
};

namespace detail {

inline double relative_slack(double lhs, double rhs) {
    if (rhs == 0.0) return lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return lhs / rhs - 1.0;
}

inline double effective_tol(const VerifyConfig& cfg, double fallback) {
    return cfg.tol > 0.0 ? cfg.tol : fallback;
}

template <class Fn>
void with_field(Field f, Fn&& fn) {
    if (f == Field::Real)
        fn(double{});
    else
        fn(std::complex<double>{});
}

} // namespace detail

/// Minkowski exchange inequality on random order-2 tensors (exponents below
/// 1 included); every fifth trial is a rank-one tensor, where equality is
/// asserted as well.
inline CheckOutcome fuzz_minkowski(const VerifyConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    CheckOutcome out;
    out.check = "minkowski";
    out.seed = cfg.seed;
    out.trials = cfg.trials;
    out.field = cfg.field;
    out.tol = detail::effective_tol(cfg, 1e-10);
    out.params = {{"dims_max", 6}};
    Rng base(cfg.seed);
    detail::with_field(cfg.field, [&](auto tag) {
        using S = decltype(tag);
        for (int trial = 0; trial < cfg.trials; ++trial) {
            Rng rng = base.derive(static_cast<std::uint64_t>(trial));
            const std::size_t n1 = static_cast<std::size_t>(rng.uniform_int(1, 6));
            const std::size_t n2 = static_cast<std::size_t>(rng.uniform_int(1, 6));
            const bool rank_one = trial % 5 == 4;
            Tensor<S> t = [&] {
                if (!rank_one)
                    return random_tensor<S>(rng, {n1, n2},
                                            trial % 2 ? Ensemble::Signs : Ensemble::Gaussian);
                std::vector<S> u(n1), v(n2), e(n1 * n2);
                for (auto& x : u) x = detail::draw_scalar(rng, Ensemble::Gaussian, S{});
                for (auto& x : v) x = detail::draw_scalar(rng, Ensemble::Gaussian, S{});
                for (std::size_t i = 0; i < n1; ++i)
                    for (std::size_t j = 0; j < n2; ++j) e[i * n2 + j] = u[i] * v[j];
                return Tensor<S>({n1, n2}, std::move(e));
            }();
            const double p = rng.uniform(0.3, 2.5);
            const double q = p + rng.uniform(0.05, 2.0);
            const auto [lhs, rhs] = minkowski_gap(t, p, q);
            double slack = detail::relative_slack(lhs, rhs);
            if (rank_one) slack = std::max(slack, detail::relative_slack(rhs, lhs));
            if (slack > out.worst_slack) {
                out.worst_slack = slack;
                out.worst_ratio = rhs == 0.0 ? 0.0 : lhs / rhs;
                out.witness = {{"check", "minkowski"}, {"tensor", tensor_to_json(t)},
                               {"p", p},              {"q", q},
                               {"lhs", lhs},          {"rhs", rhs},
                               {"rank_one", rank_one}, {"slack", slack}};
            }
            if (slack > out.tol) out.verdict = Verdict::Violation;
        }
    });
    return out;
}

/// Blei-type inequality on random tensors of order <= 4.
inline CheckOutcome fuzz_blei(const VerifyConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    CheckOutcome out;
    out.check = "blei";
    out.seed = cfg.seed;
    out.trials = cfg.trials;
    out.field = cfg.field;
    out.tol = detail::effective_tol(cfg, 1e-10);
    out.params = {{"order_max", 4}, {"dims_max", 4}};
    Rng base(cfg.seed);
    detail::with_field(cfg.field, [&](auto tag) {
        using S = decltype(tag);
        for (int trial = 0; trial < cfg.trials; ++trial) {
            Rng rng = base.derive(static_cast<std::uint64_t>(trial));
            const int m = rng.uniform_int(1, 4);
            std::vector<std::size_t> shape(static_cast<std::size_t>(m));
            for (auto& n : shape) n = static_cast<std::size_t>(rng.uniform_int(1, 4));
            Tensor<S> t = random_tensor<S>(rng, shape,
                                           trial % 2 ? Ensemble::Signs : Ensemble::Gaussian);
            const int k = rng.uniform_int(1, m);
            const double s = rng.uniform(1.0, 3.0);
            const double q = s + rng.uniform(0.0, 2.0);
            const auto [lhs, rhs] = blei_bound(t, k, s, q);
            const double slack = detail::relative_slack(lhs, rhs);
            if (slack > out.worst_slack) {
                out.worst_slack = slack;
                out.worst_ratio = rhs == 0.0 ? 0.0 : lhs / rhs;
                out.witness = {{"check", "blei"}, {"tensor", tensor_to_json(t)}, {"k", k},
                               {"s", s},          {"q", q},
                               {"lhs", lhs},      {"rhs", rhs},
                               {"slack", slack}};
            }
            if (slack > out.tol) out.verdict = Verdict::Violation;
        }
    });
    return out;
}

/// Convex-hull interpolation bound on random tensors: targets are drawn as
/// convex combinations of 2-4 random nodes (so weights must be found), and
/// every fourth trial uses the power-sum decomposition (flat target, nodes
/// with one large-exponent slot each).
inline CheckOutcome fuzz_interpolation(const VerifyConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    CheckOutcome out;
    out.check = "interpolation";
    out.seed = cfg.seed;
    out.trials = cfg.trials;
    out.field = cfg.field;
    out.tol = detail::effective_tol(cfg, 1e-10);
    out.params = {{"order_max", 4}, {"dims_max", 6}};
    Rng base(cfg.seed);
    detail::with_field(cfg.field, [&](auto tag) {
        using S = decltype(tag);
        for (int trial = 0; trial < cfg.trials; ++trial) {
            Rng rng = base.derive(static_cast<std::uint64_t>(trial));
            const bool structured = trial % 4 == 3;
            const int m = structured ? rng.uniform_int(2, 4) : rng.uniform_int(1, 4);
            std::vector<std::size_t> shape(static_cast<std::size_t>(m));
            for (auto& n : shape) n = static_cast<std::size_t>(rng.uniform_int(1, 6));
            Tensor<S> t = random_tensor<S>(rng, shape,
                                           trial % 2 ? Ensemble::Signs : Ensemble::Gaussian);

            std::vector<ExponentNode> nodes;
            std::vector<double> target_recip(static_cast<std::size_t>(m), 0.0);
            if (structured) {
                const double tt = trial % 8 == 3 ? 1.0 : 1.5;
                const double s = bh_exponent(m - 1, tt);
                for (int i = 0; i < m; ++i) {
                    std::vector<double> q(static_cast<std::size_t>(m), s);
                    q[static_cast<std::size_t>(i)] = 2.0;
                    nodes.emplace_back(ExponentVector(std::move(q)));
                }
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j)
                        target_recip[static_cast<std::size_t>(j)] +=
                            nodes[static_cast<std::size_t>(i)].reciprocal[static_cast<std::size_t>(j)] / m;
            } else {
                const int n_nodes = rng.uniform_int(2, 4);
                std::vector<double> theta(static_cast<std::size_t>(n_nodes));
                double sum = 0.0;
                for (double& w : theta) {
                    w = rng.uniform(0.05, 1.0);
                    sum += w;
                }
                for (double& w : theta) w /= sum;
                for (int k = 0; k < n_nodes; ++k) {
                    std::vector<double> q(static_cast<std::size_t>(m));
                    for (double& v : q) v = rng.uniform(1.0, 5.0);
                    nodes.emplace_back(ExponentVector(std::move(q)));
                    for (int j = 0; j < m; ++j)
                        target_recip[static_cast<std::size_t>(j)] +=
                            theta[static_cast<std::size_t>(k)] *
                            nodes[static_cast<std::size_t>(k)].reciprocal[static_cast<std::size_t>(j)];
                }
            }
            std::vector<double> target_exps(target_recip.size());
            for (std::size_t j = 0; j < target_recip.size(); ++j)
                target_exps[j] = 1.0 / target_recip[j];
            ExponentVector target(target_exps);

            auto weights = find_convex_weights(target, nodes, 1e-10);
            double slack;
            nlohmann::json wit;
            if (!weights) {
                slack = std::numeric_limits<double>::infinity(); // solver must find these
                wit = {{"check", "interpolation"}, {"tensor", tensor_to_json(t)},
                       {"target", target_exps},    {"infeasible", true}};
            } else {
                const auto [lhs, rhs] = interpolation_bound(t, target, nodes, *weights);
                slack = detail::relative_slack(lhs, rhs);
                nlohmann::json node_list = nlohmann::json::array();
                for (const auto& node : nodes)
                    node_list.push_back(std::vector<double>(node.q.values().begin(),
                                                            node.q.values().end()));
                wit = {{"check", "interpolation"},
                       {"tensor", tensor_to_json(t)},
                       {"target", target_exps},
                       {"nodes", node_list},
                       {"theta", weights->theta},
                       {"lhs", lhs},
                       {"rhs", rhs},
                       {"slack", slack}};
            }
            if (slack > out.worst_slack) {
                out.worst_slack = slack;
                out.witness = std::move(wit);
                out.worst_ratio = 1.0 + slack;
            }
            if (slack > out.tol) out.verdict = Verdict::Violation;
        }
    });
    return out;
}

/// Power-sum ratio against the closed-form constant on random forms. Exact
/// norms give hard assertions; ascent norms can only yield "inconclusive".
inline CheckOutcome fuzz_bh(const VerifyConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (cfg.m < 1) throw std::invalid_argument("form order must be >= 1");
    if (cfg.dim < 1) throw std::invalid_argument("slot dimension must be >= 1");
    CheckOutcome out;
    out.check = "bh";
    out.seed = cfg.seed;
    out.trials = cfg.trials;
    out.field = cfg.field;
    out.tol = detail::effective_tol(cfg, 1e-9);
    out.params = {{"m", cfg.m}, {"dim", cfg.dim}, {"t", cfg.t}};
    const double constant = c_constant_closed(cfg.m, cfg.t, cfg.field);
    Rng base(cfg.seed);
    detail::with_field(cfg.field, [&](auto tag) {
        using S = decltype(tag);
        std::vector<std::size_t> shape(static_cast<std::size_t>(cfg.m),
                                       static_cast<std::size_t>(cfg.dim));
        for (int trial = 0; trial < cfg.trials; ++trial) {
            Rng rng = base.derive(static_cast<std::uint64_t>(trial));
            MultilinearForm<S> u(random_tensor<S>(
                rng, shape, trial % 2 ? Ensemble::Signs : Ensemble::Gaussian));
            const auto res = bh_ratio(u, cfg.t);
            const double slack = res.ratio / constant - 1.0;
            if (slack > out.worst_slack || out.witness.is_null()) {
                out.worst_slack = slack;
                out.worst_ratio = res.ratio;
                const auto cert = sup_norm(
                    u, res.norm_exact ? SupNormMethod::ExactSigns : SupNormMethod::AlternatingAscent);
                nlohmann::json args = nlohmann::json::array();
                for (const auto& slot : cert.maximizer) {
                    if constexpr (field_of<S>::value == Field::Real) {
                        args.push_back(slot);
                    } else {
                        nlohmann::json v = nlohmann::json::array();
                        for (const auto& z : slot) v.push_back({z.real(), z.imag()});
                        args.push_back(std::move(v));
                    }
                }
                out.witness = {{"check", "bh"},
                               {"tensor", tensor_to_json(u.coefficients())},
                               {"t", cfg.t},
                               {"lhs", res.lhs},
                               {"norm", res.norm},
                               {"ratio", res.ratio},
                               {"constant", constant},
                               {"norm_exact", res.norm_exact},
                               {"arguments", std::move(args)},
                               {"slack", slack}};
            }
            if (slack > out.tol) {
                if (res.norm_exact)
                    out.verdict = Verdict::Violation;
                else
                    ++out.inconclusive; // lower-bound norm: not a counterexample
            }
        }
    });
    return out;
}

/// Khinchine constants by deterministic enumeration (real) or phase
/// quadrature (complex) on random vectors and exponents.
inline CheckOutcome fuzz_khinchine(const VerifyConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    CheckOutcome out;
    out.check = "khinchine";
    out.seed = cfg.seed;
    out.trials = cfg.trials;
    out.field = cfg.field;
    out.tol = detail::effective_tol(cfg, cfg.field == Field::Real ? 1e-9 : 1e-6);
    out.params = {{"n_max", cfg.field == Field::Real ? 12 : 4}};
    Rng base(cfg.seed);
    detail::with_field(cfg.field, [&](auto tag) {
        using S = decltype(tag);
        for (int trial = 0; trial < cfg.trials; ++trial) {
            Rng rng = base.derive(static_cast<std::uint64_t>(trial));
            const int n = rng.uniform_int(1, cfg.field == Field::Real ? 12 : 4);
            std::vector<S> x(static_cast<std::size_t>(n));
            for (auto& v : x) v = detail::draw_scalar(rng, Ensemble::Gaussian, S{});
            const double p = rng.uniform(1.0, 1.99);
            const auto chk = khinchine_exact_small(std::span<const S>(x), p);
            const double bound = khinchine(p, cfg.field);
            const double slack = chk.ratio / bound - 1.0;
            if (slack > out.worst_slack) {
                out.worst_slack = slack;
                out.worst_ratio = chk.ratio;
                nlohmann::json xs = nlohmann::json::array();
                for (const auto& v : x) {
                    if constexpr (field_of<S>::value == Field::Real)
                        xs.push_back(v);
                    else
                        xs.push_back({v.real(), v.imag()});
                }
                out.witness = {{"check", "khinchine"}, {"x", xs},       {"p", p},
                               {"ratio", chk.ratio},   {"bound", bound}, {"slack", slack}};
            }
            if (slack > out.tol) out.verdict = Verdict::Violation;
        }
    });
    return out;
}

/// One-sided block-summing diagnostic on random real forms; counts
/// holds/inconclusive, never reports a violation.
inline CheckOutcome fuzz_dps(const VerifyConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    CheckOutcome out;
    out.check = "dps";
    out.seed = cfg.seed;
    out.trials = cfg.trials;
    out.field = cfg.field;
    out.tol = detail::effective_tol(cfg, 1e-9);
    const std::vector<std::vector<std::size_t>> blocks = {{0, 1}, {2}};
    const std::vector<double> r_list = {bh_exponent(2, cfg.t), bh_exponent(1, cfg.t)};
    out.params = {{"blocks", blocks}, {"r", r_list}, {"t", cfg.t}};
    Rng base(cfg.seed);
    detail::with_field(cfg.field, [&](auto tag) {
        using S = decltype(tag);
        for (int trial = 0; trial < cfg.trials; ++trial) {
            Rng rng = base.derive(static_cast<std::uint64_t>(trial));
            MultilinearForm<S> u(random_tensor<S>(
                rng, {2, 2, 2}, trial % 2 ? Ensemble::Signs : Ensemble::Gaussian));
            OrderedPartition part(blocks, {2.0, 2.0});
            DpsOptions opt;
            opt.seed = cfg.seed ^ static_cast<std::uint64_t>(trial);
            opt.trials = 8;
            const auto rep = dps_mixed_diagnostic(u, part, r_list, cfg.t, opt);
            const double slack = detail::relative_slack(rep.lhs, rep.rhs);
            if (rep.verdict == DiagnosticVerdict::Inconclusive) ++out.inconclusive;
            if (slack > out.worst_slack) {
                out.worst_slack = slack;
                out.worst_ratio = rep.rhs == 0.0 ? 0.0 : rep.lhs / rep.rhs;
                out.witness = {{"check", "dps"},
                               {"tensor", tensor_to_json(u.coefficients())},
                               {"blocks", blocks},
                               {"r", r_list},
                               {"t", cfg.t},
                               {"diag_seed", opt.seed},
                               {"diag_trials", opt.trials},
                               {"family_size", opt.family_size},
                               {"lhs", rep.lhs},
                               {"rhs", rep.rhs},
                               {"slack", slack}};
            }
        }
    });
    return out;
}

inline CheckOutcome run_check(const std::string& name, const VerifyConfig& cfg) {
    if (name == "minkowski") return fuzz_minkowski(cfg);
    if (name == "blei") return fuzz_blei(cfg);
    if (name == "interpolation") return fuzz_interpolation(cfg);
    if (name == "bh") return fuzz_bh(cfg);
    if (name == "khinchine") return fuzz_khinchine(cfg);
    if (name == "dps") return fuzz_dps(cfg);
    throw std::invalid_argument("unknown check: " + name);
}

struct ReplayResult {
    double stored_slack = 0.0;
    double recomputed_slack = 0.0;
};

/// Recompute the slack of a stored witness (or whole report). The
/// recomputed value must reproduce the stored one to ~1e-12.
inline ReplayResult replay_witness(const nlohmann::json& report) {
    const nlohmann::json& w = report.contains("witness") ? report.at("witness") : report;
    if (!w.contains("check")) throw std::runtime_error("witness lacks a check tag");
    const std::string check = w.at("check").get<std::string>();
    ReplayResult res;
    res.stored_slack = w.at("slack").get<double>();

    auto with_tensor = [&](auto&& fn) {
        AnyTensor t = tensor_from_json(w.at("tensor"));
        std::visit(fn, t);
    };
    if (check == "minkowski") {
        with_tensor([&](const auto& t) {
            const auto [lhs, rhs] = minkowski_gap(t, w.at("p").get<double>(), w.at("q").get<double>());
            res.recomputed_slack = detail::relative_slack(lhs, rhs);
            if (w.value("rank_one", false))
                res.recomputed_slack =
                    std::max(res.recomputed_slack, detail::relative_slack(rhs, lhs));
        });
    } else if (check == "blei") {
        with_tensor([&](const auto& t) {
            const auto [lhs, rhs] = blei_bound(t, w.at("k").get<int>(), w.at("s").get<double>(),
                                               w.at("q").get<double>());
            res.recomputed_slack = detail::relative_slack(lhs, rhs);
        });
    } else if (check == "interpolation") {
        if (w.value("infeasible", false))
            throw std::runtime_error("witness records a weight-solver failure; nothing to replay");
        with_tensor([&](const auto& t) {
            ExponentVector target(w.at("target").get<std::vector<double>>());
            std::vector<ExponentNode> nodes;
            for (const auto& nq : w.at("nodes"))
                nodes.emplace_back(ExponentVector(nq.get<std::vector<double>>()));
            ConvexWeights weights(w.at("theta").get<std::vector<double>>());
            const auto [lhs, rhs] = interpolation_bound(t, target, nodes, weights);
            res.recomputed_slack = detail::relative_slack(lhs, rhs);
        });
    } else if (check == "bh") {
        with_tensor([&](const auto& t) {
            using S = typename std::decay_t<decltype(t)>::value_type;
            MultilinearForm<std::remove_const_t<S>> u(t);
            const double tt = w.at("t").get<double>();
            const auto r = bh_ratio(u, tt);
            res.recomputed_slack = r.ratio / w.at("constant").get<double>() - 1.0;
        });
    } else if (check == "khinchine") {
        const double p = w.at("p").get<double>();
        const auto& xs = w.at("x");
        double ratio;
        if (xs.empty() || !xs[0].is_array()) {
            std::vector<double> x = xs.get<std::vector<double>>();
            ratio = khinchine_exact_small(std::span<const double>(x), p).ratio;
        } else {
            std::vector<std::complex<double>> x;
            for (const auto& v : xs) x.emplace_back(v[0].get<double>(), v[1].get<double>());
            ratio = khinchine_exact_small(std::span<const std::complex<double>>(x), p).ratio;
        }
        res.recomputed_slack = ratio / w.at("bound").get<double>() - 1.0;
    } else if (check == "dps") {
        with_tensor([&](const auto& t) {
            using S = std::remove_const_t<typename std::decay_t<decltype(t)>::value_type>;
            MultilinearForm<S> u(t);
            auto blocks = w.at("blocks").get<std::vector<std::vector<std::size_t>>>();
            OrderedPartition part(blocks, std::vector<double>(blocks.size(), 2.0));
            auto r_list = w.at("r").get<std::vector<double>>();
            DpsOptions opt;
            opt.seed = w.at("diag_seed").get<std::uint64_t>();
            opt.trials = w.at("diag_trials").get<int>();
            opt.family_size = w.at("family_size").get<int>();
            const auto rep = dps_mixed_diagnostic(u, part, r_list, w.at("t").get<double>(), opt);
            res.recomputed_slack = detail::relative_slack(rep.lhs, rep.rhs);
        });
    } else {
        throw std::runtime_error("unknown witness check: " + check);
    }
    return res;
}

} // namespace bhlab
