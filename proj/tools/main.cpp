// bhlab command-line front end: constants tables, inequality verification
// campaigns, mixed norms of tensor files, exponent comparisons and
// asymptotic envelopes.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bhlab/bhlab.hpp"

namespace {

using namespace bhlab;

// "4/3" or "1.5"; rationals are divided out at the last moment.
double parse_number(const std::string& s) {
    const auto slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad number: " + s);
        return v;
    }
    const double num = std::stod(s.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("bad number: " + s);
    const std::string den_str = s.substr(slash + 1);
    const double den = std::stod(den_str, &used);
    if (used != den_str.size() || den == 0.0) throw std::invalid_argument("bad number: " + s);
    return num / den;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<double> parse_number_list(const std::string& s) {
    std::vector<double> out;
    for (const auto& tok : split(s, ',')) out.push_back(parse_number(tok));
    return out;
}

// "1..8", "3" or "2,5,7".
std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& tok : split(s, ',')) {
        const auto dots = tok.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stoi(tok));
            continue;
        }
        const int lo = std::stoi(tok.substr(0, dots));
        const int hi = std::stoi(tok.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("empty range: " + tok);
        for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list: " + s);
    return out;
}

// "{2}{1}" or "{1,2}{3}", 1-based axes.
std::vector<std::vector<std::size_t>> parse_blocks(const std::string& s) {
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '{') throw std::invalid_argument("blocks must look like {1,2}{3}");
        const auto close = s.find('}', pos);
        if (close == std::string::npos) throw std::invalid_argument("unterminated block");
        std::vector<std::size_t> block;
        for (const auto& tok : split(s.substr(pos + 1, close - pos - 1), ',')) {
            const int ax = std::stoi(tok);
            if (ax < 1) throw std::invalid_argument("block axes are 1-based");
            block.push_back(static_cast<std::size_t>(ax - 1));
        }
        blocks.push_back(std::move(block));
        pos = close + 1;
    }
    if (blocks.empty()) throw std::invalid_argument("no blocks given");
    return blocks;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

int cmd_constants(const std::string& m_spec, const std::string& t_spec, const std::string& field,
                  const std::string& format, const std::string& out_path) {
    const auto ms = parse_int_list(m_spec);
    const auto ts = parse_number_list(t_spec);
    for (int m : ms)
        if (m < 1) throw std::invalid_argument("m must be >= 1");
    for (double t : ts)
        if (!(t >= 1.0) || !(t < 2.0)) throw std::invalid_argument("t must lie in [1, 2)");
    const ConstantsReport rep = make_constants_report(ms, ts, field_from_string(field));
    const std::string text =
        format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_csv();
    if (!out_path.empty())
        write_file(out_path, text);
    else
        std::cout << text;
    return 0;
}

int cmd_verify(const std::string& check, const VerifyConfig& cfg, const std::string& out_path,
               const std::string& replay_path) {
    if (!replay_path.empty()) {
        std::ifstream in(replay_path);
        if (!in) throw std::runtime_error("cannot open " + replay_path);
        nlohmann::json j;
        in >> j;
        const ReplayResult res = replay_witness(j);
        std::cout << "stored slack:     " << format17(res.stored_slack) << "\n"
                  << "recomputed slack: " << format17(res.recomputed_slack) << "\n";
        const double diff = std::abs(res.stored_slack - res.recomputed_slack);
        if (diff > 1e-12 * std::max(1.0, std::abs(res.stored_slack))) {
            std::cout << "witness does NOT round-trip (diff " << diff << ")\n";
            return 2;
        }
        std::cout << "witness round-trips\n";
        return 0;
    }

    const CheckOutcome outcome = run_check(check, cfg);
    std::cout << "check:        " << outcome.check << "\n"
              << "field:        " << to_string(outcome.field) << "\n"
              << "trials:       " << outcome.trials << "\n"
              << "seed:         " << outcome.seed << "\n"
              << "worst slack:  " << format17(outcome.worst_slack) << "\n"
              << "worst ratio:  " << format17(outcome.worst_ratio) << "\n"
              << "inconclusive: " << outcome.inconclusive << "\n"
              << "verdict:      " << to_string(outcome.verdict) << "\n";
    std::string path = out_path;
    if (path.empty() && outcome.verdict == Verdict::Violation)
        path = "witness_" + outcome.check + "_seed" + std::to_string(outcome.seed) + ".json";
    if (!path.empty()) {
        write_file(path, outcome.to_json().dump(2) + "\n");
        std::cout << "report:       " << path << "\n";
    }
    return outcome.verdict == Verdict::Violation ? 2 : 0;
}

int cmd_norm(const std::string& in_path, const std::string& p_spec, const std::string& blocks_spec) {
    const AnyTensor t = load_tensor(in_path);
    const std::vector<double> ps = parse_number_list(p_spec);
    const double value = std::visit(
        [&](const auto& tensor) {
            if (blocks_spec.empty())
                return mixed_norm(tensor, ExponentVector(ps));
            return block_mixed_norm(tensor, OrderedPartition(parse_blocks(blocks_spec), ps));
        },
        t);
    std::cout << format17(value) << "\n";
    return 0;
}

int cmd_compare_exponents(const std::string& n_spec, const std::string& N_spec,
                          const std::string& q_spec, const std::string& r_spec,
                          const std::string& out_path) {
    const auto ns = parse_int_list(n_spec);
    const auto Ns = parse_int_list(N_spec);
    const auto qs = parse_number_list(q_spec);
    const auto rs = parse_number_list(r_spec);
    std::ostringstream table;
    table << "n,N,q,r,old,new,verdict\n";
    std::size_t rows = 0;
    for (int n : ns)
        for (int N : Ns) {
            if (!(1 <= n && n < N)) continue;
            for (double q : qs)
                for (double r : rs) {
                    // n = 1 always divides N: both routes give the same exponent
                    const ExponentComparison c =
                        n == 1 ? ExponentComparison{r_n_exponent(1, N, q, r),
                                                    r_n_exponent(1, N, q, r), false}
                               : exponent_comparison(n, N, q, r);
                    table << n << ',' << N << ',' << format17(q) << ',' << format17(r) << ','
                          << format17(c.old_exponent) << ',' << format17(c.new_exponent) << ','
                          << (c.strict ? "strict" : "equal") << '\n';
                    ++rows;
                }
        }
    if (rows == 0) throw std::invalid_argument("no valid (n, N) pairs with 1 <= n < N");
    if (!out_path.empty())
        write_file(out_path, table.str());
    else
        std::cout << table.str();
    return 0;
}

int cmd_kappa(double t, const std::string& field, int m_max, const std::string& out_path) {
    const AsymptoticEnvelope env = asymptotic_envelope(t, field_from_string(field), m_max);
    std::ostringstream out;
    out << "t:                    " << format17(t) << "\n"
        << "field:                " << field << "\n"
        << "growth exponent:      " << format17(env.exponent) << "\n"
        << "kappa estimate:       " << format17(env.kappa) << "\n"
        << "last-decade increase: " << format17(env.last_decade_increase) << "\n";
    if (!out_path.empty()) {
        nlohmann::json j = {{"t", t},
                            {"field", field},
                            {"exponent", env.exponent},
                            {"kappa", env.kappa},
                            {"last_decade_increase", env.last_decade_increase}};
        write_file(out_path, j.dump(2) + "\n");
    }
    std::cout << out.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixed-norm inequality and summing-constant toolkit"};
    app.require_subcommand(1);

    std::string m_spec = "1..8", t_spec = "1.0", field = "complex", format = "csv", out_path;
    auto* constants = app.add_subcommand("constants", "tabulate C constants and exponents");
    constants->add_option("--m", m_spec, "orders, e.g. 2 or 1..8 or 2,4");
    constants->add_option("--t", t_spec, "t values in [1,2), e.g. 1.0,1.5");
    constants->add_option("--field", field, "real|complex")->default_str("complex");
    constants->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    constants->add_option("--out", out_path, "output file (default stdout)");

    std::string check, verify_field = "real", verify_out, replay_path;
    VerifyConfig cfg;
    std::string cfg_t = "1.0";
    auto* verify = app.add_subcommand("verify", "run a fuzz campaign for one inequality");
    verify->add_option("check", check, "minkowski|interpolation|blei|bh|khinchine|dps")
        ->required();
    verify->add_option("--trials", cfg.trials, "number of seeded trials");
    verify->add_option("--seed", cfg.seed, "64-bit seed");
    verify->add_option("--tol", cfg.tol, "slack tolerance (0 = per-check default)");
    verify->add_option("--field", verify_field, "real|complex");
    verify->add_option("--m", cfg.m, "form order (bh)");
    verify->add_option("--dim", cfg.dim, "slot dimension (bh)");
    verify->add_option("--t", cfg_t, "power-sum parameter (bh, dps)");
    verify->add_option("--out", verify_out, "write the JSON report here");
    verify->add_option("--replay", replay_path, "re-run the witness stored in a report file");

    std::string norm_in, p_spec, blocks_spec;
    auto* norm = app.add_subcommand("norm", "mixed norm of a JSON tensor file");
    norm->add_option("--in", norm_in, "tensor file")->required();
    norm->add_option("--p", p_spec, "exponents, e.g. 4/3,4/3")->required();
    norm->add_option("--blocks", blocks_spec, "axis blocks, 1-based, e.g. {2}{1}");

    std::string n_spec, N_spec, q_spec = "2", r_spec = "1", cmp_out;
    auto* cmp = app.add_subcommand("compare-exponents", "block-chaining vs direct exponents");
    cmp->add_option("--n", n_spec, "separate-summability orders (1 < n)")->required();
    cmp->add_option("--N", N_spec, "target orders (n < N)")->required();
    cmp->add_option("--q", q_spec, "cotype exponents");
    cmp->add_option("--r", r_spec, "summing exponents");
    cmp->add_option("--out", cmp_out, "output file (default stdout)");

    std::string kappa_t = "1.0", kappa_field = "complex", kappa_out;
    int m_max = 10000;
    auto* kappa = app.add_subcommand("kappa", "asymptotic envelope of the closed-form constants");
    kappa->add_option("--t", kappa_t, "t in [1,2)");
    kappa->add_option("--field", kappa_field, "real|complex");
    kappa->add_option("--m-max", m_max, "scan limit (>= 10)");
    kappa->add_option("--out", kappa_out, "write a JSON summary here");

    try {
        app.parse(argc, argv);
        if (constants->parsed())
            return cmd_constants(m_spec, t_spec, field, format, out_path);
        if (verify->parsed()) {
            cfg.field = field_from_string(verify_field);
            cfg.t = parse_number(cfg_t);
            return cmd_verify(check, cfg, verify_out, replay_path);
        }
        if (norm->parsed()) return cmd_norm(norm_in, p_spec, blocks_spec);
        if (cmp->parsed())
            return cmd_compare_exponents(n_spec, N_spec, q_spec, r_spec, cmp_out);
        if (kappa->parsed())
            return cmd_kappa(parse_number(kappa_t), kappa_field, m_max, kappa_out);
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
