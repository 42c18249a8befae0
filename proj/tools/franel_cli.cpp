// Command-line front end: exact Franel-type integrals, integrality
// certificates, range sweeps with violation reporting, lattice-sum
// convergence runs, and Bernoulli utilities. Output is line-delimited JSON
// (or CSV with --csv) with every exact value serialized as "num/den".

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "franel/franel.hpp"

namespace {

using json = nlohmann::ordered_json;
using franel::Int;
using franel::Rational;

std::vector<long long> parse_tuple(const std::string& text) {
    std::vector<long long> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        if (part.empty()) {
            throw std::invalid_argument("malformed tuple: empty entry");
        }
        std::size_t i = part[0] == '-' || part[0] == '+' ? 1 : 0;
        if (i == part.size()) {
            throw std::invalid_argument("malformed tuple: '" + part + "'");
        }
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                throw std::invalid_argument("malformed tuple: '" + part + "'");
            }
        }
        try {
            values.push_back(std::stoll(part));
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("malformed tuple: entry out of range: '" + part + "'");
        }
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return values;
}

std::string tuple_to_string(const std::vector<long long>& tuple) {
    std::string s;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += std::to_string(tuple[i]);
    }
    return s;
}

franel::TheoremKind make_kind(const std::string& theorem, std::optional<unsigned> k,
                              std::optional<unsigned> n) {
    if (theorem == "mcintosh") {
        if (k || n) {
            throw std::invalid_argument("mcintosh takes neither --k nor --n");
        }
        return franel::TheoremKind::mcintosh4();
    }
    if (theorem == "general") {
        if (!k || n) {
            throw std::invalid_argument("general requires --k and no --n");
        }
        return franel::TheoremKind::general_even(*k);
    }
    if (theorem == "higher") {
        if (!k || !n) {
            throw std::invalid_argument("higher requires both --k and --n");
        }
        return franel::TheoremKind::higher(*k, *n);
    }
    throw std::invalid_argument("unknown theorem: " + theorem);
}

struct SweepRecord {
    std::vector<long long> tuple;
    Rational integral;
    Rational multiplier;
    Rational product;
    bool is_integer = false;
    std::optional<Rational> alt_product;
    double ms = 0.0;
};

struct SweepOptions {
    franel::TheoremKind kind = franel::TheoremKind::mcintosh4();
    long long max_entry = 1;
    unsigned length = 4;
    std::optional<unsigned long long> sample;
    std::uint64_t seed = 0;
    unsigned parallelism = 1;
    bool dedup = true;
    bool csv = false;
    bool timing = false;
    bool alt_constant = false;
    std::optional<Rational> corrupt;
};

/// All nondecreasing tuples (multiset representatives) with entries in
/// [1, max], in lexicographic order.
std::vector<std::vector<long long>> nondecreasing_tuples(unsigned length, long long max) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> t(length, 1);
    while (true) {
        out.push_back(t);
        std::size_t i = length;
        while (i-- > 0) {
            if (t[i] < max) {
                ++t[i];
                for (std::size_t j = i + 1; j < length; ++j) {
                    t[j] = t[i];
                }
                break;
            }
            if (i == 0) {
                return out;
            }
        }
    }
}

std::vector<std::vector<long long>> all_tuples(unsigned length, long long max) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> t(length, 1);
    while (true) {
        out.push_back(t);
        std::size_t i = length;
        while (i-- > 0) {
            if (t[i] < max) {
                ++t[i];
                for (std::size_t j = i + 1; j < length; ++j) {
                    t[j] = 1;
                }
                break;
            }
            if (i == 0) {
                return out;
            }
        }
    }
}

SweepRecord evaluate_tuple(const SweepOptions& opt, const std::vector<long long>& tuple) {
    auto start = std::chrono::steady_clock::now();
    franel::CertificateReport report = franel::certificate(opt.kind, tuple);
    SweepRecord rec;
    rec.tuple = tuple;
    rec.integral = report.integral;
    rec.multiplier = report.multiplier;
    if (opt.corrupt) {
        rec.multiplier = rec.multiplier * *opt.corrupt;
    }
    rec.product = rec.multiplier * rec.integral;
    rec.is_integer = rec.product.is_integer();
    if (opt.alt_constant) {
        rec.alt_product = Rational(4032) *
                          Rational(report.gcd_part_num, report.gcd_part_den) *
                          report.integral;
    }
    auto stop = std::chrono::steady_clock::now();
    rec.ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return rec;
}

int run_sweep(const SweepOptions& opt) {
    std::vector<std::vector<long long>> work;
    unsigned long long checked = 0;

    if (opt.sample) {
        std::mt19937_64 rng(opt.seed);
        std::vector<std::vector<long long>> sampled;
        sampled.reserve(*opt.sample);
        for (unsigned long long i = 0; i < *opt.sample; ++i) {
            std::vector<long long> t(opt.length);
            for (auto& v : t) {
                v = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(opt.max_entry));
            }
            if (opt.dedup) {
                std::sort(t.begin(), t.end());
            }
            sampled.push_back(std::move(t));
        }
        checked = *opt.sample;
        std::sort(sampled.begin(), sampled.end());
        sampled.erase(std::unique(sampled.begin(), sampled.end()), sampled.end());
        work = std::move(sampled);
    } else {
        checked = 1;
        for (unsigned i = 0; i < opt.length; ++i) {
            checked *= static_cast<unsigned long long>(opt.max_entry);
        }
        work = opt.dedup ? nondecreasing_tuples(opt.length, opt.max_entry)
                         : all_tuples(opt.length, opt.max_entry);
    }

    std::cerr << "sweep: evaluating " << work.size() << " tuples on " << opt.parallelism
              << " worker(s)\n";
    auto start = std::chrono::steady_clock::now();

    std::vector<SweepRecord> results(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= work.size()) {
                return;
            }
            results[i] = evaluate_tuple(opt, work[i]);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < opt.parallelism; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }

    unsigned long long violations = 0;
    unsigned long long alt_violations = 0;
    if (opt.csv) {
        std::string header = "tuple,integral,multiplier,product,is_integer";
        if (opt.alt_constant) {
            header += ",alt_constant,alt_product,alt_is_integer";
        }
        if (opt.timing) {
            header += ",ms";
        }
        std::cout << header << "\n";
    }
    for (const SweepRecord& rec : results) {
        if (!rec.is_integer) {
            ++violations;
        }
        bool alt_ok = true;
        if (rec.alt_product) {
            alt_ok = rec.alt_product->is_integer();
            if (!alt_ok) {
                ++alt_violations;
            }
        }
        if (opt.csv) {
            std::cout << '"' << tuple_to_string(rec.tuple) << '"' << ','
                      << rec.integral.str() << ',' << rec.multiplier.str() << ','
                      << rec.product.str() << ',' << (rec.is_integer ? "true" : "false");
            if (rec.alt_product) {
                std::cout << ",4032," << rec.alt_product->str() << ','
                          << (alt_ok ? "true" : "false");
            }
            if (opt.timing) {
                std::cout << ',' << rec.ms;
            }
            std::cout << "\n";
        } else {
            json j;
            j["tuple"] = tuple_to_string(rec.tuple);
            j["integral"] = rec.integral.str();
            j["multiplier"] = rec.multiplier.str();
            j["product"] = rec.product.str();
            j["is_integer"] = rec.is_integer;
            if (rec.alt_product) {
                j["alt_constant"] = "4032";
                j["alt_product"] = rec.alt_product->str();
                j["alt_is_integer"] = alt_ok;
            }
            if (opt.timing) {
                j["ms"] = rec.ms;
            }
            std::cout << j.dump() << "\n";
        }
    }

    auto stop = std::chrono::steady_clock::now();
    std::cerr << "sweep: done in "
              << std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count()
              << " ms\n";

    if (opt.csv) {
        std::cout << "#checked=" << checked << ",evaluated=" << results.size()
                  << ",violations=" << violations;
        if (opt.alt_constant) {
            std::cout << ",alt_violations=" << alt_violations;
        }
        std::cout << "\n";
    } else {
        json summary;
        summary["checked"] = checked;
        summary["evaluated"] = results.size();
        summary["violations"] = violations;
        if (opt.alt_constant) {
            summary["alt_violations"] = alt_violations;
        }
        std::cout << summary.dump() << "\n";
    }
    return violations > 0 ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Franel-type integrals of periodic Bernoulli products, "
                 "integrality certificates, and lattice reciprocal sums"};
    app.require_subcommand(1);

    // integral
    auto* cmd_integral = app.add_subcommand("integral", "Evaluate one integral exactly");
    unsigned integral_k = 1;
    std::string integral_tuple;
    cmd_integral->add_option("--k", integral_k, "Bernoulli index applied to every factor")
        ->required();
    cmd_integral->add_option("--tuple", integral_tuple, "Comma-separated multipliers")
        ->required();

    // certificate
    auto* cmd_cert = app.add_subcommand("certificate", "Check one integrality certificate");
    std::string cert_theorem;
    std::string cert_tuple;
    std::optional<unsigned> cert_k;
    std::optional<unsigned> cert_n;
    cmd_cert->add_option("--theorem", cert_theorem, "mcintosh | general | higher")->required();
    cmd_cert->add_option("--k", cert_k, "theorem parameter k");
    cmd_cert->add_option("--n", cert_n, "theorem parameter n (higher only)");
    cmd_cert->add_option("--tuple", cert_tuple, "Comma-separated multipliers")->required();

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "Certificate sweep with violation reporting");
    std::string sweep_theorem;
    std::optional<unsigned> sweep_k;
    std::optional<unsigned> sweep_n;
    long long sweep_max = 0;
    unsigned sweep_len = 0;
    std::optional<unsigned long long> sweep_sample;
    std::uint64_t sweep_seed = 0;
    unsigned sweep_parallelism = std::thread::hardware_concurrency();
    bool sweep_csv = false;
    bool sweep_no_dedup = false;
    bool sweep_timing = false;
    std::string sweep_corrupt;
    cmd_sweep->add_option("--theorem", sweep_theorem, "mcintosh | general | higher")->required();
    cmd_sweep->add_option("--k", sweep_k, "theorem parameter k");
    cmd_sweep->add_option("--n", sweep_n, "theorem parameter n (higher only)");
    cmd_sweep->add_option("--max", sweep_max, "largest tuple entry")->required();
    cmd_sweep->add_option("--len", sweep_len, "tuple length")->required();
    cmd_sweep->add_option("--sample", sweep_sample,
                          "random sample size instead of exhaustive enumeration");
    cmd_sweep->add_option("--seed", sweep_seed, "seed for --sample");
    cmd_sweep->add_option("--parallelism", sweep_parallelism, "worker thread cap");
    cmd_sweep->add_flag("--csv", sweep_csv, "emit CSV instead of JSON lines");
    cmd_sweep->add_flag("--no-dedup", sweep_no_dedup,
                        "evaluate every tuple instead of sorted multiset representatives");
    cmd_sweep->add_flag("--timing", sweep_timing, "include per-tuple timing in records");
    cmd_sweep->add_option("--corrupt-multiplier", sweep_corrupt,
                          "multiply every certificate multiplier by this rational")
        ->group("");  // fault injection hook, hidden from help

    // lattice
    auto* cmd_lattice = app.add_subcommand("lattice", "Truncated reciprocal-sum convergence");
    std::string lattice_tuple;
    unsigned lattice_exp = 1;
    std::string lattice_bounds;
    cmd_lattice->add_option("--tuple", lattice_tuple, "Comma-separated multipliers")->required();
    cmd_lattice->add_option("--exp", lattice_exp, "odd reciprocal power (= Bernoulli index)")
        ->required();
    cmd_lattice->add_option("--bounds", lattice_bounds, "strictly increasing truncation bounds")
        ->required();

    // bernoulli
    auto* cmd_bernoulli = app.add_subcommand("bernoulli", "Bernoulli utilities");
    std::optional<unsigned> bern_numbers;
    std::optional<unsigned> bern_poly;
    std::optional<unsigned> bern_denominator;
    std::string bern_dedekind;
    auto* opt_numbers = cmd_bernoulli->add_option("--numbers", bern_numbers, "print B_0..B_N");
    auto* opt_poly = cmd_bernoulli->add_option("--poly", bern_poly, "print B_n(x) coefficients");
    auto* opt_den =
        cmd_bernoulli->add_option("--denominator", bern_denominator, "denominator of B_n(x)");
    auto* opt_ded = cmd_bernoulli->add_option("--dedekind", bern_dedekind, "Dedekind sum s(h,k)");
    opt_numbers->excludes(opt_poly)->excludes(opt_den)->excludes(opt_ded);
    opt_poly->excludes(opt_den)->excludes(opt_ded);
    opt_den->excludes(opt_ded);

    try {
        app.parse(argc, argv);

        if (app.got_subcommand(cmd_integral)) {
            franel::IntegralSpec spec(integral_k, parse_tuple(integral_tuple));
            json j;
            j["value"] = franel::franel_integral(spec).str();
            std::cout << j.dump() << "\n";
            return 0;
        }

        if (app.got_subcommand(cmd_cert)) {
            franel::TheoremKind kind = make_kind(cert_theorem, cert_k, cert_n);
            std::vector<long long> tuple = parse_tuple(cert_tuple);
            franel::CertificateReport report = franel::certificate(kind, tuple);
            json j;
            j["theorem"] = cert_theorem;
            j["tuple"] = tuple_to_string(tuple);
            j["integral"] = report.integral.str();
            j["multiplier"] = report.multiplier.str();
            j["constant"] = report.constant_part.str();
            j["gcd_part"] = Rational(report.gcd_part_num, report.gcd_part_den).str();
            j["product"] = report.product.str();
            j["is_integer"] = report.is_integer;
            std::cout << j.dump() << "\n";
            return 0;
        }

        if (app.got_subcommand(cmd_sweep)) {
            SweepOptions opt;
            opt.kind = make_kind(sweep_theorem, sweep_k, sweep_n);
            if (sweep_len != opt.kind.tuple_length()) {
                throw std::invalid_argument("--len does not match the theorem's tuple length");
            }
            if (sweep_max < 1) {
                throw std::invalid_argument("--max must be >= 1");
            }
            opt.max_entry = sweep_max;
            opt.length = sweep_len;
            opt.sample = sweep_sample;
            opt.seed = sweep_seed;
            opt.parallelism = sweep_parallelism == 0 ? 1 : sweep_parallelism;
            opt.dedup = !sweep_no_dedup;
            opt.csv = sweep_csv;
            opt.timing = sweep_timing;
            opt.alt_constant = opt.kind.family == franel::TheoremKind::Family::general_even &&
                               opt.kind.k == 3;
            if (!sweep_corrupt.empty()) {
                opt.corrupt = Rational::parse(sweep_corrupt);
            }
            return run_sweep(opt);
        }

        if (app.got_subcommand(cmd_lattice)) {
            franel::IntegralSpec spec(lattice_exp, parse_tuple(lattice_tuple));
            std::vector<long long> bounds = parse_tuple(lattice_bounds);
            auto results = franel::convergence_report(spec, bounds);
            for (const auto& r : results) {
                json j;
                j["bound"] = r.bound;
                j["truncated"] = r.truncated.str();
                j["coefficient"] = r.predicted_coefficient.str();
                j["pi_power"] = r.pi_power;
                j["discrepancy"] = r.float_discrepancy;
                std::cout << j.dump() << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(cmd_bernoulli)) {
            if (bern_numbers) {
                auto numbers = franel::bernoulli_numbers(*bern_numbers);
                for (unsigned n = 0; n < numbers.size(); ++n) {
                    json j;
                    j["n"] = n;
                    j["value"] = numbers[n].str();
                    std::cout << j.dump() << "\n";
                }
                return 0;
            }
            if (bern_poly) {
                franel::RationalPolynomial p = franel::bernoulli_polynomial(*bern_poly);
                json coeffs = json::array();
                for (const Rational& c : p.coefficients()) {
                    coeffs.push_back(c.str());
                }
                json j;
                j["n"] = *bern_poly;
                j["coefficients"] = coeffs;
                std::cout << j.dump() << "\n";
                return 0;
            }
            if (bern_denominator) {
                json j;
                j["n"] = *bern_denominator;
                j["denominator"] =
                    franel::bernoulli_polynomial(*bern_denominator).denominator().str();
                std::cout << j.dump() << "\n";
                return 0;
            }
            if (!bern_dedekind.empty()) {
                std::vector<long long> hk = parse_tuple(bern_dedekind);
                if (hk.size() != 2) {
                    throw std::invalid_argument("--dedekind expects h,k");
                }
                json j;
                j["h"] = hk[0];
                j["k"] = hk[1];
                j["value"] = franel::dedekind_sum(hk[0], hk[1]).str();
                std::cout << j.dump() << "\n";
                return 0;
            }
            throw std::invalid_argument(
                "bernoulli requires one of --numbers, --poly, --denominator, --dedekind");
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
