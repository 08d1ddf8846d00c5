#include "cli.hpp"

#include "wbt/arith_tab.hpp"
#include "wbt/campaign.hpp"
#include "wbt/constants.hpp"
#include "wbt/errors.hpp"
#include "wbt/prime_sums.hpp"
#include "wbt/report.hpp"
#include "wbt/sieve_core.hpp"
#include "wbt/weights.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>

namespace wbt::cli {

namespace {

struct Globals {
    std::string out_path;
    bool quick = false;
    bool full = false;
    unsigned threads = 1;
    std::uint64_t seed = 1;
    std::string resume;

    [[nodiscard]] bool full_mode() const { return full && !quick; }
};

struct WeightArgs {
    std::string shape = "constant";
    std::string weights_file;
    double x = 0.0;
    double y = 1000.0;
    double scale = 1.0;
    int resolution = 64;
    std::uint64_t k = 1;
    std::int64_t l = 1;

    void attach(CLI::App* cmd, bool with_modulus)
    {
        cmd->add_option("--shape", shape, "constant | linear_ramp | hat | smooth_bump_approx")->capture_default_str();
        cmd->add_option("--weights", weights_file, "file of 't value' lines (overrides --shape)");
        cmd->add_option("--x", x, "left endpoint")->capture_default_str();
        cmd->add_option("--y", y, "interval length")->capture_default_str();
        cmd->add_option("--scale", scale, "weight multiplier")->capture_default_str();
        cmd->add_option("--resolution", resolution, "bump sample count")->capture_default_str();
        if (with_modulus) {
            cmd->add_option("--k", k, "modulus")->capture_default_str();
            cmd->add_option("--l", l, "residue")->capture_default_str();
        }
    }

    [[nodiscard]] WeightFunction build() const
    {
        if (!weights_file.empty()) {
            std::ifstream in(weights_file);
            if (!in)
                throw ResourceError("cannot open weights file " + weights_file);
            return parse_weight_text(in).scaled(scale);
        }
        return builtin(parse_shape(shape), Interval(x, y), resolution).scaled(scale);
    }
};

Json envelope(std::string_view kind)
{
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = kind;
    return j;
}

bool all_verdicts(const std::vector<ConstantsReport>& rs)
{
    return std::all_of(rs.begin(), rs.end(), [](const ConstantsReport& r) { return r.verdict; });
}

Json constants_json(const std::vector<ConstantsReport>& rs)
{
    Json a = Json::array();
    for (const auto& r : rs)
        a.push_back(to_json(r));
    return a;
}

void summarize(std::ostream& err, const BoundReport& r)
{
    err << (r.holds ? "PASS " : (r.inconclusive ? "INCONCLUSIVE " : "FAIL ")) << r.label << ": lhs="
        << (r.lhs ? std::to_string(*r.lhs) : std::string("-")) << " rhs=" << r.rhs << " margin=" << r.margin << '\n';
}

void summarize(std::ostream& err, const ConstantsReport& r)
{
    err << (r.verdict ? "PASS " : "FAIL ") << r.name << ": " << r.computed << ' ' << r.relation << ' '
        << r.paper_bound << '\n';
}

Json theorem_json(const TheoremBound& t, double lhs, const WeightFunction& f, std::uint64_t k, std::int64_t l)
{
    Json params;
    params["theorem"] = theorem_name(t.theorem);
    params["k"] = k;
    params["l"] = l;
    params["x"] = f.left();
    params["y"] = f.right() - f.left();
    params["l1"] = f.norms().l1;
    params["sup"] = f.norms().sup;
    params["tv"] = f.norms().tv;
    params["rho"] = t.rho;
    params["applicable"] = t.applicable;
    const std::string label = std::string(theorem_name(t.theorem)) + " weighted Brun-Titchmarsh";
    if (!t.applicable)
        return to_json(make_bound_report(label, lhs, NAN, Relation::less, 0.0, std::move(params)));
    return to_json(
        make_bound_report(label, lhs, *t.value, Relation::less, kTheoremSlack * *t.value, std::move(params)));
}

std::vector<CorpusCase> random_corpus(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> shape(0, 3);
    std::uniform_int_distribution<std::uint64_t> mod(1, 20);
    std::uniform_real_distribution<double> x(0.0, 1e6);
    std::uniform_real_distribution<double> y(10.0, 1e5);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    std::vector<CorpusCase> out;
    while (out.size() < n) {
        CorpusCase c;
        c.shape = static_cast<Shape>(shape(rng));
        c.k = mod(rng);
        c.l = static_cast<std::int64_t>(std::uniform_int_distribution<std::uint64_t>(0, c.k - 1)(rng));
        if (std::gcd(static_cast<std::uint64_t>(c.l), c.k) != 1)
            continue;
        c.x = x(rng);
        c.y = y(rng);
        c.scale = scale(rng);
        c.resolution = 64;
        out.push_back(c);
    }
    return out;
}

} // namespace

int dispatch(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return dispatch(args, out, err);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"wbt: weighted Brun-Titchmarsh sieve bounds and their numerical verification", "wbt"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--out", g.out_path, "write JSON here instead of stdout");
    auto* quick_flag = app.add_flag("--quick", g.quick, "desk-scale ranges (default)");
    app.add_flag("--full", g.full, "full ranges up to 2e9 (long running)")->excludes(quick_flag);
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for randomized corpora");
    app.add_option("--resume", g.resume, "checkpoint file to resume verify-test from");

    // tabulate
    std::uint64_t tab_lo = 1, tab_hi = 100, tab_seg = kDefaultSegmentLength;
    std::string tab_dump;
    auto* tab_cmd = app.add_subcommand("tabulate", "tabulate mu, phi, sigma, omega on [lo, hi]");
    tab_cmd->add_option("--lo", tab_lo)->capture_default_str();
    tab_cmd->add_option("--hi", tab_hi)->capture_default_str();
    tab_cmd->add_option("--segment", tab_seg)->capture_default_str();
    tab_cmd->add_option("--dump", tab_dump, "also write the binary WBT1 table here");

    // sieve-sums
    std::uint64_t ss_k = 1, ss_z = 100;
    std::int64_t ss_l = 1;
    auto* ss_cmd = app.add_subcommand("sieve-sums", "S_k(z), H_k(z) and pi(z)");
    ss_cmd->add_option("--k", ss_k)->capture_default_str();
    ss_cmd->add_option("--l", ss_l)->capture_default_str();
    ss_cmd->add_option("--z", ss_z)->capture_default_str();

    // constants
    bool const_all = true;
    auto* const_cmd = app.add_subcommand("constants", "zeta values, Euler products, A and elementary inequalities");
    const_cmd->add_flag("--all", const_all, "report every constant (default)");

    // verify-q / verify-h
    std::uint64_t vq_zmax = 1'000'000, vh_zmax = 1'000'000;
    auto* vq_cmd = app.add_subcommand("verify-q", "|Q(z) - 6z/pi^2| <= 0.68 sqrt(z) on [1, z_max]");
    vq_cmd->add_option("--z-max", vq_zmax)->capture_default_str();
    auto* vh_cmd = app.add_subcommand("verify-h", "|H_1(z) - 15z/pi^2| <= 47 sqrt(z) on [1, z_max]");
    vh_cmd->add_option("--z-max", vh_zmax)->capture_default_str();

    // verify-s
    std::vector<std::uint64_t> vs_samples;
    std::uint64_t vs_cutoff = 0;
    auto* vs_cmd = app.add_subcommand("verify-s", "S_1(z) against log z + B");
    vs_cmd->add_option("--samples", vs_samples, "z values (default depends on --quick/--full)");
    vs_cmd->add_option("--prime-cutoff", vs_cutoff, "primes below this enter B (default 1e6 quick, 1e8 full)");

    // verify-test
    CampaignConfig vt;
    std::optional<std::uint64_t> vt_zmax;
    std::string vt_ckpt;
    std::uint64_t vt_stop = 0;
    auto* vt_cmd = app.add_subcommand("verify-test", "sweep the sieve inequality over z in [z_min, z_max)");
    vt_cmd->add_option("--z-min", vt.z_min)->capture_default_str();
    vt_cmd->add_option("--z-max", vt_zmax, "exclusive (default 2e6 quick, 2e9 full)");
    vt_cmd->add_option("--stride", vt.checkpoint_stride, "checkpoint stride")->capture_default_str();
    vt_cmd->add_option("--checkpoint", vt_ckpt, "append JSON-lines checkpoints here");
    vt_cmd->add_option("--stop-after", vt_stop, "stop at the first checkpoint at or beyond this z");

    // theorem4 / theorem5
    WeightArgs t4, t5;
    auto* t4_cmd = app.add_subcommand("theorem4", "both weighted Brun-Titchmarsh bounds for p = l mod k");
    t4.attach(t4_cmd, true);
    auto* t5_cmd = app.add_subcommand("theorem5", "the k = 1 weighted Brun-Titchmarsh bound");
    t5.attach(t5_cmd, false);

    // corpus
    std::string corpus_file;
    std::size_t corpus_random = 0;
    bool corpus_default = false;
    auto* corpus_cmd = app.add_subcommand("corpus", "check theorem bounds over a corpus of weights");
    corpus_cmd->add_option("--corpus", corpus_file, "lines 'shape kmod lres x y scale resolution'");
    corpus_cmd->add_option("--random", corpus_random, "append this many random cases (uses --seed)");
    corpus_cmd->add_flag("--default", corpus_default, "use the built-in corpus (implied without --corpus)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "wbt: " << e.what() << '\n' << "run 'wbt --help' for usage\n";
        return kUsage;
    }

    try {
        Json doc;
        bool pass = true;

        if (*tab_cmd) {
            const ArithTable t = tabulate(tab_lo, tab_hi, tab_seg);
            doc = envelope("tabulate");
            doc["lo"] = t.lo();
            doc["hi"] = t.hi();
            std::uint64_t squarefree = 0, primes = 0;
            for (std::uint64_t n = t.lo(); n <= t.hi(); ++n) {
                squarefree += t.mu(n) != 0;
                primes += t.omega(n) == 1 && t.phi(n) + 1 == n;
            }
            doc["squarefree"] = squarefree;
            doc["primes"] = primes;
            if (t.hi() - t.lo() < 100'000) {
                doc["mu"] = std::vector<int>(t.mu_values().begin(), t.mu_values().end());
                doc["phi"] = std::vector<std::uint64_t>(t.phi_values().begin(), t.phi_values().end());
                doc["sigma"] = std::vector<std::uint64_t>(t.sigma_values().begin(), t.sigma_values().end());
                doc["omega"] = std::vector<unsigned>(t.omega_values().begin(), t.omega_values().end());
            }
            if (!tab_dump.empty()) {
                std::ofstream bin(tab_dump, std::ios::binary | std::ios::trunc);
                if (!bin)
                    throw ResourceError("cannot open " + tab_dump);
                t.write_binary(bin);
            }
            err << "tabulated [" << t.lo() << ", " << t.hi() << "]: " << squarefree << " squarefree, " << primes
                << " primes\n";
        } else if (*ss_cmd) {
            const SieveParams p(ss_k, ss_l, ss_z);
            const ArithTable t = tabulate(1, ss_z);
            doc = envelope("sieve-sums");
            doc["k"] = ss_k;
            doc["l"] = ss_l;
            doc["z"] = ss_z;
            doc["S_k"] = sieve_sum_S(p, t);
            doc["H_k"] = sieve_sum_H(p, t);
            doc["pi_z"] = pi_count(ss_z);
            err << "S_" << ss_k << "(" << ss_z << ") = " << doc["S_k"].get<double>() << ", H = " << doc["H_k"].get<double>()
                << '\n';
        } else if (*const_cmd) {
            doc = envelope("constants");
            const auto zc = zeta_constants();
            const auto hc = h_lemma_constants();
            const auto sc = s_lemma_constants();
            const auto a = constant_A();
            const auto ec = elementary_inequalities();
            doc["zeta"] = constants_json(zc);
            doc["h_lemma"] = constants_json(hc);
            doc["s_lemma"] = constants_json(sc);
            Json aj;
            aj["recipe_bound"] = a.recipe_bound;
            aj["truncated"] = a.truncated;
            aj["truncation"] = a.truncation;
            aj["truncation_error"] = a.truncation_error;
            aj["closed_form"] = a.closed_form;
            aj["reports"] = constants_json(a.reports);
            doc["A"] = aj;
            doc["elementary"] = constants_json(ec);
            for (const auto* list : {&zc, &hc, &sc, &a.reports, &ec}) {
                pass = pass && all_verdicts(*list);
                for (const auto& r : *list)
                    summarize(err, r);
            }
        } else if (*vq_cmd) {
            const BoundReport r = q_error_sweep(vq_zmax);
            doc = envelope("verify-q");
            doc["report"] = to_json(r);
            pass = r.holds;
            summarize(err, r);
        } else if (*vh_cmd) {
            const BoundReport r = verify_H_dense(vh_zmax);
            doc = envelope("verify-h");
            doc["report"] = to_json(r);
            pass = r.holds;
            summarize(err, r);
        } else if (*vs_cmd) {
            if (vs_samples.empty()) {
                vs_samples = {1'000, 10'000, 100'000, 1'000'000, 10'000'000};
                if (g.full_mode()) {
                    vs_samples.push_back(100'000'000);
                    vs_samples.push_back(1'000'000'000);
                    vs_samples.push_back(2'000'000'000);
                }
            }
            if (vs_cutoff == 0)
                vs_cutoff = g.full_mode() ? 100'000'000 : 1'000'000;
            const SAsymptoticReport r = verify_S_asymptotic(vs_samples, vs_cutoff);
            doc = envelope("verify-s");
            doc["report"] = to_json(r);
            pass = r.small_prime_floor.verdict && all_hold(r.checks);
            summarize(err, r.small_prime_floor);
            for (const auto& c : r.checks)
                summarize(err, c);
            for (const auto& s : r.residuals)
                err << "residual z=" << s.z << ": " << s.residual << " (58/sqrt z = " << s.scale << ")\n";
        } else if (*vt_cmd) {
            vt.z_max = vt_zmax.value_or(g.full_mode() ? kFullZMax : kQuickZMax);
            vt.mode = g.full_mode() ? CampaignMode::full : CampaignMode::quick;
            vt.threads = g.threads;
            vt.checkpoint_path = vt_ckpt;
            vt.resume_path = g.resume;
            if (vt_stop > 0)
                vt.stop_after = vt_stop;
            const CampaignReport r = run_campaign(vt);
            doc = to_json(r);
            pass = r.verdict;
            err << (r.verdict ? "PASS" : "FAIL") << " sweep z in [" << r.z_min << ", " << r.z_max << "): "
                << r.tally.checks << " checks, " << r.tally.failure_count << " failures, "
                << r.tally.inconclusive_count << " inconclusive";
            if (r.tally.min_relative_margin)
                err << ", min relative margin " << r.tally.min_relative_margin->margin / r.tally.min_relative_margin->rhs
                    << " at z=" << r.tally.min_relative_margin->z;
            err << (r.complete ? "" : " (incomplete)") << '\n';
        } else if (*t4_cmd) {
            const WeightFunction f = t4.build();
            const double lhs = weighted_prime_sum(f, t4.k, t4.l);
            const auto [a, b] = theorem4_bounds(f, t4.k);
            doc = envelope("theorem4");
            doc["reports"] = Json::array({theorem_json(a, lhs, f, t4.k, t4.l), theorem_json(b, lhs, f, t4.k, t4.l)});
            for (const auto& r : doc["reports"]) {
                const BoundReport br = bound_report_from_json(r);
                if (br.params.value("applicable", false))
                    pass = pass && br.holds;
                summarize(err, br);
            }
        } else if (*t5_cmd) {
            const WeightFunction f = t5.build();
            const double lhs = weighted_prime_sum(f, 1, 0);
            doc = envelope("theorem5");
            doc["report"] = theorem_json(theorem5_bound(f), lhs, f, 1, 0);
            const BoundReport br = bound_report_from_json(doc["report"]);
            pass = !br.params.value("applicable", false) || br.holds;
            summarize(err, br);
        } else if (*corpus_cmd) {
            std::vector<CorpusCase> corpus;
            if (!corpus_file.empty()) {
                std::ifstream in(corpus_file);
                if (!in)
                    throw ResourceError("cannot open corpus file " + corpus_file);
                corpus = parse_corpus(in);
            }
            if (corpus_file.empty() || corpus_default) {
                const auto d = default_corpus();
                corpus.insert(corpus.end(), d.begin(), d.end());
            }
            const auto extra = random_corpus(corpus_random, g.seed);
            corpus.insert(corpus.end(), extra.begin(), extra.end());
            const auto reports = theorem_corpus_check(corpus);
            doc = envelope("corpus");
            doc["cases"] = corpus.size();
            doc["reports"] = to_json(reports);
            pass = corpus_verdict(reports);
            doc["verdict"] = pass;
            std::size_t applicable = 0, held = 0;
            for (const auto& r : reports)
                if (r.params.value("applicable", true)) {
                    ++applicable;
                    held += r.holds;
                }
            err << (pass ? "PASS" : "FAIL") << " corpus: " << held << "/" << applicable << " applicable checks hold ("
                << reports.size() - applicable << " inapplicable)\n";
        }

        if (!doc.contains("verdict"))
            doc["verdict"] = pass;
        const std::string text = dump_stable(doc) + "\n";
        if (g.out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(g.out_path, std::ios::trunc);
            if (!(f << text))
                throw ResourceError("cannot write " + g.out_path);
        }
        return pass ? kPass : kFail;
    } catch (const ResourceError& e) {
        err << "wbt: resource error: " << e.what() << '\n';
        return kResource;
    } catch (const RangeError& e) {
        err << "wbt: resource error: " << e.what() << '\n';
        return kResource;
    } catch (const PreconditionError& e) {
        err << "wbt: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "wbt: " << e.what() << '\n';
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "wbt: malformed JSON input: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace wbt::cli
