#include "beatty/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "beatty/io.hpp"
#include "beatty/literal.hpp"

namespace beatty {

namespace {

struct WindowSpec {
    long long lo = 0;
    long long hi = 0;
    std::string source = "flags";
};

// Window bounds come from --window lo hi, or from BEATTY_WINDOW ("lo:hi" or
// "n" meaning [-n, n)).  The resolved bounds are echoed into the output JSON
// so a run is reproducible regardless of the environment.
WindowSpec resolve_window(const std::vector<long long>& flag) {
    if (flag.size() == 2) return {flag[0], flag[1], "flags"};
    const char* env = std::getenv("BEATTY_WINDOW");
    if (env == nullptr)
        throw Error("window bounds required: pass --window LO HI or set BEATTY_WINDOW");
    std::string spec(env);
    auto colon = spec.find(':');
    try {
        if (colon == std::string::npos) {
            long long n = std::stoll(spec);
            if (n <= 0) throw Error("BEATTY_WINDOW must be positive");
            return {-n, n, "env"};
        }
        return {std::stoll(spec.substr(0, colon)), std::stoll(spec.substr(colon + 1)), "env"};
    } catch (const std::logic_error&) {
        throw Error("cannot parse BEATTY_WINDOW value '" + spec + "'");
    }
}

Json window_json(const WindowSpec& w) {
    return Json{{"lo", w.lo}, {"hi", w.hi}, {"source", w.source}};
}

Json values_json(const std::vector<BigInt>& vals) {
    Json arr = Json::array();
    for (const auto& v : vals) arr.push_back(v.str());
    return arr;
}

void emit(std::ostream& out, const Json& j) {
    out << j.dump() << "\n";
}

int cmd_gen(std::ostream& out, const std::string& alpha, const std::string& beta,
            long long from, long long to) {
    BeattySeq s(parse_real(alpha), parse_real(beta));
    Json j{{"alpha", s.alpha().str()}, {"beta", s.beta().str()},
           {"from", from}, {"to", to}};
    j["values"] = values_json(s.values(from, to));
    emit(out, j);
    return 0;
}

int cmd_member(std::ostream& out, const std::string& alpha, const std::string& beta,
               const std::string& k) {
    BeattySeq s(parse_real(alpha), parse_real(beta));
    Rational kr = parse_rational(k);
    if (!kr.is_integer()) throw Error("--k must be an integer");
    auto m = s.membership(kr.num());
    Json j{{"k", kr.str()}, {"member", m.present}};
    if (m.present) {
        j["index"] = m.index.str();
        j["ambiguous"] = m.ambiguous;
    }
    emit(out, j);
    return m.present ? 0 : 1;
}

int cmd_check_partition(std::ostream& out, const std::string& a1, const std::string& b1,
                        const std::string& a2, const std::string& b2) {
    ExactReal alpha1 = parse_real(a1), alpha2 = parse_real(a2);
    ExactReal beta1 = parse_real(b1), beta2 = parse_real(b2);
    if (!complementary(alpha1, alpha2)) {
        emit(out, Json{{"kind", "NotPartition"}, {"reason", "moduli are not complementary"}});
        return 1;
    }
    if (alpha1.is_rational()) {
        const Rational& a = alpha1.as_rational();
        long long r = static_cast<long long>(a.num());
        long long s = static_cast<long long>(a.den());
        bool ok = fraenkel_condition(r, s, beta1, beta2);
        emit(out, Json{{"criterion", "fraenkel"},
                       {"r", r},
                       {"s", s},
                       {"condition", ok},
                       {"kind", ok ? "Partition" : "NotPartition"}});
        return ok ? 0 : 1;
    }
    BeattySeq s1(alpha1, beta1), s2(alpha2, beta2);
    PartitionVerdict v = skolem_classify(s1, s2);
    Json j = json_of(v);
    j["criterion"] = "skolem";
    j["skolem_condition"] = v.kind != VerdictKind::NotEventualPartition;
    emit(out, j);
    return v.kind == VerdictKind::Partition ? 0 : 1;
}

int cmd_check_eventual(std::ostream& out, const std::string& a1, const std::string& b1,
                       const std::string& a2, const std::string& b2,
                       const std::vector<long long>& window) {
    WindowSpec w = resolve_window(window);
    BeattySeq s1(parse_real(a1), parse_real(b1));
    BeattySeq s2(parse_real(a2), parse_real(b2));
    PartitionVerdict v = verify_eventual(s1, s2, w.lo, w.hi);
    Json j = json_of(v);
    j["window"] = window_json(w);
    if (s1.alpha().is_irrational() && s2.alpha().is_irrational() &&
        complementary(s1.alpha(), s2.alpha())) {
        PartitionVerdict analytic = skolem_classify(s1, s2);
        j["criterion"] = json_of(analytic);
        j["criterion_agrees"] = analytic.same_classification(v);
    }
    emit(out, j);
    return v.kind != VerdictKind::NotEventualPartition ? 0 : 1;
}

int cmd_check_disjoint(std::ostream& out, const std::string& a1, const std::string& b1,
                       const std::string& a2, const std::string& b2,
                       const std::vector<long long>& window) {
    WindowSpec w = resolve_window(window);
    BeattySeq s1(parse_real(a1), parse_real(b1));
    BeattySeq s2(parse_real(a2), parse_real(b2));
    auto common = disjoint_window(s1, s2, w.lo, w.hi);
    Json j{{"window", window_json(w)},
           {"disjoint", common.empty()},
           {"intersection", values_json(common)}};
    emit(out, j);
    return common.empty() ? 0 : 1;
}

int cmd_coprime(std::ostream& out, const std::string& a1, const std::string& a2) {
    CoprimeDecision d = decide_coprime(parse_real(a1), parse_real(a2));
    Json j{{"coprime", d.coprime}, {"method", d.method}};
    if (d.jrt_witness)
        j["witness_kl"] = Json::array({d.jrt_witness->first.str(), d.jrt_witness->second.str()});
    if (d.mn_witness)
        j["witness_mn"] = Json::array({d.mn_witness->first.str(), d.mn_witness->second.str()});
    if (d.gamma) j["gamma"] = d.gamma->str();
    emit(out, j);
    return d.coprime ? 0 : 1;
}

int cmd_simulate(std::ostream& out, const std::vector<std::string>& alphas,
                 const std::vector<std::string>& betas, long long from, long long to,
                 const std::string& model, const std::string& occupancy_csv) {
    if (alphas.size() != betas.size() || alphas.empty())
        throw Error("simulate needs matching --alpha/--beta lists");
    std::vector<std::pair<ExactReal, ExactReal>> athletes;
    for (std::size_t i = 0; i < alphas.size(); ++i)
        athletes.emplace_back(parse_real(alphas[i]), parse_real(betas[i]));

    std::string mode = model;
    if (mode == "auto") mode = athletes.size() == 2 ? "two" : "multi";

    std::vector<RecordEvent> events;
    if (mode == "two") {
        if (athletes.size() != 2) throw Error("--model two needs exactly two athletes");
        StadiumConfig c(athletes[0].first, athletes[1].first, athletes[0].second,
                        athletes[1].second);
        events = simulate_two(c, from, to);
        if (!occupancy_csv.empty()) {
            std::ofstream csv(occupancy_csv);
            if (!csv) throw Error("cannot open " + occupancy_csv);
            csv << "k,in_A,in_B\n";
            for (long long k = from; k < to; ++k) {
                Occupancy occ = domain_occupancy(c, k);
                csv << k << "," << (occ.in_a ? 1 : 0) << "," << (occ.in_b ? 1 : 0) << "\n";
            }
        }
    } else if (mode == "multi") {
        if (!occupancy_csv.empty()) throw Error("occupancy export is a two-athlete feature");
        MultiConfig c(std::move(athletes));
        events = simulate_multi(c, from, to);
    } else {
        throw Error("unknown --model '" + model + "'");
    }
    for (const auto& e : events) emit(out, json_of(e));
    return 0;
}

int cmd_witness(std::ostream& out, const std::string& gamma, long long r, long long s) {
    ExactReal g = parse_real(gamma);
    try {
        auto [beta1, beta2] = gamma_witness(g, r, s);
        emit(out, Json{{"gamma", g.str()},
                       {"r", r},
                       {"s", s},
                       {"alpha1", (ExactReal(r) * g).str()},
                       {"alpha2", (ExactReal(s) * g).str()},
                       {"beta1", beta1.str()},
                       {"beta2", beta2.str()}});
        return 0;
    } catch (const NoWitness&) {
        emit(out, Json{{"gamma", g.str()}, {"r", r}, {"s", s}, {"error", "NoWitness"}});
        return 1;
    }
}

int cmd_verify_window(std::ostream& out, const std::vector<std::string>& alphas,
                      const std::vector<std::string>& betas,
                      const std::vector<long long>& window) {
    if (alphas.size() != betas.size() || alphas.empty())
        throw Error("verify-window needs matching --alpha/--beta lists");
    WindowSpec w = resolve_window(window);
    std::vector<BeattySeq> seqs;
    for (std::size_t i = 0; i < alphas.size(); ++i)
        seqs.emplace_back(parse_real(alphas[i]), parse_real(betas[i]));
    WindowReport rep = window_report(seqs, w.lo, w.hi);
    Json j = json_of(rep);
    j["window_source"] = w.source;
    j["clean"] = rep.clean();
    emit(out, j);
    return rep.clean() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Beatty sequences over exact arithmetic: generation, partition and "
                 "disjointness criteria, the running-track simulator, and brute-force "
                 "window verification"};
    app.require_subcommand(1);

    std::string alpha = "0", beta = "0", a1, b1 = "0", a2, b2 = "0", k, gamma;
    std::vector<std::string> alphas, betas;
    std::vector<long long> window;
    long long from = 0, to = 0, r = 0, s = 0;
    std::string model = "auto", occupancy_csv;

    auto* gen = app.add_subcommand("gen", "Generate terms for index range [from, to]");
    gen->add_option("--alpha", alpha)->required();
    gen->add_option("--beta", beta);
    gen->add_option("--from", from)->required();
    gen->add_option("--to", to)->required();

    auto* member = app.add_subcommand("member", "Test whether an integer is a term");
    member->add_option("--alpha", alpha)->required();
    member->add_option("--beta", beta);
    member->add_option("--k", k)->required();

    auto* chk_part = app.add_subcommand("check-partition",
                                        "Decide exact partition of Z for a sequence pair");
    chk_part->add_option("--a1", a1)->required();
    chk_part->add_option("--b1", b1);
    chk_part->add_option("--a2", a2)->required();
    chk_part->add_option("--b2", b2);

    auto* chk_ev = app.add_subcommand("check-eventual",
                                      "Window-verify eventual partition of Z");
    chk_ev->add_option("--a1", a1)->required();
    chk_ev->add_option("--b1", b1);
    chk_ev->add_option("--a2", a2)->required();
    chk_ev->add_option("--b2", b2);
    chk_ev->add_option("--window", window)->expected(2);

    auto* chk_dis = app.add_subcommand("check-disjoint",
                                       "Window-verify disjointness of two sequences");
    chk_dis->add_option("--a1", a1)->required();
    chk_dis->add_option("--b1", b1);
    chk_dis->add_option("--a2", a2)->required();
    chk_dis->add_option("--b2", b2);
    chk_dis->add_option("--window", window)->expected(2);

    auto* coprime = app.add_subcommand("coprime", "Decide modulus coprimality");
    coprime->add_option("--a1", a1)->required();
    coprime->add_option("--a2", a2)->required();

    auto* simulate = app.add_subcommand("simulate", "Run the stadium model, one JSON event per line");
    simulate->add_option("--alpha", alphas)->required();
    simulate->add_option("--beta", betas)->required();
    simulate->add_option("--from", from)->required();
    simulate->add_option("--to", to)->required();
    simulate->add_option("--model", model)->check(CLI::IsMember({"auto", "two", "multi"}));
    simulate->add_option("--occupancy-csv", occupancy_csv);

    auto* witness = app.add_subcommand("witness", "Construct disjoint offsets for gamma > 2");
    witness->add_option("--gamma", gamma)->required();
    witness->add_option("--r", r)->required();
    witness->add_option("--s", s)->required();

    auto* verify = app.add_subcommand("verify-window", "Coverage report for sequences on a window");
    verify->add_option("--alpha", alphas)->required();
    verify->add_option("--beta", betas)->required();
    verify->add_option("--window", window)->expected(2);

    std::vector<const char*> argv;
    argv.push_back("beatty");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (gen->parsed()) return cmd_gen(out, alpha, beta, from, to);
        if (member->parsed()) return cmd_member(out, alpha, beta, k);
        if (chk_part->parsed()) return cmd_check_partition(out, a1, b1, a2, b2);
        if (chk_ev->parsed()) return cmd_check_eventual(out, a1, b1, a2, b2, window);
        if (chk_dis->parsed()) return cmd_check_disjoint(out, a1, b1, a2, b2, window);
        if (coprime->parsed()) return cmd_coprime(out, a1, a2);
        if (simulate->parsed())
            return cmd_simulate(out, alphas, betas, from, to, model, occupancy_csv);
        if (witness->parsed()) return cmd_witness(out, gamma, r, s);
        if (verify->parsed()) return cmd_verify_window(out, alphas, betas, window);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace beatty
