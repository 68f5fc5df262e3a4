// seqgraph: build sequence graphs from Kronecker / van der Corput / IET
// orbit prefixes, analyze their gap and circulant structure, construct and
// verify torus / Chamanara embeddings, and reduce between graph sizes.
//
// Exit codes: 0 ok; 2 config error; 3 insufficient precision; 4 size not
// admissible for embedding (and --drop-last-edge absent); 5 embedding
// verification failure; 6 IET orbit revisited a point (sequence not
// distinct). Errors are emitted as JSON on stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "seqgraph/seqgraph.hpp"

namespace sg = seqgraph;
using nlohmann::json;

namespace {

struct NotAdmissible : sg::Error { using Error::Error; };
struct OrbitRevisit : sg::Error { using Error::Error; };
struct VerificationFailed : sg::Error { using Error::Error; };

struct Options {
    std::string family;
    std::string theta = "golden";
    int base = 2;
    int n = 0;
    int m = 0;
    int n_max = 0;
    int precision = 128;
    std::string iet_spec_path;
    bool drop_last_edge = false;
    std::string format = "json";
    std::string out;
};

void write_output(const Options& opt, const std::string& payload) {
    if (opt.out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw sg::InvalidParam("cannot open output file '" + opt.out + "'");
    f << payload;
}

sg::IETSpec load_iet_spec(const Options& opt) {
    if (opt.iet_spec_path.empty())
        throw sg::InvalidParam("--iet-spec is required for the iet family");
    std::ifstream f(opt.iet_spec_path);
    if (!f) throw sg::InvalidParam("cannot read IET spec '" + opt.iet_spec_path + "'");
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return sg::iet_parse_spec(text, opt.precision);
}

/// Sequence prefix for any family; IET orbits must be revisit-free.
sg::SortedSequence make_sequence(const Options& opt, int n) {
    if (n < 1) throw sg::InvalidParam("--n must be >= 1");
    if (opt.family == "kronecker") {
        sg::KroneckerParams params{sg::ThetaSpec::parse(opt.theta), opt.precision};
        return sg::kronecker_prefix(params, n);
    }
    if (opt.family == "vdc") return sg::vdc_prefix(opt.base, n);
    if (opt.family == "iet") {
        sg::IETSpec t = load_iet_spec(opt);
        sg::OrbitReport orbit = sg::iet_orbit(t, sg::BigFloat(t.precision), n);
        if (!orbit.distinct_ok)
            throw OrbitRevisit("orbit revisited a point at index " +
                               std::to_string(*orbit.revisit_index));
        return sg::make_sorted_sequence(std::move(orbit.points));
    }
    throw sg::InvalidParam("unknown family '" + opt.family + "'");
}

json family_header(const Options& opt, int n) {
    json j{{"family", opt.family}, {"n", n}};
    if (opt.family == "kronecker") j["theta"] = opt.theta;
    if (opt.family == "vdc") j["base"] = opt.base;
    if (opt.family == "iet") j["iet_spec"] = opt.iet_spec_path;
    return j;
}

int cmd_generate(const Options& opt) {
    sg::SortedSequence seq = make_sequence(opt, opt.n);
    sg::SequenceGraph g = sg::build_graph(seq);
    if (opt.format == "svg") {
        write_output(opt, sg::svg_sequence_graph(g));
        return 0;
    }
    json j = family_header(opt, opt.n);
    j.update(sg::to_json(g));
    write_output(opt, j.dump(2));
    return 0;
}

int cmd_analyze(const Options& opt) {
    sg::SortedSequence seq = make_sequence(opt, opt.n);
    if (seq.size() < 2) throw sg::InvalidParam("analyze needs N >= 2");
    sg::SequenceGraph g = sg::build_graph(seq);
    sg::GapProfile prof = sg::gap_profile(seq);
    json j = family_header(opt, opt.n);
    j.update(sg::to_json(prof));
    j["gap_count"] = prof.distinct_count;
    j["nice"] = sg::is_nice_N(seq);
    j["three_gap"] = sg::verify_three_gap(seq);
    auto circ = sg::circulant_check(g, seq);
    if (circ) {
        j["circulant"] = json::array({1, circ->c});
        j["circulant_degenerate"] = circ->degenerate;
    } else {
        j["circulant"] = nullptr;
    }
    write_output(opt, j.dump(2));
    return 0;
}

bool is_power_of_four(int n, int& m_out) {
    int m = 0;
    long long v = 1;
    while (v < n) {
        v *= 4;
        ++m;
    }
    m_out = m;
    return v == n;
}

json torus_report(int n, int c) {
    bool transposed = false;
    sg::FaceTraceResult faces = sg::face_trace(sg::torus_rotation_system(n, c));
    if (faces.genus != 1) {
        transposed = true;
        faces = sg::face_trace(sg::torus_rotation_system(n, c, true));
    }
    json j = sg::to_json(faces);
    j["connection_set"] = json::array({1, c});
    j["rotation"] = transposed ? "transposed" : "plus_c";
    return j;
}

json reduction_report(const Options& opt, int host_n, int n) {
    Options host_opt = opt;
    sg::SortedSequence host_seq = make_sequence(host_opt, host_n);
    sg::SequenceGraph host = sg::build_graph(host_seq);
    sg::MinorReduction red = sg::minor_reduce_trace(host, n);
    sg::SortedSequence small_seq = make_sequence(opt, n);
    sg::MultiGraph expect = sg::g_prime(sg::build_graph(small_seq));
    json j = sg::to_json(red);
    j["host_n"] = host_n;
    j["n"] = n;
    j["verdict"] = sg::is_same_labeled_graph(red.result, expect);
    return j;
}

int cmd_embed(const Options& opt) {
    if (opt.family == "vdc") {
        if (opt.base != 2)
            throw sg::InvalidParam("the Chamanara embedding is for the binary sequence");
        int m = 0;
        const bool exact = is_power_of_four(opt.n, m);
        if (!exact && !opt.drop_last_edge)
            throw NotAdmissible("N must be a power of 4 (or pass --drop-last-edge)");
        sg::ChamanaraEmbedding emb = sg::chamanara_embed(m);
        sg::VerifyResult verdict = sg::verify_embedding(emb);
        if (opt.format == "svg") {
            if (!verdict.ok) throw VerificationFailed("embedding verification failed");
            write_output(opt, sg::svg_chamanara(emb));
            return 0;
        }
        json j = family_header(opt, opt.n);
        j["embedding"] = sg::to_json(emb, verdict);
        if (!exact) j["reduction"] = reduction_report(opt, static_cast<int>(emb.n()), opt.n);
        write_output(opt, j.dump(2));
        if (!verdict.ok) throw VerificationFailed("embedding verification failed");
        return 0;
    }
    if (opt.family == "kronecker") {
        sg::SortedSequence seq = make_sequence(opt, opt.n);
        if (seq.size() < 2) throw sg::InvalidParam("embed needs N >= 2");
        const bool nice = sg::is_nice_N(seq);
        if (!nice && !opt.drop_last_edge)
            throw NotAdmissible("N is not nice: N != pi(1) + pi(N-1) (pass --drop-last-edge)");
        if (nice) {
            int c = seq.pi[1];
            if (opt.format == "svg") {
                write_output(opt, sg::svg_torus_circulant(opt.n, c));
                return 0;
            }
            json j = family_header(opt, opt.n);
            j["nice"] = true;
            j["torus"] = torus_report(opt.n, c);
            write_output(opt, j.dump(2));
            if (j["torus"]["genus"].get<int>() != 1)
                throw VerificationFailed("torus face trace did not report genus 1");
            return 0;
        }
        // Host graph: the next nice M > N; its minor gives G'_N.
        int host = -1;
        for (int cap = std::max(2 * opt.n, 16);; cap *= 2) {
            auto nice_list = sg::nice_N_scan(sg::ThetaSpec::parse(opt.theta), cap, opt.precision);
            for (int v : nice_list)
                if (v > opt.n) { host = v; break; }
            if (host > 0) break;
            if (cap > (1 << 22)) throw sg::PrecisionInsufficient("no nice N found above N");
        }
        Options host_opt = opt;
        sg::SortedSequence host_seq = make_sequence(host_opt, host);
        if (opt.format == "svg") {
            write_output(opt, sg::svg_torus_circulant(host, host_seq.pi[1]));
            return 0;
        }
        json j = family_header(opt, opt.n);
        j["nice"] = false;
        j["torus"] = torus_report(host, host_seq.pi[1]);
        j["reduction"] = reduction_report(opt, host, opt.n);
        write_output(opt, j.dump(2));
        return 0;
    }
    throw sg::InvalidParam("embed supports the kronecker and vdc families");
}

int cmd_minor(const Options& opt) {
    if (opt.m <= opt.n) throw sg::InvalidParam("minor requires --m greater than --n");
    json j = family_header(opt, opt.n);
    j["reduction"] = reduction_report(opt, opt.m, opt.n);
    write_output(opt, j.dump(2));
    return 0;
}

int cmd_iet(const Options& opt) {
    sg::IETSpec t = load_iet_spec(opt);
    sg::OrbitReport orbit = sg::iet_orbit(t, sg::BigFloat(t.precision), opt.n);
    json j{{"family", "iet"},
           {"n", opt.n},
           {"iet_spec", opt.iet_spec_path},
           {"k", t.k},
           {"perm", t.perm},
           {"convention", sg::convention_name(t.convention)}};
    json jorbit{{"distinct_ok", orbit.distinct_ok}};
    jorbit["revisit_index"] = orbit.revisit_index ? json(*orbit.revisit_index) : json(nullptr);
    j["orbit"] = jorbit;
    if (!orbit.distinct_ok) {
        write_output(opt, j.dump(2));
        throw OrbitRevisit("orbit revisited a point at index " +
                           std::to_string(*orbit.revisit_index));
    }
    sg::SortedSequence seq = sg::make_sorted_sequence(std::move(orbit.points));
    sg::SequenceGraph g = sg::build_graph(seq);
    sg::GapProfile prof = sg::gap_profile(seq);
    j["edges"] = 2 * g.n;
    j["gap_count"] = prof.distinct_count;
    j["dropped_edge"] = opt.drop_last_edge;
    sg::FaceTraceResult faces =
        sg::face_trace(sg::canonical_rotation(g, opt.drop_last_edge));
    j["surface"] = sg::to_json(faces);
    write_output(opt, j.dump(2));
    return 0;
}

int cmd_scan(const Options& opt) {
    if (opt.family != "kronecker")
        throw sg::InvalidParam("scan supports the kronecker family");
    auto nice = sg::nice_N_scan(sg::ThetaSpec::parse(opt.theta), opt.n_max, opt.precision);
    json ratios = json::array();
    for (size_t i = 1; i < nice.size(); ++i)
        ratios.push_back(double(nice[i]) / double(nice[i - 1]));
    json j{{"family", "kronecker"},
           {"theta", opt.theta},
           {"n_max", opt.n_max},
           {"nice", nice},
           {"ratios", ratios}};
    write_output(opt, j.dump(2));
    return 0;
}

void emit_error(const std::string& code, const std::string& message) {
    std::cerr << json{{"error", code}, {"message", message}}.dump() << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sequence graphs, gap structure, and surface embeddings"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_family) {
        if (with_family)
            cmd->add_option("--family", opt.family, "kronecker | vdc | iet")->required();
        cmd->add_option("--theta", opt.theta, "golden | sqrt2 | decimal literal");
        cmd->add_option("--base", opt.base, "van der Corput base (default 2)");
        cmd->add_option("--precision", opt.precision, "working precision in bits");
        cmd->add_option("--iet-spec", opt.iet_spec_path, "IET spec file");
        cmd->add_option("--format", opt.format, "json | svg")
            ->check(CLI::IsMember({"json", "svg"}));
        cmd->add_option("--out", opt.out, "output path (default stdout)");
    };

    CLI::App* generate = app.add_subcommand("generate", "emit a sequence graph");
    add_common(generate, true);
    generate->add_option("--n", opt.n, "number of vertices")->required();

    CLI::App* analyze = app.add_subcommand("analyze", "gap profile, nice flag, circulant set");
    add_common(analyze, true);
    analyze->add_option("--n", opt.n, "number of vertices")->required();

    CLI::App* embed = app.add_subcommand("embed", "build and verify a surface embedding");
    add_common(embed, true);
    embed->add_option("--n", opt.n, "number of vertices")->required();
    embed->add_flag("--drop-last-edge", opt.drop_last_edge,
                    "embed G'_N as a minor of the next admissible size");

    CLI::App* minor = app.add_subcommand("minor", "reduce G_M to G'_N and verify");
    add_common(minor, true);
    minor->add_option("--m", opt.m, "host graph size M")->required();
    minor->add_option("--n", opt.n, "target size N")->required();

    CLI::App* iet = app.add_subcommand("iet", "orbit, graph and genus report for an IET");
    add_common(iet, false);
    opt.family = "iet";
    iet->add_option("--n", opt.n, "orbit length")->required();
    iet->add_flag("--drop-last-edge", opt.drop_last_edge, "delete the C1 edge (N-1, 0)");

    CLI::App* scan = app.add_subcommand("scan", "list nice N up to a bound");
    add_common(scan, true);
    scan->add_option("--n-max", opt.n_max, "scan bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("config", e.what());
        return 2;
    }

    try {
        if (generate->parsed()) return cmd_generate(opt);
        if (analyze->parsed()) return cmd_analyze(opt);
        if (embed->parsed()) return cmd_embed(opt);
        if (minor->parsed()) return cmd_minor(opt);
        if (iet->parsed()) { opt.family = "iet"; return cmd_iet(opt); }
        if (scan->parsed()) return cmd_scan(opt);
        emit_error("config", "no subcommand given");
        return 2;
    } catch (const sg::PrecisionInsufficient& e) {
        emit_error("precision_insufficient", e.what());
        return 3;
    } catch (const NotAdmissible& e) {
        emit_error("not_admissible", e.what());
        return 4;
    } catch (const VerificationFailed& e) {
        emit_error("verification_failed", e.what());
        return 5;
    } catch (const OrbitRevisit& e) {
        emit_error("orbit_revisit", e.what());
        return 6;
    } catch (const sg::Error& e) {
        emit_error("config", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
}
