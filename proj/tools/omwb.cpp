// Command-line front end for the oriented-matroid workbench: instance
// generation, enumeration, certificate searches with verification, homology
// checks, the alternating-word solver, and a counterexample explorer.
//
// Reporting: every unit of work emits one report.  With --json each report
// is a single JSON line ("schema": 1, keys sorted); otherwise a short
// human-readable rendering is printed.  Exit code: 3 if any report is a
// theorem violation, 2 if any input was rejected (parse failure or resource
// refusal), 0 otherwise — including honest "none" results.
//
// Ground-set elements are 1-based in flags, witnesses and dumps; the library
// itself indexes elements from 0.  Colors (tope/circuit indices) are 1-based
// everywhere.

#include "omwb/omwb.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- plumbing

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_hex(const std::string& s) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(s);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw omwb::parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw omwb::parse_error("cannot write file: " + path);
    out << text;
}

// Non-empty, non-comment lines with surrounding whitespace trimmed.
std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
        line = line.substr(start);
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<omwb::SignVector> parse_sign_vector_lines(const std::string& text, int n,
                                                      const char* what) {
    std::vector<omwb::SignVector> out;
    for (const auto& line : content_lines(text)) {
        omwb::SignVector v = omwb::SignVector::parse(line);
        if (v.size() != static_cast<std::size_t>(n))
            throw omwb::parse_error(std::string(what) + ": expected length " + std::to_string(n) +
                                    ", got \"" + line + "\"");
        out.push_back(v);
    }
    if (out.empty()) throw omwb::parse_error(std::string(what) + ": no sign vectors found");
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            throw omwb::parse_error(std::string(what) + ": bad integer \"" + token + "\"");
        }
    }
    return out;
}

// 1-based ground-set elements from the command line, validated and shifted.
std::vector<int> to_zero_based(const std::vector<int>& elems, int n, const char* what) {
    std::vector<int> out;
    for (int e : elems) {
        if (e < 1 || e > n)
            throw omwb::parse_error(std::string(what) + ": element " + std::to_string(e) +
                                    " outside 1.." + std::to_string(n));
        out.push_back(e - 1);
    }
    return out;
}

json one_based(const std::vector<int>& elems) {
    json a = json::array();
    for (int e : elems) a.push_back(e + 1);
    return a;
}

// ------------------------------------------------------------- report sink

struct Emitter {
    bool json_mode = false;
    bool timings = false;
    int worst = 0;

    void raise(int severity) { worst = std::max(worst, severity); }

    void emit(json rep, int severity) {
        raise(severity);
        if (rep.value("status", "") != "theorem-violation") rep.erase("dump");
        if (json_mode) {
            std::cout << rep.dump() << "\n";
            return;
        }
        std::cout << rep.value("command", "?") << ": " << rep.value("status", "?");
        if (rep.contains("trial")) std::cout << " (trial " << rep["trial"].get<long long>() << ")";
        std::cout << "\n";
        if (rep.contains("message")) std::cout << "  " << rep["message"].get<std::string>() << "\n";
        if (rep.contains("witness")) {
            const json& w = rep["witness"];
            for (auto it = w.begin(); it != w.end(); ++it) {
                std::cout << "  " << it.key() << ": ";
                if (it->is_string()) std::cout << it->get<std::string>();
                else std::cout << it->dump();
                std::cout << "\n";
            }
        }
    }
};

json base_report(const std::string& command, const std::string& instance_text) {
    json rep;
    rep["schema"] = 1;
    rep["command"] = command;
    rep["instance"] = digest_hex(instance_text);
    rep["elapsed_ms"] = 0;
    return rep;
}

// Runs one unit of work, mapping exceptions to statuses.  The body fills
// "status" (and "witness"/"message"/"dump") itself on success paths.
template <class Body>
void run_unit(Emitter& em, json rep, Body&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    int severity = 0;
    try {
        body(rep);
        if (!rep.contains("status")) rep["status"] = "certified";
        if (rep["status"] == "theorem-violation") severity = 3;
    } catch (const omwb::theorem_violation& e) {
        rep["status"] = "theorem-violation";
        rep["message"] = e.what();
        severity = 3;
    } catch (const omwb::parse_error& e) {
        rep["status"] = "refused";
        rep["message"] = e.what();
        severity = 2;
    } catch (const omwb::refusal_error& e) {
        rep["status"] = "refused";
        rep["message"] = e.what();
        severity = 2;
    }
    if (em.timings) {
        const auto dt = std::chrono::steady_clock::now() - t0;
        rep["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }
    em.emit(std::move(rep), severity);
}

// ------------------------------------------------------- witness rendering

json witness_rainbow(const omwb::RainbowCertificate& cert) {
    json w;
    w["circuit"] = cert.circuit.str();
    json pairs = json::array();
    for (const auto& [elem, color] : cert.assignment)
        pairs.push_back({elem + 1, color});
    w["assignment"] = pairs;
    return w;
}

json witness_transversal(const omwb::TransversalCertificate& cert) {
    json w;
    w["tope"] = cert.tope.str();
    json colors = json::array();
    for (int i : cert.element_color) colors.push_back(i);
    w["element_color"] = colors;
    return w;
}

json witness_words(const omwb::WordSolution& sol) {
    json w;
    w["word"] = sol.word;
    w["shift"] = sol.offset;
    w["crossings"] = sol.crossings;
    json perm = json::array();
    for (int j : sol.order) perm.push_back(j + 1);
    w["permutation"] = perm;
    return w;
}

// ------------------------------------------------------- shared generation

struct RandomInstance {
    omwb::RationalMatrix m;
    omwb::Chirotope chi;
};

// Random integer matrix with entries in [-10, 10], resampled until the
// chirotope is uniform (exact determinant test on every r-subset).
RandomInstance random_uniform_instance(omwb::Rng& rng, int n, int r) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        omwb::RationalMatrix m = omwb::random_matrix(r, n, rng);
        if (omwb::rank(m) != r) continue;
        omwb::Chirotope chi = omwb::chirotope_from_matrix(m);
        if (!chi.is_uniform()) continue;
        return {std::move(m), std::move(chi)};
    }
    throw omwb::refusal_error("could not sample a uniform instance in 10000 attempts");
}

std::string render_sign_vectors(const std::vector<omwb::SignVector>& vs) {
    std::string out;
    for (const auto& v : vs) {
        out += v.str();
        out += "\n";
    }
    return out;
}

// -------------------------------------------------------------- subcommands

struct Options {
    // global
    bool json_mode = false;
    bool timings = false;
    int limit_n = 9;
    std::size_t limit_faces = 500000;

    // shared flags
    std::string om_file, out_file, circuits_file, topes_file, words_file, in_file;
    std::string family_dir, labels_file, what, mult_list, jplus_list, jminus_list;
    int n = 0, r = 0, e = 0, h = 0;
    std::uint64_t seed = 0;
    long long trials = 0;
    bool alternating = false;
    bool force = false;
    bool random_mode = false;
    bool with_oracle = false;
};

omwb::Limits make_limits(const Options& o) {
    omwb::Limits lim;
    lim.max_ground_set = o.limit_n;
    lim.max_faces = o.limit_faces;
    return lim;
}

void cmd_gen(Emitter& em, const Options& o) {
    const omwb::Limits lim = make_limits(o);
    json rep = base_report("gen", "n=" + std::to_string(o.n) + " r=" + std::to_string(o.r) +
                                      (o.alternating ? " alternating" : " seed=" + std::to_string(o.seed)));
    run_unit(em, std::move(rep), [&](json& out) {
        lim.check_ground_set(o.n, "gen");
        omwb::Chirotope chi;
        if (o.alternating) {
            chi = omwb::alternating_chirotope(o.n, o.r);
        } else {
            omwb::Rng rng(o.seed);
            chi = random_uniform_instance(rng, o.n, o.r).chi;
            out["seed"] = o.seed;
        }
        const std::string text = omwb::write_chi(chi);
        write_file(o.out_file, text);
        out["instance"] = digest_hex(text);
        out["status"] = "certified";
        json w;
        w["n"] = chi.n;
        w["r"] = chi.r;
        w["uniform"] = chi.is_uniform();
        w["out"] = o.out_file;
        out["witness"] = w;
    });
}

void cmd_check(Emitter& em, const Options& o) {
    const std::string text = read_file(o.om_file);
    json rep = base_report("check", text);
    run_unit(em, std::move(rep), [&](json& out) {
        const omwb::Chirotope chi = omwb::parse_chi(text);
        const auto fail = omwb::check_chirotope_diagnostic(chi);
        if (fail) {
            out["status"] = "none";
            out["message"] = *fail;
            return;
        }
        out["status"] = "certified";
        json w;
        w["n"] = chi.n;
        w["r"] = chi.r;
        w["uniform"] = chi.is_uniform();
        w["loops"] = one_based(omwb::loops(chi));
        w["coloops"] = one_based(omwb::coloops(chi));
        out["witness"] = w;
    });
}

void cmd_enumerate(Emitter& em, const Options& o) {
    const omwb::Limits lim = make_limits(o);
    const std::string text = read_file(o.om_file);
    json rep = base_report("enumerate " + o.what, text);
    run_unit(em, std::move(rep), [&](json& out) {
        const omwb::Chirotope chi = omwb::parse_chi(text);
        lim.check_ground_set(chi.n, "enumerate");
        std::vector<omwb::SignVector> items;
        if (o.what == "circuits") items = omwb::circuits_from_chirotope(chi);
        else if (o.what == "cocircuits") items = omwb::cocircuits_from_chirotope(chi);
        else if (o.what == "vectors") items = omwb::vectors_of(chi, lim);
        else if (o.what == "covectors") items = omwb::covectors_of(chi, lim);
        else if (o.what == "topes") items = omwb::topes_of(chi, lim);
        else throw omwb::parse_error("enumerate: unknown kind \"" + o.what + "\"");
        omwb::sort_sign_vectors(items);
        out["status"] = "certified";
        json w;
        w["count"] = items.size();
        json list = json::array();
        for (const auto& v : items) list.push_back(v.str());
        w["items"] = list;
        out["witness"] = w;
    });
}

void cmd_dual(Emitter& em, const Options& o) {
    const std::string text = read_file(o.om_file);
    json rep = base_report("dual", text);
    run_unit(em, std::move(rep), [&](json& out) {
        const omwb::Chirotope chi = omwb::parse_chi(text);
        const omwb::Chirotope d = omwb::dual(chi);
        write_file(o.out_file, omwb::write_chi(d));
        out["status"] = "certified";
        json w;
        w["n"] = d.n;
        w["r"] = d.r;
        w["out"] = o.out_file;
        out["witness"] = w;
    });
}

// verify conic / verify convex, file mode.
void cmd_verify_colorful_file(Emitter& em, const Options& o, bool conic) {
    const omwb::Limits lim = make_limits(o);
    const std::string om_text = read_file(o.om_file);
    const std::string circ_text = read_file(o.circuits_file);
    json rep = base_report(conic ? "verify conic" : "verify convex",
                           om_text + "\n" + circ_text + (conic ? "\ne=" + std::to_string(o.e) : ""));
    run_unit(em, std::move(rep), [&](json& out) {
        const omwb::Chirotope chi = omwb::parse_chi(om_text);
        lim.check_ground_set(chi.n, "verify");
        const auto circuits = parse_sign_vector_lines(circ_text, chi.n, "circuits");
        json dump;
        dump["om"] = om_text;
        dump["circuits"] = content_lines(circ_text);
        if (conic) dump["e"] = o.e;
        out["dump"] = dump;
        omwb::RainbowCertificate cert;
        if (conic) {
            if (o.e < 1 || o.e > chi.n)
                throw omwb::parse_error("verify conic: --e is required and must be in 1..n");
            omwb::ConicInstance inst{chi, o.e - 1, circuits};
            cert = omwb::find_rainbow_conic(inst);
        } else {
            cert = omwb::find_rainbow_convex(chi, circuits);
        }
        out["status"] = "certified";
        out["witness"] = witness_rainbow(cert);
    });
}

// verify conic / verify convex, random campaign.
void cmd_verify_colorful_random(Emitter& em, const Options& o, bool conic) {
    const omwb::Limits lim = make_limits(o);
    for (long long t = 0; t < o.trials; ++t) {
        json rep = base_report(conic ? "verify conic" : "verify convex",
                               "random n=" + std::to_string(o.n) + " r=" + std::to_string(o.r) +
                                   " seed=" + std::to_string(o.seed) + " trial=" + std::to_string(t));
        rep["seed"] = o.seed;
        rep["trial"] = t;
        run_unit(em, std::move(rep), [&](json& out) {
            lim.check_ground_set(o.n, "verify");
            if (o.r < 1 || o.n <= o.r)
                throw omwb::parse_error("verify: random mode needs 1 <= r < n");
            omwb::Rng rng = omwb::Rng::for_trial(o.seed, static_cast<std::uint64_t>(t));
            const int want = conic ? o.r : o.r + 1;
            RandomInstance inst{omwb::RationalMatrix(0, 0), omwb::Chirotope{}};
            std::vector<omwb::SignVector> pool;
            int e0 = 0;
            for (int attempt = 0; attempt < 10000 && pool.empty(); ++attempt) {
                inst = random_uniform_instance(rng, o.n, o.r);
                const auto circuits = omwb::circuits_from_chirotope(inst.chi);
                if (conic) {
                    e0 = static_cast<int>(rng.below(static_cast<std::uint64_t>(o.n)));
                    for (const auto& c : circuits)
                        if (c.is_positive() && c[static_cast<std::size_t>(e0)] == +1)
                            pool.push_back(c);
                } else {
                    for (const auto& c : circuits)
                        if (c.is_positive() && !c.is_zero()) pool.push_back(c);
                }
            }
            if (pool.empty())
                throw omwb::refusal_error("no positive circuits found across 10000 samples");
            std::vector<omwb::SignVector> chosen;
            for (int i = 0; i < want; ++i)
                chosen.push_back(pool[rng.below(pool.size())]);
            const std::string om_text = omwb::write_chi(inst.chi);
            out["instance"] = digest_hex(om_text + render_sign_vectors(chosen) +
                                         (conic ? "e=" + std::to_string(e0 + 1) : ""));
            json dump;
            dump["om"] = om_text;
            dump["matrix"] = inst.m.str();
            dump["circuits"] = json::array();
            for (const auto& c : chosen) dump["circuits"].push_back(c.str());
            if (conic) dump["e"] = e0 + 1;
            out["dump"] = dump;
            json w;
            if (conic) {
                omwb::ConicInstance ci{inst.chi, e0, chosen};
                w = witness_rainbow(omwb::find_rainbow_conic(ci));
                if (o.n <= 6) {
                    const omwb::RainbowCertificate pipe =
                        omwb::conic_pipeline(inst.m, e0, chosen, lim);
                    w["pipeline"] = witness_rainbow(pipe);
                }
            } else {
                w = witness_rainbow(omwb::find_rainbow_convex(inst.chi, chosen));
            }
            out["status"] = "certified";
            out["witness"] = w;
        });
    }
}

void cmd_verify_transversal(Emitter& em, const Options& o) {
    const omwb::Limits lim = make_limits(o);
    const std::string om_text = read_file(o.om_file);
    const std::string topes_text = read_file(o.topes_file);
    json rep = base_report("verify transversal", om_text + "\n" + topes_text);
    run_unit(em, std::move(rep), [&](json& out) {
        const omwb::Chirotope chi = omwb::parse_chi(om_text);
        lim.check_ground_set(chi.n, "verify transversal");
        const auto topes = parse_sign_vector_lines(topes_text, chi.n, "topes");
        json dump;
        dump["om"] = om_text;
        dump["topes"] = json::array();
        for (const auto& t : topes) dump["topes"].push_back(t.str());
        out["dump"] = dump;
        omwb::TopeCollection tc{chi, topes, {}};
        const auto cert = omwb::find_transversal(tc, o.force, lim);
        if (cert) {
            out["status"] = "certified";
            out["witness"] = witness_transversal(*cert);
            return;
        }
        // No transversal: honest "none" unless the existence hypotheses all
        // hold (uniform instance, topes agreeing on an element), in which
        // case success was guaranteed.  Non-uniform instances reach this
        // point only under --force and may answer "none" freely: that is the
        // documented counterexample behavior.
        if (chi.is_uniform()) {
            for (int j = 0; j < chi.n; ++j) {
                bool agree = true;
                for (const auto& t : topes)
                    if (t[static_cast<std::size_t>(j)] != topes[0][static_cast<std::size_t>(j)]) {
                        agree = false;
                        break;
                    }
                if (agree)
                    throw omwb::theorem_violation(
                        "verify transversal: the topes agree on element " + std::to_string(j + 1) +
                        " yet no transversal exists");
            }
        }
        out["status"] = "none";
        out["message"] = "no transversal tope exists";
    });
}

void cmd_verify_rank_r(Emitter& em, const Options& o) {
    const omwb::Limits lim = make_limits(o);
    const std::string om_text = read_file(o.om_file);
    const std::string topes_text = read_file(o.topes_file);
    json rep = base_report("verify rank-r", om_text + "\n" + topes_text + "\nmult=" + o.mult_list);
    run_unit(em, std::move(rep), [&](json& out) {
        const omwb::Chirotope chi = omwb::parse_chi(om_text);
        lim.check_ground_set(chi.n, "verify rank-r");
        const auto topes = parse_sign_vector_lines(topes_text, chi.n, "topes");
        const auto mult = parse_int_list(o.mult_list, "mult");
        json dump;
        dump["om"] = om_text;
        dump["topes"] = json::array();
        for (const auto& t : topes) dump["topes"].push_back(t.str());
        dump["mult"] = mult;
        out["dump"] = dump;
        omwb::TopeCollection tc{chi, topes, mult};
        const omwb::TransversalCertificate cert = omwb::find_partition_transversal(tc, lim);
        out["status"] = "certified";
        out["witness"] = witness_transversal(cert);
    });
}

void cmd_verify_rank2(Emitter& em, const Options& o) {
    const omwb::Limits lim = make_limits(o);
    const std::string text = read_file(o.words_file);
    json rep = base_report("verify rank-2", text);
    run_unit(em, std::move(rep), [&](json& out) {
        const std::vector<std::string> words = content_lines(text);
        json dump;
        dump["words"] = words;
        out["dump"] = dump;
        const omwb::WordSolution sol = omwb::solve_words(words, lim);
        const auto oracle = omwb::oracle_words(words);
        if (!oracle)
            throw omwb::theorem_violation(
                "verify rank-2: solver succeeded but the exhaustive oracle found nothing");
        if (!omwb::check_word_solution(words, *oracle))
            throw omwb::theorem_violation("verify rank-2: oracle returned an invalid assignment");
        out["status"] = "certified";
        json w = witness_words(sol);
        w["oracle_agrees"] = true;
        out["witness"] = w;
    });
}

void cmd_verify_height_bound(Emitter& em, const Options& o) {
    const omwb::Limits lim = make_limits(o);
    const std::string text = read_file(o.om_file);
    json rep = base_report("verify height-bound", text);
    run_unit(em, std::move(rep), [&](json& out) {
        const omwb::Chirotope chi = omwb::parse_chi(text);
        lim.check_ground_set(chi.n, "verify height-bound");
        json dump;
        dump["om"] = text;
        out["dump"] = dump;
        const auto violation = omwb::height_bound_violation(chi, lim);
        if (violation)
            throw omwb::theorem_violation("verify height-bound: " + *violation);
        out["status"] = "certified";
        json w;
        w["bound"] = "support size <= rank + height on every vector";
        out["witness"] = w;
    });
}

json betti_table(const omwb::SimplicialComplex& k) {
    json t = json::object();
    for (int q = -1; q <= k.dim(); ++q)
        t[std::to_string(q)] = omwb::betti_z2(k, q);
    return t;
}

void cmd_verify_lemma_jj(Emitter& em, const Options& o) {
    const omwb::Limits lim = make_limits(o);
    const std::string text = read_file(o.om_file);
    json rep = base_report("verify lemma-jj",
                           text + "\njp=" + o.jplus_list + " jm=" + o.jminus_list);
    run_unit(em, std::move(rep), [&](json& out) {
        const omwb::Chirotope chi = omwb::parse_chi(text);
        lim.check_ground_set(chi.n, "verify lemma-jj");
        const auto jp = to_zero_based(parse_int_list(o.jplus_list, "jplus"), chi.n, "jplus");
        const auto jm = to_zero_based(parse_int_list(o.jminus_list, "jminus"), chi.n, "jminus");
        json dump;
        dump["om"] = text;
        dump["jplus"] = one_based(jp);
        dump["jminus"] = one_based(jm);
        out["dump"] = dump;
        const auto covs = omwb::covector_set_jj(chi, jp, jm, lim);
        const omwb::SimplicialComplex oc = omwb::order_complex(
            covs.size(),
            [&](int a, int b) {
                return omwb::strictly_below(covs[static_cast<std::size_t>(a)],
                                            covs[static_cast<std::size_t>(b)]);
            },
            lim);
        json w;
        w["covectors"] = covs.size();
        w["betti"] = betti_table(oc);
        if (jp.empty() && jm.empty()) {
            // Full covector complex: a sphere of dimension rank-1, so reduced
            // homology is one copy of Z2 there and zero elsewhere.
            for (int q = -1; q <= oc.dim(); ++q) {
                const std::size_t expect = (q == chi.r - 1) ? 1u : 0u;
                if (omwb::betti_z2(oc, q) != expect)
                    throw omwb::theorem_violation(
                        "verify lemma-jj: homology of the full covector complex differs from a "
                        "sphere in dimension " + std::to_string(q));
            }
            out["status"] = "certified";
            out["witness"] = w;
            return;
        }
        bool has_tope = false;
        for (const auto& x : covs)
            if (x.full_support()) { has_tope = true; break; }
        if (!has_tope) {
            out["status"] = "none";
            out["message"] = "the restricted covector set contains no tope; nothing to check";
            out["witness"] = w;
            return;
        }
        for (int q = -1; q <= oc.dim(); ++q)
            if (omwb::betti_z2(oc, q) != 0)
                throw omwb::theorem_violation(
                    "verify lemma-jj: restricted covector complex is not acyclic in dimension " +
                    std::to_string(q));
        out["status"] = "certified";
        out["witness"] = w;
    });
}

void cmd_verify_lemma_hh(Emitter& em, const Options& o) {
    const omwb::Limits lim = make_limits(o);
    const std::string text = read_file(o.om_file);
    json rep = base_report("verify lemma-hh",
                           text + "\ne=" + std::to_string(o.e) + " h=" + std::to_string(o.h));
    run_unit(em, std::move(rep), [&](json& out) {
        const omwb::Chirotope chi = omwb::parse_chi(text);
        lim.check_ground_set(chi.n, "verify lemma-hh");
        if (o.e < 1 || o.e > chi.n)
            throw omwb::parse_error("verify lemma-hh: --e must be in 1..n");
        if (o.h < 1) throw omwb::parse_error("verify lemma-hh: --h must be at least 1");
        json dump;
        dump["om"] = text;
        dump["e"] = o.e;
        dump["h"] = o.h;
        out["dump"] = dump;
        const auto vecs = omwb::positive_vectors_eh(chi, o.e - 1, o.h, lim);
        if (vecs.empty()) {
            out["status"] = "none";
            out["message"] = "the filtered positive-vector set is empty; nothing to check";
            return;
        }
        const omwb::SimplicialComplex oc = omwb::order_complex(
            vecs.size(),
            [&](int a, int b) {
                return omwb::strictly_below(vecs[static_cast<std::size_t>(a)],
                                            vecs[static_cast<std::size_t>(b)]);
            },
            lim);
        json w;
        w["vectors"] = vecs.size();
        w["betti"] = betti_table(oc);
        if (!omwb::reduced_homology_trivial_up_to(oc, o.h - 2))
            throw omwb::theorem_violation(
                "verify lemma-hh: order complex is not homologically (h-2)-connected");
        out["status"] = "certified";
        out["witness"] = w;
    });
}

void cmd_verify_lemma_li(Emitter& em, const Options& o) {
    const omwb::Limits lim = make_limits(o);
    const std::string om_text = read_file(o.om_file);
    const std::string topes_text = read_file(o.topes_file);
    json rep = base_report("verify lemma-li", om_text + "\n" + topes_text);
    run_unit(em, std::move(rep), [&](json& out) {
        const omwb::Chirotope chi = omwb::parse_chi(om_text);
        lim.check_ground_set(chi.n, "verify lemma-li");
        const auto topes = parse_sign_vector_lines(topes_text, chi.n, "topes");
        const int k = static_cast<int>(topes.size());
        json dump;
        dump["om"] = om_text;
        dump["topes"] = json::array();
        for (const auto& t : topes) dump["topes"].push_back(t.str());
        out["dump"] = dump;
        omwb::TopeCollection tc{chi, topes, {}};
        const omwb::TopeSet ts = omwb::TopeSet::of(chi, lim);
        omwb::validate_tope_collection(tc, ts, false);
        const omwb::BoxComplex full = omwb::build_boxes(chi, topes, chi.n * k, lim);
        json table = json::object();
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            const omwb::BoxComplex bc = omwb::restrict_boxes(full, mask);
            std::string name;
            for (int i = 1; i <= k; ++i)
                if (mask & (1u << (i - 1))) name += (name.empty() ? "" : "+") + std::to_string(i);
            int maxd = -1;
            for (const auto& b : bc.boxes) maxd = std::max(maxd, bc.dim_of(b));
            std::vector<std::size_t> betti(static_cast<std::size_t>(maxd + 2), 0);
            json row = json::object();
            for (int q = -1; q <= maxd; ++q) {
                betti[static_cast<std::size_t>(q + 1)] = omwb::li_betti_cellular(bc, q);
                row[std::to_string(q)] = betti[static_cast<std::size_t>(q + 1)];
            }
            table[name] = row;
            for (int q = -1; q <= std::min(maxd, chi.r - 2); ++q)
                if (betti[static_cast<std::size_t>(q + 1)] != 0)
                    throw omwb::theorem_violation("verify lemma-li: the complex for topes {" +
                                                  name + "} fails connectivity in dimension " +
                                                  std::to_string(q));
            bool common = false;
            for (int j = 0; j < chi.n && !common; ++j) {
                bool agree = true;
                omwb::Sign s = 0;
                for (int i = 0; i < k; ++i) {
                    if (!(mask & (1u << i))) continue;
                    const omwb::Sign v =
                        topes[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    if (s == 0) s = v;
                    else if (v != s) { agree = false; break; }
                }
                common = agree;
            }
            if (common) {
                for (int q = -1; q <= maxd; ++q)
                    if (betti[static_cast<std::size_t>(q + 1)] != 0)
                        throw omwb::theorem_violation(
                            "verify lemma-li: the complex for topes {" + name +
                            "} has a common agreed element but is not acyclic in dimension " +
                            std::to_string(q));
            }
        }
        out["status"] = "certified";
        json w;
        w["betti"] = table;
        out["witness"] = w;
    });
}

void cmd_words_solve(Emitter& em, const Options& o) {
    const omwb::Limits lim = make_limits(o);
    const std::string text = read_file(o.in_file);
    json rep = base_report("words solve", text);
    run_unit(em, std::move(rep), [&](json& out) {
        const std::vector<std::string> words = content_lines(text);
        json dump;
        dump["words"] = words;
        out["dump"] = dump;
        const omwb::WordSolution sol = omwb::solve_words(words, lim);
        json w = witness_words(sol);
        if (o.with_oracle) {
            const auto oracle = omwb::oracle_words(words);
            if (!oracle)
                throw omwb::theorem_violation(
                    "words solve: solver succeeded but the exhaustive oracle found nothing");
            w["oracle_agrees"] = true;
        }
        out["status"] = "certified";
        out["witness"] = w;
    });
}

void cmd_rainbow(Emitter& em, const Options& o) {
    const omwb::Limits lim = make_limits(o);
    namespace fs = std::filesystem;
    // Load every "<colors>.cpx" in the directory; file "1-3.cpx" is the
    // complex for color set {1,3}.  Every non-empty subset of the palette
    // must be present.
    std::map<std::string, std::string> files;
    std::string concat;
    {
        std::vector<std::string> names;
        if (!fs::is_directory(o.family_dir)) {
            std::cerr << "error: rainbow: not a directory: " << o.family_dir << "\n";
            em.raise(2);
            return;
        }
        for (const auto& entry : fs::directory_iterator(o.family_dir))
            if (entry.path().extension() == ".cpx") names.push_back(entry.path().filename().string());
        std::sort(names.begin(), names.end());
        for (const auto& name : names) {
            files[name] = read_file((fs::path(o.family_dir) / name).string());
            concat += name + "\n" + files[name];
        }
    }
    const std::string labels_text = read_file(o.labels_file);
    json rep = base_report("rainbow", concat + labels_text);
    run_unit(em, std::move(rep), [&](json& out) {
        int k = 0;
        std::map<std::uint32_t, std::string> masks;
        for (const auto& [name, text] : files) {
            const std::string stem = name.substr(0, name.size() - 4);
            std::vector<std::string> parts;
            std::string cur;
            for (char c : stem) {
                if (c == '-') { parts.push_back(cur); cur.clear(); }
                else cur += c;
            }
            parts.push_back(cur);
            std::uint32_t mask = 0;
            for (const auto& tok : parts) {
                int color = 0;
                try {
                    std::size_t used = 0;
                    color = std::stoi(tok, &used);
                    if (used != tok.size()) throw std::invalid_argument(tok);
                } catch (const std::exception&) {
                    throw omwb::parse_error("rainbow: bad color token \"" + tok + "\" in " + name);
                }
                if (color < 1 || color > 8)
                    throw omwb::parse_error("rainbow: color outside 1..8 in " + name);
                mask |= 1u << (color - 1);
                k = std::max(k, color);
            }
            masks[mask] = name;
        }
        if (k == 0) throw omwb::parse_error("rainbow: no .cpx files in " + o.family_dir);
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask)
            if (masks.find(mask) == masks.end())
                throw omwb::parse_error("rainbow: missing a complex file for one of the " +
                                        std::to_string((1u << k) - 1) + " color subsets");
        omwb::ComplexFamily fam = omwb::ComplexFamily::with_colors(k);
        for (const auto& [mask, name] : masks)
            fam.by_mask[mask] = omwb::parse_cpx(files.at(name), lim);
        omwb::Labeling lab;
        for (const auto& line : content_lines(labels_text)) {
            std::istringstream in(line);
            int v = 0, l = 0;
            if (!(in >> v >> l))
                throw omwb::parse_error("rainbow: bad label line \"" + line + "\"");
            std::string rest;
            if (in >> rest) throw omwb::parse_error("rainbow: bad label line \"" + line + "\"");
            lab[v] = l;
        }
        json dump;
        dump["family"] = json::object();
        for (const auto& [name, text] : files) dump["family"][name] = text;
        dump["labels"] = labels_text;
        out["dump"] = dump;
        const omwb::Face face = omwb::find_rainbow_simplex(fam, lab, lim);
        out["status"] = "certified";
        json w;
        w["face"] = face;
        json labels = json::array();
        for (int v : face) labels.push_back(lab.at(v));
        w["labels"] = labels;
        out["witness"] = w;
    });
}

void cmd_explore_q14(Emitter& em, const Options& o) {
    const omwb::Limits lim = make_limits(o);
    long long none_count = 0;
    for (long long t = 0; t < o.trials; ++t) {
        json rep = base_report("explore q14",
                               "n=" + std::to_string(o.n) + " r=" + std::to_string(o.r) +
                                   " seed=" + std::to_string(o.seed) + " trial=" + std::to_string(t));
        rep["seed"] = o.seed;
        rep["trial"] = t;
        int severity = 0;
        try {
            lim.check_ground_set(o.n, "explore q14");
            omwb::Rng rng = omwb::Rng::for_trial(o.seed, static_cast<std::uint64_t>(t));
            const RandomInstance inst = random_uniform_instance(rng, o.n, o.r);
            const omwb::TopeSet ts = omwb::TopeSet::of(inst.chi, lim);
            std::vector<omwb::SignVector> topes;
            for (int i = 0; i < o.n; ++i)
                topes.push_back(ts.list[rng.below(ts.list.size())]);
            omwb::TopeCollection tc{inst.chi, topes, {}};
            const auto cert = omwb::find_transversal(tc, false, lim);
            if (cert) {
                rep["status"] = "certified";
            } else if (o.r == 2) {
                // Rank 2 carries an unconditional existence theorem; a miss
                // here is a genuine violation.
                rep["status"] = "theorem-violation";
                rep["message"] = "explore q14: rank-2 instance with no transversal";
                json dump;
                dump["om"] = omwb::write_chi(inst.chi);
                dump["topes"] = json::array();
                for (const auto& tp : topes) dump["topes"].push_back(tp.str());
                rep["dump"] = dump;
                severity = 3;
            } else {
                ++none_count;
                rep["status"] = "none";
                json w;
                w["om"] = omwb::write_chi(inst.chi);
                json tl = json::array();
                for (const auto& tp : topes) tl.push_back(tp.str());
                w["topes"] = tl;
                rep["witness"] = w;
            }
        } catch (const omwb::theorem_violation& e) {
            rep["status"] = "theorem-violation";
            rep["message"] = e.what();
            severity = 3;
        } catch (const omwb::parse_error& e) {
            rep["status"] = "refused";
            rep["message"] = e.what();
            severity = 2;
        } catch (const omwb::refusal_error& e) {
            rep["status"] = "refused";
            rep["message"] = e.what();
            severity = 2;
        }
        // Certified trials are only tallied; interesting ones are emitted.
        if (rep["status"] != "certified") em.emit(std::move(rep), severity);
        else em.raise(severity);
    }
    json summary = base_report("explore q14",
                               "summary n=" + std::to_string(o.n) + " r=" + std::to_string(o.r) +
                                   " seed=" + std::to_string(o.seed) +
                                   " trials=" + std::to_string(o.trials));
    summary["seed"] = o.seed;
    summary["status"] = none_count > 0 ? "none" : "certified";
    json w;
    w["trials"] = o.trials;
    w["without_transversal"] = none_count;
    summary["witness"] = w;
    em.emit(std::move(summary), 0);
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"oriented-matroid workbench"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json_mode, "one JSON report per line");
    app.add_flag("--timings", o.timings, "measure elapsed_ms (off: deterministic 0)");
    app.add_option("--limit-n", o.limit_n, "ground-set size refusal threshold");
    app.add_option("--limit-faces", o.limit_faces, "face-count refusal threshold");

    auto* gen = app.add_subcommand("gen", "generate a chirotope file");
    gen->add_option("--n", o.n)->required();
    gen->add_option("--r", o.r)->required();
    gen->add_option("--seed", o.seed);
    gen->add_flag("--alternating", o.alternating, "the all-plus chirotope instead of random");
    gen->add_option("--out", o.out_file)->required();

    auto* check = app.add_subcommand("check", "validate a chirotope file");
    check->add_option("--om", o.om_file)->required();

    auto* enumerate = app.add_subcommand("enumerate", "list derived sign vectors");
    enumerate->add_option("--om", o.om_file)->required();
    enumerate->add_option("--what", o.what, "circuits|cocircuits|vectors|covectors|topes")
        ->required();

    auto* dualc = app.add_subcommand("dual", "write the dual chirotope");
    dualc->add_option("--om", o.om_file)->required();
    dualc->add_option("--out", o.out_file)->required();

    auto* verify = app.add_subcommand("verify", "theorem and lemma checks");
    verify->require_subcommand(1);

    auto* vconic = verify->add_subcommand("conic", "rainbow positive-circuit search");
    vconic->add_option("--om", o.om_file);
    vconic->add_option("--circuits", o.circuits_file);
    vconic->add_option("--e", o.e, "shared element (1-based)");
    vconic->add_flag("--random", o.random_mode, "random campaign instead of files");
    vconic->add_option("--trials", o.trials);
    vconic->add_option("--seed", o.seed);
    vconic->add_option("--n", o.n);
    vconic->add_option("--r", o.r);

    auto* vconvex = verify->add_subcommand("convex", "rainbow search, rank+1 circuits");
    vconvex->add_option("--om", o.om_file);
    vconvex->add_option("--circuits", o.circuits_file);
    vconvex->add_flag("--random", o.random_mode, "random campaign instead of files");
    vconvex->add_option("--trials", o.trials);
    vconvex->add_option("--seed", o.seed);
    vconvex->add_option("--n", o.n);
    vconvex->add_option("--r", o.r);

    auto* vtrans = verify->add_subcommand("transversal", "distinct-element tope transversal");
    vtrans->add_option("--om", o.om_file)->required();
    vtrans->add_option("--topes", o.topes_file)->required();
    vtrans->add_flag("--force", o.force, "allow non-uniform instances");

    auto* vrankr = verify->add_subcommand("rank-r", "partition transversal with multiplicities");
    vrankr->add_option("--om", o.om_file)->required();
    vrankr->add_option("--topes", o.topes_file)->required();
    vrankr->add_option("--mult", o.mult_list, "comma-separated part sizes")->required();

    auto* vrank2 = verify->add_subcommand("rank-2", "alternating-word solver with oracle");
    vrank2->add_option("--words", o.words_file)->required();

    auto* vheight = verify->add_subcommand("height-bound", "support/height inequality");
    vheight->add_option("--om", o.om_file)->required();

    auto* vjj = verify->add_subcommand("lemma-jj", "restricted covector complex homology");
    vjj->add_option("--om", o.om_file)->required();
    vjj->add_option("--jplus", o.jplus_list, "comma-separated elements (1-based)");
    vjj->add_option("--jminus", o.jminus_list, "comma-separated elements (1-based)");

    auto* vhh = verify->add_subcommand("lemma-hh", "filtered positive-vector connectivity");
    vhh->set_help_flag("--help", "print help"); // frees the single letter for --h
    vhh->add_option("--om", o.om_file)->required();
    vhh->add_option("--e", o.e, "element (1-based)")->required();
    vhh->add_option("--h", o.h, "height cap")->required();

    auto* vli = verify->add_subcommand("lemma-li", "tope box-complex connectivity");
    vli->add_option("--om", o.om_file)->required();
    vli->add_option("--topes", o.topes_file)->required();

    auto* words = app.add_subcommand("words", "alternating-word commands");
    words->require_subcommand(1);
    auto* wsolve = words->add_subcommand("solve", "diagonal-word solver");
    wsolve->add_option("--in", o.in_file)->required();
    wsolve->add_flag("--oracle", o.with_oracle, "cross-check with the brute-force oracle");

    auto* rainbow = app.add_subcommand("rainbow", "rainbow simplex from a complex family");
    rainbow->add_option("--family", o.family_dir)->required();
    rainbow->add_option("--labels", o.labels_file)->required();

    auto* explore = app.add_subcommand("explore", "counterexample hunting");
    explore->require_subcommand(1);
    auto* q14 = explore->add_subcommand("q14", "random tope collections without agreement");
    q14->add_option("--n", o.n)->required();
    q14->add_option("--r", o.r)->required();
    q14->add_option("--trials", o.trials)->required();
    q14->add_option("--seed", o.seed);

    // Let the global flags (--json etc.) appear after the subcommand too.
    for (CLI::App* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
        for (CLI::App* leaf : sub->get_subcommands(nullptr)) leaf->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Emitter em;
    em.json_mode = o.json_mode;
    em.timings = o.timings;

    try {
        if (*gen) cmd_gen(em, o);
        else if (*check) cmd_check(em, o);
        else if (*enumerate) cmd_enumerate(em, o);
        else if (*dualc) cmd_dual(em, o);
        else if (*vconic) {
            if (o.random_mode) cmd_verify_colorful_random(em, o, true);
            else cmd_verify_colorful_file(em, o, true);
        } else if (*vconvex) {
            if (o.random_mode) cmd_verify_colorful_random(em, o, false);
            else cmd_verify_colorful_file(em, o, false);
        } else if (*vtrans) cmd_verify_transversal(em, o);
        else if (*vrankr) cmd_verify_rank_r(em, o);
        else if (*vrank2) cmd_verify_rank2(em, o);
        else if (*vheight) cmd_verify_height_bound(em, o);
        else if (*vjj) cmd_verify_lemma_jj(em, o);
        else if (*vhh) cmd_verify_lemma_hh(em, o);
        else if (*vli) cmd_verify_lemma_li(em, o);
        else if (*wsolve) cmd_words_solve(em, o);
        else if (*rainbow) cmd_rainbow(em, o);
        else if (*q14) cmd_explore_q14(em, o);
    } catch (const omwb::parse_error& e) {
        // Errors thrown outside run_unit (e.g. unreadable input files).
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const omwb::refusal_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    }
    return em.worst;
}
