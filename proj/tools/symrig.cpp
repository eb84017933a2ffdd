#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "symrig/cycles.hpp"
#include "symrig/fogelsanger.hpp"
#include "symrig/generators.hpp"
#include "symrig/io.hpp"
#include "symrig/rigidity.hpp"
#include "symrig/symmetric.hpp"

using namespace symrig;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAnalysis = 1;
constexpr int kExitInput = 2;

struct Output {
    std::string json_path;  // write machine output here when set
    bool json_only = false;
    json payload = json::object();

    void human(const std::string& line) const {
        if (!json_only) std::cout << line << "\n";
    }
    void flush() const {
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            out << payload.dump(2) << "\n";
        } else if (json_only) {
            std::cout << payload.dump(2) << "\n";
        }
    }
};

std::string kind_name(IrreducibleKind k) {
    switch (k) {
        case IrreducibleKind::NotZ2Cycle: return "reducible";
        case IrreducibleKind::TrivialIrreducible: return "trivial-irreducible";
        case IrreducibleKind::Circuit: return "circuit";
        case IrreducibleKind::SplitPair: return "split-pair";
    }
    return "?";
}

std::string confidence_name(Confidence c) {
    switch (c) {
        case Confidence::Deterministic: return "deterministic";
        case Confidence::Certified: return "certified";
        case Confidence::Sampled: return "sampled";
    }
    return "?";
}

SymmetricComplex require_symmetric(const ComplexDocument& doc) {
    auto sigma = to_involution(doc);
    if (!sigma) throw ValidationError("document has no involution");
    return validate(to_complex(doc), *sigma);
}

int cmd_validate(const std::string& path, Output& out) {
    ComplexDocument doc = load_document(path);
    MultiComplex S = to_complex(doc);
    out.payload["k"] = S.k();
    out.payload["facets"] = S.size();
    out.payload["vertices"] = S.vertex_set().size();
    out.human("k = " + std::to_string(S.k()) + ", " + std::to_string(S.size()) +
              " facets on " + std::to_string(S.vertex_set().size()) +
              " vertices");
    if (doc.involution) {
        SymmetricComplex sc = require_symmetric(doc);
        (void)sc;
        out.payload["involution"] = "valid";
        out.human("involution: valid and free");
    }
    if (doc.coordinates) {
        Framework F = to_framework(doc);
        out.payload["dimension"] = F.d;
        out.human("coordinates: dimension " + std::to_string(F.d));
        if (doc.involution && doc.group) {
            GammaFramework GF{F, *to_involution(doc), *doc.group};
            for (auto [u, v] : GF.pairing.pairs()) {
                if (!F.graph.has_vertex(u) || !F.graph.has_vertex(v)) continue;
                if (F.coords.at(v) != reflect(*doc.group, F.coords.at(u)))
                    throw ValidationError("coordinates are not symmetric at " +
                                          std::to_string(u));
            }
            out.human("coordinates: symmetric under the group generator");
        }
    }
    out.human("ok");
    return kExitOk;
}

int cmd_analyze(const std::string& path, bool want_g2, bool want_circuit,
                bool want_classify, bool want_boundary, int group_t,
                Output& out) {
    ComplexDocument doc = load_document(path);
    MultiComplex S = to_complex(doc);
    bool all = !want_g2 && !want_circuit && !want_classify && !want_boundary;
    int rc = kExitOk;

    if (want_g2 || all) {
        long val = g2(S);
        out.payload["g2"] = val;
        if (doc.involution) {
            BoundReport br = check_lower_bound(require_symmetric(doc));
            out.payload["bound"] = br.bound;
            out.payload["bound_satisfied"] = br.satisfied;
            out.payload["bound_equality"] = br.equality;
            out.payload["bound_hypotheses_ok"] = br.hypotheses_ok;
            out.human("g2 = " + std::to_string(br.g2) + ", bound = " +
                      std::to_string(br.bound) +
                      (br.equality ? " (equality)"
                                   : br.satisfied ? " (satisfied)" : " (VIOLATED)") +
                      (br.hypotheses_ok ? "" : " [hypotheses not met: " +
                                                   br.hypothesis_note + "]"));
            if (br.hypotheses_ok && !br.satisfied) rc = kExitAnalysis;
        } else {
            out.human("g2 = " + std::to_string(val));
        }
    }
    if (want_circuit || all) {
        bool cyc = is_cycle(S), circ = is_circuit(S);
        out.payload["cycle"] = cyc;
        out.payload["circuit"] = circ;
        out.payload["strongly_connected"] = is_strongly_connected(S);
        out.human(std::string("cycle: ") + (cyc ? "yes" : "no") +
                  ", circuit: " + (circ ? "yes" : "no"));
    }
    if (want_classify || all) {
        if (doc.involution) {
            SymmetricComplex sc = require_symmetric(doc);
            IrreducibleClassification cls = classify(sc);
            out.payload["classification"] = kind_name(cls.kind);
            if (cls.kind == IrreducibleKind::SplitPair) {
                out.payload["overlap"] = cls.overlap;
                out.human("classification: split-pair, overlap " +
                          std::to_string(cls.overlap));
            } else {
                out.human("classification: " + kind_name(cls.kind));
            }
            if (group_t >= 0) {
                int c = c_threshold(S.k(), group_t);
                out.payload["threshold"] = c;
                out.human("threshold c(" + std::to_string(S.k()) + "," +
                          std::to_string(group_t) + ") = " + std::to_string(c));
                if (cls.kind == IrreducibleKind::Circuit ||
                    cls.kind == IrreducibleKind::SplitPair) {
                    MainTheoremReport mt = main_theorem_conditions(sc, group_t);
                    out.payload["cond_ii"] = mt.cond_ii;
                    out.payload["cond_iii"] = mt.cond_iii;
                    out.human(std::string("conditions: (ii) ") +
                              (mt.cond_ii ? "holds" : "fails") + ", (iii) " +
                              (mt.cond_iii ? "holds" : "fails") +
                              (mt.agree ? "" : " [DISAGREE]"));
                }
            }
        } else if (want_classify) {
            throw ValidationError("--classify requires an involution");
        }
    }
    if (want_boundary || all) {
        MultiComplex b = boundary(S);
        out.payload["boundary_faces"] = b.size();
        out.human("boundary: " + std::to_string(b.size()) + " faces");
    }
    return rc;
}

int cmd_rigidity(const std::string& path, int dim, int group_t, int trials,
                 std::uint64_t seed, bool block, bool no_sample, Output& out) {
    ComplexDocument doc = load_document(path);
    MultiComplex S = to_complex(doc);
    Graph G = S.k() >= 1 ? graph(S) : Graph{};

    RigidityReport rep;
    std::optional<GammaFramework> GF;
    if (doc.coordinates) {
        Framework F = to_framework(doc);
        rep = is_inf_rigid(F);
        if (doc.involution && (doc.group || group_t >= 0)) {
            PointGroup pg = doc.group ? *doc.group : PointGroup{group_t, F.d};
            GF = GammaFramework{F, *to_involution(doc), pg};
        }
    } else {
        if (no_sample)
            throw ValidationError("no coordinates present and sampling disabled");
        auto sigma = to_involution(doc);
        PointGroup pg = doc.group ? *doc.group
                                  : PointGroup{group_t < 0 ? 0 : group_t, dim};
        if (sigma) {
            rep = is_gamma_rigid(G, *sigma, pg, trials, seed ? seed : 1);
            GF = sample_gamma_generic(G, *sigma, pg, seed ? seed : 1);
        } else {
            rep = is_gamma_rigid(G, Involution{}, PointGroup{0, dim}, trials,
                                 seed ? seed : 1);
        }
    }

    out.payload["rank"] = rep.rank;
    out.payload["rows"] = rep.rows;
    out.payload["dof"] = rep.dof;
    out.payload["rigid"] = rep.rigid;
    out.payload["confidence"] = confidence_name(rep.confidence);
    out.human(std::string("verdict: ") + (rep.rigid ? "rigid" : "not rigid") +
              " (rank " + std::to_string(rep.rank) + ", " +
              confidence_name(rep.confidence) + ")");

    if (block) {
        if (!GF) throw ValidationError("--block requires involution and group");
        BlockData bd = symmetric_block_split(*GF);
        out.payload["block"] = {{"rank_sym", bd.rank_sym},
                                {"rank_ant", bd.rank_ant},
                                {"trivial_sym", bd.dim_trivial_sym},
                                {"trivial_ant", bd.dim_trivial_ant}};
        out.human("block: rank " + std::to_string(bd.rank_sym) + " + " +
                  std::to_string(bd.rank_ant) + ", trivial " +
                  std::to_string(bd.dim_trivial_sym) + " / " +
                  std::to_string(bd.dim_trivial_ant));
    }
    return kExitOk;
}

int cmd_decompose(const std::string& path, const std::string& edge, bool z2,
                  std::uint64_t seed, bool verify, Output& out) {
    ComplexDocument doc = load_document(path);
    auto comma = edge.find(',');
    if (comma == std::string::npos)
        throw ParseError("--edge expects 'u,v'");
    VertexId u, v;
    try {
        u = std::stoi(edge.substr(0, comma));
        v = std::stoi(edge.substr(comma + 1));
    } catch (const std::exception&) {
        throw ParseError("--edge expects integer ids");
    }

    FogDecomposition D;
    std::optional<Involution> sigma;
    if (z2) {
        SymmetricComplex sc = require_symmetric(doc);
        sigma = sc.involution;
        D = z2_fog_decompose(sc, u, v, seed);
    } else {
        D = fog_decompose(to_complex(doc), u, v, seed);
    }
    out.payload["m"] = D.m();
    json parts = json::array();
    for (const auto& p : D.parts) parts.push_back(to_json(from_complex(p)));
    out.payload["parts"] = parts;
    out.human(std::to_string(D.m()) + " part(s)");
    for (std::size_t i = 0; i < D.m(); ++i) {
        std::string line = "  part " + std::to_string(i) + ":";
        for (const auto& [f, m] : D.parts[i].facets())
            for (int c = 0; c < m; ++c) line += " " + f.str();
        out.human(line);
    }

    int rc = kExitOk;
    if (verify) {
        PropertyReport rep = z2 ? verify_z2_fog_properties(D, *sigma)
                                : verify_fog_properties(D);
        json checks = json::object();
        for (const auto& c : rep.checks) {
            checks[c.name] = c.passed;
            out.human("  (" + c.name + ") " + (c.passed ? "pass" : "FAIL") +
                      (c.detail.empty() ? "" : " — " + c.detail));
        }
        out.payload["properties"] = checks;
        if (!rep.all_passed()) rc = kExitAnalysis;
        if (z2) {
            PropertyReport og = overlap_growth_check(D, *sigma);
            for (const auto& c : og.checks)
                out.human("  " + c.name + " " + (c.passed ? "pass" : "FAIL") +
                          (c.detail.empty() ? "" : " — " + c.detail));
            if (!og.all_passed()) rc = kExitAnalysis;
        }
    }
    return rc;
}

int cmd_gen(const std::string& kind, int k, int stacks, int h,
            std::uint64_t seed, const std::string& out_path, Output& out) {
    ComplexDocument doc;
    if (kind == "crosspolytope") {
        auto sc = gen_crosspolytope(k);
        doc = from_complex(sc.complex, &sc.involution);
    } else if (kind == "trivial-pair") {
        auto sc = gen_trivial_pair(k);
        doc = from_complex(sc.complex, &sc.involution);
    } else if (kind == "stacked") {
        auto sc = gen_symmetric_stacked(k, stacks, seed ? seed : 1);
        doc = from_complex(sc.complex, &sc.involution);
    } else if (kind == "hexahedron-pair") {
        auto sc = gen_hexahedron_pair();
        doc = from_complex(sc.complex, &sc.involution);
    } else if (kind == "split-pair") {
        auto sc = gen_split_pair(k, h, seed ? seed : 1);
        doc = from_complex(sc.complex, &sc.involution);
    } else if (kind == "bricard") {
        auto GF = gen_bricard(seed ? seed : 1);
        doc = from_framework(GF.framework, &GF.pairing, &GF.group);
    } else {
        throw ParseError("unknown generator '" + kind + "'");
    }

    json j = to_json(doc);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << j.dump(2) << "\n";
        out.human("written to " + out_path);
    } else {
        std::cout << j.dump(2) << "\n";
    }
    out.payload = j;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric rigidity toolkit"};
    app.require_subcommand(1);

    std::string path, edge, gen_kind, out_path, json_path;
    bool json_only = false;
    int dim = 3, group_t = -1, trials = 3, k = 2, stacks = 0, h = 4;
    std::uint64_t seed = 0;
    bool f_g2 = false, f_circuit = false, f_classify = false, f_boundary = false;
    bool f_block = false, f_no_sample = false, f_z2 = false, f_verify = false;

    app.add_option("--json", json_path, "write machine-readable output here");
    app.add_flag("--json-only", json_only, "print JSON instead of tables");

    auto* validate_cmd = app.add_subcommand("validate", "structural checks");
    validate_cmd->add_option("path", path)->required();

    auto* analyze = app.add_subcommand("analyze", "combinatorial analysis");
    analyze->add_option("path", path)->required();
    analyze->add_flag("--g2", f_g2);
    analyze->add_flag("--circuit", f_circuit);
    analyze->add_flag("--classify", f_classify);
    analyze->add_flag("--boundary", f_boundary);
    analyze->add_option("--group", group_t, "t of the point group");

    auto* rigidity = app.add_subcommand("rigidity", "rigidity tests");
    rigidity->add_option("path", path)->required();
    rigidity->add_option("--dim", dim);
    rigidity->add_option("--group", group_t, "t of the point group");
    rigidity->add_option("--trials", trials);
    rigidity->add_option("--seed", seed);
    rigidity->add_flag("--block", f_block);
    rigidity->add_flag("--no-sample", f_no_sample);

    auto* decompose = app.add_subcommand("decompose", "decomposition at an edge");
    decompose->add_option("path", path)->required();
    decompose->add_option("--edge", edge, "u,v")->required();
    decompose->add_flag("--z2", f_z2);
    decompose->add_option("--seed", seed);
    decompose->add_flag("--verify", f_verify);

    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->add_option("kind", gen_kind)->required();
    gen->add_option("--k", k);
    gen->add_option("--stacks", stacks);
    gen->add_option("--overlap", h);
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.json_path = json_path;
    out.json_only = json_only;
    int rc = kExitOk;
    try {
        if (validate_cmd->parsed())
            rc = cmd_validate(path, out);
        else if (analyze->parsed())
            rc = cmd_analyze(path, f_g2, f_circuit, f_classify, f_boundary,
                             group_t, out);
        else if (rigidity->parsed())
            rc = cmd_rigidity(path, dim, group_t, trials, seed, f_block,
                              f_no_sample, out);
        else if (decompose->parsed())
            rc = cmd_decompose(path, edge, f_z2, seed, f_verify, out);
        else if (gen->parsed())
            rc = cmd_gen(gen_kind, k, stacks, h, seed, out_path, out);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DimensionError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnalysis;
    }
    out.flush();
    return rc;
}
