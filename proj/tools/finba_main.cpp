// finba: inspect finite boolean algebras generated from hypergraphs.
//
// Input documents are JSON. Results go to stdout; warnings and errors go to
// stderr as JSON. Exit codes: 0 the property holds / the command succeeded,
// 1 the checked property fails (witness on stdout), 2 bad input or usage,
// 3 a size cap was exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finba/finba.hpp"
#include "finba/io/dot.hpp"
#include "finba/io/json_io.hpp"

namespace {

using finba::io::json;

struct Caps {
    int vertices = finba::kDefaultMaxVertices;
    int generators = finba::kDefaultMaxGenerators;
    int ground = finba::kDefaultMaxGround;
    int spectrum_ground = finba::kDefaultMaxSpectrumGround;
    int ary_family = finba::kDefaultMaxAryFamily;
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) finba::raise(finba::errc::invalid_document, "cannot open \"" + path + "\"");
    json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded())
        finba::raise(finba::errc::invalid_document, "\"" + path + "\" is not valid JSON");
    return doc;
}

finba::io::ParsedDoc load_doc(const std::string& path, const Caps& caps) {
    finba::io::ParsedDoc doc = finba::io::parse_doc(load_json(path), caps.vertices);
    if (doc.closure_added) {
        json warning;
        warning["warning"] = "strict order pairs were transitively closed on load";
        warning["file"] = path;
        std::cerr << warning.dump() << "\n";
    }
    return doc;
}

const finba::Hypergraph& require_hypergraph(const finba::io::ParsedDoc& doc) {
    if (!doc.hypergraph)
        finba::raise(finba::errc::invalid_document,
                     "this command needs a hypergraph, graph, or poset document");
    return *doc.hypergraph;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json element_json(const finba::Element& x) {
    json out = json::array();
    for (const std::string& s : x.member_labels()) out.push_back(s);
    return out;
}

json family_json(const std::vector<finba::Element>& xs) {
    json out = json::array();
    for (const finba::Element& x : xs) out.push_back(element_json(x));
    return out;
}

json witness_json(const finba::IndependenceWitness& w) {
    json out;
    if (const auto* cz = std::get_if<finba::ContainsZero>(&w)) {
        out["type"] = "contains_zero";
        out["element"] = element_json(cz->zero);
    } else if (const auto* p1 = std::get_if<finba::Perp1Failure>(&w)) {
        out["type"] = "perp1";
        out["family"] = family_json(p1->family);
    } else if (const auto* p2 = std::get_if<finba::Perp2Failure>(&w)) {
        out["type"] = "perp2";
        out["family"] = family_json(p2->family);
    } else if (const auto* p3 = std::get_if<finba::Perp3Failure>(&w)) {
        out["type"] = "perp3";
        out["lower"] = family_json(p3->lower);
        out["upper"] = family_json(p3->upper);
    } else if (const auto* pa = std::get_if<finba::PropAFailure>(&w)) {
        out["type"] = "elementary";
        out["positives"] = family_json(pa->positives);
        out["negatives"] = family_json(pa->negatives);
    }
    return out;
}

int run_anticliques(const std::string& file, bool count_only, const Caps& caps) {
    finba::io::ParsedDoc doc = load_doc(file, caps);
    const finba::Hypergraph& g = require_hypergraph(doc);
    std::vector<finba::VertexSet> ac = finba::anticliques(g);
    if (count_only) {
        std::cout << ac.size() << "\n";
        return 0;
    }
    json out;
    out["vertices"] = g.vertex_labels();
    out["count"] = ac.size();
    json list = json::array();
    for (finba::VertexSet s : ac) {
        json one = json::array();
        for (int v = 0; v < g.vertex_count(); ++v)
            if (s & finba::vbit(v)) one.push_back(g.label(v));
        list.push_back(std::move(one));
    }
    out["anticliques"] = std::move(list);
    emit(out);
    return 0;
}

int run_generated(const std::string& file, bool atoms, bool size_only, bool use_cliques,
                  const Caps& caps) {
    finba::io::ParsedDoc doc = load_doc(file, caps);
    const finba::Hypergraph& g = require_hypergraph(doc);
    finba::GeneratedAlgebra algebra = use_cliques
                                          ? finba::clique_algebra(g, caps.ground, caps.generators)
                                          : finba::anticlique_algebra(g, caps.ground, caps.generators);
    if (size_only) {
        std::cout << algebra.size() << "\n";
        return 0;
    }
    json out;
    out["vertices"] = g.vertex_labels();
    out["ground"] = algebra.ambient().ground_labels();
    json gens;
    for (int v = 0; v < g.vertex_count(); ++v)
        gens[g.label(v)] = element_json(algebra.generator(v));
    out["generators"] = std::move(gens);
    out["atom_count"] = algebra.atom_count();
    out["size"] = algebra.size();
    if (atoms) out["atoms"] = family_json(algebra.atoms());
    emit(out);
    return 0;
}

int run_indep(const std::string& file, const std::string& degree, bool verify,
              const Caps& caps) {
    auto n = finba::NDegree::parse(degree);
    if (!n)
        finba::raise(finba::errc::invalid_degree,
                     "--n takes a positive integer or \"omega\"");
    finba::io::ParsedDoc doc = load_doc(file, caps);
    const finba::Hypergraph& g = require_hypergraph(doc);
    finba::GeneratedAlgebra algebra = finba::anticlique_algebra(g, caps.ground, caps.generators);
    finba::IndependenceReport report = finba::is_n_independent(algebra.generators(), *n);

    json out;
    out["n"] = n->str();
    out["holds"] = report.holds;
    out["witness"] = report.witness ? witness_json(*report.witness) : json(nullptr);
    if (verify && report.witness) {
        bool ok = finba::verify_independence_witness(algebra.generators(), *n, *report.witness);
        out["witness_verified"] = ok;
        if (!ok) {
            emit(out);
            finba::raise(finba::errc::internal_disagreement,
                         "reported witness failed re-validation");
        }
    }
    emit(out);
    return report.holds ? 0 : 1;
}

int run_perp(const std::string& file, bool unchecked, const Caps& caps) {
    finba::io::ParsedDoc doc = load_doc(file, caps);
    const finba::Hypergraph& g = require_hypergraph(doc);
    finba::GeneratedAlgebra algebra = finba::anticlique_algebra(g, caps.ground, caps.generators);
    json out;
    if (unchecked) {
        finba::Hypergraph perp = finba::perp_hypergraph(
            algebra.generators(), g.vertex_labels(), /*check_independence=*/false, caps.vertices);
        out["perp"] = finba::io::hypergraph_to_json(perp);
        out["reconstruction"] = nullptr;
    } else {
        finba::Reconstruction rec =
            finba::verify_reconstruction(algebra, g.vertex_labels(), caps.ground);
        out["perp"] = finba::io::hypergraph_to_json(rec.graph);
        json verdict;
        verdict["isomorphic"] = true;
        verdict["atom_count"] = rec.image.atom_count();
        out["reconstruction"] = std::move(verdict);
    }
    emit(out);
    return 0;
}

int run_spectrum(int ground, const std::string& degree, const Caps& caps) {
    auto n = finba::NDegree::parse(degree);
    if (!n)
        finba::raise(finba::errc::invalid_degree,
                     "--n takes a positive integer or \"omega\"");
    finba::FieldAlgebra algebra = finba::powerset_algebra(ground, caps.ground);
    finba::SpectrumResult spectrum = finba::i_n_spectrum(algebra, *n, caps.spectrum_ground);
    json out;
    out["ground"] = ground;
    out["n"] = n->str();
    json sizes = json::array();
    for (std::size_t s : spectrum.sizes) sizes.push_back(s);
    out["spectrum"] = std::move(sizes);
    out["i_n"] = spectrum.min_size();
    out["maximal_families"] = spectrum.maximal_families.size();
    emit(out);
    return 0;
}

int run_extend(const std::string& file, const std::string& map_file, const std::string& target_file,
               bool verify, const Caps& caps) {
    finba::io::ParsedDoc src_doc = load_doc(file, caps);
    const finba::Hypergraph& g = require_hypergraph(src_doc);
    finba::GeneratedAlgebra source = finba::anticlique_algebra(g, caps.ground, caps.generators);

    finba::io::ParsedDoc tgt_doc = load_doc(target_file, caps);
    finba::FieldAlgebra target =
        tgt_doc.kind == finba::io::ParsedDoc::Kind::powerset
            ? finba::powerset_algebra(tgt_doc.labels, caps.ground)
            : finba::anticlique_algebra(require_hypergraph(tgt_doc), caps.ground, caps.generators)
                  .ambient();

    auto entries = finba::io::parse_map_doc(load_json(map_file));
    std::vector<std::optional<finba::Element>> slots(static_cast<std::size_t>(g.vertex_count()));
    for (const auto& [label, ground_labels] : entries) {
        auto v = g.vertex_index(label);
        if (!v) finba::raise(finba::errc::incomplete_map, "unknown generator \"" + label + "\"");
        finba::Mask m = 0;
        for (const std::string& s : ground_labels) {
            auto i = target.index_of(s);
            if (!i)
                finba::raise(finba::errc::invalid_document,
                             "unknown target ground label \"" + s + "\"");
            m |= finba::bit(*i);
        }
        slots[static_cast<std::size_t>(*v)] = target.element(m);
    }
    std::vector<finba::Element> images;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!slots[static_cast<std::size_t>(v)])
            finba::raise(finba::errc::incomplete_map,
                         "map is undefined on generator \"" + g.label(v) + "\"");
        images.push_back(*slots[static_cast<std::size_t>(v)]);
    }

    try {
        finba::Homomorphism h = finba::sikorski_extend(source, images, target);
        json out;
        out["extends"] = true;
        json table;
        for (int v = 0; v < g.vertex_count(); ++v)
            table[g.label(v)] = element_json(h(source.generator(v)));
        out["generator_images"] = std::move(table);
        json atom_map = json::array();
        for (int i = 0; i < source.atom_count(); ++i) {
            json row;
            row["atom"] = element_json(source.atoms()[static_cast<std::size_t>(i)]);
            row["image"] = element_json(h.atom_images()[static_cast<std::size_t>(i)]);
            atom_map.push_back(std::move(row));
        }
        out["atom_images"] = std::move(atom_map);
        emit(out);
        return 0;
    } catch (const finba::CriterionViolated& violation) {
        const finba::ElementaryProduct& p = violation.witness();
        json out;
        out["extends"] = false;
        json support = json::array();
        json positive = json::array();
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!(p.support & (finba::GenSet{1} << v))) continue;
            support.push_back(g.label(v));
            if (p.positive & (finba::GenSet{1} << v)) positive.push_back(g.label(v));
        }
        json witness;
        witness["support"] = std::move(support);
        witness["positive"] = std::move(positive);
        out["witness"] = std::move(witness);
        if (verify) {
            bool source_zero =
                finba::eval_elementary_product(p, source.generators(), source.ambient()).is_zero();
            bool image_zero = finba::eval_elementary_product(p, images, target).is_zero();
            bool ok = source_zero && !image_zero;
            out["witness_verified"] = ok;
            if (!ok) {
                emit(out);
                finba::raise(finba::errc::internal_disagreement,
                             "reported witness failed re-validation");
            }
        }
        emit(out);
        return 1;
    }
}

int run_nary(const std::string& file, std::optional<int> degree, const Caps& caps) {
    finba::io::ParsedDoc doc = load_doc(file, caps);
    const finba::Hypergraph& g = require_hypergraph(doc);
    finba::SubbaseFamily family = finba::subbase(g);
    auto set_name = [&](int i) {
        const finba::TaggedSet& s = family.sets[static_cast<std::size_t>(i)];
        return g.label(s.vertex) + (s.positive ? "+" : "-");
    };
    if (degree) {
        finba::AryReport report = finba::is_n_ary(family, *degree, caps.ary_family);
        json out;
        out["n"] = *degree;
        out["holds"] = report.holds;
        if (report.witness) {
            json names = json::array();
            for (int i : *report.witness) names.push_back(set_name(i));
            out["witness"] = std::move(names);
        } else {
            out["witness"] = nullptr;
        }
        emit(out);
        return report.holds ? 0 : 1;
    }
    finba::ArityBound bound = finba::arity_upper_bound(g, caps.ary_family);
    json out;
    out["least_n"] = bound.least_n;
    out["max_edge_size"] = bound.max_edge_size;
    out["one_ary"] = bound.one_ary;
    emit(out);
    return 0;
}

int run_op(const std::string& which, const std::string& file1, const std::string& file2,
           const std::string& out_path, const Caps& caps) {
    finba::io::ParsedDoc a = load_doc(file1, caps);
    finba::io::ParsedDoc b = load_doc(file2, caps);
    const finba::Hypergraph& ga = require_hypergraph(a);
    const finba::Hypergraph& gb = require_hypergraph(b);
    finba::Hypergraph result = which == "union" ? finba::disjoint_union(ga, gb, caps.vertices)
                                                : finba::join(ga, gb, caps.vertices);
    std::ofstream out(out_path);
    if (!out) finba::raise(finba::errc::invalid_document, "cannot write \"" + out_path + "\"");
    out << finba::io::hypergraph_to_json(result).dump(2) << "\n";
    json summary;
    summary["written"] = out_path;
    summary["vertices"] = result.vertex_count();
    summary["edges"] = result.edges().size();
    emit(summary);
    return 0;
}

int run_export_dot(const std::string& file, const std::string& out_path, const Caps& caps) {
    finba::io::ParsedDoc doc = load_doc(file, caps);
    const finba::Hypergraph& g = require_hypergraph(doc);
    std::ofstream out(out_path);
    if (!out) finba::raise(finba::errc::invalid_document, "cannot write \"" + out_path + "\"");
    out << finba::io::to_dot(g);
    json summary;
    summary["written"] = out_path;
    emit(summary);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite boolean algebras from hypergraphs: anticlique algebras, "
                 "independence degrees, vanishing-set duality, and subbase arity"};
    app.require_subcommand(1);

    Caps caps;
    bool verify_witness = false;
    app.add_option("--max-vertices", caps.vertices, "vertex cap for input documents")
        ->envname("FINBA_MAX_VERTICES");
    app.add_option("--max-generators", caps.generators, "generator cap for generated algebras")
        ->envname("FINBA_MAX_GENERATORS");
    app.add_option("--max-ground", caps.ground, "ground-set cap for ambient algebras (<= 64)")
        ->envname("FINBA_MAX_GROUND");
    app.add_option("--max-spectrum-ground", caps.spectrum_ground,
                   "ground-set cap for exhaustive spectrum search")
        ->envname("FINBA_MAX_SPECTRUM_GROUND");
    app.add_option("--max-ary-family", caps.ary_family, "subbase-size cap for arity checks")
        ->envname("FINBA_MAX_ARY_FAMILY");
    app.add_flag("--verify-witness", verify_witness,
                 "re-validate any reported witness before printing it");

    std::string file, file2, map_file, target_file, out_path, degree, which;
    bool count_only = false, atoms = false, size_only = false, unchecked = false;
    int spectrum_ground = 0;
    std::optional<int> ary_degree;

    CLI::App* anticliques_cmd = app.add_subcommand("anticliques", "list the anticliques");
    anticliques_cmd->add_option("FILE", file)->required();
    anticliques_cmd->add_flag("--count", count_only, "print only the count");

    CLI::App* ba_cmd = app.add_subcommand("ba", "build the anticlique algebra");
    ba_cmd->add_option("FILE", file)->required();
    ba_cmd->add_flag("--atoms", atoms, "include the atom list");
    ba_cmd->add_flag("--size", size_only, "print only the algebra size");

    CLI::App* bc_cmd = app.add_subcommand("bc", "build the clique algebra (graphs only)");
    bc_cmd->add_option("FILE", file)->required();
    bc_cmd->add_flag("--atoms", atoms, "include the atom list");
    bc_cmd->add_flag("--size", size_only, "print only the algebra size");

    CLI::App* indep_cmd =
        app.add_subcommand("indep", "check n-independence of the vertex generators");
    indep_cmd->add_option("FILE", file)->required();
    indep_cmd->add_option("--n", degree, "degree: 1..9 or omega")->required();

    CLI::App* perp_cmd =
        app.add_subcommand("perp", "vanishing-set hypergraph of the vertex generators");
    perp_cmd->add_option("FILE", file)->required();
    perp_cmd->add_flag("--unchecked", unchecked,
                       "skip the omega-independence gate and the reconstruction proof");

    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "sizes of maximal n-independent families of a powerset");
    spectrum_cmd->add_option("--powerset", spectrum_ground, "ground size k of P(k)")->required();
    spectrum_cmd->add_option("--n", degree, "degree: 1..9 or omega")->required();

    CLI::App* extend_cmd = app.add_subcommand(
        "extend", "extend a generator map to a homomorphism, or report the obstruction");
    extend_cmd->add_option("FILE", file)->required();
    extend_cmd->add_option("MAP", map_file)->required();
    extend_cmd->add_option("TARGET", target_file)->required();

    CLI::App* nary_cmd = app.add_subcommand("nary", "subbase arity of the anticlique space");
    nary_cmd->add_option("FILE", file)->required();
    nary_cmd->add_option("--n", ary_degree, "check this arity instead of scanning");

    CLI::App* op_cmd = app.add_subcommand("op", "combine two hypergraphs");
    op_cmd->add_option("WHICH", which, "union or join")
        ->required()
        ->check(CLI::IsMember({"union", "join"}));
    op_cmd->add_option("FILE1", file)->required();
    op_cmd->add_option("FILE2", file2)->required();
    op_cmd->add_option("-o,--output", out_path)->required();

    CLI::App* dot_cmd = app.add_subcommand("export-dot", "write a Graphviz rendering");
    dot_cmd->add_option("FILE", file)->required();
    dot_cmd->add_option("-o,--output", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        json err;
        err["error"] = {{"code", "usage"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }

    try {
        if (*anticliques_cmd) return run_anticliques(file, count_only, caps);
        if (*ba_cmd) return run_generated(file, atoms, size_only, /*use_cliques=*/false, caps);
        if (*bc_cmd) return run_generated(file, atoms, size_only, /*use_cliques=*/true, caps);
        if (*indep_cmd) return run_indep(file, degree, verify_witness, caps);
        if (*perp_cmd) return run_perp(file, unchecked, caps);
        if (*spectrum_cmd) return run_spectrum(spectrum_ground, degree, caps);
        if (*extend_cmd) return run_extend(file, map_file, target_file, verify_witness, caps);
        if (*nary_cmd) return run_nary(file, ary_degree, caps);
        if (*op_cmd) return run_op(which, file, file2, out_path, caps);
        if (*dot_cmd) return run_export_dot(file, out_path, caps);
    } catch (const finba::Error& e) {
        json err;
        err["error"] = {{"code", finba::errc_name(e.code())}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return finba::is_cap_error(e.code()) ? 3 : 2;
    } catch (const std::exception& e) {
        json err;
        err["error"] = {{"code", "internal"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return 2;
}
