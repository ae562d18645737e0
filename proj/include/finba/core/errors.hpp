#pragma once

#include <stdexcept>
#include <string>

namespace finba {

// Every failure the library can raise, one code per condition so callers
// (and the CLI) can map errors to exit codes without string matching.
enum class errc {
    duplicate_label,
    ground_too_large,
    algebra_mismatch,
    too_many_generators,
    unknown_generator_index,
    incomplete_map,
    not_in_algebra,
    criterion_violated,
    internal_disagreement,
    not_independent_input,
    not_maximal_input,
    too_large_for_exhaustive,
    zero_in_family,
    too_many_vertices,
    not_a_graph,
    join_on_non_graph,
    not_omega_independent,
    zero_generator,
    duplicate_edge,
    invalid_edge,
    invalid_poset,
    not_order_preserving,
    invalid_degree,
    invalid_document,
    overflow,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::duplicate_label: return "duplicate_label";
        case errc::ground_too_large: return "ground_too_large";
        case errc::algebra_mismatch: return "algebra_mismatch";
        case errc::too_many_generators: return "too_many_generators";
        case errc::unknown_generator_index: return "unknown_generator_index";
        case errc::incomplete_map: return "incomplete_map";
        case errc::not_in_algebra: return "not_in_algebra";
        case errc::criterion_violated: return "criterion_violated";
        case errc::internal_disagreement: return "internal_disagreement";
        case errc::not_independent_input: return "not_independent_input";
        case errc::not_maximal_input: return "not_maximal_input";
        case errc::too_large_for_exhaustive: return "too_large_for_exhaustive";
        case errc::zero_in_family: return "zero_in_family";
        case errc::too_many_vertices: return "too_many_vertices";
        case errc::not_a_graph: return "not_a_graph";
        case errc::join_on_non_graph: return "join_on_non_graph";
        case errc::not_omega_independent: return "not_omega_independent";
        case errc::zero_generator: return "zero_generator";
        case errc::duplicate_edge: return "duplicate_edge";
        case errc::invalid_edge: return "invalid_edge";
        case errc::invalid_poset: return "invalid_poset";
        case errc::not_order_preserving: return "not_order_preserving";
        case errc::invalid_degree: return "invalid_degree";
        case errc::invalid_document: return "invalid_document";
        case errc::overflow: return "overflow";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// True for conditions caused by a configured size cap rather than bad input.
inline bool is_cap_error(errc c) {
    return c == errc::ground_too_large || c == errc::too_many_generators ||
           c == errc::too_many_vertices || c == errc::too_large_for_exhaustive ||
           c == errc::overflow;
}

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace finba
