#ifndef MCD_ERROR_HPP
#define MCD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mcd {

/// Machine-readable failure reasons. Every throwing operation in the library
/// raises mcd::Error carrying one of these codes; the CLI maps them to exit
/// codes (parse_error -> 2, budget_exceeded -> 3, other input errors -> 2).
enum class errc {
    // graph construction / surgery
    node_out_of_range,
    self_loop,
    duplicate_edge,
    invalid_node,
    invalid_edge,
    incomplete_assignment,
    zero_length,
    pair_contraction,
    // paths and weights
    unreachable,
    negative_weight,
    same_terminals,
    // inequalities and generators
    dimension_mismatch,
    not_a_path,
    pair_missing,
    even_n,
    too_small,
    bad_breakpoints,
    // facet machinery
    not_valid,
    empty_input,
    // hull
    not_full_dimensional,
    // separation
    not_a_tree,
    k_too_large,
    l_too_large,
    // lifting
    node_not_in_support,
    not_a_subgraph,
    terminal_mismatch,
    not_a_facet,
    bad_attachment,
    terminal_inside,
    // resource limits and I/O
    budget_exceeded,
    parse_error,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace mcd

#endif
