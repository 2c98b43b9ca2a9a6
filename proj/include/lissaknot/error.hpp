#pragma once

#include <stdexcept>
#include <string>

namespace lissaknot {

// Error codes carried by every lissaknot exception.  The category decides the
// CLI exit code: invalid input -> 2, failed verification -> 1.
enum class errc {
    non_coprime_frequencies,
    degenerate_projection,
    singular_crossing,
    singular_phase,
    malformed_traversal,
    not_a_knot,
    link_not_knot,
    no_assignment_found,
    pattern_not_found,
    not_a_double_letter,
    index_out_of_range,
    bad_frequency,
    bad_determinant,
    not_coprime,
    bad_input,
    verification_failed,
    numeric_margin,
    overflow,
    internal,
};

enum class err_category { invalid_input, verification, internal };

constexpr err_category category_of(errc c) {
    switch (c) {
    case errc::verification_failed:
    case errc::no_assignment_found:
        return err_category::verification;
    case errc::numeric_margin:
    case errc::overflow:
    case errc::internal:
    case errc::malformed_traversal:
        return err_category::internal;
    default:
        return err_category::invalid_input;
    }
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }
    err_category category() const { return category_of(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace lissaknot
