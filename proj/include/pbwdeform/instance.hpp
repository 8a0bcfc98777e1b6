#pragma once

#include "pbwdeform/params.hpp"

namespace pbwdeform {

/// A fully specified deformation problem: field, acting group, and the
/// (lambda, kappa) tables, with an optional generalized kappa.
struct Instance {
    std::string name;
    RepPtr rep;
    LambdaParam lambda;
    KappaParam kappa;
    std::optional<GeneralKappa> general_kappa;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

/// Parses the line-oriented instance format; rejects unknown keys and
/// inconsistent sections with a located error.
Instance parse_instance(const std::string& text);

/// Canonical text form; parse_instance(render_instance(x)) round-trips
/// byte-identically for canonical instances.
std::string render_instance(const Instance& inst);

/// Stable content digest of the canonical form (hex).
std::string instance_digest(const Instance& inst);

/// Built-in gallery.  Throws with the list of known names on a miss.
Instance corpus_get(const std::string& name);
std::vector<std::string> corpus_names();

}  // namespace pbwdeform
