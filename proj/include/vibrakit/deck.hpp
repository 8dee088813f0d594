#pragma once

#include "vibrakit/types.hpp"

#include <string>

namespace vibrakit {

/// Deck syntax or reference error; carries the 1-based source line.
struct DeckError : InputError {
    DeckError(int line, const std::string& msg)
        : InputError("deck line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

/// Parses a model deck (one card per line, comma-separated fields, `#`
/// comments). Unknown cards, bad arity, duplicate ids and dangling
/// references are rejected. Card values are converted to SI on load.
Model parse_deck(const std::string& text);

/// Convenience wrapper; throws InputError when the file cannot be read.
Model parse_deck_file(const std::string& path);

/// Emits the canonical deck form: entities sorted by id, declaration-order
/// collections preserved, numbers in shortest round-trip notation.
/// parse_deck(serialize_deck(m)) reproduces m.
std::string serialize_deck(const Model& model);

}  // namespace vibrakit
