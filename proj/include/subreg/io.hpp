#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "subreg/automaton.hpp"

namespace subreg {

/// Text format, one automaton per section:
///
///   alphabet: a b c
///   states: N
///   initial: i j ...
///   final: i j ...
///   p a q        (one line per transition)
///
/// Blank lines and `#` comments are ignored; a new `alphabet:` line starts
/// the next section. print_automaton emits the canonicalized form
/// (transitions sorted by source, letter, target), and parsing it back
/// reproduces the text byte for byte.
std::string print_automaton(const Automaton& a);

std::vector<Automaton> parse_automata(const std::string& text);
Automaton parse_automaton(const std::string& text);

std::vector<Automaton> load_automata_file(const std::string& path);
void save_automata_file(const std::string& path, const std::vector<Automaton>& list);

} // namespace subreg
