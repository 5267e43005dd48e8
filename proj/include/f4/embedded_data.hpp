#pragma once

#include <string_view>

// Copies of data/generator_table.json and data/identity_corpus.txt compiled
// into the library, so the CLI and tests run without a data directory.
namespace f4::embedded {

std::string_view generator_table_json();
std::string_view identity_corpus_text();

}  // namespace f4::embedded
