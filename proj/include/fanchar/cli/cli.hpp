#pragma once

#include <iosfwd>
#include <string>

#include "fanchar/corpus/corpus.hpp"
#include "fanchar/io/json_io.hpp"

namespace fanchar {

enum ExitCode { kExitOk = 0, kExitInput = 1, kExitTheorem = 2, kExitInternal = 3 };

/// Arguments naming a fan, group or polytope are read as files when the path
/// exists and as corpus names otherwise.
Fan resolve_fan(const std::string& arg);
LoadedGroup resolve_group(const std::string& arg, const AmbientSpace* fallback);
Polytope resolve_polytope(const std::string& arg);

/// Full character and invariant suite for one fan and group. "ok" is false
/// when any two routes disagree.
Json verify_report(const Fan& f, const LoadedGroup& g, bool with_oracle);

/// Recomputes a corpus entry and compares with its stored values.
Json run_example(const CorpusEntry& e);

/// Worker count from FANCHAR_THREADS, else the hardware concurrency.
unsigned worker_count();

/// Human-readable rendering used by --format text.
std::string render_text(const Json& j);

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace fanchar
