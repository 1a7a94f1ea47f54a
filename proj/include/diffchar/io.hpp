#pragma once

#include "diffchar/diff.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace diffchar {

// Parsed problem file. Blocks other than `ring` are optional; a missing
// ranking means orderly in declaration order.
struct ProblemFile {
    RankedRing ctx;
    std::vector<Poly> system;
    std::vector<Poly> system2;
    std::optional<Poly> probe;
    std::optional<int> bound;
};

// Throws ParseError with line/column on any grammar or naming error.
ProblemFile parse_problem(std::string_view text);

// Single expression over an existing ring.
Poly parse_poly(const RankedRing& ctx, std::string_view text);

// Convenience for tests and tools: ring and ranking from the header part
// of a problem file, e.g. "ring {...} ranking {...}".
RankedRing parse_ring(std::string_view text);

// All terms in decreasing induced lex order, e.g. "w^2 - 2*w - z^2*t + 1".
std::string format_poly(const RankedRing& ctx, const Poly& f);

// Collected by powers of the leader, e.g. "(z^2*t - 1)*y + z*x - 1".
std::string format_element(const RankedRing& ctx, const Poly& f);

// [[num, den, [[var, exp], ...]], ...] with num/den as decimal strings.
nlohmann::json to_json(const RankedRing& ctx, const Poly& f);

} // namespace diffchar
