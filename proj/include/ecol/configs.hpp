#pragma once

#include "ecol/embed.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ecol {

enum class ConfigId { C1 = 1, C2, C3, C4, C5, C6, C7, C8, C9, C10, C11 };

inline constexpr std::array<ConfigId, 11> kAllConfigs = {
    ConfigId::C1, ConfigId::C2, ConfigId::C3, ConfigId::C4,  ConfigId::C5,  ConfigId::C6,
    ConfigId::C7, ConfigId::C8, ConfigId::C9, ConfigId::C10, ConfigId::C11,
};

std::string config_name(ConfigId id);
std::optional<ConfigId> parse_config_id(const std::string& name);

// Role names of each configuration, in binding order.
const std::vector<std::string>& config_roles(ConfigId id);

// Pairs of roles that the configuration treats symmetrically; a canonical
// binding has the first role's vertex index below the second's.
const std::vector<std::pair<int, int>>& config_symmetries(ConfigId id);

struct ConfigMatch {
    ConfigId config = ConfigId::C1;
    // Vertex index per role, in the order of config_roles.
    std::vector<int> binding;
    // Faces incident to the classified edges u-v_i.
    std::vector<int> witness_faces;

    bool operator==(const ConfigMatch&) const = default;
};

std::vector<ConfigMatch> match_config(const EmbeddedGraph& g, ConfigId id);
std::map<ConfigId, std::vector<ConfigMatch>> match_all(const EmbeddedGraph& g);

// Re-checks every clause of the configuration directly from the graph.
bool verify_match(const EmbeddedGraph& g, const ConfigMatch& m);

// Orders a binding so that symmetric roles appear in canonical order.
std::vector<int> canonical_binding(ConfigId id, std::vector<int> binding);

} // namespace ecol
