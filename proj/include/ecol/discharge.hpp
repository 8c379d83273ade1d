#pragma once

#include "ecol/configs.hpp"
#include "ecol/embed.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ecol {

// Exact charge stored as an integer number of twelfths.
class Charge {
public:
    constexpr Charge() = default;
    static constexpr Charge twelfths(std::int64_t t) { return Charge(t); }
    static constexpr Charge whole(std::int64_t n) { return Charge(12 * n); }

    constexpr std::int64_t in_twelfths() const { return t_; }

    constexpr Charge operator+(Charge o) const { return Charge(t_ + o.t_); }
    constexpr Charge operator-(Charge o) const { return Charge(t_ - o.t_); }
    constexpr Charge operator-() const { return Charge(-t_); }
    constexpr Charge operator*(std::int64_t k) const { return Charge(t_ * k); }
    Charge& operator+=(Charge o) { t_ += o.t_; return *this; }
    Charge& operator-=(Charge o) { t_ -= o.t_; return *this; }
    constexpr auto operator<=>(const Charge&) const = default;

    // Reduced fraction such as "-12", "7/12" or "-1/2".
    std::string str() const;

private:
    constexpr explicit Charge(std::int64_t t) : t_(t) {}
    std::int64_t t_ = 0;
};

struct Element {
    enum class Kind { Vertex, Face };
    Kind kind = Kind::Vertex;
    int index = 0;
    auto operator<=>(const Element&) const = default;
};

// "v<id>" for vertices, "f<index>" for faces.
std::string element_name(const EmbeddedGraph& g, Element e);

struct Transfer {
    Element source;
    Element target;
    Charge amount;      // per application
    int rule = 0;       // 1..11
    int multiplicity = 1;
    Charge total() const { return amount * multiplicity; }
};

struct ChargeLedger {
    std::vector<Charge> vertex_charge;
    std::vector<Charge> face_charge;
    std::vector<Transfer> log;
    bool rules_applied = false;

    Charge total() const;
    Charge charge(Element e) const;
};

ChargeLedger initial_charges(const EmbeddedGraph& g);
// Single simultaneous pass of R1-R11; a second call on the same ledger throws.
void apply_rules(const EmbeddedGraph& g, ChargeLedger& ledger);

struct NegativeElement {
    Element element;
    Charge charge;
};

struct AuditReport {
    Charge initial_total;
    Charge final_total;
    std::vector<NegativeElement> negatives;
    std::map<ConfigId, int> configs_found;
    bool contradiction = false;
    int components = 1;
};

struct AuditOptions {
    // Audit each component separately instead of rejecting disconnected input.
    bool per_component = false;
};

AuditReport audit(const EmbeddedGraph& g, const AuditOptions& options = {});

struct Explanation {
    std::vector<Transfer> transfers;
    std::string branch;
};

Explanation explain_element(const EmbeddedGraph& g, const ChargeLedger& ledger, Element x);

// Largest graph distance from the element's incident vertices to a vertex of
// the match's binding.
int match_distance(const EmbeddedGraph& g, Element x, const ConfigMatch& m);
std::vector<int> incident_vertices(const EmbeddedGraph& g, Element x);

} // namespace ecol
