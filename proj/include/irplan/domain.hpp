#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "irplan/error.hpp"

namespace irplan {

// ---------------------------------------------------------------------------
// Recovery state
// ---------------------------------------------------------------------------

// Six-dimensional Boolean recovery vector. Field names are fixed; they are
// the exact keys used in prompt/state serialization and must not change.
struct RecoveryState {
    bool is_attack_contained = false;
    bool is_knowledge_sufficient = false;
    bool are_forensics_preserved = false;
    bool is_eradicated = false;
    bool is_hardened = false;
    bool is_recovered = false;

    static constexpr int kNumFields = 6;
    static const std::array<const char*, kNumFields>& field_names();

    std::array<bool, kNumFields> bits() const {
        return {is_attack_contained, is_knowledge_sufficient, are_forensics_preserved,
                is_eradicated,       is_hardened,             is_recovered};
    }
    static RecoveryState from_bits(const std::array<bool, kNumFields>& b) {
        return RecoveryState{b[0], b[1], b[2], b[3], b[4], b[5]};
    }
    // Compact encoding (bit i = field i), handy for table keys; 0..63.
    std::uint8_t to_index() const;
    static RecoveryState from_index(std::uint8_t idx);

    int progress() const; // number of true entries

    bool operator==(const RecoveryState&) const = default;
};

// True iff all six entries are true.
bool is_terminal(const RecoveryState& state);

// Entry-wise OR. Suppresses any true->false regression a predicted
// next-state would otherwise introduce.
RecoveryState merge_monotone(const RecoveryState& state, const RecoveryState& next);

// a is bitwise <= b (no entry of a is true where b is false).
bool bitwise_leq(const RecoveryState& a, const RecoveryState& b);

// Extracts the six Boolean fields from text containing a structured state
// object. A surrounding free-text reasoning section is permitted; the first
// occurrence of each field name wins; unknown fields and field order are
// ignored. Boolean literals are true/false in any case; 0/1 are rejected.
// Throws Error{MissingField, <name>} or Error{MalformedValue, ...}.
RecoveryState parse_state_text(const std::string& text);

// Canonical serialization: one-line JSON object, fields in fixed order,
// lowercase true/false. parse_state_text(render_state_text(s)) == s.
std::string render_state_text(const RecoveryState& state);

// ---------------------------------------------------------------------------
// Alerts
// ---------------------------------------------------------------------------

// Normalized (classification, priority) observation atom. Both fields are
// stored trimmed and case-folded; equality is on the normalized forms.
struct AlertPair {
    std::string classification;
    std::string priority;

    // Normalizes raw field values (trim + ASCII case-fold).
    static AlertPair make(const std::string& classification, const std::string& priority);

    bool operator==(const AlertPair&) const = default;
    bool operator<(const AlertPair& o) const {
        return classification < o.classification ||
               (classification == o.classification && priority < o.priority);
    }
};

using AlertPairSet = std::set<AlertPair>;

// Scans text for bracketed pairs "[Classification: ...] [Priority: ...]".
// Keyword matching is case-insensitive; the colon is optional ("[Priority 1]"
// also matches); arbitrary whitespace may separate the two brackets.
// Duplicates are removed. No match is a valid empty result.
AlertPairSet extract_alert_pairs(const std::string& text);

// Renders one pair back into the bracketed template form.
std::string render_alert_pair(const AlertPair& pair);
// One pair per line, in set order.
std::string render_alert_pairs(const AlertPairSet& pairs);

enum class Protocol { TCP, UDP, ICMP, Other };
const char* to_string(Protocol p);

struct Endpoint {
    std::string host;
    std::optional<std::uint16_t> port;

    std::string to_text() const;
    bool operator==(const Endpoint&) const = default;
};

// One parsed IDS alert record. `raw` always preserves the input line
// byte-for-byte; every parsed field is a substring/normalization of it.
struct SnortAlert {
    std::string rule_id;                     // e.g. "1:31033:6"
    std::string message;
    std::optional<std::string> classification;
    std::optional<int> priority;
    std::optional<Protocol> protocol;
    std::optional<Endpoint> src;
    std::optional<Endpoint> dst;
    std::string raw;

    bool operator==(const SnortAlert&) const = default;
};

// Parses one alert record (a single line, or the two-line classification
// form joined by the caller). Recognizes both corpus shapes: the terse
// "[gid:sid:rev]message ..." form and fast-alert lines with "[**]"
// separators and a timestamp prefix. Throws Error{UnrecognizedLine, ...}
// when the line has neither a rule-id bracket nor a classification bracket.
SnortAlert parse_snort_alert_line(const std::string& line);

// Joins raw lines and extracts the deduplicated pair set; the uniform way
// to turn observed alerts into calibration/evaluation pairs.
AlertPairSet pairs_from_alerts(const std::vector<SnortAlert>& alerts);

// ---------------------------------------------------------------------------
// Actions, tactics, history, costs
// ---------------------------------------------------------------------------

enum class ActionCategory { Contain, Assess, Preserve, Evict, Harden, Restore, Noop };
const char* to_string(ActionCategory c);
std::optional<ActionCategory> category_from_string(const std::string& name);
// The stage bit an action category advances; Noop has none.
std::optional<int> category_bit(ActionCategory c);
// Categories in canonical stage order (excludes Noop).
const std::array<ActionCategory, 6>& stage_categories();

// Free-text response action as emitted/parsed from the model.
struct ResponseAction {
    std::string action;
    std::string explanation;
    std::optional<ActionCategory> category;

    bool operator==(const ResponseAction&) const = default;
};

// Attacker-tactic label (MITRE ATT&CK vocabulary).
struct Tactic {
    std::string label;

    bool operator==(const Tactic&) const = default;
    bool operator<(const Tactic& o) const { return label < o.label; }
};

// Case-insensitive, whitespace-trimmed label comparison.
bool same_tactic(const Tactic& a, const Tactic& b);

struct CostModel {
    double unit_cost = 1.0;
    double penalty_cost = 1.0;
    double failure_cost = 20.0;
};
void validate(const CostModel& cm); // throws SchemaError on violation

// Append-only record of the episode so far: observation batches plus the
// action taken after each. Single-owner per episode; not thread safe.
class HistoryLog {
public:
    struct Entry {
        std::vector<SnortAlert> alerts;   // raw observations (may be empty)
        std::vector<AlertPair> pairs;     // pair-only observations (when no raw lines exist)
        std::optional<ResponseAction> action; // action taken after this batch
    };

    explicit HistoryLog(Tactic initial_tactic) : tactic_(std::move(initial_tactic)) {}

    void add_observations(std::vector<SnortAlert> alerts);
    void add_pair_observations(std::vector<AlertPair> pairs);
    // Records the action taken after the latest observation batch.
    void record_action(ResponseAction action);

    const std::vector<Entry>& entries() const { return entries_; }
    const Tactic& current_tactic() const { return tactic_; }
    void set_tactic(Tactic t) { tactic_ = std::move(t); }

    // All raw alert lines (or rendered pairs) in order, newline-joined.
    std::string logs_text() const;
    std::vector<ResponseAction> actions() const;
    AlertPairSet observed_pairs() const;

private:
    std::vector<Entry> entries_;
    Tactic tactic_;
};

} // namespace irplan
