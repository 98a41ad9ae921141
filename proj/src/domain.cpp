#include "irplan/domain.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace irplan {

namespace {

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

} // namespace

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MissingField: return "MissingField";
        case ErrorKind::MalformedValue: return "MalformedValue";
        case ErrorKind::MalformedObject: return "MalformedObject";
        case ErrorKind::UnrecognizedLine: return "UnrecognizedLine";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::TemplateError: return "TemplateError";
        case ErrorKind::IoError: return "IoError";
        case ErrorKind::EpisodeFinished: return "EpisodeFinished";
        case ErrorKind::MissingContext: return "MissingContext";
        case ErrorKind::UnscriptedPrompt: return "UnscriptedPrompt";
        case ErrorKind::TransportFailure: return "TransportFailure";
        case ErrorKind::Timeout: return "Timeout";
        case ErrorKind::EmptyPayload: return "EmptyPayload";
        case ErrorKind::SimulationParseError: return "SimulationParseError";
        case ErrorKind::NoViableCandidates: return "NoViableCandidates";
        case ErrorKind::EmptyCandidates: return "EmptyCandidates";
        case ErrorKind::EmptySample: return "EmptySample";
        case ErrorKind::JudgmentMismatch: return "JudgmentMismatch";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ConfigError: return "ConfigError";
    }
    return "UnknownError";
}

// ---------------------------------------------------------------------------
// RecoveryState
// ---------------------------------------------------------------------------

const std::array<const char*, RecoveryState::kNumFields>& RecoveryState::field_names() {
    static const std::array<const char*, kNumFields> names = {
        "is_attack_contained", "is_knowledge_sufficient", "are_forensics_preserved",
        "is_eradicated",       "is_hardened",             "is_recovered"};
    return names;
}

std::uint8_t RecoveryState::to_index() const {
    std::uint8_t idx = 0;
    auto b = bits();
    for (int i = 0; i < kNumFields; ++i) {
        if (b[static_cast<size_t>(i)]) idx |= static_cast<std::uint8_t>(1u << i);
    }
    return idx;
}

RecoveryState RecoveryState::from_index(std::uint8_t idx) {
    std::array<bool, kNumFields> b{};
    for (int i = 0; i < kNumFields; ++i) b[static_cast<size_t>(i)] = (idx >> i) & 1u;
    return from_bits(b);
}

int RecoveryState::progress() const {
    int n = 0;
    for (bool b : bits()) n += b ? 1 : 0;
    return n;
}

bool is_terminal(const RecoveryState& state) {
    for (bool b : state.bits()) {
        if (!b) return false;
    }
    return true;
}

RecoveryState merge_monotone(const RecoveryState& state, const RecoveryState& next) {
    auto a = state.bits();
    auto b = next.bits();
    std::array<bool, RecoveryState::kNumFields> out{};
    for (size_t i = 0; i < out.size(); ++i) out[i] = a[i] || b[i];
    return RecoveryState::from_bits(out);
}

bool bitwise_leq(const RecoveryState& a, const RecoveryState& b) {
    auto x = a.bits();
    auto y = b.bits();
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] && !y[i]) return false;
    }
    return true;
}

RecoveryState parse_state_text(const std::string& text) {
    const std::string lower = to_lower(text);
    std::array<bool, RecoveryState::kNumFields> bits{};

    for (int f = 0; f < RecoveryState::kNumFields; ++f) {
        const std::string name = RecoveryState::field_names()[static_cast<size_t>(f)];
        bool found = false;
        bool saw_malformed = false;
        std::string bad_token;

        // Accept the first occurrence of the field name that is followed by a
        // colon and a value token. Bare prose mentions without a colon are
        // skipped so a reasoning preamble cannot shadow the structured object.
        size_t pos = 0;
        while (!found && (pos = lower.find(name, pos)) != std::string::npos) {
            size_t start = pos;
            pos += name.size();
            // Must be a whole-word match.
            if (start > 0 && is_word_char(lower[start - 1])) continue;
            if (pos < lower.size() && is_word_char(lower[pos])) continue;

            size_t p = pos;
            while (p < lower.size() && (lower[p] == '"' || lower[p] == '\'' || lower[p] == '`' ||
                                        lower[p] == ' ' || lower[p] == '\t')) {
                ++p;
            }
            if (p >= lower.size() || lower[p] != ':') continue;
            ++p;
            while (p < lower.size() && (lower[p] == '"' || lower[p] == '\'' || lower[p] == '`' ||
                                        lower[p] == ' ' || lower[p] == '\t' || lower[p] == '\n' ||
                                        lower[p] == '\r')) {
                ++p;
            }
            size_t tok_start = p;
            while (p < lower.size() && is_word_char(lower[p])) ++p;
            std::string token = lower.substr(tok_start, p - tok_start);
            if (token == "true") {
                bits[static_cast<size_t>(f)] = true;
                found = true;
            } else if (token == "false") {
                bits[static_cast<size_t>(f)] = false;
                found = true;
            } else {
                // Numeric 0/1 and anything else are not Boolean literals.
                saw_malformed = true;
                bad_token = token;
            }
        }

        if (!found) {
            if (saw_malformed) {
                throw Error(ErrorKind::MalformedValue,
                            name + " has non-Boolean value '" + bad_token + "'");
            }
            throw Error(ErrorKind::MissingField, name);
        }
    }
    return RecoveryState::from_bits(bits);
}

std::string render_state_text(const RecoveryState& state) {
    std::ostringstream out;
    out << "{";
    auto b = state.bits();
    for (int i = 0; i < RecoveryState::kNumFields; ++i) {
        if (i > 0) out << ", ";
        out << '"' << RecoveryState::field_names()[static_cast<size_t>(i)] << "\": "
            << (b[static_cast<size_t>(i)] ? "true" : "false");
    }
    out << "}";
    return out.str();
}

// ---------------------------------------------------------------------------
// Alert pairs
// ---------------------------------------------------------------------------

AlertPair AlertPair::make(const std::string& classification, const std::string& priority) {
    return AlertPair{to_lower(trim(classification)), to_lower(trim(priority))};
}

namespace {

// After '[', checks for `keyword` (case-insensitive) followed by ':' or
// whitespace, and captures the bracket body up to ']'. Returns the position
// one past ']' or npos when the bracket does not match.
size_t match_keyword_bracket(const std::string& lower, const std::string& text, size_t open,
                             const std::string& keyword, std::string* value) {
    size_t p = open + 1;
    while (p < lower.size() && (lower[p] == ' ' || lower[p] == '\t')) ++p;
    if (lower.compare(p, keyword.size(), keyword) != 0) return std::string::npos;
    p += keyword.size();
    if (p >= lower.size()) return std::string::npos;
    if (lower[p] == ':') {
        ++p;
    } else if (lower[p] == ' ' || lower[p] == '\t') {
        // "[Priority 1]" form: keyword then whitespace, no colon.
        ++p;
    } else {
        return std::string::npos;
    }
    size_t close = text.find(']', p);
    if (close == std::string::npos) return std::string::npos;
    *value = text.substr(p, close - p);
    return close + 1;
}

} // namespace

AlertPairSet extract_alert_pairs(const std::string& text) {
    AlertPairSet pairs;
    const std::string lower = to_lower(text);

    size_t pos = 0;
    while ((pos = lower.find('[', pos)) != std::string::npos) {
        std::string classification;
        size_t after_class = match_keyword_bracket(lower, text, pos, "classification", &classification);
        if (after_class == std::string::npos) {
            ++pos;
            continue;
        }
        size_t p = after_class;
        while (p < lower.size() && std::isspace(static_cast<unsigned char>(lower[p]))) ++p;
        if (p >= lower.size() || lower[p] != '[') {
            pos = after_class;
            continue;
        }
        std::string priority;
        size_t after_prio = match_keyword_bracket(lower, text, p, "priority", &priority);
        if (after_prio == std::string::npos) {
            pos = after_class;
            continue;
        }
        AlertPair pair = AlertPair::make(classification, priority);
        if (!pair.classification.empty() && !pair.priority.empty()) {
            pairs.insert(std::move(pair));
        }
        pos = after_prio;
    }
    return pairs;
}

std::string render_alert_pair(const AlertPair& pair) {
    return "[Classification: " + pair.classification + "] [Priority: " + pair.priority + "]";
}

std::string render_alert_pairs(const AlertPairSet& pairs) {
    std::ostringstream out;
    bool first = true;
    for (const auto& p : pairs) {
        if (!first) out << "\n";
        out << render_alert_pair(p);
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Snort alerts
// ---------------------------------------------------------------------------

const char* to_string(Protocol p) {
    switch (p) {
        case Protocol::TCP: return "TCP";
        case Protocol::UDP: return "UDP";
        case Protocol::ICMP: return "ICMP";
        case Protocol::Other: return "Other";
    }
    return "Other";
}

std::string Endpoint::to_text() const {
    if (port) return host + ":" + std::to_string(*port);
    return host;
}

namespace {

// Locates a "[d+:d+:d+]" rule-id bracket. Returns npos when absent.
size_t find_rule_id(const std::string& line, std::string* rule_id, size_t* end_pos) {
    size_t pos = 0;
    while ((pos = line.find('[', pos)) != std::string::npos) {
        size_t p = pos + 1;
        int colons = 0;
        bool ok = p < line.size() && std::isdigit(static_cast<unsigned char>(line[p]));
        while (ok && p < line.size() && line[p] != ']') {
            if (line[p] == ':') {
                ++colons;
                ok = p + 1 < line.size() && std::isdigit(static_cast<unsigned char>(line[p + 1]));
            } else if (!std::isdigit(static_cast<unsigned char>(line[p]))) {
                ok = false;
            }
            ++p;
        }
        if (ok && p < line.size() && line[p] == ']' && colons == 2) {
            *rule_id = line.substr(pos + 1, p - pos - 1);
            *end_pos = p + 1;
            return pos;
        }
        ++pos;
    }
    return std::string::npos;
}

std::optional<Endpoint> parse_endpoint(const std::string& token) {
    std::string t = trim(token);
    if (t.empty()) return std::nullopt;
    Endpoint ep;
    size_t colon = t.rfind(':');
    if (colon != std::string::npos && colon + 1 < t.size()) {
        bool digits = true;
        for (size_t i = colon + 1; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
                digits = false;
                break;
            }
        }
        if (digits) {
            ep.host = t.substr(0, colon);
            ep.port = static_cast<std::uint16_t>(std::stoul(t.substr(colon + 1)));
            return ep;
        }
    }
    ep.host = t;
    return ep;
}

} // namespace

SnortAlert parse_snort_alert_line(const std::string& line) {
    SnortAlert alert;
    alert.raw = line;

    const std::string lower = to_lower(line);

    std::string rule_id;
    size_t rule_end = 0;
    size_t rule_pos = find_rule_id(line, &rule_id, &rule_end);

    // Classification / priority brackets may appear anywhere in the record.
    std::string classification;
    std::string priority_text;
    size_t class_pos = std::string::npos;
    {
        size_t pos = 0;
        while ((pos = lower.find('[', pos)) != std::string::npos) {
            std::string value;
            size_t after = match_keyword_bracket(lower, line, pos, "classification", &value);
            if (after != std::string::npos && classification.empty()) {
                classification = trim(value);
                class_pos = pos;
                pos = after;
                continue;
            }
            after = match_keyword_bracket(lower, line, pos, "priority", &value);
            if (after != std::string::npos && priority_text.empty()) {
                priority_text = trim(value);
                pos = after;
                continue;
            }
            ++pos;
        }
    }

    if (rule_pos == std::string::npos && class_pos == std::string::npos) {
        throw Error(ErrorKind::UnrecognizedLine, line);
    }

    alert.rule_id = rule_id;
    if (!classification.empty()) alert.classification = classification;
    if (!priority_text.empty()) {
        bool numeric = !priority_text.empty();
        for (char c : priority_text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                numeric = false;
                break;
            }
        }
        if (numeric) alert.priority = std::stoi(priority_text);
    }

    // Protocol and endpoints: "{TCP}a.b.c.d:p->e.f.g.h:q" (spaces optional).
    size_t brace = line.find('{');
    if (brace != std::string::npos) {
        size_t close = line.find('}', brace);
        if (close != std::string::npos) {
            std::string proto = to_lower(trim(line.substr(brace + 1, close - brace - 1)));
            if (proto == "tcp") alert.protocol = Protocol::TCP;
            else if (proto == "udp") alert.protocol = Protocol::UDP;
            else if (proto == "icmp") alert.protocol = Protocol::ICMP;
            else if (!proto.empty()) alert.protocol = Protocol::Other;

            std::string rest = line.substr(close + 1);
            size_t arrow = rest.find("->");
            if (arrow != std::string::npos) {
                alert.src = parse_endpoint(rest.substr(0, arrow));
                std::string dst_part = rest.substr(arrow + 2);
                // Endpoints end at the next whitespace-delimited break.
                size_t cut = dst_part.find_first_of(" \t[");
                if (cut != std::string::npos) dst_part = dst_part.substr(0, cut);
                alert.dst = parse_endpoint(dst_part);
            }
        }
    }

    // Message: text after the rule-id bracket up to the next structured token.
    if (rule_pos != std::string::npos) {
        size_t msg_begin = rule_end;
        size_t msg_end = line.size();
        for (const char* stop : {"[**]", "[classification", "[priority", "{"}) {
            size_t p = lower.find(stop, msg_begin);
            if (p != std::string::npos && p < msg_end) msg_end = p;
        }
        std::string msg = trim(line.substr(msg_begin, msg_end - msg_begin));
        // Fast-alert form wraps the message in "[**]" separators.
        if (msg.rfind("[**]", 0) == 0) msg = trim(msg.substr(4));
        alert.message = msg;
    }

    return alert;
}

AlertPairSet pairs_from_alerts(const std::vector<SnortAlert>& alerts) {
    std::ostringstream joined;
    for (const auto& a : alerts) joined << a.raw << "\n";
    return extract_alert_pairs(joined.str());
}

// ---------------------------------------------------------------------------
// Actions, tactics, history
// ---------------------------------------------------------------------------

const char* to_string(ActionCategory c) {
    switch (c) {
        case ActionCategory::Contain: return "contain";
        case ActionCategory::Assess: return "assess";
        case ActionCategory::Preserve: return "preserve";
        case ActionCategory::Evict: return "evict";
        case ActionCategory::Harden: return "harden";
        case ActionCategory::Restore: return "restore";
        case ActionCategory::Noop: return "noop";
    }
    return "noop";
}

std::optional<ActionCategory> category_from_string(const std::string& name) {
    std::string n = to_lower(trim(name));
    if (n == "contain") return ActionCategory::Contain;
    if (n == "assess") return ActionCategory::Assess;
    if (n == "preserve") return ActionCategory::Preserve;
    if (n == "evict") return ActionCategory::Evict;
    if (n == "harden") return ActionCategory::Harden;
    if (n == "restore") return ActionCategory::Restore;
    if (n == "noop") return ActionCategory::Noop;
    return std::nullopt;
}

std::optional<int> category_bit(ActionCategory c) {
    switch (c) {
        case ActionCategory::Contain: return 0;
        case ActionCategory::Assess: return 1;
        case ActionCategory::Preserve: return 2;
        case ActionCategory::Evict: return 3;
        case ActionCategory::Harden: return 4;
        case ActionCategory::Restore: return 5;
        case ActionCategory::Noop: return std::nullopt;
    }
    return std::nullopt;
}

const std::array<ActionCategory, 6>& stage_categories() {
    static const std::array<ActionCategory, 6> order = {
        ActionCategory::Contain, ActionCategory::Assess,  ActionCategory::Preserve,
        ActionCategory::Evict,   ActionCategory::Harden,  ActionCategory::Restore};
    return order;
}

bool same_tactic(const Tactic& a, const Tactic& b) {
    return to_lower(trim(a.label)) == to_lower(trim(b.label));
}

void validate(const CostModel& cm) {
    if (cm.unit_cost < 0 || cm.penalty_cost < 0 || cm.failure_cost < 0) {
        throw Error(ErrorKind::SchemaError, "cost_model: costs must be nonnegative");
    }
    if (cm.failure_cost < cm.unit_cost) {
        throw Error(ErrorKind::SchemaError, "cost_model: failure_cost must be >= unit_cost");
    }
}

void HistoryLog::add_observations(std::vector<SnortAlert> alerts) {
    entries_.push_back(Entry{std::move(alerts), {}, std::nullopt});
}

void HistoryLog::add_pair_observations(std::vector<AlertPair> pairs) {
    entries_.push_back(Entry{{}, std::move(pairs), std::nullopt});
}

void HistoryLog::record_action(ResponseAction action) {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (!it->action) {
            it->action = std::move(action);
            return;
        }
    }
    // No open observation batch: the action starts its own entry.
    entries_.push_back(Entry{{}, {}, std::move(action)});
}

std::string HistoryLog::logs_text() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& e : entries_) {
        for (const auto& a : e.alerts) {
            if (!first) out << "\n";
            out << a.raw;
            first = false;
        }
        for (const auto& p : e.pairs) {
            if (!first) out << "\n";
            out << render_alert_pair(p);
            first = false;
        }
    }
    return out.str();
}

std::vector<ResponseAction> HistoryLog::actions() const {
    std::vector<ResponseAction> out;
    for (const auto& e : entries_) {
        if (e.action) out.push_back(*e.action);
    }
    return out;
}

AlertPairSet HistoryLog::observed_pairs() const {
    AlertPairSet out;
    for (const auto& e : entries_) {
        auto from_raw = pairs_from_alerts(e.alerts);
        out.insert(from_raw.begin(), from_raw.end());
        out.insert(e.pairs.begin(), e.pairs.end());
    }
    return out;
}

} // namespace irplan
