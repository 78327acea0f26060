#include "crystalrig/document.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "crystalrig/bijection.hpp"
#include "crystalrig/growth.hpp"

namespace crystalrig {

using json = nlohmann::ordered_json;

int Document::rank() const {
    switch (kind) {
        case Kind::mlt: return tableau().rank();
        case Kind::seq: return sequence().rank();
        case Kind::rc: return rc().rank;
    }
    return 0;
}

Document Document::make(MarginallyLargeTableau t) {
    return Document{Kind::mlt, std::move(t)};
}
Document Document::make(CascadingSequence s) {
    return Document{Kind::seq, std::move(s)};
}
Document Document::make(RiggedConfiguration r) {
    return Document{Kind::rc, std::move(r)};
}

Document::Kind parse_kind(const std::string& name) {
    if (name == "mlt") return Document::Kind::mlt;
    if (name == "seq") return Document::Kind::seq;
    if (name == "rc") return Document::Kind::rc;
    throw std::invalid_argument("unknown document kind: " + name);
}

std::string kind_name(Document::Kind kind) {
    switch (kind) {
        case Document::Kind::mlt: return "mlt";
        case Document::Kind::seq: return "seq";
        case Document::Kind::rc: return "rc";
    }
    return "?";
}

Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    try {
        Document::Kind kind = parse_kind(j.at("kind").get<std::string>());
        int n = j.at("n").get<int>();
        switch (kind) {
            case Document::Kind::mlt: {
                auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
                return Document::make(MarginallyLargeTableau(n, std::move(rows)));
            }
            case Document::Kind::seq: {
                std::vector<LowerSubinterval> ivs;
                for (const auto& pair : j.at("subintervals")) {
                    if (!pair.is_array() || pair.size() != 2)
                        throw std::invalid_argument("subintervals must be [head, tail] pairs");
                    ivs.push_back({pair[0].get<int>(), pair[1].get<int>()});
                }
                return Document::make(CascadingSequence(n, std::move(ivs)));
            }
            case Document::Kind::rc: {
                std::vector<RiggedPartition> parts;
                for (const auto& part : j.at("partitions")) {
                    std::vector<RiggedString> strings;
                    for (const auto& pair : part) {
                        if (!pair.is_array() || pair.size() != 2)
                            throw std::invalid_argument("strings must be [length, rigging] pairs");
                        strings.push_back({pair[0].get<int>(), pair[1].get<int>()});
                    }
                    parts.push_back(RiggedPartition(std::move(strings)));
                }
                return Document::make(RiggedConfiguration(n, std::move(parts)));
            }
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad document: ") + e.what());
    }
    throw std::invalid_argument("unreachable document kind");
}

std::string serialize_document(const Document& doc) {
    json j;
    j["kind"] = kind_name(doc.kind);
    j["n"] = doc.rank();
    switch (doc.kind) {
        case Document::Kind::mlt:
            j["rows"] = doc.tableau().rows();
            break;
        case Document::Kind::seq: {
            json ivs = json::array();
            for (const auto& iv : doc.sequence().subintervals()) ivs.push_back({iv.head, iv.tail});
            j["subintervals"] = std::move(ivs);
            break;
        }
        case Document::Kind::rc: {
            json parts = json::array();
            for (const auto& part : doc.rc().partitions) {
                json strings = json::array();
                for (const auto& s : part.strings) strings.push_back({s.length, s.rigging});
                parts.push_back(std::move(strings));
            }
            j["partitions"] = std::move(parts);
            break;
        }
    }
    return j.dump();
}

std::string pretty_document(const Document& doc) {
    std::ostringstream out;
    switch (doc.kind) {
        case Document::Kind::mlt: {
            for (const auto& row : doc.tableau().rows()) {
                for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
                out << "\n";
            }
            break;
        }
        case Document::Kind::seq: {
            auto letters = doc.sequence().letters();
            out << "(";
            for (std::size_t j = 0; j < letters.size(); ++j) out << (j ? "," : "") << letters[j];
            out << ")\n";
            break;
        }
        case Document::Kind::rc: {
            const RiggedConfiguration& rc = doc.rc();
            for (int a = 1; a <= rc.rank; ++a) {
                out << "nu_" << a << ":";
                const RiggedPartition& part = rc.partition(a);
                if (part.empty()) {
                    out << " (empty)\n";
                    continue;
                }
                out << "\n";
                for (const RiggedString& s : part.strings) {
                    out << "  " << vacancy(rc, a, s.length) << " |";
                    for (int c = 0; c < s.length; ++c) out << " #";
                    out << " | " << s.rigging << "\n";
                }
            }
            break;
        }
    }
    return out.str();
}

Document convert(const Document& doc, Document::Kind target) {
    if (doc.kind == target) return doc;
    switch (doc.kind) {
        case Document::Kind::mlt:
            return target == Document::Kind::seq
                       ? Document::make(phi(doc.tableau()))
                       : Document::make(rc_from_lanes(phi(doc.tableau())));
        case Document::Kind::seq:
            return target == Document::Kind::mlt
                       ? Document::make(phi_inverse(doc.sequence()))
                       : Document::make(rc_from_lanes(doc.sequence()));
        case Document::Kind::rc: {
            CascadingSequence seq = seq_from_rc(doc.rc());
            return target == Document::Kind::seq ? Document::make(std::move(seq))
                                                 : Document::make(phi_inverse(seq));
        }
    }
    throw std::invalid_argument("unreachable conversion");
}

namespace {

json certificate_json(const GrowthCertificate& cert) {
    json steps = json::array();
    for (const GrowthStep& step : cert.steps) {
        json stretches = json::array();
        for (const StretchPlan& p : step.stretches)
            stretches.push_back({{"length", p.length},
                                 {"height", p.height},
                                 {"y", p.y},
                                 {"eta1", p.eta1},
                                 {"eta2", p.eta2},
                                 {"ncb", p.ncb},
                                 {"cb1", p.cb1},
                                 {"cb2", p.cb2},
                                 {"acon", p.acon},
                                 {"n_bound", p.n_bound}});
        steps.push_back({{"d", step.d},
                         {"maxr", step.maxr_next},
                         {"delta", step.delta},
                         {"cb_prime", step.cb_prime},
                         {"stretches", std::move(stretches)}});
    }
    return json{{"rank", cert.rank}, {"acon_n", cert.acon_n}, {"steps", std::move(steps)}};
}

}  // namespace

std::string check_report(const std::string& text) {
    json report;
    try {
        Document doc = parse_document(text);
        if (doc.kind != Document::Kind::rc) {
            report["valid"] = true;  // construction already validated the object
            report["kind"] = kind_name(doc.kind);
            return report.dump();
        }
        GrowthResult result = validate(doc.rc());
        if (result.valid()) {
            report["valid"] = true;
            report["kind"] = "rc";
            report["certificate"] = certificate_json(*result.certificate);
        } else {
            report["valid"] = false;
            report["at"] = {{"partition", result.rejection->partition},
                            {"constraint", result.rejection->constraint}};
            report["detail"] = result.rejection->detail;
        }
    } catch (const std::exception& e) {
        report["valid"] = false;
        report["error"] = e.what();
    }
    return report.dump();
}

std::vector<OpToken> parse_ops(const std::string& text) {
    std::vector<OpToken> ops;
    std::string token;
    std::istringstream in(text);
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ',') c = ' ';
    std::istringstream stream(normalized);
    while (stream >> token) {
        if (token.size() < 2 || (token[0] != 'f' && token[0] != 'e'))
            throw std::invalid_argument("bad operator token: " + token);
        int letter;
        try {
            letter = std::stoi(token.substr(1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad operator token: " + token);
        }
        if (letter < 1) throw std::invalid_argument("bad operator token: " + token);
        ops.push_back({token[0] == 'f', letter});
    }
    return ops;
}

std::optional<Document> apply_ops(const Document& doc, const std::vector<OpToken>& ops) {
    switch (doc.kind) {
        case Document::Kind::mlt: {
            MarginallyLargeTableau t = doc.tableau();
            for (const OpToken& op : ops) {
                if (op.lowering) {
                    t = apply_f(t, op.letter);
                } else {
                    auto up = apply_e(t, op.letter);
                    if (!up) return std::nullopt;
                    t = std::move(*up);
                }
            }
            return Document::make(std::move(t));
        }
        case Document::Kind::rc: {
            RiggedConfiguration rc = doc.rc();
            for (const OpToken& op : ops) {
                if (op.lowering) {
                    rc = apply_f(rc, op.letter);
                } else {
                    auto up = apply_e(rc, op.letter);
                    if (!up) return std::nullopt;
                    rc = std::move(*up);
                }
            }
            return Document::make(std::move(rc));
        }
        case Document::Kind::seq: {
            // act through the tableau model and map back
            MarginallyLargeTableau t = phi_inverse(doc.sequence());
            auto moved = apply_ops(Document::make(std::move(t)), ops);
            if (!moved) return std::nullopt;
            return Document::make(phi(moved->tableau()));
        }
    }
    throw std::invalid_argument("unreachable apply");
}

}  // namespace crystalrig
