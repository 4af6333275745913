#include "cumulantkit/json_io.hpp"

#include <sstream>

namespace ckit {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::vector<int>> blocks_from_json(const Json& j) {
    std::vector<std::vector<int>> blocks;
    for (const auto& jb : j) {
        std::vector<int> b;
        for (const auto& je : jb) b.push_back(je.get<int>());
        blocks.push_back(std::move(b));
    }
    return blocks;
}

Json blocks_to_json(const std::vector<std::vector<int>>& blocks) {
    Json out = Json::array();
    for (const auto& b : blocks) out.push_back(b);
    return out;
}

}  // namespace

Json partition_to_json(const Partition& p) {
    Json j;
    j["n"] = p.degree();
    j["blocks"] = blocks_to_json(p.blocks());
    return j;
}

Partition partition_from_json(const Json& j) {
    try {
        if (j.is_array()) {
            auto blocks = blocks_from_json(j);
            int n = 0;
            for (const auto& b : blocks) n += static_cast<int>(b.size());
            return Partition::of_blocks(n, std::move(blocks));
        }
        return Partition::of_blocks(j.at("n").get<int>(), blocks_from_json(j.at("blocks")));
    } catch (const Json::exception& e) {
        fail(errc::parse_error, std::string("bad partition JSON: ") + e.what());
    }
}

Partition parse_partition(const std::string& text) {
    std::string t = trim(text);
    if (!t.empty() && (t.front() == '{' || t.front() == '[')) {
        Json j = Json::parse(t, nullptr, false);
        if (j.is_discarded()) fail(errc::parse_error, "invalid JSON partition");
        return partition_from_json(j);
    }
    // Compact form: blocks separated by '|', elements by ','.
    std::vector<std::vector<int>> blocks;
    if (!t.empty()) {
        std::istringstream stream(t);
        std::string chunk;
        while (std::getline(stream, chunk, '|')) {
            std::vector<int> b;
            std::istringstream inner(chunk);
            std::string num;
            while (std::getline(inner, num, ',')) {
                num = trim(num);
                if (num.empty()) fail(errc::parse_error, "empty element in compact partition");
                try {
                    b.push_back(std::stoi(num));
                } catch (...) {
                    fail(errc::parse_error, "bad element '" + num + "' in compact partition");
                }
            }
            if (b.empty()) fail(errc::parse_error, "empty block in compact partition");
            blocks.push_back(std::move(b));
        }
    }
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return Partition::of_blocks(n, std::move(blocks));
}

std::string compact_partition(const Partition& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.blocks().size(); ++i) {
        if (i) os << '|';
        const auto& b = p.blocks()[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (j) os << ',';
            os << b[j];
        }
    }
    return os.str();
}

Json monomial_to_json(const Monomial& m) {
    Json out = Json::array();
    for (const Partition& f : m.factors()) out.push_back(partition_to_json(f));
    return out;
}

Monomial monomial_from_json(const Json& j) {
    if (!j.is_array()) fail(errc::parse_error, "monomial must be a JSON array");
    std::vector<Partition> fs;
    for (const auto& je : j) fs.push_back(partition_from_json(je));
    return Monomial(std::move(fs));
}

Json cmonomial_to_json(const CMonomial& m) {
    Json out = Json::array();
    for (const Partition& f : m.factors()) out.push_back(partition_to_json(f));
    return out;
}

Monomial parse_gap_input(const std::string& text) {
    std::string t = trim(text);
    if (!t.empty() && t.front() == '[') {
        Json j = Json::parse(t, nullptr, false);
        if (j.is_discarded()) fail(errc::parse_error, "invalid JSON input");
        // An array of objects is a word; an array of arrays is one partition.
        if (!j.empty() && j.front().is_object()) return monomial_from_json(j);
        return Monomial::of(partition_from_json(j));
    }
    return Monomial::of(parse_partition(t));
}

CMonomial parse_block_input(const std::string& text) {
    Monomial w = parse_gap_input(text);
    return CMonomial(w.reduced().factors());
}

Json composition_to_json(const Composition& c) {
    return blocks_to_json(c.block_list());
}

Composition composition_from_json(const Json& j) {
    if (!j.is_array()) fail(errc::parse_error, "composition must be an array of blocks in slot order");
    return Composition::from_block_list(blocks_from_json(j));
}

Composition parse_composition(const std::string& text) {
    std::string t = trim(text);
    if (!t.empty() && t.front() == '[') {
        Json j = Json::parse(t, nullptr, false);
        if (j.is_discarded()) fail(errc::parse_error, "invalid JSON composition");
        return composition_from_json(j);
    }
    // Compact form reuses the partition syntax; block order is slot order.
    Partition p = parse_partition(t);
    return Composition::from_block_list(p.blocks());
}

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    fail(errc::parse_error, "rationals must be strings like \"p/q\" or integers");
}

Sequence sequence_from_json(const Json& j) {
    if (!j.is_array()) fail(errc::parse_error, "sequence must be a JSON array");
    Sequence s;
    for (const auto& je : j) s.values.push_back(rational_from_json(je));
    return s;
}

Json sequence_to_json(const Sequence& s) {
    Json out = Json::array();
    for (const Rational& v : s.values) out.push_back(rational_to_json(v));
    return out;
}

Json gap_tensor_to_json(const GapTensor& t) {
    Json out = Json::array();
    for (const auto& [pair, c] : t.terms()) {
        Json term;
        term["left"] = monomial_to_json(pair.first);
        term["right"] = monomial_to_json(pair.second);
        term["coeff"] = rational_to_json(c);
        out.push_back(std::move(term));
    }
    return out;
}

Json block_tensor_to_json(const BlockTensor& t) {
    Json out = Json::array();
    for (const auto& [pair, c] : t.terms()) {
        Json term;
        term["left"] = cmonomial_to_json(pair.first);
        term["right"] = cmonomial_to_json(pair.second);
        term["coeff"] = rational_to_json(c);
        out.push_back(std::move(term));
    }
    return out;
}

Json partition_lincomb_to_json(const LinComb<Partition>& x) {
    Json out = Json::array();
    for (const auto& [p, c] : x.terms()) {
        Json term;
        term["partition"] = partition_to_json(p);
        term["coeff"] = rational_to_json(c);
        out.push_back(std::move(term));
    }
    return out;
}

Json monomial_lincomb_to_json(const LinComb<Monomial>& x) {
    Json out = Json::array();
    for (const auto& [m, c] : x.terms()) {
        Json term;
        term["monomial"] = monomial_to_json(m);
        term["coeff"] = rational_to_json(c);
        out.push_back(std::move(term));
    }
    return out;
}

Json report_to_json(const VerifyReport& r) {
    Json out;
    out["suite"] = r.suite;
    out["mode"] = r.mode;
    out["max_degree"] = r.max_degree;
    out["cases_checked"] = r.cases_checked;
    out["ok"] = r.ok();
    Json fails = Json::array();
    for (const auto& f : r.failures) {
        Json jf;
        jf["input"] = f.input;
        jf["identity"] = f.identity;
        fails.push_back(std::move(jf));
    }
    out["failures"] = std::move(fails);
    return out;
}

Json error_to_json(const std::string& code, const std::string& message) {
    Json out;
    out["error"]["code"] = code;
    out["error"]["message"] = message;
    return out;
}

}  // namespace ckit
