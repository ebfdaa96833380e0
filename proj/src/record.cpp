#include "cyops/record.hpp"

#include <fstream>
#include <sstream>

#include "cyops/exprparse.hpp"

namespace cyops {

OperatorRecord OperatorRecord::from_operator(const ThetaOperator& op, const std::string& id) {
    OperatorRecord rec;
    rec.id = id;
    ThetaOperator c = op.canonical();
    rec.order = c.order();
    rec.degree = c.degree();
    rec.polys = c.polys();
    return rec;
}

bool operator==(const OperatorRecord& a, const OperatorRecord& b) {
    return a.id == b.id && a.order == b.order && a.degree == b.degree && a.polys == b.polys &&
           a.metadata == b.metadata;
}

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool is_pkey(const std::string& key, int& index) {
    if (key.size() < 2 || key[0] != 'P') return false;
    for (size_t i = 1; i < key.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(key[i]))) return false;
    index = std::stoi(key.substr(1));
    return true;
}

long parse_int_value(const std::string& v, int line) {
    try {
        size_t used = 0;
        long r = std::stol(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing");
        return r;
    } catch (const std::exception&) {
        throw ParseError(line, 1, "an integer value");
    }
}

}  // namespace

OperatorRecord parse_record(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    OperatorRecord rec;
    bool have_order = false, have_degree = false;
    std::vector<std::pair<int, std::string>> pexprs;  // (index, text); parsed after order known
    std::vector<std::pair<int, int>> ppos;  // (line, column of expression start)

    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!header_seen) {
            if (t != "[operator]") throw ParseError(lineno, 1, "'[operator]' header");
            header_seen = true;
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, 1, "'key = value'");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw ParseError(lineno, 1, "a key before '='");
        int pidx = 0;
        if (key == "id") {
            rec.id = value;
        } else if (key == "order") {
            rec.order = static_cast<int>(parse_int_value(value, lineno));
            have_order = true;
        } else if (key == "degree") {
            rec.degree = static_cast<int>(parse_int_value(value, lineno));
            have_degree = true;
        } else if (is_pkey(key, pidx)) {
            pexprs.emplace_back(pidx, value);
            size_t vstart = line.find('=') + 1;
            while (vstart < line.size() && (line[vstart] == ' ' || line[vstart] == '\t'))
                ++vstart;
            ppos.emplace_back(lineno, static_cast<int>(vstart) + 1);
        } else {
            rec.metadata.emplace_back(key, value);
        }
    }
    if (!header_seen) throw ParseError(1, 1, "'[operator]' header");
    if (!have_order) throw ParseError(lineno, 1, "an 'order' entry");
    if (!have_degree) throw ParseError(lineno, 1, "a 'degree' entry");
    if (rec.degree < 0 || rec.order < 1) throw ParseError(lineno, 1, "order >= 1 and degree >= 0");

    rec.polys.assign(rec.degree + 1, RatPoly());
    std::vector<bool> seen(rec.degree + 1, false);
    for (size_t k = 0; k < pexprs.size(); ++k) {
        const auto& [idx, expr] = pexprs[k];
        if (idx > rec.degree)
            throw ParseError(ppos[k].first, 1, "P-index within the declared degree");
        if (seen[idx]) throw ParseError(ppos[k].first, 1, "each P-index at most once");
        seen[idx] = true;
        RatPoly p = parse_poly(expr, ppos[k].first, ppos[k].second);
        if (p.degree() > rec.order)
            throw ArityError("P" + std::to_string(idx) + " has degree " +
                             std::to_string(p.degree()) + " > declared order " +
                             std::to_string(rec.order));
        rec.polys[idx] = p;
    }
    for (int i = 0; i <= rec.degree; ++i)
        if (!seen[i]) throw ParseError(lineno, 1, "an entry for P" + std::to_string(i));
    if (rec.polys.back().is_zero()) throw ParseError(lineno, 1, "a nonzero leading P");
    return rec;
}

std::string serialize_record(const OperatorRecord& rec) {
    std::ostringstream os;
    os << "[operator]\n";
    if (!rec.id.empty()) os << "id = " << rec.id << "\n";
    os << "order = " << rec.order << "\n";
    os << "degree = " << rec.degree << "\n";
    for (int i = 0; i <= rec.degree; ++i)
        os << "P" << i << " = " << rec.polys[i].to_string("T") << "\n";
    for (const auto& [k, v] : rec.metadata) os << k << " = " << v << "\n";
    return os.str();
}

OperatorRecord load_record(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open record file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_record(ss.str());
}

}  // namespace cyops
