#include "lenscape/io.hpp"

#include <limits>
#include <map>

#include "lenscape/errors.hpp"

namespace lenscape {

Int parse_int(const std::string& s) {
    size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) throw invalid_input_error("not an integer: '" + s + "'");
    for (size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw invalid_input_error("not an integer: '" + s + "'");
    return Int(s);
}

Json json_int(const Int& x) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (x < lo || x > hi) return x.str();
    return x.convert_to<std::int64_t>();
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw invalid_input_error("expected an integer");
}

Json json_fraction(const Fraction& f) { return f.str(); }

Json json_int_list(const std::vector<Int>& xs) {
    Json arr = Json::array();
    for (const Int& x : xs) arr.push_back(json_int(x));
    return arr;
}

Json json_matrix(const IntMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(json_int(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json word_to_json(const Word& w) {
    Json arr = Json::array();
    for (int letter : w) arr.push_back(letter);
    return arr;
}

Word word_from_json(const Json& j, int rank) {
    if (!j.is_array()) throw invalid_input_error("word must be an array of integers");
    Word w;
    for (const Json& v : j) {
        if (!v.is_number_integer()) throw invalid_input_error("word letter must be an integer");
        w.push_back(v.get<int>());
    }
    return word_reduce(w, rank);
}

Json presentation_to_json(const ArtinPresentation& p) {
    Json j;
    j["n"] = p.n;
    Json rels = Json::array();
    for (const Word& r : p.relations) rels.push_back(word_to_json(r));
    j["relations"] = std::move(rels);
    return j;
}

ArtinPresentation presentation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("relations"))
        throw invalid_input_error("presentation needs fields 'n' and 'relations'");
    ArtinPresentation p;
    if (!j["n"].is_number_integer()) throw invalid_input_error("'n' must be an integer");
    p.n = j["n"].get<int>();
    if (p.n < 1 || p.n > 64) throw invalid_input_error("rank out of range");
    if (!j["relations"].is_array())
        throw invalid_input_error("'relations' must be an array of words");
    for (const Json& r : j["relations"]) p.relations.push_back(word_from_json(r, p.n));
    if (static_cast<int>(p.relations.size()) != p.n)
        throw invalid_input_error("presentation needs one relation per generator");
    return p;
}

namespace {

std::vector<std::string> names_from_json(const Json& j) {
    if (!j.is_array()) throw invalid_input_error("'holes' must be an array of names");
    std::vector<std::string> names;
    for (const Json& h : j) {
        if (!h.is_string()) throw invalid_input_error("hole names must be strings");
        names.push_back(h.get<std::string>());
    }
    return names;
}

HoleSet holeset_from_json(const Json& j, const std::map<std::string, int>& index) {
    if (!j.is_array()) throw invalid_input_error("a hole-set must be an array of names");
    HoleSet s;
    for (const Json& h : j) {
        if (!h.is_string()) throw invalid_input_error("hole names must be strings");
        auto it = index.find(h.get<std::string>());
        if (it == index.end())
            throw invalid_input_error("unknown hole name '" + h.get<std::string>() + "'");
        s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::map<std::string, int> name_index(const std::vector<std::string>& names) {
    std::map<std::string, int> index;
    for (size_t i = 0; i < names.size(); ++i) {
        if (!index.emplace(names[i], static_cast<int>(i)).second)
            throw invalid_input_error("duplicate hole name '" + names[i] + "'");
    }
    return index;
}

Json holeset_to_json(const HoleSet& s, const std::vector<std::string>& names) {
    Json arr = Json::array();
    for (int i : s) {
        if (i >= 0 && static_cast<size_t>(i) < names.size())
            arr.push_back(names[static_cast<size_t>(i)]);
        else
            arr.push_back(std::to_string(i));
    }
    return arr;
}

} // namespace

Json factorization_to_json(const TwistFactorization& f) {
    std::vector<std::string> names = f.hole_names;
    for (int i = static_cast<int>(names.size()); i < f.num_holes; ++i)
        names.push_back(std::to_string(i));
    Json j;
    Json holes = Json::array();
    for (const std::string& n : names) holes.push_back(n);
    j["holes"] = std::move(holes);
    Json twists = Json::array();
    for (const Twist& t : f.twists) {
        Json tw;
        tw["holes"] = holeset_to_json(t.holes, names);
        tw["power"] = json_int(t.power);
        twists.push_back(std::move(tw));
    }
    j["twists"] = std::move(twists);
    return j;
}

TwistFactorization factorization_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("holes") || !j.contains("twists"))
        throw invalid_input_error("factorization needs fields 'holes' and 'twists'");
    TwistFactorization f;
    f.hole_names = names_from_json(j["holes"]);
    f.num_holes = static_cast<int>(f.hole_names.size());
    auto index = name_index(f.hole_names);
    if (!j["twists"].is_array()) throw invalid_input_error("'twists' must be an array");
    for (const Json& t : j["twists"]) {
        if (!t.is_object() || !t.contains("holes") || !t.contains("power"))
            throw invalid_input_error("each twist needs 'holes' and 'power'");
        f.twists.push_back({holeset_from_json(t["holes"], index), int_from_json(t["power"])});
    }
    return f;
}

Configuration configuration_from_json(const Json& j, std::vector<std::string>& names_out) {
    if (!j.is_object() || !j.contains("holes") || !j.contains("curves"))
        throw invalid_input_error("configuration needs fields 'holes' and 'curves'");
    names_out = names_from_json(j["holes"]);
    auto index = name_index(names_out);
    if (!j["curves"].is_array()) throw invalid_input_error("'curves' must be an array");
    Configuration curves;
    for (const Json& c : j["curves"]) curves.push_back(holeset_from_json(c, index));
    std::sort(curves.begin(), curves.end());
    return curves;
}

Json configuration_to_json(const Configuration& curves,
                           const std::vector<std::string>& names) {
    Json arr = Json::array();
    for (const HoleSet& s : curves) arr.push_back(holeset_to_json(s, names));
    return arr;
}

} // namespace lenscape
