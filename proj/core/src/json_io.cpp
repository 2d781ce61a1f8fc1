#include "kmm/json_io.hpp"

namespace kmm {

namespace {

[[noreturn]] void schema_fail(const std::string& what) {
    throw invalid_input("schema violation: " + what);
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) schema_fail(std::string("missing field '") + name + "'");
    return *it;
}

bool is_count(const json& v) { return v.is_number_integer() && v.get<long long>() >= 0; }

index_t count_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!is_count(v)) schema_fail(std::string("'") + name + "' must be a count");
    return static_cast<index_t>(v.get<long long>());
}

} // namespace

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) schema_fail("input is not valid JSON");
    return j;
}

json to_json(const BoolMatrix& m) {
    json rows = json::array();
    for (index_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (index_t c = 0; c < m.cols(); ++c) row.push_back(int(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"format", 1}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

BoolMatrix bool_matrix_from_json(const json& j) {
    if (!j.is_object()) schema_fail("matrix must be an object");
    index_t rows = count_field(j, "rows"), cols = count_field(j, "cols");
    const json& data = field(j, "data");
    if (!data.is_array() || data.size() != rows) schema_fail("'data' must hold one row per row");
    BoolMatrix m(rows, cols);
    for (index_t r = 0; r < rows; ++r) {
        const json& row = data[r];
        if (!row.is_array() || row.size() != cols) schema_fail("ragged or missized matrix row");
        for (index_t c = 0; c < cols; ++c) {
            if (!row[c].is_number_integer()) schema_fail("matrix entries must be integers");
            long long v = row[c].get<long long>();
            if (v != 0 && v != 1) schema_fail("matrix entries must be 0 or 1");
            m.set(r, c, v == 1);
        }
    }
    return m;
}

json to_json(const Cover& c) {
    json rf = json::array(), cf = json::array();
    for (index_t i = 0; i < c.n(); ++i) {
        rf.push_back(int(c.row_flags()[i]));
        cf.push_back(int(c.col_flags()[i]));
    }
    return json{{"format", 1}, {"row_flags", std::move(rf)}, {"col_flags", std::move(cf)}};
}

Cover cover_from_json(const json& j) {
    if (!j.is_object()) schema_fail("cover must be an object");
    const json& rf = field(j, "row_flags");
    const json& cf = field(j, "col_flags");
    if (!rf.is_array() || !cf.is_array() || rf.size() != cf.size())
        schema_fail("cover flag arrays must have equal length");
    auto flags = [](const json& arr) {
        std::vector<std::uint8_t> out;
        for (const auto& v : arr) {
            if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1))
                schema_fail("cover flags must be 0 or 1");
            out.push_back(static_cast<std::uint8_t>(v.get<int>()));
        }
        return out;
    };
    return Cover(flags(rf), flags(cf));
}

json to_json(const Selection& s) {
    json picks = json::array();
    for (auto [r, c] : s.picks()) picks.push_back(json::array({r + 1, c + 1}));
    return json{{"format", 1}, {"n", s.n()}, {"picks", std::move(picks)}};
}

Selection selection_from_json(const json& j) {
    if (!j.is_object()) schema_fail("selection must be an object");
    index_t n = count_field(j, "n");
    const json& picks = field(j, "picks");
    if (!picks.is_array()) schema_fail("'picks' must be an array");
    std::vector<std::pair<index_t, index_t>> ps;
    for (const auto& p : picks) {
        if (!p.is_array() || p.size() != 2 || !is_count(p[0]) || !is_count(p[1]))
            schema_fail("each pick must be a pair of positive indices");
        index_t r = static_cast<index_t>(p[0].get<long long>());
        index_t c = static_cast<index_t>(p[1].get<long long>());
        if (r == 0 || c == 0) schema_fail("picks are 1-based");
        ps.emplace_back(r - 1, c - 1);
    }
    return Selection(n, std::move(ps));
}

json to_json(const TerminalGraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back(json::array({e.first + 1, e.second + 1}));
    return json{{"format", 1},
                {"n", g.n()},
                {"edges", std::move(edges)},
                {"x", g.x() + 1},
                {"y", g.y() + 1}};
}

TerminalGraph graph_from_json(const json& j) {
    if (!j.is_object()) schema_fail("graph must be an object");
    index_t n = count_field(j, "n");
    index_t x = count_field(j, "x"), y = count_field(j, "y");
    if (x == 0 || y == 0 || x > n || y > n) schema_fail("terminals must lie in 1..n");
    const json& edges = field(j, "edges");
    if (!edges.is_array()) schema_fail("'edges' must be an array");
    BoolMatrix adj(n, n);
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2 || !is_count(e[0]) || !is_count(e[1]))
            schema_fail("each edge must be a pair of vertex ids");
        index_t u = static_cast<index_t>(e[0].get<long long>());
        index_t v = static_cast<index_t>(e[1].get<long long>());
        if (u == 0 || v == 0 || u > n || v > n || u == v) schema_fail("edge endpoints out of range");
        adj.set(u - 1, v - 1, true);
        adj.set(v - 1, u - 1, true);
    }
    return TerminalGraph(std::move(adj), x - 1, y - 1);
}

json to_json(const SetSystem& s) {
    json sets = json::array();
    for (index_t i = 0; i < s.n(); ++i) {
        json one = json::array();
        for (index_t e = 0; e < s.n(); ++e)
            if (s.contains(i, e)) one.push_back(e + 1);
        sets.push_back(std::move(one));
    }
    return json{{"format", 1}, {"sets", std::move(sets)}};
}

SetSystem set_system_from_json(const json& j) {
    if (!j.is_object()) schema_fail("set system must be an object");
    const json& sets = field(j, "sets");
    if (!sets.is_array()) schema_fail("'sets' must be an array");
    index_t n = sets.size();
    std::vector<std::vector<index_t>> parsed;
    for (const auto& s : sets) {
        if (!s.is_array()) schema_fail("each set must be an array of elements");
        std::vector<index_t> one;
        for (const auto& e : s) {
            if (!is_count(e) || e.get<long long>() == 0 ||
                static_cast<index_t>(e.get<long long>()) > n)
                schema_fail("set elements must lie in 1..n");
            one.push_back(static_cast<index_t>(e.get<long long>()) - 1);
        }
        parsed.push_back(std::move(one));
    }
    return SetSystem::from_sets(n, parsed);
}

json poset_to_json(const Poset& p) {
    json lt = json::array();
    for (index_t i = 0; i < p.n(); ++i)
        for (index_t j2 = 0; j2 < p.n(); ++j2)
            if (p.less(i, j2)) lt.push_back(json::array({i + 1, j2 + 1}));
    return json{{"format", 1}, {"n", p.n()}, {"lt", std::move(lt)}};
}

Poset poset_from_json(const json& j) {
    if (!j.is_object()) schema_fail("poset must be an object");
    index_t n = count_field(j, "n");
    const json& lt = field(j, "lt");
    if (!lt.is_array()) schema_fail("'lt' must be an array of pairs");
    BoolMatrix m(n, n);
    for (const auto& pair : lt) {
        if (!pair.is_array() || pair.size() != 2 || !is_count(pair[0]) || !is_count(pair[1]))
            schema_fail("each relation must be a pair");
        index_t a = static_cast<index_t>(pair[0].get<long long>());
        index_t b = static_cast<index_t>(pair[1].get<long long>());
        if (a == 0 || b == 0 || a > n || b > n) schema_fail("relation endpoints out of range");
        m.set(a - 1, b - 1, true);
    }
    return Poset(std::move(m));
}

json to_json(const KmmReport& r) {
    return json{{"format", 1},          {"l", r.l},
                {"o", r.o},             {"cover", to_json(r.cover)},
                {"selection", to_json(r.selection)}, {"equal", r.equal}};
}

json to_json(const la::IntMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return json{{"format", 1}, {"rows", m.rows}, {"cols", m.cols}, {"data", std::move(rows)}};
}

la::IntMatrix int_matrix_from_json(const json& j) {
    if (!j.is_object()) schema_fail("matrix must be an object");
    index_t rows = count_field(j, "rows"), cols = count_field(j, "cols");
    const json& data = field(j, "data");
    if (!data.is_array() || data.size() != rows) schema_fail("'data' must hold one row per row");
    la::IntMatrix m(rows, cols);
    for (index_t r = 0; r < rows; ++r) {
        const json& row = data[r];
        if (!row.is_array() || row.size() != cols) schema_fail("ragged or missized matrix row");
        for (index_t c = 0; c < cols; ++c) {
            if (!row[c].is_number_integer()) schema_fail("matrix entries must be integers");
            m.set(r, c, row[c].get<long long>());
        }
    }
    return m;
}

json to_json(const la::Environment& env) {
    json idx = json::object(), ring = json::object(), mat = json::object();
    for (const auto& [k, v] : env.indices()) idx[k] = v;
    for (const auto& [k, v] : env.rings()) ring[k] = v;
    for (const auto& [k, v] : env.matrices()) mat[k] = to_json(v);
    return json{{"index", std::move(idx)}, {"ring", std::move(ring)}, {"matrix", std::move(mat)}};
}

la::Environment environment_from_json(const json& j) {
    if (!j.is_object()) schema_fail("environment must be an object");
    la::Environment env;
    if (auto it = j.find("index"); it != j.end()) {
        for (const auto& [k, v] : it->items()) {
            if (!is_count(v)) schema_fail("index bindings must be naturals");
            env.set_index(k, static_cast<la::IndexValue>(v.get<long long>()));
        }
    }
    if (auto it = j.find("ring"); it != j.end()) {
        for (const auto& [k, v] : it->items()) {
            if (!v.is_number_integer()) schema_fail("ring bindings must be integers");
            env.set_ring(k, v.get<la::RingValue>());
        }
    }
    if (auto it = j.find("matrix"); it != j.end()) {
        for (const auto& [k, v] : it->items()) env.set_matrix(k, int_matrix_from_json(v));
    }
    return env;
}

} // namespace kmm
