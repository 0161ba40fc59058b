#include "locc/states.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace locc {

Ket::Ket(int dim_, std::vector<std::pair<int, long long>> amps_) : dim(dim_), amps(std::move(amps_)) {
    if (dim <= 0) throw invalid_state("ket dimension must be positive");
    if (amps.empty()) throw invalid_state("ket must have at least one amplitude");
    int prev = 0;
    for (const auto& [idx, coeff] : amps) {
        if (idx <= prev) throw invalid_state("ket indices must be strictly increasing");
        if (idx > dim) throw invalid_state("ket index exceeds dimension");
        if (coeff == 0) throw invalid_state("ket coefficients must be nonzero");
        prev = idx;
    }
}

Ket Ket::basis(int dim, int i) { return Ket(dim, {{i, 1}}); }

Ket Ket::super(int dim, std::initializer_list<std::pair<int, int>> terms) {
    std::vector<std::pair<int, long long>> v;
    for (const auto& [i, c] : terms) v.emplace_back(i, c);
    std::sort(v.begin(), v.end());
    return Ket(dim, std::move(v));
}

Ket Ket::super(int dim, const std::vector<std::pair<int, long long>>& terms) {
    auto v = terms;
    std::sort(v.begin(), v.end());
    return Ket(dim, std::move(v));
}

Ket Ket::alternating(int dim) {
    std::vector<std::pair<int, long long>> v;
    for (int i = 1; i <= dim; ++i) v.emplace_back(i, (i % 2 == 1) ? 1 : -1);
    return Ket(dim, std::move(v));
}

std::vector<int> Ket::support() const {
    std::vector<int> s;
    for (const auto& [i, c] : amps) s.push_back(i);
    return s;
}

Vec Ket::dense() const {
    Vec v(dim);
    for (const auto& [i, c] : amps) v[i - 1] = Rational(c);
    return v;
}

int128 dot(const Ket& a, const Ket& b) {
    if (a.dim != b.dim) throw dimension_error("ket dot: dimension mismatch");
    int128 s = 0;
    size_t i = 0, j = 0;
    while (i < a.amps.size() && j < b.amps.size()) {
        if (a.amps[i].first < b.amps[j].first) {
            ++i;
        } else if (a.amps[i].first > b.amps[j].first) {
            ++j;
        } else {
            s = checked_add(s, checked_mul(a.amps[i].second, b.amps[j].second));
            ++i;
            ++j;
        }
    }
    return s;
}

const ProductState* StateSet::find(const std::string& label) const {
    for (const auto& st : states)
        if (st.label == label) return &st;
    return nullptr;
}

StateSet StateSet::without(const std::string& label) const {
    StateSet out{n, m, family_tag, {}};
    for (const auto& st : states)
        if (st.label != label) out.states.push_back(st);
    return out;
}

Rational inner_product(const ProductState& x, const ProductState& y) {
    int128 da = dot(x.a, y.a);
    if (da == 0) return Rational(0);
    return Rational(checked_mul(da, dot(x.b, y.b)), 1);
}

std::vector<std::pair<std::string, std::string>> verify_orthogonality(const StateSet& s) {
    std::vector<std::pair<std::string, std::string>> bad;
    for (size_t i = 0; i < s.states.size(); ++i)
        for (size_t j = i + 1; j < s.states.size(); ++j)
            if (!inner_product(s.states[i], s.states[j]).is_zero())
                bad.emplace_back(s.states[i].label, s.states[j].label);
    return bad;
}

void validate_state_set(const StateSet& s) {
    std::set<std::string> labels;
    for (const auto& st : s.states) {
        if (st.a.dim != s.n || st.b.dim != s.m)
            throw invalid_state("state " + st.label + " has wrong local dimensions");
        if (!labels.insert(st.label).second) throw invalid_state("duplicate label " + st.label);
    }
}

std::string state_set_to_json(const StateSet& s) {
    nlohmann::ordered_json j;
    j["n"] = s.n;
    j["m"] = s.m;
    j["family"] = s.family_tag;
    j["states"] = nlohmann::ordered_json::array();
    for (const auto& st : s.states) {
        nlohmann::ordered_json e;
        e["label"] = st.label;
        auto amps = [](const Ket& k) {
            nlohmann::ordered_json a = nlohmann::ordered_json::array();
            for (const auto& [i, c] : k.amps) a.push_back({i, c});
            return a;
        };
        e["a"] = amps(st.a);
        e["b"] = amps(st.b);
        j["states"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

StateSet state_set_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    StateSet s;
    s.n = j.at("n").get<int>();
    s.m = j.at("m").get<int>();
    s.family_tag = j.value("family", std::string("custom"));
    auto ket_of = [](const nlohmann::json& arr, int dim) {
        std::vector<std::pair<int, long long>> amps;
        for (const auto& t : arr) amps.emplace_back(t.at(0).get<int>(), t.at(1).get<long long>());
        std::sort(amps.begin(), amps.end());
        return Ket(dim, std::move(amps));
    };
    for (const auto& e : j.at("states")) {
        ProductState st;
        st.label = e.at("label").get<std::string>();
        st.a = ket_of(e.at("a"), s.n);
        st.b = ket_of(e.at("b"), s.m);
        s.states.push_back(std::move(st));
    }
    validate_state_set(s);
    return s;
}

}  // namespace locc
