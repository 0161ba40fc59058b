#include "locc/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace locc {

std::string ket_expr(const Ket& k) {
    std::string s = "|";
    bool first = true;
    for (const auto& [i, c] : k.amps) {
        if (c >= 0 && !first) s += "+";
        if (c == -1)
            s += "-";
        else if (c != 1)
            s += std::to_string(c);
        s += std::to_string(i);
        first = false;
    }
    return s + ">";
}

namespace {

bool is_interval(const std::vector<int>& sorted) {
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] != sorted[i - 1] + 1) return false;
    return true;
}

}  // namespace

Diagram layout(const StateSet& s) {
    Diagram d;
    d.n = s.n;
    d.m = s.m;
    int number = 0;
    for (const auto& st : s.states) {
        std::vector<int> sa = st.a.support();
        std::vector<int> sb = st.b.support();
        if (static_cast<int>(sa.size()) == s.n && static_cast<int>(sb.size()) == s.m) {
            d.stopper_omitted = true;
            d.stopper_expr = st.label + " = " + ket_expr(st.a) + "_A " + ket_expr(st.b) + "_B";
            continue;
        }
        Tile t;
        t.label = st.label;
        t.number = ++number;
        for (int a : sa)
            for (int b : sb) t.cells.insert({a, b});
        t.contiguous = is_interval(sa) && is_interval(sb);
        t.ket_expr = ket_expr(st.a) + "_A " + ket_expr(st.b) + "_B";
        d.tiles.push_back(std::move(t));
    }
    return d;
}

bool tiles_disjoint(const Diagram& d) {
    std::set<std::pair<int, int>> seen;
    for (const auto& t : d.tiles)
        for (const auto& c : t.cells)
            if (!seen.insert(c).second) return false;
    return true;
}

namespace {

std::string render_ascii(const Diagram& d) {
    // cell(a,b) -> tile numbers covering it
    std::map<std::pair<int, int>, std::vector<int>> cover;
    for (const auto& t : d.tiles)
        for (const auto& c : t.cells) cover[c].push_back(t.number);

    std::ostringstream out;
    out << "    ";
    for (int b = 1; b <= d.m; ++b) out << " B" << b << (b < 10 ? " " : "");
    out << "\n";
    std::string rule = "    +";
    for (int b = 1; b <= d.m; ++b) rule += "---+";
    out << rule << "\n";
    for (int a = 1; a <= d.n; ++a) {
        out << (a < 10 ? " A" : "A") << a << " |";
        for (int b = 1; b <= d.m; ++b) {
            auto it = cover.find({a, b});
            if (it == cover.end()) {
                out << "   |";
            } else if (it->second.size() > 1) {
                out << "## |";  // overlapping tiles share this cell
            } else {
                int num = it->second[0];
                if (num < 10)
                    out << " " << num << " |";
                else
                    out << num << " |";
            }
        }
        out << "\n" << rule << "\n";
    }
    out << "legend:\n";
    for (const auto& t : d.tiles) {
        out << "  " << t.number << " = " << t.label << ": " << t.ket_expr;
        if (!t.contiguous) out << "  (split cells)";
        out << "\n";
    }
    if (d.stopper_omitted) out << "  stopper omitted: " << d.stopper_expr << "\n";
    return out.str();
}

const char* kPalette[12] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                            "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

std::string render_svg(const Diagram& d) {
    const int cell = 40;
    const int left = cell, top = cell;
    const int legend_h = 18 * (static_cast<int>(d.tiles.size()) + (d.stopper_omitted ? 1 : 0)) + 24;
    const int width = left + d.m * cell + 20;
    const int height = top + d.n * cell + legend_h;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" shape-rendering=\"crispEdges\">\n";
    out << "<style>text{font-family:monospace;font-size:13px;}.axis{fill:#555;}.num{text-anchor:middle;"
           "dominant-baseline:central;}</style>\n";

    for (int b = 1; b <= d.m; ++b)
        out << "<text class=\"axis num\" x=\"" << left + (b - 1) * cell + cell / 2 << "\" y=\""
            << top - 12 << "\">" << b << "</text>\n";
    for (int a = 1; a <= d.n; ++a)
        out << "<text class=\"axis num\" x=\"" << left - 14 << "\" y=\""
            << top + (a - 1) * cell + cell / 2 << "\">" << a << "</text>\n";

    for (const auto& t : d.tiles) {
        const char* color = kPalette[(t.number - 1) % 12];
        for (const auto& [a, b] : t.cells)
            out << "<rect x=\"" << left + (b - 1) * cell << "\" y=\"" << top + (a - 1) * cell
                << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\"" << color
                << "\" stroke=\"#333\"/>\n";
    }
    // One number per connected run of cells (4-adjacency), so split tiles show
    // the shared number in each part.
    for (const auto& t : d.tiles) {
        std::set<std::pair<int, int>> todo = t.cells;
        while (!todo.empty()) {
            std::vector<std::pair<int, int>> comp{*todo.begin()};
            todo.erase(todo.begin());
            for (size_t i = 0; i < comp.size(); ++i) {
                auto [a, b] = comp[i];
                for (auto [da, db] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                    auto it = todo.find({a + da, b + db});
                    if (it != todo.end()) {
                        comp.push_back(*it);
                        todo.erase(it);
                    }
                }
            }
            auto anchor = *std::min_element(comp.begin(), comp.end());
            out << "<text class=\"num\" x=\"" << left + (anchor.second - 1) * cell + cell / 2
                << "\" y=\"" << top + (anchor.first - 1) * cell + cell / 2 << "\">" << t.number
                << "</text>\n";
        }
    }

    for (int b = 0; b <= d.m; ++b)
        out << "<line x1=\"" << left + b * cell << "\" y1=\"" << top << "\" x2=\"" << left + b * cell
            << "\" y2=\"" << top + d.n * cell << "\" stroke=\"#888\"/>\n";
    for (int a = 0; a <= d.n; ++a)
        out << "<line x1=\"" << left << "\" y1=\"" << top + a * cell << "\" x2=\"" << left + d.m * cell
            << "\" y2=\"" << top + a * cell << "\" stroke=\"#888\"/>\n";

    int ly = top + d.n * cell + 24;
    for (const auto& t : d.tiles) {
        out << "<text x=\"" << left << "\" y=\"" << ly << "\">" << t.number << " = " << t.label
            << ": " << t.ket_expr << (t.contiguous ? "" : "  (split cells)") << "</text>\n";
        ly += 18;
    }
    if (d.stopper_omitted) {
        out << "<text x=\"" << left << "\" y=\"" << ly << "\">stopper omitted: " << d.stopper_expr
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render(const Diagram& d, DiagramFormat format) {
    return format == DiagramFormat::ascii ? render_ascii(d) : render_svg(d);
}

}  // namespace locc
