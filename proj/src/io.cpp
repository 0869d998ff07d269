#include "qglue/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <fstream>
#include <sstream>

namespace qglue {

namespace {

struct Line {
    int no;
    std::vector<std::string> tok;
};

struct Block {
    std::string kind;
    std::string origin;
    std::vector<Line> lines;
    bool has_quiver_ref = false;
};

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw ParseError(origin + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

bool is_numeric_row(const Line& l) {
    const std::string& t = l.tok.front();
    return std::isdigit(static_cast<unsigned char>(t[0])) || t[0] == '-' || t[0] == '+';
}

std::vector<Block> split_blocks(const std::string& text, const std::string& origin) {
    std::vector<Block> blocks;
    std::istringstream is(text);
    std::string raw;
    int no = 0;
    while (std::getline(is, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto tok = tokenize(raw);
        if (tok.empty()) continue;
        const std::string& k = tok[0];
        Line line{no, tok};
        bool start = false;
        if (k == "rep" || k == "morphism" || k == "fragment" || k == "extbasis") {
            start = true;
        } else if (k == "quiver") {
            if (blocks.empty()) start = true;
            else {
                Block& cur = blocks.back();
                bool needs_ref = (cur.kind == "rep" || cur.kind == "fragment") && !cur.has_quiver_ref;
                if (needs_ref) {
                    cur.has_quiver_ref = true;
                    cur.lines.push_back(line);
                    continue;
                }
                start = true;
            }
        }
        if (start) {
            if (k == "extbasis" && !blocks.empty() && blocks.back().kind == "extbasis") {
                blocks.back().lines.push_back(line);
                continue;
            }
            blocks.push_back({k, origin, {line}, false});
            continue;
        }
        if (blocks.empty()) fail(origin, no, "expected a 'quiver', 'rep', 'morphism' or 'fragment' header, got '" + k + "'");
        blocks.back().lines.push_back(line);
    }
    return blocks;
}

Field parse_field(const Block& b, const Line& l, std::size_t at) {
    // "... over Q" or "... over F p"
    if (l.tok.size() <= at || l.tok[at] != "over") fail(b.origin, l.no, "expected 'over Q' or 'over F <p>'");
    if (l.tok.size() == at + 2 && l.tok[at + 1] == "Q") return Field::rationals();
    if (l.tok.size() == at + 3 && l.tok[at + 1] == "F") {
        try {
            return Field::prime(std::stoull(l.tok[at + 2]));
        } catch (const std::exception& e) {
            fail(b.origin, l.no, std::string("bad prime field: ") + e.what());
        }
    }
    fail(b.origin, l.no, "expected 'over Q' or 'over F <p>'");
}

std::pair<std::size_t, std::size_t> parse_shape(const Block& b, const Line& l, const std::string& s) {
    auto x = s.find('x');
    try {
        if (x != std::string::npos) {
            std::size_t u1 = 0, u2 = 0;
            long r = std::stol(s.substr(0, x), &u1);
            long c = std::stol(s.substr(x + 1), &u2);
            if (u1 == x && u2 == s.size() - x - 1 && r >= 0 && c >= 0) return {r, c};
        }
    } catch (const std::exception&) {
    }
    fail(b.origin, l.no, "bad matrix shape '" + s + "', expected <rows>x<cols>");
}

std::size_t parse_nat(const Block& b, const Line& l, const std::string& s) {
    std::size_t used = 0;
    long v = -1;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
    }
    if (used != s.size() || v < 0) fail(b.origin, l.no, "expected a non-negative integer, got '" + s + "'");
    return static_cast<std::size_t>(v);
}

// Reads rows x cols entries from the lines following index i (which is advanced); empty shapes have no lines.
Matrix read_matrix(const Block& b, std::size_t& i, const Field& f, std::size_t rows, std::size_t cols,
                   const std::string& what) {
    Matrix m(f, rows, cols);
    if (m.empty()) return m;
    const Line& head = b.lines[i];
    for (std::size_t r = 0; r < rows; ++r) {
        ++i;
        if (i >= b.lines.size() || !is_numeric_row(b.lines[i])) {
            fail(b.origin, i < b.lines.size() ? b.lines[i].no : head.no,
                 what + " declared " + std::to_string(rows) + "x" + std::to_string(cols) + " but has only " +
                     std::to_string(r) + " rows");
        }
        const Line& l = b.lines[i];
        if (l.tok.size() != cols) {
            fail(b.origin, l.no, what + " row " + std::to_string(r + 1) + " has " + std::to_string(l.tok.size()) +
                                     " entries, expected " + std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            try {
                m.set(r, c, Scalar::parse(f, l.tok[c]));
            } catch (const std::exception& e) {
                fail(b.origin, l.no, what + ": " + e.what());
            }
        }
    }
    return m;
}

void reject_stray_row(const Block& b, const Line& l, const std::string& last) {
    if (is_numeric_row(l)) {
        fail(b.origin, l.no, "unexpected matrix row" + (last.empty() ? std::string() : " after " + last));
    }
}

Quiver build_quiver(const Block& b) {
    const Line& h = b.lines.front();
    if (h.tok.size() != 2) fail(b.origin, h.no, "expected 'quiver <name>'");
    std::vector<std::string> vertices;
    std::vector<const Line*> arrows;
    bool loops = false;
    for (std::size_t i = 1; i < b.lines.size(); ++i) {
        const Line& l = b.lines[i];
        const std::string& k = l.tok[0];
        if (k == "vertex") {
            if (l.tok.size() != 2) fail(b.origin, l.no, "expected 'vertex <id>'");
            vertices.push_back(l.tok[1]);
        } else if (k == "arrow") {
            if (l.tok.size() != 4) fail(b.origin, l.no, "expected 'arrow <id> <src> <dst>'");
            arrows.push_back(&l);
        } else if (k == "allows_loops") {
            loops = true;
        } else {
            fail(b.origin, l.no, "unknown quiver directive '" + k + "'");
        }
    }
    Quiver q;
    try {
        q = Quiver(h.tok[1], vertices, loops);
    } catch (const std::exception& e) {
        fail(b.origin, h.no, e.what());
    }
    for (const Line* l : arrows) {
        try {
            q.add_arrow(l->tok[1], l->tok[2], l->tok[3]);
        } catch (const std::exception& e) {
            fail(b.origin, l->no, e.what());
        }
    }
    return q;
}

// Shared by rep and fragment blocks: dims and maps over a given quiver.
Representation read_rep_body(const Block& b, const Quiver& q, const Field& f, std::size_t first,
                             const std::vector<std::string>& skip) {
    DimVector dims(q.vertex_count(), -1);
    std::vector<std::optional<Matrix>> maps(q.arrow_count());
    std::vector<int> map_line(q.arrow_count(), 0);
    std::string last;
    for (std::size_t i = first; i < b.lines.size(); ++i) {
        const Line& l = b.lines[i];
        const std::string& k = l.tok[0];
        reject_stray_row(b, l, last);
        last.clear();
        if (std::find(skip.begin(), skip.end(), k) != skip.end()) continue;
        if (k == "dim") {
            if (l.tok.size() != 3) fail(b.origin, l.no, "expected 'dim <vertex> <nat>'");
            auto v = q.find_vertex(l.tok[1]);
            if (!v) fail(b.origin, l.no, "unknown vertex '" + l.tok[1] + "'");
            if (dims[*v] >= 0) fail(b.origin, l.no, "duplicate dim for vertex '" + l.tok[1] + "'");
            dims[*v] = static_cast<long>(parse_nat(b, l, l.tok[2]));
        } else if (k == "map") {
            if (l.tok.size() != 3) fail(b.origin, l.no, "expected 'map <arrow> <rows>x<cols>'");
            auto a = q.find_arrow(l.tok[1]);
            if (!a) fail(b.origin, l.no, "unknown arrow '" + l.tok[1] + "'");
            if (maps[*a]) fail(b.origin, l.no, "duplicate map for arrow '" + l.tok[1] + "'");
            auto [rows, cols] = parse_shape(b, l, l.tok[2]);
            map_line[*a] = l.no;
            maps[*a] = read_matrix(b, i, f, rows, cols, "map '" + l.tok[1] + "'");
            last = "map '" + l.tok[1] + "' (declared " + l.tok[2] + ")";
        } else {
            fail(b.origin, l.no, "unknown directive '" + k + "'");
        }
    }
    for (std::size_t v = 0; v < dims.size(); ++v)
        if (dims[v] < 0) fail(b.origin, b.lines.front().no, "missing dim for vertex '" + q.vertex(v) + "'");
    Representation r(q, f, dims);
    for (std::size_t a = 0; a < maps.size(); ++a) {
        if (!maps[a]) continue;
        const Arrow& ar = q.arrow(a);
        if (maps[a]->rows() != r.dim(ar.target) || maps[a]->cols() != r.dim(ar.source)) {
            fail(b.origin, map_line[a], "map '" + ar.name + "' must be " + std::to_string(r.dim(ar.target)) + "x" +
                                            std::to_string(r.dim(ar.source)) + " (target dim x source dim), got " +
                                            std::to_string(maps[a]->rows()) + "x" + std::to_string(maps[a]->cols()));
        }
        r.set_map(a, *maps[a]);
    }
    return r;
}

Representation build_rep(const Block& b, const Workspace& ws, const Quiver* given, std::string& name) {
    const Line& h = b.lines.front();
    if (h.tok.size() < 2) fail(b.origin, h.no, "expected 'rep <name> over Q|F <p>'");
    name = h.tok[1];
    Field f = parse_field(b, h, 2);
    const Quiver* q = given;
    Quiver found;
    for (const auto& l : b.lines) {
        if (l.tok[0] == "quiver") {
            if (l.tok.size() != 2) fail(b.origin, l.no, "expected 'quiver <name>'");
            if (!given) {
                try {
                    found = ws.quiver(l.tok[1]);
                } catch (const std::exception& e) {
                    fail(b.origin, l.no, e.what());
                }
                q = &found;
            } else if (given->name() != l.tok[1]) {
                fail(b.origin, l.no, "rep refers to quiver '" + l.tok[1] + "' but '" + given->name() + "' was supplied");
            }
        }
    }
    if (!q) fail(b.origin, h.no, "rep '" + name + "' does not name its quiver");
    Representation r = read_rep_body(b, *q, f, 1, {"quiver"});
    r.set_name(name);
    return r;
}

NamedMorphism build_morphism(const Block& b, const Workspace& ws) {
    const Line& h = b.lines.front();
    if (h.tok.size() < 2) fail(b.origin, h.no, "expected 'morphism <name> over Q|F <p>'");
    NamedMorphism m;
    m.name = h.tok[1];
    m.field = parse_field(b, h, 2);
    for (const auto& l : b.lines) {
        if ((l.tok[0] == "source" || l.tok[0] == "target") && l.tok.size() == 2) {
            (l.tok[0] == "source" ? m.source : m.target) = l.tok[1];
        }
    }
    if (m.source.empty() || m.target.empty()) fail(b.origin, h.no, "morphism needs 'source' and 'target' lines");
    const Representation* x = nullptr;
    const Representation* y = nullptr;
    try {
        x = &ws.rep(m.source);
        y = &ws.rep(m.target);
    } catch (const std::exception& e) {
        fail(b.origin, h.no, e.what());
    }
    const Quiver& q = x->quiver();
    m.morphism = zero_morphism(*x, *y);
    std::string last;
    for (std::size_t i = 1; i < b.lines.size(); ++i) {
        const Line& l = b.lines[i];
        reject_stray_row(b, l, last);
        last.clear();
        const std::string& k = l.tok[0];
        if (k == "source" || k == "target") continue;
        if (k != "block" || l.tok.size() != 3) fail(b.origin, l.no, "expected 'block <vertex> <rows>x<cols>'");
        auto v = q.find_vertex(l.tok[1]);
        if (!v) fail(b.origin, l.no, "unknown vertex '" + l.tok[1] + "'");
        auto [rows, cols] = parse_shape(b, l, l.tok[2]);
        if (rows != y->dim(*v) || cols != x->dim(*v)) {
            fail(b.origin, l.no, "block '" + l.tok[1] + "' must be " + std::to_string(y->dim(*v)) + "x" +
                                     std::to_string(x->dim(*v)));
        }
        m.morphism.blocks[*v] = read_matrix(b, i, m.field, rows, cols, "block '" + l.tok[1] + "'");
        last = "block '" + l.tok[1] + "' (declared " + l.tok[2] + ")";
    }
    if (!is_morphism(*x, *y, m.morphism)) {
        fail(b.origin, h.no, "morphism '" + m.name + "' violates the intertwining law");
    }
    return m;
}

CoverFragment build_fragment(const Block& b, const Workspace& ws) {
    const Line& h = b.lines.front();
    if (h.tok.size() < 2) fail(b.origin, h.no, "expected 'fragment <name> over Q|F <p>'");
    CoverFragment fr;
    fr.name = h.tok[1];
    Field f = parse_field(b, h, 2);
    std::vector<std::string> vids;
    for (const auto& l : b.lines) {
        const std::string& k = l.tok[0];
        if (k == "quiver") {
            if (l.tok.size() != 2) fail(b.origin, l.no, "expected 'quiver <name>'");
            try {
                fr.base = ws.quiver(l.tok[1]);
            } catch (const std::exception& e) {
                fail(b.origin, l.no, e.what());
            }
        } else if (k == "vertex") {
            if (l.tok.size() != 5 || l.tok[2] != "label") fail(b.origin, l.no, "expected 'vertex <id> label <q> <w>'");
            fr.vertices.push_back({l.tok[1], l.tok[3], l.tok[4]});
            vids.push_back(l.tok[1]);
        } else if (k == "arrow") {
            if (l.tok.size() != 6 || l.tok[4] != "label") {
                fail(b.origin, l.no, "expected 'arrow <id> <src> <dst> label <arrow>'");
            }
            fr.arrows.push_back({l.tok[1], l.tok[2], l.tok[3], l.tok[5]});
        }
    }
    if (fr.base.vertex_count() == 0) fail(b.origin, h.no, "fragment '" + fr.name + "' does not name its quiver");
    Quiver fq(fr.name, vids);
    for (const auto& l : b.lines) {
        if (l.tok[0] != "arrow") continue;
        try {
            fq.add_arrow(l.tok[1], l.tok[2], l.tok[3]);
        } catch (const std::exception& e) {
            fail(b.origin, l.no, e.what());
        }
    }
    fr.rep = read_rep_body(b, fq, f, 1, {"quiver", "vertex", "arrow"});
    fr.rep.set_name(fr.name);
    return fr;
}

const Block& only_block(const std::vector<Block>& blocks, const std::string& kind) {
    if (blocks.size() != 1 || blocks.front().kind != kind) {
        throw ParseError("expected exactly one '" + kind + "' block");
    }
    return blocks.front();
}

}  // namespace

void Workspace::add_rep(const std::string& name, const Representation& r) {
    if (!reps_.count(name)) rep_order_.push_back(name);
    reps_[name] = r;
    reps_[name].set_name(name);
}

void Workspace::load_text(const std::string& text, const std::string& origin) {
    for (const Block& b : split_blocks(text, origin)) {
        if (b.kind == "quiver") {
            Quiver q = build_quiver(b);
            if (quivers_.count(q.name())) fail(origin, b.lines.front().no, "duplicate quiver '" + q.name() + "'");
            quivers_[q.name()] = q;
        } else if (b.kind == "rep") {
            std::string name;
            Representation r = build_rep(b, *this, nullptr, name);
            if (reps_.count(name)) fail(origin, b.lines.front().no, "duplicate rep '" + name + "'");
            add_rep(name, r);
        } else if (b.kind == "morphism") {
            NamedMorphism m = build_morphism(b, *this);
            morphisms_[m.name] = m;
        } else if (b.kind == "fragment") {
            CoverFragment fr = build_fragment(b, *this);
            fragments_[fr.name] = fr;
        } else if (b.kind == "extbasis") {
            for (const auto& l : b.lines) {
                if (l.tok.size() != 7) fail(origin, l.no, "expected 'extbasis <i> <j> <l> <arrow> <row> <col>'");
                BasisLine bl{parse_nat(b, l, l.tok[1]), parse_nat(b, l, l.tok[2]), parse_nat(b, l, l.tok[3]),
                             l.tok[4], parse_nat(b, l, l.tok[5]), parse_nat(b, l, l.tok[6])};
                if (bl.i == 0 || bl.j == 0 || bl.l == 0 || bl.row == 0 || bl.col == 0) {
                    fail(origin, l.no, "extbasis indices are 1-based");
                }
                bases_.push_back(bl);
            }
        }
    }
}

void Workspace::load_file(const std::string& path) {
    load_text(read_file(path), path);
}

const Quiver& Workspace::quiver(const std::string& name) const {
    auto it = quivers_.find(name);
    if (it == quivers_.end()) throw std::invalid_argument("unknown quiver '" + name + "'");
    return it->second;
}

const Representation& Workspace::rep(const std::string& name) const {
    auto it = reps_.find(name);
    if (it == reps_.end()) throw std::invalid_argument("unknown rep '" + name + "'");
    return it->second;
}

const NamedMorphism& Workspace::morphism(const std::string& name) const {
    auto it = morphisms_.find(name);
    if (it == morphisms_.end()) throw std::invalid_argument("unknown morphism '" + name + "'");
    return it->second;
}

const CoverFragment& Workspace::fragment(const std::string& name) const {
    auto it = fragments_.find(name);
    if (it == fragments_.end()) throw std::invalid_argument("unknown fragment '" + name + "'");
    return it->second;
}

const Quiver& Workspace::single_quiver() const {
    if (quivers_.size() != 1) throw std::invalid_argument("expected exactly one quiver to be loaded");
    return quivers_.begin()->second;
}

Quiver parse_quiver(const std::string& text) {
    return build_quiver(only_block(split_blocks(text, "<quiver>"), "quiver"));
}

Representation parse_rep(const std::string& text, const Workspace& ws) {
    std::string name;
    return build_rep(only_block(split_blocks(text, "<rep>"), "rep"), ws, nullptr, name);
}

Representation parse_rep(const std::string& text, const Quiver& q) {
    std::string name;
    Workspace ws;
    return build_rep(only_block(split_blocks(text, "<rep>"), "rep"), ws, &q, name);
}

NamedMorphism parse_morphism(const std::string& text, const Workspace& ws) {
    return build_morphism(only_block(split_blocks(text, "<morphism>"), "morphism"), ws);
}

std::vector<BasisLine> parse_bases(const std::string& text) {
    Workspace ws;
    ws.load_text(text, "<bases>");
    return ws.bases();
}

std::vector<ExtBasisElement> to_ext_basis(const std::vector<BasisLine>& lines, const Quiver& q) {
    std::vector<ExtBasisElement> out;
    for (const auto& b : lines) {
        auto a = q.find_arrow(b.arrow);
        if (!a) throw ParseError("extbasis refers to unknown arrow '" + b.arrow + "'");
        out.push_back({b.i - 1, b.j - 1, b.l - 1, *a, b.row - 1, b.col - 1});
    }
    return out;
}

namespace {

void print_matrix_rows(std::ostream& os, const Matrix& m) {
    if (m.empty()) return;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j).to_string();
        os << '\n';
    }
}

std::string field_suffix(const Field& f) {
    return f.is_rational() ? "over Q" : "over F " + std::to_string(f.modulus());
}

}  // namespace

std::string print_quiver(const Quiver& q) {
    std::ostringstream os;
    os << "quiver " << q.name() << '\n';
    if (q.allows_loops()) os << "allows_loops\n";
    for (const auto& v : q.vertices()) os << "vertex " << v << '\n';
    for (const auto& a : q.arrows()) os << "arrow " << a.name << ' ' << q.vertex(a.source) << ' ' << q.vertex(a.target) << '\n';
    return os.str();
}

std::string print_rep(const Representation& r, const std::string& name) {
    std::ostringstream os;
    std::string n = !name.empty() ? name : (!r.name().empty() ? r.name() : "X");
    os << "rep " << n << ' ' << field_suffix(r.field()) << '\n';
    os << "quiver " << r.quiver().name() << '\n';
    for (std::size_t v = 0; v < r.quiver().vertex_count(); ++v) os << "dim " << r.quiver().vertex(v) << ' ' << r.dim(v) << '\n';
    for (std::size_t i = 0; i < r.quiver().arrow_count(); ++i) {
        const Matrix& m = r.map(i);
        os << "map " << r.quiver().arrow(i).name << ' ' << m.rows() << 'x' << m.cols() << '\n';
        print_matrix_rows(os, m);
    }
    return os.str();
}

std::string print_morphism(const Morphism& f, const Representation& source, const Representation& target,
                           const std::string& name, const std::string& source_name, const std::string& target_name) {
    std::ostringstream os;
    os << "morphism " << name << ' ' << field_suffix(source.field()) << '\n';
    os << "source " << source_name << '\n' << "target " << target_name << '\n';
    for (std::size_t v = 0; v < source.quiver().vertex_count(); ++v) {
        const Matrix& m = f.blocks.at(v);
        os << "block " << source.quiver().vertex(v) << ' ' << target.dim(v) << 'x' << source.dim(v) << '\n';
        print_matrix_rows(os, m);
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace qglue
