#include "qglue/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qglue {

Quiver::Quiver(std::string name, std::vector<std::string> vertices, bool allows_loops)
    : name_(std::move(name)), vertices_(std::move(vertices)), allows_loops_(allows_loops) {
    std::vector<std::string> sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw std::invalid_argument("duplicate vertex '" + *dup + "'");
}

void Quiver::add_arrow(const std::string& name, const std::string& source, const std::string& target) {
    auto s = find_vertex(source);
    if (!s) throw std::invalid_argument("arrow '" + name + "': unknown vertex '" + source + "'");
    auto t = find_vertex(target);
    if (!t) throw std::invalid_argument("arrow '" + name + "': unknown vertex '" + target + "'");
    add_arrow(name, *s, *t);
}

void Quiver::add_arrow(const std::string& name, std::size_t source, std::size_t target) {
    if (source >= vertices_.size() || target >= vertices_.size()) {
        throw std::invalid_argument("arrow '" + name + "': vertex index out of range");
    }
    if (find_arrow(name)) throw std::invalid_argument("duplicate arrow '" + name + "'");
    if (source == target && !allows_loops_) {
        throw std::invalid_argument("arrow '" + name + "' is a loop but loops are not allowed");
    }
    arrows_.push_back({name, source, target});
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& v) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& a) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name == a) return i;
    return std::nullopt;
}

std::size_t Quiver::vertex_index(const std::string& v) const {
    auto i = find_vertex(v);
    if (!i) throw std::invalid_argument("unknown vertex '" + v + "'");
    return *i;
}

std::size_t Quiver::arrow_index(const std::string& a) const {
    auto i = find_arrow(a);
    if (!i) throw std::invalid_argument("unknown arrow '" + a + "'");
    return *i;
}

bool Quiver::has_loop_at(std::size_t q) const {
    return std::any_of(arrows_.begin(), arrows_.end(),
                       [q](const Arrow& a) { return a.source == q && a.target == q; });
}

bool Quiver::has_loops() const {
    return std::any_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.source == a.target; });
}

bool Quiver::has_oriented_cycle() const {
    std::vector<int> indeg(vertices_.size(), 0);
    for (const auto& a : arrows_) ++indeg[a.target];
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < indeg.size(); ++v)
        if (indeg[v] == 0) stack.push_back(v);
    std::size_t seen = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        ++seen;
        for (const auto& a : arrows_)
            if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
    }
    return seen != vertices_.size();
}

bool Quiver::is_connected() const {
    DimVector all(vertices_.size(), 1);
    return has_connected_support(*this, all);
}

std::string to_string(RootTag t) {
    switch (t) {
        case RootTag::real: return "real";
        case RootTag::imaginary: return "imaginary";
        default: return "not_root";
    }
}

namespace {

void check_size(const Quiver& q, const DimVector& a) {
    if (a.size() != q.vertex_count()) {
        throw std::invalid_argument("dimension vector " + to_string(a) + " has length " +
                                    std::to_string(a.size()) + ", quiver '" + q.name() + "' has " +
                                    std::to_string(q.vertex_count()) + " vertices");
    }
}

void check_loop_free(const Quiver& q, const char* what) {
    if (q.has_loops()) throw std::invalid_argument(std::string(what) + " is unsupported on quivers with loops");
}

}  // namespace

long euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
    check_size(q, a);
    check_size(q, b);
    long v = 0;
    for (std::size_t i = 0; i < a.size(); ++i) v += a[i] * b[i];
    for (const auto& r : q.arrows()) v -= a[r.source] * b[r.target];
    return v;
}

long symmetrized_form(const Quiver& q, const DimVector& a, const DimVector& b) {
    return euler_form(q, a, b) + euler_form(q, b, a);
}

DimVector reflect(const Quiver& q, std::size_t vertex, const DimVector& a) {
    check_size(q, a);
    if (vertex >= q.vertex_count()) throw std::invalid_argument("vertex index out of range");
    if (q.has_loop_at(vertex)) throw std::invalid_argument("reflection undefined at loop vertex");
    DimVector r = a;
    r[vertex] -= symmetrized_form(q, a, unit_vector(q, vertex));
    return r;
}

bool has_connected_support(const Quiver& q, const DimVector& a) {
    check_size(q, a);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) support.push_back(i);
    if (support.empty()) return false;
    std::vector<bool> seen(a.size(), false);
    std::vector<std::size_t> stack = {support.front()};
    seen[support.front()] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& r : q.arrows()) {
            for (auto [x, y] : {std::pair{r.source, r.target}, std::pair{r.target, r.source}}) {
                if (x == v && a[y] != 0 && !seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
    }
    return std::all_of(support.begin(), support.end(), [&](std::size_t v) { return seen[v]; });
}

bool in_fundamental_domain(const Quiver& q, const DimVector& a) {
    if (!has_connected_support(q, a)) return false;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        if (symmetrized_form(q, a, unit_vector(q, v)) > 0) return false;
    return true;
}

RootClass classify_root(const Quiver& q, const DimVector& a) {
    check_size(q, a);
    check_loop_free(q, "root classification");
    if (std::any_of(a.begin(), a.end(), [](long x) { return x < 0; }) ||
        std::all_of(a.begin(), a.end(), [](long x) { return x == 0; })) {
        throw std::invalid_argument("classify_root needs a nonzero non-negative vector");
    }
    RootClass rc;
    DimVector cur = a;
    for (;;) {
        if (total_dimension(cur) == 1) {
            rc.tag = RootTag::real;
            break;
        }
        std::optional<std::size_t> pivot;
        for (std::size_t v = 0; v < q.vertex_count() && !pivot; ++v)
            if (symmetrized_form(q, cur, unit_vector(q, v)) > 0) pivot = v;
        if (!pivot) {
            rc.tag = has_connected_support(q, cur) ? RootTag::imaginary : RootTag::not_root;
            break;
        }
        DimVector next = reflect(q, *pivot, cur);
        if (next[*pivot] < 0) {
            rc.tag = RootTag::not_root;
            break;
        }
        rc.word.push_back(*pivot);
        cur = std::move(next);
    }
    rc.terminal = cur;
    return rc;
}

Quiver opposite(const Quiver& q) {
    const std::string& n = q.name();
    bool is_op = n.size() > 3 && n.compare(n.size() - 3, 3, "_op") == 0;
    Quiver o(is_op ? n.substr(0, n.size() - 3) : n + "_op", q.vertices(), q.allows_loops());
    for (const auto& r : q.arrows()) o.add_arrow(r.name, r.target, r.source);
    return o;
}

DimVector unit_vector(const Quiver& q, std::size_t vertex) {
    DimVector e(q.vertex_count(), 0);
    e.at(vertex) = 1;
    return e;
}

long total_dimension(const DimVector& a) {
    return std::accumulate(a.begin(), a.end(), 0L);
}

DimVector operator+(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension vector length mismatch");
    DimVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

DimVector operator-(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension vector length mismatch");
    DimVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

DimVector operator*(long k, const DimVector& a) {
    DimVector c = a;
    for (auto& x : c) x *= k;
    return c;
}

std::string to_string(const DimVector& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a[i]);
    }
    return s + ")";
}

DimVector parse_dim_vector(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') {
        throw std::invalid_argument("dimension vector must be a parenthesized tuple: '" + text + "'");
    }
    DimVector v;
    std::string body = t.substr(1, t.size() - 2);
    if (body.empty()) return v;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long x = 0;
        try {
            x = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) {
            throw std::invalid_argument("bad dimension vector entry '" + item + "' in '" + text + "'");
        }
        v.push_back(x);
    }
    if (body.back() == ',') throw std::invalid_argument("trailing comma in '" + text + "'");
    return v;
}

Quiver kronecker_quiver(std::size_t arrows) {
    Quiver q("K" + std::to_string(arrows), {"q1", "q2"});
    static const char* names[] = {"a", "b", "c", "d", "e", "f"};
    for (std::size_t i = 0; i < arrows; ++i) {
        q.add_arrow(i < 6 ? std::string(names[i]) : "a" + std::to_string(i + 1), 0, 1);
    }
    return q;
}

Quiver subspace_quiver(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i <= n; ++i) v.push_back("q" + std::to_string(i));
    Quiver q("sub" + std::to_string(n), v);
    for (std::size_t i = 1; i <= n; ++i) q.add_arrow("r" + std::to_string(i), i, 0);
    return q;
}

Quiver loop_quiver(std::size_t loops) {
    Quiver q("L" + std::to_string(loops), {"m"}, true);
    for (std::size_t i = 1; i <= loops; ++i) q.add_arrow("l" + std::to_string(i), 0, 0);
    return q;
}

Quiver extended_subspace_quiver() {
    Quiver q("ext9", {"q0", "q1", "q2", "q3", "q4", "q5", "q6", "q7", "q8"});
    for (std::size_t i = 1; i <= 5; ++i) q.add_arrow("r" + std::to_string(i), i, 0);
    q.add_arrow("s", 6, 2);
    q.add_arrow("t", 7, 6);
    q.add_arrow("u1", 8, 6);
    q.add_arrow("u2", 8, 6);
    return q;
}

}  // namespace qglue
