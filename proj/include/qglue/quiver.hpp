#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qglue {

using DimVector = std::vector<long>;

struct Arrow {
    std::string name;
    std::size_t source;
    std::size_t target;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::string name, std::vector<std::string> vertices, bool allows_loops = false);

    // Arrows are validated as they are added.
    void add_arrow(const std::string& name, const std::string& source, const std::string& target);
    void add_arrow(const std::string& name, std::size_t source, std::size_t target);
    void set_allows_loops(bool v) { allows_loops_ = v; }

    const std::string& name() const { return name_; }
    void rename(std::string n) { name_ = std::move(n); }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::string& vertex(std::size_t i) const { return vertices_.at(i); }
    const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }
    std::optional<std::size_t> find_vertex(const std::string& v) const;
    std::optional<std::size_t> find_arrow(const std::string& a) const;
    std::size_t vertex_index(const std::string& v) const;
    std::size_t arrow_index(const std::string& a) const;

    bool allows_loops() const { return allows_loops_; }
    bool has_loop_at(std::size_t q) const;
    bool has_loops() const;
    bool has_oriented_cycle() const;
    bool is_connected() const;

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    bool allows_loops_ = false;
};

enum class RootTag { real, imaginary, not_root };

struct RootClass {
    RootTag tag = RootTag::not_root;
    std::vector<std::size_t> word;  // vertices reflected at, in order
    DimVector terminal;
};

std::string to_string(RootTag t);

long euler_form(const Quiver& q, const DimVector& a, const DimVector& b);
long symmetrized_form(const Quiver& q, const DimVector& a, const DimVector& b);
DimVector reflect(const Quiver& q, std::size_t vertex, const DimVector& a);
RootClass classify_root(const Quiver& q, const DimVector& a);
bool in_fundamental_domain(const Quiver& q, const DimVector& a);
bool has_connected_support(const Quiver& q, const DimVector& a);
Quiver opposite(const Quiver& q);

DimVector unit_vector(const Quiver& q, std::size_t vertex);
long total_dimension(const DimVector& a);
DimVector operator+(const DimVector& a, const DimVector& b);
DimVector operator-(const DimVector& a, const DimVector& b);
DimVector operator*(long k, const DimVector& a);
std::string to_string(const DimVector& a);
// Parses "(1,2,0)"; whitespace is ignored.
DimVector parse_dim_vector(const std::string& text);

Quiver kronecker_quiver(std::size_t arrows);
// Vertices q0..qn with arrows r_i : q_i -> q0.
Quiver subspace_quiver(std::size_t n);
Quiver loop_quiver(std::size_t loops);
// The nine-vertex quiver extending the 5-subspace quiver by q6, q7, q8.
Quiver extended_subspace_quiver();

}  // namespace qglue
