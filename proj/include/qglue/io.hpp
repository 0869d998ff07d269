#pragma once

#include "qglue/gluing.hpp"
#include "qglue/representation.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qglue {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NamedMorphism {
    std::string name;
    std::string source;
    std::string target;
    Field field;
    Morphism morphism;
};

struct FragmentVertex {
    std::string id;
    std::string base_vertex;
    std::string word;
};

struct FragmentArrow {
    std::string id;
    std::string source;
    std::string target;
    std::string base_arrow;
};

// A finite piece of the universal cover: labelled vertices and arrows plus a representation on it.
struct CoverFragment {
    std::string name;
    Quiver base;
    std::vector<FragmentVertex> vertices;
    std::vector<FragmentArrow> arrows;
    Representation rep;  // representation of the fragment quiver itself
};

// Tree-shaped Ext basis coordinates as read from a bases file (all indices 1-based in the file).
struct BasisLine {
    std::size_t i, j, l;
    std::string arrow;
    std::size_t row, col;
};

class Workspace {
public:
    void load_text(const std::string& text, const std::string& origin = "<text>");
    void load_file(const std::string& path);

    void add_quiver(const Quiver& q) { quivers_[q.name()] = q; }
    void add_rep(const std::string& name, const Representation& r);

    const Quiver& quiver(const std::string& name) const;
    const Representation& rep(const std::string& name) const;
    const NamedMorphism& morphism(const std::string& name) const;
    const CoverFragment& fragment(const std::string& name) const;

    const std::map<std::string, Quiver>& quivers() const { return quivers_; }
    const std::map<std::string, Representation>& reps() const { return reps_; }
    const std::vector<std::string>& rep_order() const { return rep_order_; }
    const std::map<std::string, NamedMorphism>& morphisms() const { return morphisms_; }
    const std::map<std::string, CoverFragment>& fragments() const { return fragments_; }
    const std::vector<BasisLine>& bases() const { return bases_; }

    // The only quiver / rep loaded, for commands that accept a single file.
    const Quiver& single_quiver() const;

private:
    std::map<std::string, Quiver> quivers_;
    std::map<std::string, Representation> reps_;
    std::vector<std::string> rep_order_;
    std::map<std::string, NamedMorphism> morphisms_;
    std::map<std::string, CoverFragment> fragments_;
    std::vector<BasisLine> bases_;
};

Quiver parse_quiver(const std::string& text);
Representation parse_rep(const std::string& text, const Workspace& ws);
Representation parse_rep(const std::string& text, const Quiver& q);
NamedMorphism parse_morphism(const std::string& text, const Workspace& ws);
std::vector<BasisLine> parse_bases(const std::string& text);
// Converts to 0-based elements, resolving arrow names against q.
std::vector<ExtBasisElement> to_ext_basis(const std::vector<BasisLine>& lines, const Quiver& q);

std::string print_quiver(const Quiver& q);
std::string print_rep(const Representation& r, const std::string& name = "");
std::string print_morphism(const Morphism& f, const Representation& source, const Representation& target,
                           const std::string& name, const std::string& source_name, const std::string& target_name);
std::string read_file(const std::string& path);

}  // namespace qglue
