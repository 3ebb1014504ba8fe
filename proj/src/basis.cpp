#include "thetadiv/basis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace thetadiv {

namespace {

void check_marking(int i) {
    if (i < 1 || i > kMaxMarkings) throw std::invalid_argument("marking index out of range: " + std::to_string(i));
}

std::invalid_argument bad_boundary(int h, MarkSet P, int g, const char* why) {
    return std::invalid_argument("boundary (h=" + std::to_string(h) + ", P=" + P.str() + ") at g=" +
                                 std::to_string(g) + ": " + why);
}

int parse_int(const std::string& s, std::size_t& pos) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s.substr(pos), &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad generator label: " + s);
    }
    pos += used;
    return v;
}

}  // namespace

MarkSet MarkSet::of(std::initializer_list<int> points) {
    return of(std::span<const int>(points.begin(), points.size()));
}

MarkSet MarkSet::of(std::span<const int> points) {
    std::uint32_t bits = 0;
    for (int i : points) {
        check_marking(i);
        bits |= 1u << (i - 1);
    }
    return from_bits(bits);
}

int MarkSet::size() const { return std::popcount(bits_); }

MarkSet MarkSet::with(int i) const {
    check_marking(i);
    return from_bits(bits_ | (1u << (i - 1)));
}

std::vector<int> MarkSet::elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string MarkSet::str() const {
    std::string s = "{";
    bool first = true;
    for (int i : elements()) {
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

std::strong_ordering operator<=>(MarkSet a, MarkSet b) {
    const auto ea = a.elements();
    const auto eb = b.elements();
    return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::strong_ordering operator<=>(const BoundaryIndex& a, const BoundaryIndex& b) {
    if (auto c = a.h <=> b.h; c != 0) return c;
    if (auto c = a.P.size() <=> b.P.size(); c != 0) return c;
    return a.P <=> b.P;
}

bool is_stable_boundary(int h, MarkSet P, int g, int n) {
    const int m = P.size();
    const bool side_h = h > 0 || m >= 2;
    const bool side_rest = (g - h) > 0 || (n - m) >= 2;
    return side_h && side_rest;
}

BoundaryIndex mirror(const BoundaryIndex& b, int g, int n) { return {g - b.h, b.P.complement(n)}; }

BoundaryIndex canonicalize_boundary(int h, MarkSet P, int g, int n) {
    if (g < 0) throw std::invalid_argument("negative genus");
    if (n < 0 || n > kMaxMarkings) throw std::invalid_argument("marking count out of range");
    if (h < 0 || h > g) throw bad_boundary(h, P, g, "h outside [0, g]");
    if (!P.subset_of(MarkSet::all(n))) throw bad_boundary(h, P, g, "P not a subset of {1..n}");
    if (!is_stable_boundary(h, P, g, n)) throw bad_boundary(h, P, g, "unstable");
    const BoundaryIndex b{h, P};
    const BoundaryIndex m = mirror(b, g, n);
    if (h < g - h) return b;
    if (h > g - h) return m;
    return P.contains(1) ? b : m;
}

std::vector<BoundaryIndex> enumerate_boundary(int g, int n) {
    if (g < 1) throw std::invalid_argument("enumerate_boundary needs g >= 1");
    if (n < 0 || n > kMaxMarkings) throw std::invalid_argument("marking count out of range");
    std::set<BoundaryIndex> classes;
    const std::uint32_t subsets = 1u << n;
    for (int h = 0; h <= g; ++h) {
        for (std::uint32_t bits = 0; bits < subsets; ++bits) {
            const auto P = MarkSet::from_bits(bits);
            if (is_stable_boundary(h, P, g, n)) classes.insert(canonicalize_boundary(h, P, g, n));
        }
    }
    return {classes.begin(), classes.end()};
}

DivGenerator DivGenerator::parse(const std::string& label) {
    if (label == "lambda1") return lambda1();
    if (label == "delta_irr") return delta_irr();
    if (label.size() > 1 && label[0] == 'K') {
        std::size_t pos = 1;
        const int i = parse_int(label, pos);
        if (pos != label.size()) throw std::invalid_argument("bad generator label: " + label);
        return k(i);
    }
    const std::string prefix = "delta_";
    if (label.rfind(prefix, 0) == 0) {
        std::size_t pos = prefix.size();
        const int h = parse_int(label, pos);
        if (label.compare(pos, 2, "^{") != 0 || label.back() != '}')
            throw std::invalid_argument("bad generator label: " + label);
        pos += 2;
        std::vector<int> points;
        while (pos < label.size() - 1) {
            points.push_back(parse_int(label, pos));
            if (label[pos] == ',') ++pos;
        }
        return delta({h, MarkSet::of(points)});
    }
    throw std::invalid_argument("bad generator label: " + label);
}

std::string DivGenerator::label() const {
    switch (kind_) {
        case Kind::Lambda1: return "lambda1";
        case Kind::DeltaIrr: return "delta_irr";
        case Kind::K: return "K" + std::to_string(index_);
        case Kind::Delta: return "delta_" + std::to_string(boundary_.h) + "^" + boundary_.P.str();
    }
    return {};
}

std::shared_ptr<const Basis> Basis::make(int g, int n) {
    if (g < 1) throw std::invalid_argument("basis needs g >= 1");
    if (n < 1 || n > kMaxMarkings) throw std::invalid_argument("basis needs 1 <= n <= " + std::to_string(kMaxMarkings));
    return std::shared_ptr<const Basis>(new Basis(g, n));
}

Basis::Basis(int g, int n) : g_(g), n_(n), boundary_(enumerate_boundary(g, n)) {
    generators_.reserve(2 + n + boundary_.size());
    generators_.push_back(DivGenerator::lambda1());
    generators_.push_back(DivGenerator::delta_irr());
    for (int i = 1; i <= n; ++i) generators_.push_back(DivGenerator::k(i));
    for (const auto& b : boundary_) {
        delta_lookup_.emplace(b, generators_.size());
        generators_.push_back(DivGenerator::delta(b));
    }
}

std::size_t Basis::k_index(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("K index out of range: " + std::to_string(i));
    return 1 + static_cast<std::size_t>(i);
}

std::size_t Basis::delta_index(const BoundaryIndex& b) const {
    return delta_lookup_.at(canonicalize_boundary(b, g_, n_));
}

std::size_t Basis::index_of(const DivGenerator& gen) const {
    switch (gen.kind()) {
        case DivGenerator::Kind::Lambda1: return lambda1_index();
        case DivGenerator::Kind::DeltaIrr: return delta_irr_index();
        case DivGenerator::Kind::K: return k_index(gen.index());
        case DivGenerator::Kind::Delta: return delta_index(gen.boundary());
    }
    throw std::logic_error("unreachable generator kind");
}

void validate_permutation(const Permutation& perm, int n) {
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation has wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

MarkSet permute(const Permutation& perm, MarkSet P) {
    std::vector<int> image;
    for (int i : P.elements()) image.push_back(perm.at(static_cast<std::size_t>(i - 1)));
    return MarkSet::of(image);
}

BoundaryIndex permute(const Permutation& perm, const BoundaryIndex& b, int g, int n) {
    return canonicalize_boundary(b.h, permute(perm, b.P), g, n);
}

DivGenerator permute(const Permutation& perm, const DivGenerator& gen, int g, int n) {
    switch (gen.kind()) {
        case DivGenerator::Kind::K: return DivGenerator::k(perm.at(static_cast<std::size_t>(gen.index() - 1)));
        case DivGenerator::Kind::Delta: return DivGenerator::delta(permute(perm, gen.boundary(), g, n));
        default: return gen;
    }
}

std::vector<Permutation> all_permutations(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace thetadiv
