#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

namespace mckay::engine {

// Opaque element value. Matrix groups pack row-major bits (dim <= 8);
// other groups choose their own encoding.
using Element = std::uint64_t;

struct GroupOps {
    std::function<Element(Element, Element)> multiply;
    std::function<Element(Element)> invert;
    Element identity = 0;
};

// Ops for packed dim x dim matrices over F2, dim <= 8.
GroupOps matrix_group_ops(long dim);

// det(X I + A) over F2 for a packed dim x dim matrix, as a coefficient
// bitmask (bit i = coefficient of X^i), via principal-minor sums.
std::uint64_t charpoly_f2(std::uint64_t packed, long dim);

// BFS closure of a generator set. Elements are indexed in discovery
// order (identity first); the order depends only on the generator order,
// not on thread scheduling. Throws when the element cap or the
// MCKAY_MEM_CAP_MB memory budget (default 1024) is exceeded.
class ConcreteGroup {
public:
    ConcreteGroup(GroupOps ops, std::vector<Element> generators, std::size_t element_cap,
                  int jobs = 1);

    std::size_t size() const { return elements_.size(); }
    const std::vector<Element>& elements() const { return elements_; }
    const std::vector<Element>& generators() const { return generators_; }
    Element element(std::size_t i) const { return elements_.at(i); }
    bool contains(Element e) const { return index_.count(e) != 0; }
    std::size_t index_of(Element e) const;  // throws std::out_of_range

    Element multiply(Element a, Element b) const { return ops_.multiply(a, b); }
    Element invert(Element a) const { return ops_.invert(a); }
    Element identity() const { return ops_.identity; }

    long element_order(Element e) const;
    long exponent() const;  // lcm of element orders

private:
    void spot_check() const;

    GroupOps ops_;
    std::vector<Element> generators_;
    std::vector<Element> elements_;
    std::unordered_map<Element, std::uint32_t> index_;
};

struct ClassPartition {
    std::vector<std::vector<std::uint32_t>> classes;  // element indices, ascending
    std::vector<std::uint32_t> representatives;       // minimal index per class
    std::vector<std::uint32_t> class_of;              // element index -> class id
};

// Orbit partition under conjugation by the group generators; classes
// ordered by minimal element index.
ClassPartition conjugacy_classes(const ConcreteGroup& g);

// { h : h S h^{-1} = S } for a closed subgroup given by its element set,
// tested via images of an extracted generating subset. Returns element
// values in group index order.
std::vector<Element> normalizer(const ConcreteGroup& g, const std::vector<Element>& subgroup,
                                int jobs = 1);

// Number of conjugacy classes fixed by the automorphism; sigma is
// checked to be bijective on the element set and multiplicative on
// generator pairs plus a fixed random sample.
std::size_t fixed_class_count(const ConcreteGroup& g, const ClassPartition& part,
                              const std::function<Element(Element)>& sigma);
std::size_t fixed_class_count(const ConcreteGroup& g,
                              const std::function<Element(Element)>& sigma);

}  // namespace mckay::engine
