#include "mckay/engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "mckay/bitmatrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mckay::engine {

using f2::BitMatrix;

GroupOps matrix_group_ops(long dim) {
    if (dim < 1 || dim > 8) throw std::invalid_argument("matrix_group_ops: dim must be in 1..8");
    std::size_t n = static_cast<std::size_t>(dim);
    GroupOps ops;
    ops.multiply = [n](Element a, Element b) {
        return (BitMatrix::from_packed(a, n) * BitMatrix::from_packed(b, n)).to_packed();
    };
    ops.invert = [n](Element a) { return BitMatrix::from_packed(a, n).inverse().to_packed(); };
    ops.identity = BitMatrix::identity(n).to_packed();
    return ops;
}

std::uint64_t charpoly_f2(std::uint64_t packed, long dim) {
    if (dim < 1 || dim > 8) throw std::invalid_argument("charpoly_f2: dim must be in 1..8");
    // det(XI + A) = sum_k X^{dim-k} * (sum of principal k x k minors), char 2
    std::uint64_t poly = 0;
    for (std::uint32_t subset = 0; subset < (1u << dim); ++subset) {
        // rows/cols of the principal minor
        int k = std::popcount(subset);
        std::uint8_t rows[8];
        int idx = 0;
        for (int i = 0; i < dim; ++i)
            if ((subset >> i) & 1) rows[idx++] = static_cast<std::uint8_t>(i);
        // k x k determinant over F2, rows packed into bytes
        std::uint8_t sub[8];
        for (int i = 0; i < k; ++i) {
            std::uint8_t r = 0;
            for (int j = 0; j < k; ++j)
                r |= static_cast<std::uint8_t>(((packed >> (rows[i] * dim + rows[j])) & 1) << j);
            sub[i] = r;
        }
        int det = 1;
        for (int col = 0; col < k && det; ++col) {
            int pivot = -1;
            for (int i = col; i < k; ++i)
                if ((sub[i] >> col) & 1) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) {
                det = 0;
                break;
            }
            std::swap(sub[col], sub[pivot]);
            for (int i = col + 1; i < k; ++i)
                if ((sub[i] >> col) & 1) sub[i] ^= sub[col];
        }
        if (det) poly ^= std::uint64_t{1} << (dim - k);
    }
    return poly;
}

ConcreteGroup::ConcreteGroup(GroupOps ops, std::vector<Element> generators,
                             std::size_t element_cap, int jobs)
    : ops_(std::move(ops)), generators_(std::move(generators)) {
    if (!ops_.multiply || !ops_.invert)
        throw std::invalid_argument("ConcreteGroup: missing operations");
    std::size_t mem_cap_mb = 1024;
    if (const char* env = std::getenv("MCKAY_MEM_CAP_MB")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && end != env && *end == '\0') mem_cap_mb = v;
    }
    const std::size_t bytes_per_element = 56;  // value + hash-map node estimate

    elements_.push_back(ops_.identity);
    index_.emplace(ops_.identity, 0);
    std::vector<Element> frontier{ops_.identity};
    std::vector<Element> products;
    while (!frontier.empty()) {
        products.assign(frontier.size() * generators_.size(), 0);
        std::int64_t total = static_cast<std::int64_t>(products.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (jobs > 1)
#endif
        for (std::int64_t t = 0; t < total; ++t) {
            std::size_t i = static_cast<std::size_t>(t) / generators_.size();
            std::size_t j = static_cast<std::size_t>(t) % generators_.size();
            products[static_cast<std::size_t>(t)] = ops_.multiply(frontier[i], generators_[j]);
        }
        (void)jobs;
        std::vector<Element> next;
        for (Element p : products) {
            auto [it, fresh] = index_.emplace(p, static_cast<std::uint32_t>(elements_.size()));
            if (!fresh) continue;
            elements_.push_back(p);
            next.push_back(p);
            if (elements_.size() > element_cap)
                throw std::runtime_error("generate: element cap exceeded");
            std::size_t bytes = elements_.size() * bytes_per_element + products.size() * 8;
            if (bytes > mem_cap_mb * 1024 * 1024)
                throw std::runtime_error("generate: memory cap MCKAY_MEM_CAP_MB exceeded");
        }
        frontier = std::move(next);
    }
    spot_check();
}

void ConcreteGroup::spot_check() const {
    std::size_t sample = std::min<std::size_t>(elements_.size(), 50);
    for (std::size_t i = 0; i < sample; ++i) {
        Element e = elements_[i];
        if (ops_.multiply(e, ops_.identity) != e || ops_.multiply(ops_.identity, e) != e)
            throw std::logic_error("ConcreteGroup: identity not neutral");
        Element inv = ops_.invert(e);
        if (index_.count(inv) == 0) throw std::logic_error("ConcreteGroup: inverse escapes the set");
        if (ops_.multiply(e, inv) != ops_.identity)
            throw std::logic_error("ConcreteGroup: inverse check failed");
        Element p = ops_.multiply(e, elements_[(i * 7 + 1) % elements_.size()]);
        if (index_.count(p) == 0) throw std::logic_error("ConcreteGroup: product escapes the set");
    }
}

std::size_t ConcreteGroup::index_of(Element e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw std::out_of_range("index_of: element not in group");
    return it->second;
}

long ConcreteGroup::element_order(Element e) const {
    long k = 1;
    Element p = e;
    while (p != ops_.identity) {
        p = ops_.multiply(p, e);
        ++k;
        if (static_cast<std::size_t>(k) > elements_.size())
            throw std::logic_error("element_order: diverges");
    }
    return k;
}

long ConcreteGroup::exponent() const {
    long ex = 1;
    for (Element e : elements_) ex = std::lcm(ex, element_order(e));
    return ex;
}

ClassPartition conjugacy_classes(const ConcreteGroup& g) {
    const std::size_t n = g.size();
    ClassPartition part;
    part.class_of.assign(n, UINT32_MAX);
    std::vector<Element> gen_inv;
    for (Element gen : g.generators()) gen_inv.push_back(g.invert(gen));
    for (std::size_t start = 0; start < n; ++start) {
        if (part.class_of[start] != UINT32_MAX) continue;
        std::uint32_t cid = static_cast<std::uint32_t>(part.classes.size());
        std::vector<std::uint32_t> members{static_cast<std::uint32_t>(start)};
        part.class_of[start] = cid;
        std::size_t head = 0;
        while (head < members.size()) {
            Element x = g.element(members[head++]);
            for (std::size_t j = 0; j < g.generators().size(); ++j) {
                Element y = g.multiply(gen_inv[j], g.multiply(x, g.generators()[j]));
                std::uint32_t yi = static_cast<std::uint32_t>(g.index_of(y));
                if (part.class_of[yi] == UINT32_MAX) {
                    part.class_of[yi] = cid;
                    members.push_back(yi);
                }
            }
        }
        std::sort(members.begin(), members.end());
        part.representatives.push_back(members.front());
        part.classes.push_back(std::move(members));
    }
    return part;
}

namespace {

// Small generating subset of a closed subgroup, greedy by element order.
std::vector<Element> extract_generators(const ConcreteGroup& g,
                                        const std::vector<Element>& subgroup) {
    std::vector<Element> gens;
    std::unordered_map<Element, char> closed;
    closed.emplace(g.identity(), 1);
    for (Element s : subgroup) {
        if (closed.count(s)) continue;
        gens.push_back(s);
        // re-close under the enlarged generating set
        std::vector<Element> frontier;
        for (const auto& [e, _] : closed) frontier.push_back(e);
        while (!frontier.empty()) {
            std::vector<Element> next;
            for (Element e : frontier)
                for (Element gen : gens) {
                    Element p = g.multiply(e, gen);
                    if (closed.emplace(p, 1).second) next.push_back(p);
                }
            frontier = std::move(next);
        }
    }
    return gens;
}

}  // namespace

std::vector<Element> normalizer(const ConcreteGroup& g, const std::vector<Element>& subgroup,
                                int jobs) {
    std::unordered_map<Element, char> member;
    for (Element s : subgroup) {
        if (!g.contains(s)) throw std::invalid_argument("normalizer: subgroup escapes the group");
        member.emplace(s, 1);
    }
    std::vector<Element> sub_gens = extract_generators(g, subgroup);
    const std::int64_t n = static_cast<std::int64_t>(g.size());
    std::vector<char> keeps(static_cast<std::size_t>(n), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (jobs > 1)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        Element h = g.element(static_cast<std::size_t>(i));
        Element hi = g.invert(h);
        bool ok = true;
        for (Element s : sub_gens) {
            Element conj = g.multiply(h, g.multiply(s, hi));
            if (member.find(conj) == member.end()) {
                ok = false;
                break;
            }
        }
        keeps[static_cast<std::size_t>(i)] = ok ? 1 : 0;
    }
    (void)jobs;
    std::vector<Element> out;
    for (std::int64_t i = 0; i < n; ++i)
        if (keeps[static_cast<std::size_t>(i)]) out.push_back(g.element(static_cast<std::size_t>(i)));
    return out;
}

std::size_t fixed_class_count(const ConcreteGroup& g, const ClassPartition& part,
                              const std::function<Element(Element)>& sigma) {
    // bijectivity on the element set
    std::unordered_map<Element, char> image;
    for (Element e : g.elements()) {
        Element m = sigma(e);
        if (!g.contains(m)) throw std::invalid_argument("fixed_class_count: sigma leaves the group");
        if (!image.emplace(m, 1).second)
            throw std::invalid_argument("fixed_class_count: sigma not injective");
    }
    // multiplicativity on generator pairs and a fixed sample
    auto check_pair = [&](Element a, Element b) {
        if (sigma(g.multiply(a, b)) != g.multiply(sigma(a), sigma(b)))
            throw std::invalid_argument("fixed_class_count: sigma not multiplicative");
    };
    for (Element a : g.generators())
        for (Element b : g.generators()) check_pair(a, b);
    std::mt19937 rng(12345);
    for (int t = 0; t < 500; ++t)
        check_pair(g.element(rng() % g.size()), g.element(rng() % g.size()));

    std::size_t fixed = 0;
    for (std::uint32_t rep : part.representatives) {
        Element m = sigma(g.element(rep));
        if (part.class_of[g.index_of(m)] == part.class_of[rep]) ++fixed;
    }
    return fixed;
}

std::size_t fixed_class_count(const ConcreteGroup& g,
                              const std::function<Element(Element)>& sigma) {
    return fixed_class_count(g, conjugacy_classes(g), sigma);
}

}  // namespace mckay::engine
