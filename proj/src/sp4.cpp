#include "mckay/sp4.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "mckay/intmatrix.hpp"

namespace mckay::sp4 {

namespace {

Mat2 mat2_scalar(long c) { return {{{c, 0}, {0, c}}}; }

Mat2 mat2_adjugate(const Mat2& m) {
    return {{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}};
}

long mat2_det(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

// c w c^{-1} over Q, required to land back in Z.
Mat2 mat2_conjugate(const Mat2& c, const Mat2& w) {
    Mat2 num = mat2_mul(mat2_mul(c, w), mat2_adjugate(c));
    long det = mat2_det(c);
    Mat2 out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (num[i][j] % det != 0) throw std::logic_error("conjugate: non-integral result");
            out[i][j] = num[i][j] / det;
        }
    return out;
}

long find_mat(const std::vector<Mat2>& list, const Mat2& m) {
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] == m) return static_cast<long>(i);
    return -1;
}

long find_inverse(const std::vector<Mat2>& list, long i) {
    for (std::size_t j = 0; j < list.size(); ++j)
        if (mat2_mul(list[i], list[j]) == mat2_identity()) return static_cast<long>(j);
    throw std::logic_error("weyl list: missing inverse");
}

// Conjugacy partition of a closed matrix list; returns class id per index.
std::vector<long> matrix_class_ids(const std::vector<Mat2>& list) {
    std::vector<long> cls(list.size(), -1);
    long next = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (cls[i] >= 0) continue;
        long id = next++;
        for (std::size_t v = 0; v < list.size(); ++v) {
            Mat2 w = mat2_mul(mat2_mul(list[v], list[i]), list[find_inverse(list, static_cast<long>(v))]);
            long k = find_mat(list, w);
            if (k < 0) throw std::logic_error("weyl list: not closed under conjugation");
            cls[static_cast<std::size_t>(k)] = id;
        }
    }
    return cls;
}

long class_count(const std::vector<Mat2>& list) {
    std::vector<long> cls = matrix_class_ids(list);
    return *std::max_element(cls.begin(), cls.end()) + 1;
}

// Endomorphisms of Z_d1 x Z_d2 as integer matrices; entry [i][j] is
// meaningful mod d[i], and [1][0] must vanish mod d2/d1.
struct TorusShape {
    long d1 = 1, d2 = 1;
    long quot() const { return d2 / d1; }
};

Mat2 endo_reduce(const TorusShape& t, Mat2 m) {
    long d[2] = {t.d1, t.d2};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = ((m[i][j] % d[i]) + d[i]) % d[i];
    if (m[1][0] % t.quot() != 0) throw std::logic_error("torus action: not well-defined");
    return m;
}

Mat2 endo_mul(const TorusShape& t, const Mat2& a, const Mat2& b) {
    return endo_reduce(t, mat2_mul(a, b));
}

Mat2 endo_pow(const TorusShape& t, Mat2 base, long e) {
    Mat2 r = endo_reduce(t, mat2_identity());
    base = endo_reduce(t, base);
    for (long i = 0; i < e; ++i) r = endo_mul(t, r, base);
    return r;
}

std::array<long, 2> endo_apply(const TorusShape& t, const Mat2& m, std::array<long, 2> v) {
    return {(m[0][0] * v[0] + m[0][1] * v[1]) % t.d1, (m[1][0] * v[0] + m[1][1] * v[1]) % t.d2};
}

// Transpose-with-scaling dual on the character group: theta_u(M t) =
// theta_{dual(M) u}(t).
Mat2 endo_dual(const TorusShape& t, const Mat2& m) {
    Mat2 d{};
    d[0][0] = m[0][0] % t.d1;
    d[0][1] = (m[1][0] / t.quot()) % t.d1;
    d[1][0] = (m[0][1] * t.quot()) % t.d2;
    d[1][1] = m[1][1] % t.d2;
    return d;
}

void check_bijective(const TorusShape& t, const Mat2& m) {
    std::vector<char> seen(static_cast<std::size_t>(t.d1 * t.d2), 0);
    for (long a = 0; a < t.d1; ++a)
        for (long b = 0; b < t.d2; ++b) {
            auto v = endo_apply(t, m, {a, b});
            std::size_t k = static_cast<std::size_t>(v[0] * t.d2 + v[1]);
            if (seen[k]) throw std::logic_error("torus action: not invertible");
            seen[k] = 1;
        }
}

TorusShape shape_of(const TorusModel& t) { return {t.d1, t.d2}; }

Mat2 sigma_conjugator(long e, long a, const Convention& conv) {
    Mat2 base = e == 4 ? mat2_mul(conv.s1, conv.phi) : conv.phi;
    return a % 2 == 1 ? base : mat2_identity();
}

}  // namespace

Mat2 mat2_identity() { return {{{1, 0}, {0, 1}}}; }

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

Convention default_convention() {
    return {{{{0, 1}, {1, 0}}}, {{{1, 0}, {0, -1}}}, {{{1, 1}, {1, -1}}}};
}

Convention alternate_convention() {
    return {{{{0, -1}, {-1, 0}}}, {{{1, 0}, {0, -1}}}, {{{1, -1}, {-1, -1}}}};
}

long order_of_q_mod_ell(long q, long ell) {
    if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("order_of_q_mod_ell: ell must be odd");
    for (long d = 2; d * d <= ell; ++d)
        if (ell % d == 0) throw std::invalid_argument("order_of_q_mod_ell: ell must be prime");
    long order_part = 0;
    for (long f : {q - 1, q + 1, q * q + 1})
        if (f % ell == 0) order_part = 1;
    if (!order_part)
        throw std::invalid_argument("order_of_q_mod_ell: ell does not divide the order part");
    long e = 1, p = q % ell;
    while (p != 1) {
        p = p * q % ell;
        ++e;
    }
    if (e != 1 && e != 2 && e != 4) throw std::logic_error("order_of_q_mod_ell: e outside {1,2,4}");
    return e;
}

std::vector<Mat2> weyl_b2(const Convention& conv) {
    std::vector<Mat2> elements{mat2_identity()};
    std::vector<Mat2> frontier = elements;
    while (!frontier.empty()) {
        std::vector<Mat2> next;
        for (const Mat2& f : frontier)
            for (const Mat2& g : {conv.s1, conv.s2}) {
                Mat2 p = mat2_mul(f, g);
                if (find_mat(elements, p) < 0) {
                    elements.push_back(p);
                    next.push_back(p);
                }
            }
        frontier = std::move(next);
    }
    if (elements.size() != 8) throw std::logic_error("weyl_b2: order must be 8");
    Mat2 s1s2 = mat2_mul(conv.s1, conv.s2);
    if (mat2_mul(conv.s1, conv.s1) != mat2_identity() ||
        mat2_mul(conv.s2, conv.s2) != mat2_identity() ||
        mat2_mul(mat2_mul(s1s2, s1s2), mat2_mul(s1s2, s1s2)) != mat2_identity())
        throw std::logic_error("weyl_b2: dihedral presentation fails");
    return elements;
}

Mat2 coxeter_data(long e, const Convention& conv) {
    Mat2 s1s2 = mat2_mul(conv.s1, conv.s2);
    if (e == 1) return mat2_identity();
    if (e == 2) return mat2_mul(s1s2, s1s2);
    if (e == 4) return s1s2;
    throw std::invalid_argument("coxeter_data: e must be 1, 2 or 4");
}

std::vector<Mat2> relative_weyl(long e, const Convention& conv) {
    Mat2 we = coxeter_data(e, conv);
    std::vector<Mat2> out;
    for (const Mat2& w : weyl_b2(conv))
        if (mat2_mul(w, we) == mat2_mul(we, w)) out.push_back(w);
    return out;
}

GraphMap graph_map(const Convention& conv) {
    const Mat2& phi = conv.phi;
    if (mat2_mul(phi, phi) != mat2_scalar(2)) throw std::logic_error("graph_map: phi^2 != 2I");
    std::vector<Mat2> w = weyl_b2(conv);
    Mat2 image = mat2_conjugate(phi, conv.s1);
    bool in_s2_class = false;
    for (const Mat2& v : w)
        if (mat2_conjugate(v, conv.s2) == image) in_s2_class = true;
    if (!in_s2_class) throw std::logic_error("graph_map: conjugation does not swap reflections");
    Mat2 s1phi = mat2_mul(conv.s1, phi);
    Mat2 w4 = coxeter_data(4, conv);
    if (mat2_mul(s1phi, s1phi) != mat2_mul(mat2_scalar(2), w4))
        throw std::logic_error("graph_map: (s1 phi)^2 != 2 w4");
    return {phi};
}

TorusModel torus_structure(long q, long e, const Convention& conv) {
    if (q < 4 || (q & (q - 1)) != 0) throw std::invalid_argument("torus_structure: q = 2^m, m >= 2");
    Mat2 we = coxeter_data(e, conv);
    f2::IntMatrix a(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) a.at(i, j) = q * we[i][j] - (i == j ? 1 : 0);
    f2::SmithResult snf = f2::smith_with_transforms(a);

    TorusModel t;
    t.q = q;
    t.e = e;
    t.d1 = snf.invariant_factors[0].convert_to<long>();
    t.d2 = snf.invariant_factors[1].convert_to<long>();
    TorusShape shape{t.d1, t.d2};

    Mat2 u{}, uinv{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) u[i][j] = snf.u.at(i, j).convert_to<long>();
    long det = mat2_det(u);
    if (det != 1 && det != -1) throw std::logic_error("torus_structure: U not unimodular");
    Mat2 adj = mat2_adjugate(u);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) uinv[i][j] = adj[i][j] / det;

    auto transport = [&](const Mat2& m) {
        return endo_reduce(shape, mat2_mul(mat2_mul(u, m), uinv));
    };
    for (const Mat2& w : relative_weyl(e, conv)) t.weyl_action.push_back(transport(w));
    Mat2 base = e == 4 ? mat2_mul(conv.s1, graph_map(conv).mat) : graph_map(conv).mat;
    t.sigma_base = transport(base);

    for (const Mat2& m : t.weyl_action) check_bijective(shape, m);
    check_bijective(shape, t.sigma_base);
    return t;
}

ThetaCensus theta_census(long q, long e, const Convention& conv) {
    TorusModel torus = torus_structure(q, e, conv);
    TorusShape shape = shape_of(torus);
    std::vector<Mat2> duals;
    for (const Mat2& m : torus.weyl_action) duals.push_back(endo_dual(shape, m));

    ThetaCensus census;
    census.q = q;
    census.e = e;
    std::vector<char> visited(static_cast<std::size_t>(torus.d1 * torus.d2), 0);
    for (long u1 = 0; u1 < torus.d1; ++u1)
        for (long u2 = 0; u2 < torus.d2; ++u2) {
            if (visited[static_cast<std::size_t>(u1 * torus.d2 + u2)]) continue;
            ThetaOrbit orbit;
            long stab = 0;
            for (const Mat2& d : duals) {
                auto v = endo_apply(shape, d, {u1, u2});
                if (v == std::array<long, 2>{u1, u2}) ++stab;
                if (!visited[static_cast<std::size_t>(v[0] * torus.d2 + v[1])]) {
                    visited[static_cast<std::size_t>(v[0] * torus.d2 + v[1])] = 1;
                    orbit.members.push_back(v);
                }
            }
            std::sort(orbit.members.begin(), orbit.members.end());
            orbit.stabilizer_order = stab;
            if (stab * static_cast<long>(orbit.members.size()) !=
                static_cast<long>(duals.size()))
                throw std::logic_error("theta_census: orbit-stabilizer mismatch");
            bool trivial = u1 == 0 && u2 == 0;
            if (trivial)
                ++census.trivial_orbits;
            else if (stab == 1)
                ++census.regular_orbits;
            else if (stab == 2 && e != 4)
                ++census.stab_two_orbits;
            else
                throw std::logic_error("theta_census: stabilizer dichotomy violated");
            census.orbits.push_back(std::move(orbit));
        }
    return census;
}

long predicted_irr_count(long q, long e, const Convention& conv) {
    ThetaCensus census = theta_census(q, e, conv);
    long weyl_irr = class_count(relative_weyl(e, conv));
    return weyl_irr + 2 * census.stab_two_orbits + census.regular_orbits;
}

LocalGroup build_local_group(long q, long e, long a, const Convention& conv) {
    if (a < 0) throw std::invalid_argument("build_local_group: a >= 0");
    TorusModel torus = torus_structure(q, e, conv);
    TorusShape shape = shape_of(torus);
    if (torus.d2 >= (1 << 12)) throw std::invalid_argument("build_local_group: torus too large");
    std::vector<Mat2> weyl = relative_weyl(e, conv);
    const long nw = static_cast<long>(weyl.size());

    std::vector<long> mul_table(static_cast<std::size_t>(nw * nw));
    std::vector<long> inv_table(static_cast<std::size_t>(nw));
    for (long i = 0; i < nw; ++i) {
        for (long j = 0; j < nw; ++j) {
            long k = find_mat(weyl, mat2_mul(weyl[i], weyl[j]));
            if (k < 0) throw std::logic_error("build_local_group: weyl not closed");
            mul_table[static_cast<std::size_t>(i * nw + j)] = k;
        }
        inv_table[static_cast<std::size_t>(i)] = find_inverse(weyl, i);
    }

    const long d1 = torus.d1, d2 = torus.d2;
    auto pack = [](long t1, long t2, long w) {
        return static_cast<engine::Element>(t1 | t2 << 12 | w << 24);
    };
    auto unpack = [](engine::Element x, long& t1, long& t2, long& w) {
        t1 = static_cast<long>(x & 0xfff);
        t2 = static_cast<long>(x >> 12 & 0xfff);
        w = static_cast<long>(x >> 24);
    };
    std::vector<Mat2> action = torus.weyl_action;

    engine::GroupOps ops;
    ops.multiply = [=](engine::Element x, engine::Element y) {
        long t1, t2, w, r1, r2, v;
        unpack(x, t1, t2, w);
        unpack(y, r1, r2, v);
        auto moved = endo_apply(shape, action[static_cast<std::size_t>(w)], {r1, r2});
        return pack((t1 + moved[0]) % d1, (t2 + moved[1]) % d2,
                    mul_table[static_cast<std::size_t>(w * nw + v)]);
    };
    ops.invert = [=](engine::Element x) {
        long t1, t2, w;
        unpack(x, t1, t2, w);
        long wi = inv_table[static_cast<std::size_t>(w)];
        auto moved = endo_apply(shape, action[static_cast<std::size_t>(wi)], {t1, t2});
        return pack((d1 - moved[0]) % d1, (d2 - moved[1]) % d2, wi);
    };
    ops.identity = pack(0, 0, 0);
    if (weyl[0] != mat2_identity()) throw std::logic_error("build_local_group: weyl[0] != I");

    std::vector<engine::Element> gens;
    if (d1 > 1) gens.push_back(pack(1, 0, 0));
    gens.push_back(pack(0, 1, 0));
    for (long w = 1; w < nw; ++w) gens.push_back(pack(0, 0, w));

    std::size_t expected = static_cast<std::size_t>(d1 * d2 * nw);
    LocalGroup local{std::move(torus), weyl, engine::ConcreteGroup(ops, gens, expected), nullptr,
                     a};
    if (local.group.size() != expected) throw std::logic_error("build_local_group: wrong order");

    Mat2 s = endo_pow(shape, local.torus.sigma_base, a);
    Mat2 conj = sigma_conjugator(e, a, conv);
    std::vector<long> weyl_map(static_cast<std::size_t>(nw));
    for (long w = 0; w < nw; ++w) {
        long k = find_mat(weyl, mat2_conjugate(conj, weyl[static_cast<std::size_t>(w)]));
        if (k < 0) throw std::logic_error("build_local_group: sigma leaves the weyl group");
        weyl_map[static_cast<std::size_t>(w)] = k;
    }
    local.sigma = [=](engine::Element x) {
        long t1, t2, w;
        unpack(x, t1, t2, w);
        auto moved = endo_apply(shape, s, {t1, t2});
        return pack(moved[0], moved[1], weyl_map[static_cast<std::size_t>(w)]);
    };

    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> pick(0, local.group.size() - 1);
    auto check_pair = [&](engine::Element x, engine::Element y) {
        if (local.sigma(local.group.multiply(x, y)) !=
            local.group.multiply(local.sigma(x), local.sigma(y)))
            throw std::logic_error("build_local_group: sigma fails automorphism sampling");
    };
    for (engine::Element x : gens)
        for (engine::Element y : gens) check_pair(x, y);
    for (int i = 0; i < 200; ++i)
        check_pair(local.group.element(pick(rng)), local.group.element(pick(rng)));
    if (local.sigma(ops.identity) != ops.identity)
        throw std::logic_error("build_local_group: sigma moves the identity");
    return local;
}

FixedCount fixed_irr_detail(long q, long e, long a, const Convention& conv) {
    LocalGroup local = build_local_group(q, e, a, conv);
    engine::ClassPartition part = engine::conjugacy_classes(local.group);
    FixedCount out;
    out.brauer = static_cast<long>(engine::fixed_class_count(local.group, part, local.sigma));

    ThetaCensus census = theta_census(q, e, conv);
    TorusShape shape = shape_of(local.torus);
    Mat2 dual_sigma = endo_dual(shape, endo_pow(shape, local.torus.sigma_base, a));
    std::unordered_map<long, std::size_t> orbit_of;
    for (std::size_t i = 0; i < census.orbits.size(); ++i)
        for (const auto& u : census.orbits[i].members)
            orbit_of[u[0] << 12 | u[1]] = i;
    out.census = weyl_fixed_irr(e, a, conv);
    for (const ThetaOrbit& orbit : census.orbits) {
        const auto& rep = orbit.members.front();
        if (rep == std::array<long, 2>{0, 0}) continue;
        auto image = endo_apply(shape, dual_sigma, rep);
        if (orbit_of.at(image[0] << 12 | image[1]) != orbit_of.at(rep[0] << 12 | rep[1]))
            continue;
        out.census += orbit.stabilizer_order == 1 ? 1 : 2;
    }
    return out;
}

long fixed_irr_count(long q, long e, long a, const Convention& conv) {
    FixedCount counts = fixed_irr_detail(q, e, a, conv);
    if (counts.brauer != counts.census)
        throw std::logic_error("fixed_irr_count: Brauer and census counts disagree");
    return counts.brauer;
}

long weyl_fixed_irr(long e, long a, const Convention& conv) {
    std::vector<Mat2> weyl = relative_weyl(e, conv);
    std::vector<long> cls = matrix_class_ids(weyl);
    Mat2 conj = sigma_conjugator(e, a, conv);
    long fixed = 0;
    long total = *std::max_element(cls.begin(), cls.end()) + 1;
    for (long c = 0; c < total; ++c) {
        for (std::size_t i = 0; i < weyl.size(); ++i) {
            if (cls[i] != c) continue;
            long image = find_mat(weyl, mat2_conjugate(conj, weyl[i]));
            if (image < 0) throw std::logic_error("weyl_fixed_irr: conjugation leaves the group");
            if (cls[static_cast<std::size_t>(image)] == c) ++fixed;
            break;
        }
    }
    return fixed;
}

UnipotentSummary unipotent_side_summary(long a) {
    if (a < 0) throw std::invalid_argument("unipotent_side_summary: a >= 0");
    UnipotentSummary s;
    s.moved_e1 = s.moved_e2 = a % 2 == 1 ? 2 : 0;
    s.moved_e4 = 0;
    Convention conv = default_convention();
    long moved[3] = {s.moved_e1, s.moved_e2, s.moved_e4};
    long es[3] = {1, 2, 4};
    for (int i = 0; i < 3; ++i) {
        long irr = class_count(relative_weyl(es[i], conv));
        if (irr - weyl_fixed_irr(es[i], a, conv) != moved[i])
            throw std::logic_error("unipotent_side_summary: weyl count inconsistency");
    }
    return s;
}

}  // namespace mckay::sp4
