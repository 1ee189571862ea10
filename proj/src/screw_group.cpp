#include "h2xr/screw_group.hpp"

#include <quadmath.h>

#include <atomic>
#include <cmath>
#include <map>
#include <numbers>

#include "h2xr/errors.hpp"

namespace h2xr {

namespace {
constexpr double kPi = std::numbers::pi;
std::atomic<long> g_csgn_near_zero{0};

double csgn(double x) {
    if (std::abs(x) < 1e-12) g_csgn_near_zero.fetch_add(1, std::memory_order_relaxed);
    return x >= 0.0 ? 1.0 : -1.0;
}
}  // namespace

ScrewElement compose(const ScrewElement& a, const ScrewElement& b) {
    // right action: P^(ab) = (P^a)^b, so the matrix of "a then b" is m_b m_a
    return {b.linear * a.linear, a.fibre_sign * b.fibre_sign, a.tau + b.tau};
}

GroupContext GroupContext::create(int p1, int p2, const TranslationClass& cls, double xi) {
    GroupContext ctx;
    ctx.p1 = p1;
    ctx.p2 = p2;
    ctx.triangle = triangle_vertices(p1, p2);
    ctx.translation_class = cls;
    ctx.xi = xi;
    ctx.g0_hat = {rotation_about(ctx.triangle.A, kPi), +1, cls.r0.value() * xi};
    ctx.g1_hat = {rotation_about(ctx.triangle.B, -2 * kPi / p1), +1, cls.r1.value() * xi};
    ctx.g2_hat = {rotation_about(ctx.triangle.C, 2 * kPi / p2), +1, cls.r2.value() * xi};
    return ctx;
}

const ScrewElement& GroupContext::generator(int i) const {
    switch (i) {
        case 0: return g0_hat;
        case 1: return g1_hat;
        default: return g2_hat;
    }
}

namespace {
// The orbit scan runs in long double, in the frame where K sits at the model
// centre. That keeps stabilizer elements numerically close to the identity
// even for large signatures, where the raw vertex coordinates are huge.
using LMat = Mat3T<long double>;
using LVec = Vec3T<long double>;

LMat to_long(const Mat3& m) {
    LMat r;
    for (int i = 0; i < 9; ++i) r.m[i] = m.m[i];
    return r;
}

// Project a near-Lorentz matrix back onto the group (Gram-Schmidt in the
// Minkowski form). Without this, tiny construction errors in the step
// matrices get amplified through the large matrix norms of wandering words
// and corrupt neighbour distances.
LMat lorentz_orthonormalize(const LMat& m) {
    LVec c0{m(0, 0), m(1, 0), m(2, 0)};
    LVec c1{m(0, 1), m(1, 1), m(2, 1)};
    LVec c2{m(0, 2), m(1, 2), m(2, 2)};
    c0 = (1.0L / std::sqrt(mink(c0, c0))) * c0;
    c1 = c1 - mink(c1, c0) * c0;
    c1 = (1.0L / std::sqrt(-mink(c1, c1))) * c1;
    c2 = c2 - mink(c2, c0) * c0 + mink(c2, c1) * c1;
    c2 = (1.0L / std::sqrt(-mink(c2, c2))) * c2;
    LMat r;
    for (int i = 0; i < 3; ++i) {
        r(i, 0) = c0[i];
        r(i, 1) = c1[i];
        r(i, 2) = c2[i];
    }
    return r;
}

// Nodes are deduplicated on the linear part alone: by the congruences, two
// words with the same linear part can only differ by an integer number of
// lattice shifts in tau, and those lifts are enumerated arithmetically. This
// keeps every stored matrix on a shortest word, where roundoff stays benign.
struct ElemKey {
    std::array<long long, 9> q;
    friend bool operator<(const ElemKey& a, const ElemKey& b) { return a.q < b.q; }
};

// Quantize entries relative to the largest one: robust against roundoff for
// elements reached along different words, and immune to overflow.
ElemKey key_of(const LMat& m) {
    long double mx = 1.0L;
    for (long double e : m.m) mx = std::max(mx, std::abs(e));
    long double scale = 1e9L / mx;
    ElemKey k;
    for (int i = 0; i < 9; ++i) k.q[i] = llrintl(m.m[i] * scale);
    return k;
}
}  // namespace

namespace {
// Quad-precision re-evaluation of one word's base displacement. Matrix norms
// along a word can amplify roundoff right at the validator's tolerance, so
// candidates near the smallest distance are recomputed from scratch at
// quad precision, where the amplification is far below any tolerance.
using QF = __float128;
using QMat = Mat3T<QF>;
using QVec = Vec3T<QF>;

QMat q_rot_origin(QF angle) {
    QF c = cosq(angle), s = sinq(angle);
    QMat g;
    g.m = {1, 0, 0, 0, c, -s, 0, s, c};
    return g;
}

QMat q_translate_to_origin(QVec K) {
    QF r = acoshq(K.x1 > 1 ? K.x1 : QF(1));
    if (r < 1e-30Q) return QMat::identity();
    QF a = atan2q(K.x3, K.x2);
    QMat T;
    T.m = {coshq(r), -sinhq(r), 0, -sinhq(r), coshq(r), 0, 0, 0, 1};
    return q_rot_origin(a) * T * q_rot_origin(-a);
}

struct QSteps {
    std::array<QMat, 6> step;
};

QSteps q_build_steps(const GroupContext& ctx, const H2Point& Kbase) {
    QF pi = M_PIq;
    QF c1 = cosq(pi / ctx.p1), s2 = sinq(pi / ctx.p2);
    QF t1 = tanq(pi / ctx.p1), t2 = tanq(pi / ctx.p2);
    QF w = sqrtq(1 - s2 * s2 / (c1 * c1));
    QVec A{c1 / s2, 0, -(c1 / s2) * w};
    QVec B{1 / (t1 * t2), w / t1, -w / (t1 * t2)};
    QVec C{1, 0, 0};
    auto rot_about = [&](QVec V, QF ang) {
        QMat T = q_translate_to_origin(V);
        return lorentz_inverse(T) * q_rot_origin(ang) * T;
    };
    QMat g[3] = {rot_about(A, pi), rot_about(B, -2 * pi / ctx.p1), rot_about(C, 2 * pi / ctx.p2)};
    QMat T = q_translate_to_origin({Kbase.v.x1, Kbase.v.x2, Kbase.v.x3});
    QSteps s;
    for (int i = 0; i < 3; ++i) {
        s.step[2 * i] = T * g[i] * lorentz_inverse(T);
        s.step[2 * i + 1] = lorentz_inverse(s.step[2 * i]);
    }
    return s;
}

double q_base_displacement(const QSteps& s, const std::vector<signed char>& letters) {
    QMat M = QMat::identity();
    for (signed char l : letters) M = s.step[l] * M;
    QVec img = M * QVec{1, 0, 0};
    QF nrm = mink(img, img);
    QF x1 = img.x1 / sqrtq(nrm);
    return static_cast<double>(acoshq(x1 > 1 ? x1 : QF(1)));
}
}  // namespace

OrbitScan orbit_neighbors(const GroupContext& ctx, const H2xRPoint& K, int word_len,
                          double radius_cap) {
    H2Isometry T = translate_to_origin(K.base);
    H2Isometry Ti = T.inverse();

    std::array<LMat, 6> step;     // conjugated generators and inverses
    std::array<Rational, 6> dtau;
    std::array<std::string, 6> letter;
    for (int i = 0; i < 3; ++i) {
        Mat3 g = (T * ctx.generator(i).linear * Ti).m;
        step[2 * i] = lorentz_orthonormalize(to_long(g));
        step[2 * i + 1] = lorentz_inverse(step[2 * i]);
        Rational ri = i == 0 ? ctx.translation_class.r0
                             : (i == 1 ? ctx.translation_class.r1 : ctx.translation_class.r2);
        dtau[2 * i] = ri;
        dtau[2 * i + 1] = -ri;
        letter[2 * i] = "g" + std::to_string(i);
        letter[2 * i + 1] = "g" + std::to_string(i) + "'";
    }

    struct Node {
        LMat m;
        Rational tau;  // multiple of xi for the first (shortest) word found
        std::string word;
        std::vector<signed char> letters;
    };
    std::map<ElemKey, char> seen;
    std::vector<Node> frontier{{LMat::identity(), Rational(0), "", {}}};
    std::vector<Node> all{frontier.front()};
    seen[key_of(frontier.front().m)] = 1;

    // Elements reached only through words that wander far and cancel back
    // carry amplified roundoff; their clean instances are found first via
    // shortest words (breadth-first), so corrupted duplicates are detected by
    // their hyperboloid-norm defect and dropped. Expansion is also pruned a
    // safe margin beyond the radius cap.
    const LVec origin{1.0L, 0.0L, 0.0L};
    double prune_cap = radius_cap + h2_distance(ctx.triangle.A, ctx.triangle.B) +
                       h2_distance(ctx.triangle.B, ctx.triangle.C) +
                       h2_distance(ctx.triangle.A, ctx.triangle.C) + 2.0;
    auto norm_defect_ok = [&](const LVec& img, long double nrm) {
        long double tol = 1e-6L + 1e-16L * img.x1 * img.x1;
        return std::abs(nrm - 1.0L) <= tol;
    };

    for (int depth = 0; depth < word_len; ++depth) {
        std::vector<Node> next;
        for (const Node& n : frontier) {
            for (int j = 0; j < 6; ++j) {
                Node child{step[j] * n.m, n.tau + dtau[j],
                           n.word.empty() ? letter[j] : n.word + " " + letter[j], n.letters};
                child.letters.push_back(static_cast<signed char>(j));
                LVec img = child.m * origin;
                long double nrm = mink(img, img);
                if (nrm <= 0.0L || !norm_defect_ok(img, nrm)) continue;
                ElemKey k = key_of(child.m);
                if (seen.emplace(k, 1).second) {
                    all.push_back(child);
                    if (std::acosh(std::max(img.x1 / std::sqrt(nrm), (long double)1.0)) <=
                        prune_cap)
                        next.push_back(std::move(child));
                }
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }

    OrbitScan scan;
    std::map<std::array<long long, 4>, char> taken;  // images merged at 1e-8
    std::vector<const std::vector<signed char>*> emitted_letters;
    auto emit = [&](const H2xRPoint& pt, const std::string& word, double dist, double bd,
                    Rational tf, const std::vector<signed char>* letters) {
        std::array<long long, 4> kq{llrint(pt.base.v.x1 * 1e8), llrint(pt.base.v.x2 * 1e8),
                                    llrint(pt.base.v.x3 * 1e8), llrint(pt.t * 1e8)};
        if (!taken.emplace(kq, 1).second) return;
        scan.neighbors.push_back({pt, word, dist, bd, tf});
        emitted_letters.push_back(letters);
    };

    for (const Node& n : all) {
        if (n.word.empty()) continue;
        LVec img = n.m * origin;
        long double nrm = mink(img, img);
        if (nrm <= 0.0L) continue;
        img = (1.0L / std::sqrt(nrm)) * img;
        long double bdl = std::acosh(std::max(img.x1, (long double)1.0));
        double bd = (double)bdl;
        // acosh amplifies entry roundoff to sqrt scale for near-fixing words;
        // genuine neighbour displacements in these groups sit far above 1e-3
        if (bd < 1e-3 && n.tau.is_integer()) {
            // the lattice family over a base-fixing linear part: one member
            // stabilizes K, the rest are the pure lattice images added below
            ++scan.stabilizer_count;
            scan.stabilizer_words.push_back(n.word);
            continue;
        }
        H2Point base = Ti.apply(H2Point{{(double)img.x1, (double)img.x2, (double)img.x3}});
        // the element's own image, with its actual fibre translation
        double dt = n.tau.value() * ctx.xi;
        if (std::hypot(bd, dt) <= radius_cap)
            emit({base, K.t + dt}, n.word, std::hypot(bd, dt), bd, n.tau, &n.letters);
        // nearest lattice lift of the same base image: a distinct group
        // element whose word may exceed the letter budget, so add it here
        long long k = llrint(n.tau.value());
        if (k != 0) {
            Rational tf = n.tau - Rational(k);
            double dtl = tf.value() * ctx.xi;
            if (std::hypot(bd, dtl) <= radius_cap)
                emit({base, K.t + dtl}, n.word + " [lattice]", std::hypot(bd, dtl), bd, tf,
                     &n.letters);
        }
    }

    // refine near-minimal candidates at quad precision before anyone compares
    // them against the packing tolerance
    if (!scan.neighbors.empty()) {
        double dmin = ctx.xi;
        for (const auto& nb : scan.neighbors) dmin = std::min(dmin, nb.distance);
        QSteps qsteps = q_build_steps(ctx, K.base);
        for (std::size_t i = 0; i < scan.neighbors.size(); ++i) {
            OrbitNeighbor& nb = scan.neighbors[i];
            if (!emitted_letters[i] || nb.distance > 1.02 * dmin + 1e-6) continue;
            double bd = q_base_displacement(qsteps, *emitted_letters[i]);
            nb.base_distance = bd;
            nb.distance = std::hypot(bd, nb.point.t - K.t);
        }
    }

    // pure lattice images (always present via the relator words)
    emit({K.base, K.t + ctx.xi}, "lattice", ctx.xi, 0.0, Rational(0), nullptr);
    emit({K.base, K.t - ctx.xi}, "lattice'", ctx.xi, 0.0, Rational(0), nullptr);

    std::sort(scan.neighbors.begin(), scan.neighbors.end(),
              [](const OrbitNeighbor& a, const OrbitNeighbor& b) {
                  return a.distance != b.distance ? a.distance < b.distance : a.word < b.word;
              });
    return scan;
}

std::array<double, 4> appendix_image(double r, double alpha, int i, int p1, int p2,
                                     const Rational& r_i, double xi) {
    double c1 = std::cos(kPi / p1), s2 = std::sin(kPi / p2);
    double c1sq = c1 * c1, s2sq = s2 * s2;
    double W = std::sqrt(1.0 - s2sq / c1sq);
    double E = std::exp(xi * r_i.value());
    double ch = std::cosh(r), sh = std::sinh(r);
    double sa = std::sin(alpha), ca = std::cos(alpha);

    switch (i) {
        case 0:
            return {1.0,
                    E / s2sq * std::abs(2 * c1sq * (ch + sh * sa * W) - s2sq * ch),
                    -E * sh * ca,
                    -2 * E / s2sq * (c1sq * ch * W + sh * sa * (c1sq - 0.5 * s2sq))};
        case 1: {
            double sgn = csgn(2 * sh * sa * c1sq * W - ch * (s2sq - 2 * c1sq));
            double c2 = std::cos(kPi / p2);
            double x = E / s2sq * std::abs(2 * c1sq * (ch + sh * sa * W) - s2sq * ch);
            // y-component via the composition g1 = "g0 then g2"
            double y = 2 * E / s2sq *
                       (std::sin(2 * kPi / p2) * c1sq * W * ch +
                        sh * (std::sin(2 * kPi / p2) * (c1sq - 0.5 * s2sq) * sa -
                              0.5 * std::cos(2 * kPi / p2) * s2sq * ca)) *
                       sgn;
            double z = -2 * E / s2sq *
                       (ch * std::cos(2 * kPi / p2) * c1 *
                            std::sqrt(c2 * c2 - std::sin(kPi / p1) * std::sin(kPi / p1)) -
                        sh * (c2 * c2 * c2 * std::sin(kPi / p2 - alpha) +
                              c2 * c2 * sa * (1.5 - 2 * c1sq) -
                              0.5 * ca * std::sin(2 * kPi / p2) +
                              0.5 * sa * std::cos(2 * kPi / p1))) *
                       sgn;
            return {1.0, x, y, z};
        }
        case 2:
            return {1.0, E * ch, E * sh * std::cos(alpha + 2 * kPi / p2),
                    E * sh * std::sin(alpha + 2 * kPi / p2)};
        default:
            throw std::invalid_argument("generator index must be 0, 1 or 2");
    }
}

long appendix_csgn_near_zero_count() { return g_csgn_near_zero.load(); }

}  // namespace h2xr
