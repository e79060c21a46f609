#include "redn/bb.hpp"
#include "redn/tangent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace redn {

WeightVector::WeightVector(std::array<int, 4> raw) {
    for (int i = 0; i < 4; ++i) w[i] = raw[i] - raw[3];
}

long WeightVector::pair(const std::array<long, 4>& l) const {
    long s = 0;
    for (int i = 0; i < 4; ++i) s += l[i] * w[i];
    return s;
}

std::string WeightVector::str() const {
    std::ostringstream o;
    o << '(' << w[0] << ',' << w[1] << ',' << w[2] << ',' << w[3] << ')';
    return o.str();
}

WeightVector root_weight(int i, int j) {
    std::array<int, 4> r{};
    r[i] += 1;
    r[j] -= 1;
    return WeightVector(r);
}

namespace {

std::vector<std::pair<int, int>> all_roots() {
    std::vector<std::pair<int, int>> r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) r.push_back({i, j});
    return r;
}

void subsets(int N, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (int(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < N; ++i) {
        cur.push_back(i);
        subsets(N, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets_upto3(int N) {
    std::vector<std::vector<int>> out;
    for (int k = 0; k <= 3; ++k) {
        std::vector<int> cur;
        subsets(N, k, 0, cur, out);
    }
    return out;
}

// traceless diagonal matrices killed by every root in S
std::vector<Mat> root_kernel(const std::vector<std::pair<int, int>>& S) {
    Mat rows(0, 4);
    rows.append_row({1, 1, 1, 1});
    for (auto [i, j] : S) {
        std::vector<Rational> r(4, Rational(0));
        r[i] = 1;
        r[j] = -1;
        rows.append_row(r);
    }
    Mat k = kernel_basis(rows);
    std::vector<Mat> d;
    for (int r = 0; r < k.rows(); ++r) d.push_back(diag(k.row(r)));
    return d;
}

std::vector<Mat> assemble(const std::vector<std::pair<int, int>>& S, const std::vector<Mat>& dpart) {
    std::vector<Mat> b;
    for (auto [i, j] : S) b.push_back(E(4, i, j));
    b.insert(b.end(), dpart.begin(), dpart.end());
    return b;
}

bool root_sum_ok(std::pair<int, int> a, std::pair<int, int> b) {
    std::array<int, 4> v{};
    v[a.first] += 1;
    v[a.second] -= 1;
    v[b.first] += 1;
    v[b.second] -= 1;
    int pos = 0, neg = 0, nz = 0;
    for (int x : v) {
        if (x) ++nz;
        if (x == 1) ++pos;
        if (x == -1) ++neg;
    }
    bool zero = nz == 0;
    bool root = nz == 2 && pos == 1 && neg == 1;
    return !zero && !root;
}

WeightVector from_vec(const std::vector<int>& v) { return WeightVector({v[0], v[1], v[2], v[3]}); }

WeightVector diff(const WeightVector& a, const WeightVector& b) {
    return WeightVector({a.w[0] - b.w[0], a.w[1] - b.w[1], a.w[2] - b.w[2], a.w[3] - b.w[3]});
}

WeightVector scaled(int s, std::array<int, 4> v) {
    for (auto& x : v) x *= s;
    return WeightVector(v);
}

std::vector<WeightVector> basis_weights(const FixedPoint& p) {
    std::vector<WeightVector> w;
    for (auto [i, j] : p.roots) w.push_back(root_weight(i, j));
    for (std::size_t d = 0; d < p.diagonal_part.size(); ++d) w.push_back(WeightVector());
    return w;
}

// sl basis indices not among the pivots of a
std::vector<int> complement_indices(const LieSubspace& a) {
    Mat rows(0, sl_dim(4));
    for (auto& x : a.basis()) rows.append_row(sl_coords(x));
    auto rr = rref(rows);
    std::vector<char> piv(sl_dim(4), 0);
    for (int p : rr.pivots) piv[p] = 1;
    std::vector<int> c;
    for (int s = 0; s < sl_dim(4); ++s)
        if (!piv[s]) c.push_back(s);
    return c;
}

}  // namespace

std::vector<FixedPoint> enumerate_fixed_points() {
    auto roots = all_roots();
    std::vector<FixedPoint> pts;
    for (auto& idx : subsets_upto3(int(roots.size()))) {
        std::vector<std::pair<int, int>> S;
        for (int i : idx) S.push_back(roots[i]);
        bool ok = true;
        for (std::size_t a = 0; a < S.size(); ++a)
            for (std::size_t b = a + 1; b < S.size(); ++b)
                if (!root_sum_ok(S[a], S[b])) ok = false;
        if (!ok) continue;
        auto d = root_kernel(S);
        if (int(d.size()) != 3 - int(S.size())) continue;
        FixedPoint p;
        p.roots = S;
        p.diagonal_part = d;
        p.subspace = LieSubspace(4, assemble(S, d));
        if (!pairwise_commute(p.subspace) || !torus_invariant(p.subspace))
            throw std::logic_error("enumerate_fixed_points: candidate is not an abelian torus-fixed point");
        p.orbit = classify_orbit(p.subspace);
        pts.push_back(std::move(p));
    }
    return pts;
}

std::vector<std::vector<std::pair<int, int>>> brute_force_fixed_roots() {
    auto roots = all_roots();
    std::vector<std::vector<std::pair<int, int>>> out;
    for (auto& idx : subsets_upto3(int(roots.size()))) {
        std::vector<std::pair<int, int>> S;
        for (int i : idx) S.push_back(roots[i]);
        auto gens = assemble(S, root_kernel(S));
        LieSubspace a = LieSubspace::span(4, gens);
        if (a.dim() == 3 && pairwise_commute(a)) out.push_back(S);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> per_orbit_counts(const std::vector<FixedPoint>& pts) {
    std::vector<int> c(all_labels().size(), 0);
    for (auto& p : pts) {
        if (p.exceptional) continue;
        c[int(p.orbit)]++;
    }
    return c;
}

std::vector<WeightVector> raw_tangent_weights(const FixedPoint& p) {
    const LieSubspace& a = p.subspace;
    auto ci = complement_indices(a);
    std::vector<Mat> comp;
    for (int s : ci) comp.push_back(sl_basis(4)[s]);
    Mat M = tangent_equations(a, comp);
    auto xw = basis_weights(p);
    std::map<WeightVector, std::vector<int>> groups;
    int c = int(comp.size());
    for (int i = 0; i < a.dim(); ++i)
        for (int s = 0; s < c; ++s)
            groups[diff(from_vec(sl_basis_weight(4, ci[s])), xw[i])].push_back(i * c + s);
    std::vector<WeightVector> out;
    for (auto& [w, cols] : groups) {
        Mat sub(0, int(cols.size()));
        for (int r = 0; r < M.rows(); ++r) {
            std::vector<Rational> row;
            bool nz = false;
            for (int col : cols) {
                row.push_back(M(r, col));
                if (!is_zero(M(r, col))) nz = true;
            }
            if (nz) sub.append_row(row);
        }
        int dim = int(cols.size()) - (sub.rows() ? rank(sub) : 0);
        for (int k = 0; k < dim; ++k) out.push_back(w);
    }
    return out;
}

std::vector<WeightVector> tangent_weights(const FixedPoint& p) {
    auto w = raw_tangent_weights(p);
    if (w.size() != 12) throw std::runtime_error("tangent_weights: tangent dimension is not 12");
    for (auto& x : w)
        if (x.zero()) throw std::runtime_error("tangent_weights: zero weight at an isolated fixed point");
    return w;
}

std::vector<WeightVector> orbit_weights(const FixedPoint& p) {
    const LieSubspace& a = p.subspace;
    std::map<WeightVector, std::vector<int>> groups;
    for (int s = 0; s < sl_dim(4); ++s) groups[from_vec(sl_basis_weight(4, s))].push_back(s);
    std::vector<WeightVector> out;
    for (auto& [w, idx] : groups) {
        std::vector<std::vector<Rational>> vecs;
        for (int s : idx) {
            std::vector<Rational> v;
            for (auto& x : a.basis()) {
                auto q = quotient_coords(a, bracket(sl_basis(4)[s], x));
                v.insert(v.end(), q.begin(), q.end());
            }
            vecs.push_back(v);
        }
        int r = rank(Mat::from_rows(vecs));
        for (int k = 0; k < r; ++k) out.push_back(w);
    }
    return out;
}

MinimalFrame minimal_frame(const FixedPoint& p) {
    if (!p.minimal()) throw std::invalid_argument("minimal_frame: not a minimal-orbit point");
    MinimalFrame f;
    bool column = std::all_of(p.roots.begin(), p.roots.end(), [&](auto r) { return r.second == p.roots[0].second; });
    f.k = column ? p.roots[0].second : p.roots[0].first;
    f.sign = column ? 1 : -1;
    for (int i = 0; i < 4; ++i)
        if (i != f.k) f.U.push_back(i);
    for (std::size_t a = 0; a < f.U.size(); ++a)
        for (std::size_t b = a; b < f.U.size(); ++b) {
            f.monomials.push_back({f.U[a], f.U[b]});
            std::array<int, 4> v{};
            v[f.U[a]] -= 1;
            v[f.U[b]] -= 1;
            f.monomial_weights.push_back(WeightVector(v));
        }
    for (std::size_t i = 0; i < f.monomial_weights.size(); ++i)
        for (std::size_t j = i + 1; j < f.monomial_weights.size(); ++j)
            if (f.monomial_weights[i] == f.monomial_weights[j])
                throw std::runtime_error("minimal_frame: weights of S^2 U* collide");
    return f;
}

std::vector<WeightVector> predicted_minimal_tangent(const FixedPoint& p) {
    MinimalFrame f = minimal_frame(p);
    std::vector<WeightVector> out;
    for (auto [a, b] : f.monomials)
        for (int c : f.U) {
            std::array<int, 4> v{};
            v[f.k] += 1;
            v[a] -= 1;
            v[b] -= 1;
            v[c] += 1;
            out.push_back(scaled(f.sign, v));
        }
    return out;
}

std::vector<FixedPoint> blowup_fixed_points(const FixedPoint& p) {
    MinimalFrame f = minimal_frame(p);
    // orbit directions: Hom(line, U) for the projective space of hyperplanes
    std::vector<WeightVector> orbit;
    for (int a : f.U) {
        std::array<int, 4> v{};
        v[f.k] += 1;
        v[a] -= 1;
        orbit.push_back(scaled(f.sign, v));
    }
    // twist of the cone line by l and det U: eps_U + eps_k, trivial modulo the diagonal
    const std::array<int, 4> chi{1, 1, 1, 1};
    int m = int(f.monomials.size());
    std::vector<FixedPoint> out;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            FixedPoint q = p;
            q.exceptional = std::make_pair(i, j);
            q.weights = orbit;
            for (int a : {i, j})
                for (int b = 0; b < m; ++b) {
                    if (b == i || b == j) continue;
                    q.weights.push_back(scaled(f.sign, diff(f.monomial_weights[b], f.monomial_weights[a]).w));
                }
            std::array<int, 4> line{};
            for (int x = 0; x < 4; ++x)
                line[x] = f.monomial_weights[i].w[x] + f.monomial_weights[j].w[x] + chi[x];
            q.weights.push_back(scaled(f.sign, line));
            for (auto& w : q.weights)
                if (w.zero()) throw std::runtime_error("blowup_fixed_points: zero weight");
            out.push_back(std::move(q));
        }
    return out;
}

std::vector<FixedPoint> fixed_point_data(int jobs) {
    auto base = enumerate_fixed_points();
    std::vector<std::vector<FixedPoint>> per(base.size());
    auto work = [&](std::size_t i) {
        if (base[i].minimal()) {
            per[i] = blowup_fixed_points(base[i]);
        } else {
            FixedPoint q = base[i];
            q.weights = tangent_weights(q);
            per[i] = {q};
        }
    };
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < base.size(); ++i) work(i);
    } else {
        std::vector<std::thread> th;
        for (int t = 0; t < jobs; ++t)
            th.emplace_back([&, t] {
                for (std::size_t i = t; i < base.size(); i += jobs) work(i);
            });
        for (auto& x : th) x.join();
    }
    std::vector<FixedPoint> out;
    for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::array<long, 4> choose_lambda(const std::vector<FixedPoint>& pts) {
    for (long N = 2; N <= 50; ++N) {
        std::array<long, 4> l{N * N * N, N * N, N, -N * N * N - N * N - N};
        bool ok = true;
        for (auto& p : pts)
            for (auto& w : p.weights)
                if (w.pair(l) == 0) ok = false;
        if (ok) return l;
    }
    throw std::runtime_error("choose_lambda: no generic one-parameter subgroup found");
}

std::vector<int> betti_numbers(const std::vector<FixedPoint>& pts, const std::array<long, 4>& l) {
    std::vector<int> b(13, 0);
    for (auto& p : pts) {
        int neg = 0;
        for (auto& w : p.weights) {
            long v = w.pair(l);
            if (v == 0) throw std::invalid_argument("betti_numbers: lambda is not generic");
            if (v < 0) ++neg;
        }
        b.at(neg)++;
    }
    return b;
}

std::vector<int> betti_numbers(int jobs) {
    auto pts = fixed_point_data(jobs);
    return betti_numbers(pts, choose_lambda(pts));
}

int euler_characteristic(int jobs) { return int(fixed_point_data(jobs).size()); }

bool palindromic(const std::vector<int>& b) {
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] != b[b.size() - 1 - i]) return false;
    return true;
}

namespace {
Rational rpow(const Rational& t, long e) {
    mpz_class num, den;
    unsigned long a = e < 0 ? -e : e;
    mpz_pow_ui(num.get_mpz_t(), t.get_num_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), t.get_den_mpz_t(), a);
    Rational r(e < 0 ? den : num, e < 0 ? num : den);
    r.canonicalize();
    return r;
}
}  // namespace

Rational localized_chi_y(const std::vector<FixedPoint>& pts, const std::array<long, 4>& l, const Rational& y,
                         const Rational& t) {
    Rational s = 0;
    for (auto& p : pts) {
        Rational term = 1;
        for (auto& w : p.weights) {
            Rational tw = rpow(t, w.pair(l));
            term *= (1 + y * tw) / (1 - tw);
        }
        s += term;
    }
    return s;
}

std::vector<int> chow_target() { return {1, 1, 3, 5, 7, 11, 14, 13, 11, 7, 5, 1, 1}; }

ChowReport chow_report(int jobs) {
    ChowReport r;
    r.target = chow_target();
    r.betti = betti_numbers(jobs);
    const std::vector<int> g26{1, 1, 2, 2, 3, 2, 2, 1, 1};   // Schubert cells of G(2,6)
    const std::vector<int> p3{1, 1, 1, 1};
    r.exceptional_classes.assign(12, 0);
    for (std::size_t i = 0; i < g26.size(); ++i)
        for (std::size_t j = 0; j < p3.size(); ++j) r.exceptional_classes[i + j] += g26[i] * p3[j];
    r.reconstruction.assign(13, 0);
    for (int k = 0; k <= 12; ++k) {
        int e = k < 12 ? r.exceptional_classes[k] : 0;
        int p = k < 4 ? 1 : 0;
        r.reconstruction[k] = r.betti[k] - 2 * e + 2 * p;
    }
    r.discrepancy = r.reconstruction != r.target;
    r.method = "rank_k = b_2k(blow-up) - 2 * b_2k(G(2,6)-bundle over P^3) + 2 * b_2k(P^3)";
    return r;
}

}  // namespace redn
