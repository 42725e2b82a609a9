#include "classint/roots.hpp"

#include "classint/rational.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace classint {

long dot(const Root& a, const Root& b)
{
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (long)a[i] * b[i];
    return s;
}

bool is_bn_root(const Root& r)
{
    int nonzero = 0;
    long norm = 0;
    for (int v : r) {
        if (v != 0)
            ++nonzero;
        if (v < -1 || v > 1)
            return false;
        norm += (long)v * v;
    }
    return (nonzero == 1 && norm == 1) || (nonzero == 2 && norm == 2);
}

RootSubset positive_roots(int n, RootFlavor flavor)
{
    if (n < 1)
        throw RankTooSmall("positive_roots: rank must be at least 1");
    RootSubset out;
    if (flavor == RootFlavor::A || flavor == RootFlavor::D || flavor == RootFlavor::B) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                Root r(n, 0);
                r[i] = 1;
                r[j] = -1;
                out.insert(r);
                if (flavor != RootFlavor::A) {
                    r[j] = 1;
                    out.insert(r);
                }
            }
        }
    }
    if (flavor == RootFlavor::B) {
        for (int k = 0; k < n; ++k) {
            Root r(n, 0);
            r[k] = 1;
            out.insert(r);
        }
    }
    return out;
}

std::vector<long> reflect(const Root& v, const std::vector<long>& x)
{
    long vv = dot(v, v);
    if (vv == 0)
        throw ZeroVector("reflect: zero vector");
    long vx = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        vx += v[i] * x[i];
    // 2 <v,x> / <v,v> is integral for root lengths 1 and 2
    long c = 2 * vx / vv;
    if (2 * vx % vv != 0)
        throw std::domain_error("reflect: non-integral reflection");
    std::vector<long> y = x;
    for (std::size_t i = 0; i < v.size(); ++i)
        y[i] -= c * v[i];
    return y;
}

Root reflect_root(const Root& v, const Root& x)
{
    std::vector<long> xl(x.begin(), x.end());
    auto y = reflect(v, xl);
    Root r(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        r[i] = (int)y[i];
    return r;
}

WeylElement WeylElement::identity(int n)
{
    WeylElement w;
    w.perm.resize(n);
    std::iota(w.perm.begin(), w.perm.end(), 0);
    w.signs.assign(n, 1);
    return w;
}

Root WeylElement::apply(const Root& x) const
{
    Root y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] = signs[i] * x[perm[i]];
    return y;
}

WeylElement WeylElement::inverse() const
{
    WeylElement w;
    int n = (int)perm.size();
    w.perm.resize(n);
    w.signs.resize(n);
    for (int i = 0; i < n; ++i) {
        w.perm[perm[i]] = i;
        w.signs[perm[i]] = signs[i];
    }
    return w;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b)
{
    int n = (int)a.perm.size();
    WeylElement w;
    w.perm.resize(n);
    w.signs.resize(n);
    for (int i = 0; i < n; ++i) {
        w.perm[i] = b.perm[a.perm[i]];
        w.signs[i] = a.signs[i] * b.signs[a.perm[i]];
    }
    return w;
}

bool WeylElement::operator<(const WeylElement& o) const
{
    if (perm != o.perm)
        return perm < o.perm;
    return signs < o.signs;
}

WeylElement weyl_from_reflection(const Root& v, int n)
{
    WeylElement out;
    out.perm.assign(n, 0);
    out.signs.assign(n, 1);
    for (int i = 0; i < n; ++i) {
        Root e(n, 0);
        e[i] = 1;
        Root y = reflect_root(v, e); // image of the basis vector e_i
        for (int m = 0; m < n; ++m) {
            if (y[m] != 0) {
                out.perm[m] = i;
                out.signs[m] = y[m];
            }
        }
    }
    return out;
}

std::vector<WeylElement> weyl_group(int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<WeylElement> all;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            WeylElement w;
            w.perm = p;
            w.signs.resize(n);
            for (int i = 0; i < n; ++i)
                w.signs[i] = (mask >> i) & 1 ? -1 : 1;
            all.push_back(w);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(all.begin(), all.end());
    return all;
}

RootSubset generated_subsystem(const RootSubset& F)
{
    if (F.empty())
        throw EmptySupport("generated_subsystem: empty generator set");
    RootSubset closed;
    for (const auto& r : F) {
        closed.insert(r);
        Root neg = r;
        for (auto& v : neg)
            v = -v;
        closed.insert(neg);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Root> snapshot(closed.begin(), closed.end());
        for (const auto& v : snapshot)
            for (const auto& x : snapshot)
                if (closed.insert(reflect_root(v, x)).second)
                    grew = true;
    }
    return closed;
}

std::vector<RootSubset> irreducible_components(const RootSubset& delta)
{
    if (delta.empty())
        return {};
    RootSubset bar = generated_subsystem(delta);

    // connected components of the non-orthogonality graph on the closure
    std::vector<Root> verts(bar.begin(), bar.end());
    std::vector<int> comp(verts.size(), -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < verts.size(); ++s) {
        if (comp[s] >= 0)
            continue;
        comp[s] = ncomp;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            auto i = queue.front();
            queue.pop_front();
            for (std::size_t j = 0; j < verts.size(); ++j)
                if (comp[j] < 0 && dot(verts[i], verts[j]) != 0) {
                    comp[j] = ncomp;
                    queue.push_back(j);
                }
        }
        ++ncomp;
    }

    std::vector<RootSubset> parts(ncomp);
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (delta.count(verts[i]))
            parts[comp[i]].insert(verts[i]);
    std::erase_if(parts, [](const RootSubset& s) { return s.empty(); });
    // deterministic order: by smallest root
    std::sort(parts.begin(), parts.end(),
              [](const RootSubset& a, const RootSubset& b) { return *a.begin() < *b.begin(); });
    return parts;
}

namespace {

int subset_rank(const RootSubset& s)
{
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : s)
        rows.emplace_back(r.begin(), r.end());
    int rank = 0;
    std::size_t col = 0, dims = rows.empty() ? 0 : rows[0].size();
    for (; col < dims && rank < (int)rows.size(); ++col) {
        int pivot = -1;
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (rows[i][col] != 0) {
                pivot = (int)i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0)
                continue;
            Rational f = rows[i][col] / rows[rank][col];
            for (std::size_t j = col; j < dims; ++j)
                rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

bool connected(const RootSubset& s)
{
    if (s.empty())
        return false;
    std::vector<Root> verts(s.begin(), s.end());
    std::vector<bool> seen(verts.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        auto i = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < verts.size(); ++j)
            if (!seen[j] && dot(verts[i], verts[j]) != 0) {
                seen[j] = true;
                ++count;
                queue.push_back(j);
            }
    }
    return count == verts.size();
}

// True when some sign change of coordinates puts every root in e_i - e_j form.
bool a_embeddable(const RootSubset& s)
{
    std::vector<int> support;
    int n = (int)(*s.begin()).size();
    for (int i = 0; i < n; ++i)
        for (const auto& r : s)
            if (r[i] != 0) {
                support.push_back(i);
                break;
            }
    if (support.size() > 16)
        return false;
    for (unsigned mask = 0; mask < (1u << support.size()); ++mask) {
        bool ok = true;
        for (const auto& r : s) {
            int plus = 0, minus = 0, nz = 0;
            for (std::size_t k = 0; k < support.size(); ++k) {
                int v = r[support[k]] * (((mask >> k) & 1) ? -1 : 1);
                if (v > 0)
                    ++plus;
                if (v < 0)
                    ++minus;
                if (v != 0)
                    ++nz;
            }
            if (!(nz == 2 && plus == 1 && minus == 1)) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    }
    return false;
}

} // namespace

ComponentType component_type(const RootSubset& component)
{
    if (component.empty())
        throw EmptySupport("component_type: empty set");
    if (!connected(component))
        throw NotIrreducible("component_type: set is not irreducible");
    RootSubset bar = generated_subsystem(component);
    int rank = subset_rank(bar);
    if (rank == 1)
        return {CartanLetter::Rank1, 1};
    bool has_short = false;
    for (const auto& r : bar)
        if (dot(r, r) == 1)
            has_short = true;
    if (has_short)
        return {CartanLetter::B, rank};
    long positives = (long)bar.size() / 2;
    if (positives == (long)rank * (rank + 1) / 2 && a_embeddable(bar))
        return {CartanLetter::A, rank};
    return {CartanLetter::D, rank};
}

std::string to_string(ExtShape s)
{
    switch (s) {
    case ExtShape::Am: return "Am";
    case ExtShape::Bm: return "Bm";
    case ExtShape::Dm: return "Dm";
    case ExtShape::EAm: return "EAm";
    case ExtShape::EBm: return "EBm";
    case ExtShape::EDm: return "EDm";
    case ExtShape::BDm: return "BDm";
    }
    return "?";
}

RootSubset ext_sets(int m, ExtShape shape)
{
    auto need = [&](int bound) {
        if (m < bound)
            throw RankTooSmall("ext_sets: " + to_string(shape) + " needs m >= " +
                               std::to_string(bound));
    };
    auto chain = [&](int upto) { // e_1-e_2, ..., e_{upto-1}-e_upto
        RootSubset s;
        for (int i = 0; i + 1 < upto; ++i) {
            Root r(m, 0);
            r[i] = 1;
            r[i + 1] = -1;
            s.insert(r);
        }
        return s;
    };
    RootSubset s;
    Root r(m, 0);
    switch (shape) {
    case ExtShape::Am:
        need(3);
        return chain(m);
    case ExtShape::Bm:
        need(2);
        s = chain(m);
        r.assign(m, 0);
        r[m - 1] = 1;
        s.insert(r);
        return s;
    case ExtShape::Dm:
        need(4);
        s = chain(m);
        r.assign(m, 0);
        r[m - 2] = 1;
        r[m - 1] = 1;
        s.insert(r);
        return s;
    case ExtShape::EAm:
        need(3);
        s = chain(m);
        r.assign(m, 0);
        r[m - 1] = 1;
        r[0] = -1;
        s.insert(r);
        return s;
    case ExtShape::EBm:
        need(2);
        s = chain(m);
        r.assign(m, 0);
        r[m - 1] = 1;
        s.insert(r);
        r.assign(m, 0);
        r[0] = -1;
        s.insert(r);
        return s;
    case ExtShape::EDm:
        need(4);
        s = chain(m);
        r.assign(m, 0);
        r[m - 2] = 1;
        r[m - 1] = 1;
        s.insert(r);
        r.assign(m, 0);
        r[0] = -1;
        r[1] = -1;
        s.insert(r);
        return s;
    case ExtShape::BDm:
        need(3);
        s = chain(m);
        r.assign(m, 0);
        r[m - 2] = 1;
        r[m - 1] = 1;
        s.insert(r);
        r.assign(m, 0);
        r[0] = -1;
        s.insert(r);
        return s;
    }
    throw std::logic_error("ext_sets: unknown shape");
}

namespace {

RootSubset apply_weyl(const WeylElement& w, const RootSubset& s)
{
    RootSubset out;
    for (const auto& r : s)
        out.insert(w.apply(r));
    return out;
}

Root padded(const Root& r, int n)
{
    Root out(n, 0);
    std::copy(r.begin(), r.end(), out.begin());
    return out;
}

} // namespace

ObtuseNormalForm obtuse_normal_form(const RootSubset& S, int ambient_rank)
{
    if (S.empty())
        throw EmptySupport("obtuse_normal_form: empty set");
    for (const auto& a : S)
        for (const auto& b : S)
            if (a != b && dot(a, b) > 0)
                throw NotObtuse("obtuse_normal_form: positive inner product present");
    if (!connected(S))
        throw NotIrreducible("obtuse_normal_form: set is not irreducible");
    if (subset_rank(S) < 2)
        throw RankTooSmall("obtuse_normal_form: rank below two");

    // candidate targets with matching cardinality, padded to the ambient rank
    std::vector<std::pair<ExtShape, int>> shapes;
    for (ExtShape sh : {ExtShape::Am, ExtShape::Bm, ExtShape::Dm, ExtShape::EAm, ExtShape::EBm,
                        ExtShape::EDm, ExtShape::BDm}) {
        for (int m = 2; m <= ambient_rank; ++m) {
            try {
                if (ext_sets(m, sh).size() == S.size())
                    shapes.emplace_back(sh, m);
            } catch (const RankTooSmall&) {
            }
        }
    }
    std::map<std::pair<ExtShape, int>, RootSubset> targets;
    for (auto [sh, m] : shapes) {
        RootSubset t;
        for (const auto& r : ext_sets(m, sh))
            t.insert(padded(r, ambient_rank));
        targets[{sh, m}] = t;
    }

    // generators: adjacent transpositions plus the last sign flip
    std::vector<WeylElement> gens;
    for (int i = 0; i + 1 < ambient_rank; ++i) {
        Root v(ambient_rank, 0);
        v[i] = 1;
        v[i + 1] = -1;
        gens.push_back(weyl_from_reflection(v, ambient_rank));
    }
    {
        Root v(ambient_rank, 0);
        v[ambient_rank - 1] = 1;
        gens.push_back(weyl_from_reflection(v, ambient_rank));
    }

    std::map<std::vector<Root>, WeylElement> visited;
    auto key = [](const RootSubset& s) { return std::vector<Root>(s.begin(), s.end()); };
    std::deque<std::pair<RootSubset, WeylElement>> queue;
    queue.emplace_back(S, WeylElement::identity(ambient_rank));
    visited[key(S)] = WeylElement::identity(ambient_rank);

    while (!queue.empty()) {
        auto [cur, w] = queue.front();
        queue.pop_front();
        for (const auto& [shm, target] : targets)
            if (cur == target)
                return {w, shm.first, shm.second};
        for (const auto& g : gens) {
            RootSubset next = apply_weyl(g, cur);
            auto k = key(next);
            if (!visited.count(k)) {
                visited[k] = g * w;
                queue.emplace_back(next, g * w);
            }
        }
    }
    throw NotListed("obtuse_normal_form: orbit exhausted without a match");
}

} // namespace classint
