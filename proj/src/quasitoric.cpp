#include "qtoric/quasitoric.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qtoric/error.hpp"

namespace qtoric {

namespace {

std::vector<int> sorted_copy(const std::vector<int>& v) {
    std::vector<int> s = v;
    std::sort(s.begin(), s.end());
    return s;
}

// Face membership tests against the sorted facet list. The empty set is a
// face of every complex here.
class FaceTester {
  public:
    explicit FaceTester(const QuasitoricData& d) {
        sorted_facets_.reserve(d.facets.size());
        for (const auto& f : d.facets)
            sorted_facets_.push_back(sorted_copy(f));
    }

    bool is_face(const std::vector<int>& sorted_set) const {
        if (sorted_set.empty())
            return true;
        for (const auto& f : sorted_facets_)
            if (std::includes(f.begin(), f.end(), sorted_set.begin(), sorted_set.end()))
                return true;
        return false;
    }

    const std::vector<std::vector<int>>& sorted_facets() const { return sorted_facets_; }

  private:
    std::vector<std::vector<int>> sorted_facets_;
};

// All nonempty faces, as sorted vertex lists.
std::set<std::vector<int>> enumerate_faces(const QuasitoricData& d) {
    std::set<std::vector<int>> faces;
    for (const auto& facet : d.facets) {
        const std::vector<int> f = sorted_copy(facet);
        const std::uint32_t full = (std::uint32_t{1} << f.size()) - 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            std::vector<int> face;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (mask & (std::uint32_t{1} << i))
                    face.push_back(f[i]);
            faces.insert(std::move(face));
        }
    }
    return faces;
}

Integer facet_det_listed(const QuasitoricData& d, int fi) {
    const auto& facet = d.facets[fi];
    IntMat m(d.m, d.m);
    for (int col = 0; col < d.m; ++col)
        for (int row = 0; row < d.m; ++row)
            m.at(row, col) = d.lambda[facet[col]][row];
    return determinant(m);
}

Integer facet_det_ascending(const QuasitoricData& d, int fi) {
    const std::vector<int> facet = sorted_copy(d.facets[fi]);
    IntMat m(d.m, d.m);
    for (int col = 0; col < d.m; ++col)
        for (int row = 0; row < d.m; ++row)
            m.at(row, col) = d.lambda[facet[col]][row];
    return determinant(m);
}

}  // namespace

int QuasitoricData::base_facet_index() const {
    if (facets.empty())
        throw ArgumentError("data has no facets");
    if (base_facet) {
        if (*base_facet < 0 || *base_facet >= facet_count())
            throw ArgumentError("base_facet index out of range");
        return *base_facet;
    }
    int best = 0;
    std::vector<int> best_sorted = sorted_copy(facets[0]);
    for (int i = 1; i < facet_count(); ++i) {
        std::vector<int> s = sorted_copy(facets[i]);
        if (s < best_sorted) {
            best = i;
            best_sorted = std::move(s);
        }
    }
    return best;
}

IntMat QuasitoricData::lambda_matrix() const {
    IntMat out(m, vertex_count());
    for (int v = 0; v < vertex_count(); ++v) {
        if (static_cast<int>(lambda[v].size()) != m)
            throw ArgumentError("lambda vector has wrong length");
        for (int j = 0; j < m; ++j)
            out.at(j, v) = lambda[v][j];
    }
    return out;
}

ValidationReport validate(const QuasitoricData& d) {
    ValidationReport rep;
    auto issue = [&rep](std::string msg) {
        rep.valid = false;
        rep.issues.push_back(std::move(msg));
    };

    if (d.m < 1)
        issue("m must be >= 1");
    const int v_count = d.vertex_count();
    if (v_count == 0)
        issue("vertex list is empty");
    if (static_cast<int>(d.lambda.size()) != v_count)
        issue("lambda must list one vector per vertex");
    else
        for (int v = 0; v < v_count; ++v)
            if (static_cast<int>(d.lambda[v].size()) != d.m) {
                std::ostringstream os;
                os << "lambda vector for vertex " << v << " has length " << d.lambda[v].size()
                   << ", expected " << d.m;
                issue(os.str());
            }
    if (d.facets.empty())
        issue("facet list is empty");

    bool shape_ok = rep.valid;
    std::set<std::vector<int>> seen;
    std::vector<char> used(std::max(v_count, 1), 0);
    for (int fi = 0; fi < d.facet_count(); ++fi) {
        const auto& facet = d.facets[fi];
        if (static_cast<int>(facet.size()) != d.m) {
            std::ostringstream os;
            os << "facet " << fi << " has " << facet.size() << " vertices, expected " << d.m;
            issue(os.str());
            shape_ok = false;
            continue;
        }
        bool facet_ok = true;
        for (int v : facet)
            if (v < 0 || v >= v_count) {
                std::ostringstream os;
                os << "facet " << fi << " references vertex " << v << " out of range";
                issue(os.str());
                shape_ok = facet_ok = false;
            }
        if (!facet_ok)
            continue;
        std::vector<int> s = sorted_copy(facet);
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            std::ostringstream os;
            os << "facet " << fi << " repeats a vertex";
            issue(os.str());
            shape_ok = false;
            continue;
        }
        if (!seen.insert(s).second) {
            std::ostringstream os;
            os << "facet " << fi << " duplicates an earlier facet";
            issue(os.str());
            shape_ok = false;
            continue;
        }
        for (int v : facet)
            used[v] = 1;
    }

    if (!shape_ok)
        return rep;

    for (int v = 0; v < v_count; ++v)
        if (!used[v]) {
            std::ostringstream os;
            os << "vertex " << v << " (" << d.vertices[v] << ") lies in no facet";
            issue(os.str());
        }
    if (d.base_facet && (*d.base_facet < 0 || *d.base_facet >= d.facet_count()))
        issue("base_facet index out of range");

    // nondegeneracy of the characteristic map, facet by facet
    for (int fi = 0; fi < d.facet_count(); ++fi) {
        Integer det = facet_det_listed(d, fi);
        rep.facet_dets.push_back(det);
        if (det != 1 && det != -1) {
            std::ostringstream os;
            os << "facet " << fi << " has lambda determinant " << det << ", expected +-1";
            issue(os.str());
        }
    }

    // pseudomanifold condition: each ridge lies in exactly two facets
    std::map<std::vector<int>, int> ridge_count;
    for (const auto& facet : d.facets) {
        const std::vector<int> s = sorted_copy(facet);
        for (int omit = 0; omit < d.m; ++omit) {
            std::vector<int> ridge;
            for (int i = 0; i < d.m; ++i)
                if (i != omit)
                    ridge.push_back(s[i]);
            ++ridge_count[ridge];
        }
    }
    for (const auto& [ridge, count] : ridge_count)
        if (count != 2) {
            std::ostringstream os;
            os << "ridge {";
            for (std::size_t i = 0; i < ridge.size(); ++i)
                os << (i ? "," : "") << ridge[i];
            os << "} lies in " << count << " facets, expected 2";
            issue(os.str());
        }

    // Euler characteristic of S^{m-1}
    const auto faces = enumerate_faces(d);
    std::vector<Integer> f(d.m, 0);
    for (const auto& face : faces)
        ++f[face.size() - 1];
    Integer chi = 0;
    for (int i = 0; i < d.m; ++i)
        chi += (i % 2 == 0) ? f[i] : -f[i];
    const Integer expected = 1 + ((d.m - 1) % 2 == 0 ? 1 : -1);
    if (chi != expected) {
        std::ostringstream os;
        os << "Euler characteristic " << chi << ", expected " << expected << " for a sphere";
        issue(os.str());
    }
    return rep;
}

Integer base_facet_determinant(const QuasitoricData& d) {
    return facet_det_ascending(d, d.base_facet_index());
}

Monomial::Monomial(std::vector<std::pair<int, int>> e) : exps(std::move(e)) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i].second < 1)
            throw ArgumentError("monomial exponents must be >= 1");
        if (exps[i].first < 0 || (i > 0 && exps[i - 1].first >= exps[i].first))
            throw ArgumentError("monomial vertices must be strictly increasing");
    }
}

int Monomial::degree() const {
    int deg = 0;
    for (const auto& [v, e] : exps)
        deg += e;
    return deg;
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    s.reserve(exps.size());
    for (const auto& [v, e] : exps)
        s.push_back(v);
    return s;
}

std::string Monomial::str() const {
    if (exps.empty())
        return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (i)
            os << '.';
        os << 'x' << exps[i].first;
        if (exps[i].second > 1)
            os << '^' << exps[i].second;
    }
    return os.str();
}

int GradedPiece::basis_index(const Monomial& mu) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), mu);
    if (it == basis.end() || !(*it == mu))
        return -1;
    return static_cast<int>(it - basis.begin());
}

Integer GradedPiece::eval_monomial(const Monomial& mu) const {
    const int idx = basis_index(mu);
    return idx < 0 ? Integer(0) : eval[idx];
}

namespace {

// Admissible degree-k monomials (support a face of K_P), sorted by the
// Monomial comparison; this is the basis order used everywhere.
std::vector<Monomial> admissible_monomials(const QuasitoricData& d, int k,
                                           const FaceTester& faces) {
    std::vector<Monomial> out;
    std::vector<std::pair<int, int>> cur;
    std::vector<int> support;
    const int v_count = d.vertex_count();
    std::function<void(int, int)> rec = [&](int v, int remaining) {
        if (remaining == 0) {
            out.push_back(Monomial(cur));
            return;
        }
        if (v == v_count)
            return;
        support.push_back(v);
        if (faces.is_face(support)) {
            for (int e = remaining; e >= 1; --e) {
                cur.emplace_back(v, e);
                rec(v + 1, remaining - e);
                cur.pop_back();
            }
        }
        support.pop_back();
        rec(v + 1, remaining);
    };
    rec(0, k);
    std::sort(out.begin(), out.end());
    return out;
}

IntMat assemble_relations(const QuasitoricData& d, const std::vector<Monomial>& basis,
                          const std::vector<Monomial>& lower, const FaceTester& faces) {
    std::map<Monomial, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index.emplace(basis[i], static_cast<int>(i));

    IntMat rel(static_cast<int>(lower.size()) * d.m, static_cast<int>(basis.size()));
    int row = 0;
    for (const Monomial& mu : lower) {
        for (int j = 0; j < d.m; ++j, ++row) {
            for (int v = 0; v < d.vertex_count(); ++v) {
                const Integer& lam = d.lambda[v][j];
                if (lam == 0)
                    continue;
                // x_v * mu, dropped when its support is not a face
                std::vector<std::pair<int, int>> exps = mu.exps;
                auto it = std::lower_bound(
                    exps.begin(), exps.end(), std::pair<int, int>{v, 0},
                    [](const auto& a, const auto& b) { return a.first < b.first; });
                if (it != exps.end() && it->first == v) {
                    ++it->second;
                } else {
                    exps.insert(it, {v, 1});
                }
                Monomial prod{std::move(exps)};
                if (!faces.is_face(prod.support()))
                    continue;
                rel.at(row, index.at(prod)) += lam;
            }
        }
    }
    return rel;
}

std::string structural_key(const QuasitoricData& d) {
    std::ostringstream os;
    os << "m=" << d.m << ";V=" << d.vertex_count() << ";F=";
    for (const auto& f : d.facets) {
        os << '[';
        for (std::size_t i = 0; i < f.size(); ++i)
            os << (i ? "," : "") << f[i];
        os << ']';
    }
    os << ";L=";
    for (const auto& row : d.lambda) {
        os << '[';
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << row[i];
        os << ']';
    }
    os << ";B=" << d.base_facet_index();
    return os.str();
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::filesystem::path disk_cache_path(const std::string& key, int degree) {
    const char* dir = std::getenv("QTORIC_CACHE_DIR");
    if (!dir || !*dir)
        return {};
    std::ostringstream name;
    name << "qtoric-" << std::hex << fnv1a64(key) << "-deg" << std::dec << degree << ".json";
    return std::filesystem::path(dir) / name.str();
}

bool load_cached_cokernel(const std::filesystem::path& path, const std::string& key,
                          GradedPiece& piece) {
    if (path.empty())
        return false;
    std::ifstream in(path);
    if (!in)
        return false;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("key").get<std::string>() != key ||
            j.at("degree").get<int>() != piece.degree ||
            j.at("basis_size").get<std::size_t>() != piece.basis.size())
            return false;
        piece.invariant_factors.clear();
        for (const auto& s : j.at("invariants"))
            piece.invariant_factors.emplace_back(s.get<std::string>());
        piece.cokernel_rank = j.at("cokernel_rank").get<int>();
        piece.torsion.clear();
        for (const auto& s : j.at("torsion"))
            piece.torsion.emplace_back(s.get<std::string>());
        piece.eval.clear();
        for (const auto& s : j.at("eval"))
            piece.eval.emplace_back(s.get<std::string>());
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void store_cached_cokernel(const std::filesystem::path& path, const std::string& key,
                           const GradedPiece& piece) {
    if (path.empty())
        return;
    try {
        nlohmann::json j;
        j["key"] = key;
        j["degree"] = piece.degree;
        j["basis_size"] = piece.basis.size();
        auto strs = [](const std::vector<Integer>& v) {
            std::vector<std::string> out;
            out.reserve(v.size());
            for (const Integer& x : v)
                out.push_back(x.str());
            return out;
        };
        j["invariants"] = strs(piece.invariant_factors);
        j["cokernel_rank"] = piece.cokernel_rank;
        j["torsion"] = strs(piece.torsion);
        j["eval"] = strs(piece.eval);
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        std::filesystem::path tmp = path;
        tmp += ".tmp" + std::to_string(::getpid());
        {
            std::ofstream out(tmp);
            out << j.dump();
        }
        std::filesystem::rename(tmp, path, ec);
    } catch (const std::exception&) {
        // cache writes are best effort
    }
}

std::mutex g_piece_mutex;
std::map<std::pair<std::string, int>, std::shared_ptr<const GradedPiece>> g_piece_cache;

}  // namespace

std::shared_ptr<const GradedPiece> graded_piece(const QuasitoricData& d, int k) {
    const ValidationReport rep = validate(d);
    if (!rep.valid)
        throw ArgumentError("graded_piece: invalid data: " + rep.issues.front());
    if (k < 0 || k > d.m)
        throw ArgumentError("graded_piece: degree out of range");

    const std::string key = structural_key(d);
    {
        std::scoped_lock lock(g_piece_mutex);
        auto it = g_piece_cache.find({key, k});
        if (it != g_piece_cache.end())
            return it->second;
    }

    auto piece = std::make_shared<GradedPiece>();
    piece->degree = k;
    const FaceTester faces(d);
    piece->basis = admissible_monomials(d, k, faces);
    const std::vector<Monomial> lower =
        k >= 1 ? admissible_monomials(d, k - 1, faces) : std::vector<Monomial>{};
    piece->relations = assemble_relations(d, piece->basis, lower, faces);

    const std::filesystem::path cache_path = disk_cache_path(key, k);
    if (!load_cached_cokernel(cache_path, key, *piece)) {
        const SmithResult snf = smith_normal_form(piece->relations.transposed());
        piece->invariant_factors = snf.invariants;
        piece->cokernel_rank = static_cast<int>(piece->basis.size()) - snf.rank;
        for (const Integer& inv : snf.invariants)
            if (inv > 1)
                piece->torsion.push_back(inv);
        if (k == d.m) {
            if (piece->cokernel_rank != 1 || !piece->torsion.empty()) {
                std::ostringstream os;
                os << "top cokernel is not free of rank 1 (rank " << piece->cokernel_rank
                   << ", " << piece->torsion.size() << " torsion factors): "
                   << "input does not define an oriented quasitoric manifold here";
                throw IntegrityError(os.str());
            }
            // the unique free coordinate of the Smith basis is the functional
            std::vector<Integer> phi(piece->basis.size());
            for (std::size_t i = 0; i < phi.size(); ++i)
                phi[i] = snf.u.at(snf.rank, static_cast<int>(i));

            std::vector<std::pair<int, int>> base_exps;
            for (int v : sorted_copy(d.facets[d.base_facet_index()]))
                base_exps.emplace_back(v, 1);
            const int base_idx = piece->basis_index(Monomial{std::move(base_exps)});
            if (base_idx < 0)
                throw IntegrityError("base facet monomial missing from the basis");
            const Integer anchor = phi[base_idx];
            if (anchor != 1 && anchor != -1)
                throw IntegrityError(
                    "base facet monomial does not generate the top cohomology");
            const Integer scale = base_facet_determinant(d) * anchor;
            piece->eval.resize(phi.size());
            for (std::size_t i = 0; i < phi.size(); ++i)
                piece->eval[i] = phi[i] * scale;
        }
        store_cached_cokernel(cache_path, key, *piece);
    }

    std::scoped_lock lock(g_piece_mutex);
    auto [it, inserted] = g_piece_cache.emplace(std::pair{key, k}, piece);
    return it->second;
}

Integer top_eval(const QuasitoricData& d, const Monomial& mu) {
    if (mu.degree() != d.m)
        throw ArgumentError("top_eval: monomial degree must equal m");
    return graded_piece(d, d.m)->eval_monomial(mu);
}

Integer char_number(const QuasitoricData& d, const Composition& alpha) {
    if (alpha.weight() != d.m)
        throw ArgumentError("char_number: composition weight must equal m");
    const auto piece = graded_piece(d, d.m);
    const FaceTester faces(d);
    const auto& parts = alpha.parts();
    const int r = alpha.length();
    const int v_count = d.vertex_count();

    Integer total = 0;
    std::vector<std::pair<int, int>> cur;
    std::vector<int> support;
    std::function<void(int, int)> rec = [&](int pos, int next) {
        if (pos == r) {
            total += piece->eval_monomial(Monomial{cur});
            return;
        }
        for (int v = next; v <= v_count - (r - pos); ++v) {
            support.push_back(v);
            if (faces.is_face(support)) {
                cur.emplace_back(v, parts[pos]);
                rec(pos + 1, v + 1);
                cur.pop_back();
            }
            support.pop_back();
        }
    };
    rec(0, 0);
    return total;
}

CharFunction char_function(const QuasitoricData& d) {
    CharFunction out;
    out.degree = d.m;
    for (const Composition& alpha : compositions_of(d.m))
        out.values.emplace(alpha, char_number(d, alpha));
    return out;
}

QuasitoricData product(const QuasitoricData& p, const QuasitoricData& q) {
    for (const QuasitoricData* d : {&p, &q}) {
        const ValidationReport rep = validate(*d);
        if (!rep.valid)
            throw ArgumentError("product: invalid factor '" + d->name +
                                "': " + rep.issues.front());
    }
    QuasitoricData out;
    out.name = p.name + "x" + q.name;
    out.m = p.m + q.m;
    out.vertices = p.vertices;
    out.vertices.insert(out.vertices.end(), q.vertices.begin(), q.vertices.end());

    const int shift = p.vertex_count();
    for (const auto& fp : p.facets)
        for (const auto& fq : q.facets) {
            std::vector<int> facet = fp;
            for (int v : fq)
                facet.push_back(v + shift);
            out.facets.push_back(std::move(facet));
        }

    for (const auto& row : p.lambda) {
        std::vector<Integer> padded = row;
        padded.resize(out.m, 0);
        out.lambda.push_back(std::move(padded));
    }
    for (const auto& row : q.lambda) {
        std::vector<Integer> padded(p.m, 0);
        padded.insert(padded.end(), row.begin(), row.end());
        out.lambda.push_back(std::move(padded));
    }
    out.base_facet = p.base_facet_index() * q.facet_count() + q.base_facet_index();
    return out;
}

QuasitoricData preset_cpn(int n) {
    if (n < 1)
        throw ArgumentError("preset_cpn: n must be >= 1");
    QuasitoricData d;
    d.name = "cp" + std::to_string(n);
    d.m = n;
    for (int v = 0; v <= n; ++v)
        d.vertices.push_back("f" + std::to_string(v));
    // lexicographic n-subsets of {0..n}: facet i omits vertex n-i
    for (int i = 0; i <= n; ++i) {
        std::vector<int> facet;
        for (int v = 0; v <= n; ++v)
            if (v != n - i)
                facet.push_back(v);
        d.facets.push_back(std::move(facet));
    }
    d.lambda.push_back(std::vector<Integer>(n, -1));
    for (int i = 1; i <= n; ++i) {
        std::vector<Integer> e(n, 0);
        e[i - 1] = 1;
        d.lambda.push_back(std::move(e));
    }
    // the facet {1..n} carries the identity lambda block; anchoring there
    // makes the normalization agree with the complex orientation
    d.base_facet = n;
    return d;
}

QuasitoricData preset_hirzebruch(int a) {
    QuasitoricData d;
    d.name = "hirzebruch" + std::to_string(a);
    d.m = 2;
    d.vertices = {"f1", "f2", "f3", "f4"};
    d.facets = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    d.lambda = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
    return d;
}

FHVector f_h_vector(const QuasitoricData& d) {
    const ValidationReport rep = validate(d);
    if (!rep.valid)
        throw ArgumentError("f_h_vector: invalid data: " + rep.issues.front());
    FHVector out;
    out.f.assign(d.m, 0);
    for (const auto& face : enumerate_faces(d))
        ++out.f[face.size() - 1];
    // h_k = sum_{i=0..k} (-1)^{k-i} C(m-i, k-i) f_{i-1}, with f_{-1} = 1
    out.h.assign(d.m + 1, 0);
    for (int k = 0; k <= d.m; ++k)
        for (int i = 0; i <= k; ++i) {
            const Integer f_prev = i == 0 ? Integer(1) : out.f[i - 1];
            const Integer term = binomial(d.m - i, k - i) * f_prev;
            out.h[k] += (k - i) % 2 == 0 ? term : -term;
        }
    return out;
}

KernelLattice kernel_lattice(const QuasitoricData& d) {
    if (d.vertex_count() == 0)
        throw ArgumentError("kernel_lattice: no vertices");
    const IntMat lam = d.lambda_matrix();
    const SmithResult snf = smith_normal_form(lam);
    bool surjective = snf.rank == d.m;
    for (const Integer& inv : snf.invariants)
        if (inv != 1)
            surjective = false;
    if (!surjective)
        throw IntegrityError("kernel_lattice: lambda is not surjective over the integers");
    KernelLattice out;
    out.basis = integer_kernel_basis(lam);
    out.rank = out.basis.rows();
    return out;
}

}  // namespace qtoric
