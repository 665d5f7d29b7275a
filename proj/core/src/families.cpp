#include "tokenjump/families.hpp"

#include <algorithm>
#include <random>

#include "tokenjump/independent_set.hpp"

namespace tj {
namespace {

// std::shuffle / distributions are implementation-defined; keep sampling
// reproducible across standard libraries with explicit arithmetic.
std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

void shuffle_vertices(std::mt19937_64& rng, VertexList& v) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng_below(rng, i)]);
}

// Greedy independent pick scanning `order`; nullopt when fewer than k found.
std::optional<VertexList> greedy_pick(const Graph& g, const VertexList& order, int k) {
    VertexList picked;
    for (Vertex v : order) {
        bool clash = false;
        const auto& nv = g.neighbors(v);
        for (Vertex u : picked)
            if (std::binary_search(nv.begin(), nv.end(), u)) {
                clash = true;
                break;
            }
        if (!clash) {
            picked.push_back(v);
            if (static_cast<int>(picked.size()) == k) {
                std::sort(picked.begin(), picked.end());
                return picked;
            }
        }
    }
    return std::nullopt;
}

VertexList canonical_low_is(const Graph& g, int k) {
    if (auto s = greedy_pick(g, g.vertices(), k)) return *s;
    if (auto s = find_independent_set_exact(g, k)) return *s;
    throw generation_error("k exceeds the independence number of the requested graph");
}

VertexList canonical_high_is(const Graph& g, int k) {
    VertexList order = g.vertices();
    std::reverse(order.begin(), order.end());
    if (auto s = greedy_pick(g, order, k)) return *s;
    if (auto s = find_independent_set_exact(g, k)) return *s;
    throw generation_error("k exceeds the independence number of the requested graph");
}

VertexList sampled_is(const Graph& g, int k, std::mt19937_64& rng) {
    VertexList order = g.vertices();
    for (int attempt = 0; attempt < 32; ++attempt) {
        shuffle_vertices(rng, order);
        if (auto s = greedy_pick(g, order, k)) return *s;
    }
    if (auto s = find_independent_set_exact(g, k)) return *s;
    throw generation_error("k exceeds the independence number of the requested graph");
}

Instance finish(Graph g, VertexList start, VertexList target, int k) {
    (void)k;
    return Instance::create(std::move(g), TokenSet(std::move(start)), TokenSet(std::move(target)),
                            3, Mode::planar, /*check_forbidden=*/false);
}

Instance with_terminals(Graph g, const FamilySpec& spec) {
    VertexList start, target;
    if (spec.seed) {
        std::mt19937_64 rng(*spec.seed);
        start = sampled_is(g, spec.k, rng);
        target = sampled_is(g, spec.k, rng);
    } else {
        start = canonical_low_is(g, spec.k);
        target = canonical_high_is(g, spec.k);
    }
    return finish(std::move(g), std::move(start), std::move(target), spec.k);
}

Graph grid_graph(int rows, int cols) {
    Graph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    return g;
}

Instance make_grid(const FamilySpec& spec) {
    if (spec.rows < 1 || spec.cols < 1) throw generation_error("grid needs rows,cols >= 1");
    return with_terminals(grid_graph(spec.rows, spec.cols), spec);
}

Instance make_cycle(const FamilySpec& spec) {
    if (spec.n < 3) throw generation_error("cycle needs n >= 3");
    Graph g(spec.n);
    for (int v = 0; v < spec.n; ++v) g.add_edge(v, (v + 1) % spec.n);
    return with_terminals(std::move(g), spec);
}

Instance make_path(const FamilySpec& spec) {
    if (spec.n < 1) throw generation_error("path needs n >= 1");
    Graph g(spec.n);
    for (int v = 0; v + 1 < spec.n; ++v) g.add_edge(v, v + 1);
    return with_terminals(std::move(g), spec);
}

// Hub u in both terminal sets, adjacent to a class of m leaves; the other
// k-1 tokens of each side sit on isolated vertices. Exercises the Step-2
// schedule: the hub token must detour through the class.
Instance make_star_gadget(const FamilySpec& spec) {
    const int k = spec.k;
    if (k < 1) throw generation_error("star-gadget needs k >= 1");
    const int m = spec.m > 0 ? spec.m : 10 * k + 5;
    const Vertex hub = 0;
    const int first_p = 1;                // k-1 start-only vertices
    const int first_q = first_p + (k - 1);  // k-1 target-only vertices
    const int first_leaf = first_q + (k - 1);
    Graph g(first_leaf + m);
    for (int j = 0; j < m; ++j) g.add_edge(hub, first_leaf + j);

    VertexList start{hub}, target{hub};
    for (int i = 0; i < k - 1; ++i) {
        start.push_back(first_p + i);
        target.push_back(first_q + i);
    }
    return finish(std::move(g), std::move(start), std::move(target), k);
}

// Two start vertices joined to every vertex of an m-sized class (a K_{2,m});
// targets are isolated. The class key meets the start set twice, so Step 2
// never fires and oversized classes get shrunk.
Instance make_k2m_gadget(const FamilySpec& spec) {
    const int k = spec.k;
    if (k < 2) throw generation_error("k2m-gadget needs k >= 2");
    const int m = spec.m > 0 ? spec.m : 10 * k + 5;
    const Vertex u1 = 0, u2 = 1, r1 = 2, r2 = 3;
    const int first_c = 4;
    const int first_shared = first_c + m;  // k-2 vertices in both sets
    Graph g(first_shared + (k - 2));
    for (int j = 0; j < m; ++j) {
        g.add_edge(u1, first_c + j);
        g.add_edge(u2, first_c + j);
    }
    VertexList start{u1, u2}, target{r1, r2};
    for (int i = 0; i < k - 2; ++i) {
        start.push_back(first_shared + i);
        target.push_back(first_shared + i);
    }
    return finish(std::move(g), std::move(start), std::move(target), k);
}

// k start vertices, k target vertices with one cross edge, and 4k isolated
// remote vertices: Step 1 always fires.
Instance make_buffer_gadget(const FamilySpec& spec) {
    const int k = spec.k;
    if (k < 1) throw generation_error("buffer-gadget needs k >= 1");
    Graph g(6 * k);
    g.add_edge(0, k);
    VertexList start, target;
    for (int i = 0; i < k; ++i) {
        start.push_back(i);
        target.push_back(k + i);
    }
    return finish(std::move(g), std::move(start), std::move(target), k);
}

// Random edge-subgraph of a triangular-lattice patch (right, down and
// down-right neighbors), guaranteed planar.
Instance make_random_planar(const FamilySpec& spec) {
    if (spec.rows < 1 || spec.cols < 1)
        throw generation_error("random-planar needs rows,cols >= 1");
    if (!spec.seed) throw generation_error("random-planar needs a seed");
    std::mt19937_64 rng(*spec.seed);
    const int rows = spec.rows, cols = spec.cols;
    Graph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    auto keep = [&rng] { return rng_below(rng, 2) == 0; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols && keep()) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows && keep()) g.add_edge(id(r, c), id(r + 1, c));
            if (r + 1 < rows && c + 1 < cols && keep()) g.add_edge(id(r, c), id(r + 1, c + 1));
        }
    VertexList start = sampled_is(g, spec.k, rng);
    VertexList target = sampled_is(g, spec.k, rng);
    return finish(std::move(g), std::move(start), std::move(target), spec.k);
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::grid: return "grid";
        case Family::cycle: return "cycle";
        case Family::path: return "path";
        case Family::star_gadget: return "star-gadget";
        case Family::k2m_gadget: return "k2m-gadget";
        case Family::buffer_gadget: return "buffer-gadget";
        case Family::random_planar: return "random-planar";
    }
    return "?";
}

std::map<std::string, std::string, std::less<>> parse_kv_spec(std::string_view text) {
    std::map<std::string, std::string, std::less<>> kv;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        if (!item.empty()) {
            std::size_t eq = item.find('=');
            if (eq == std::string_view::npos)
                throw input_error("family spec item missing '=': " + std::string(item));
            kv.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
        }
        pos = comma + 1;
    }
    return kv;
}

FamilySpec parse_family_spec(std::string_view text) {
    auto kv = parse_kv_spec(text);
    auto take_int = [&kv](std::string_view name, int fallback) {
        auto it = kv.find(name);
        if (it == kv.end()) return fallback;
        try {
            return std::stoi(it->second);
        } catch (const std::exception&) {
            throw input_error("bad integer for '" + std::string(name) + "': " + it->second);
        }
    };

    FamilySpec spec;
    auto fam = kv.find("family");
    if (fam == kv.end()) throw input_error("family spec needs family=<name>");
    bool known = false;
    for (Family f : {Family::grid, Family::cycle, Family::path, Family::star_gadget,
                     Family::k2m_gadget, Family::buffer_gadget, Family::random_planar}) {
        if (fam->second == family_name(f)) {
            spec.family = f;
            known = true;
            break;
        }
    }
    if (!known) throw input_error("unknown family: " + fam->second);

    spec.rows = take_int("rows", 0);
    spec.cols = take_int("cols", 0);
    spec.n = take_int("n", 0);
    spec.m = take_int("m", 0);
    spec.k = take_int("k", 1);
    if (auto it = kv.find("seed"); it != kv.end()) {
        try {
            spec.seed = std::stoull(it->second);
        } catch (const std::exception&) {
            throw input_error("bad seed: " + it->second);
        }
    }
    return spec;
}

Instance generate(const FamilySpec& spec) {
    if (spec.k < 1) throw generation_error("k must be >= 1");
    switch (spec.family) {
        case Family::grid: return make_grid(spec);
        case Family::cycle: return make_cycle(spec);
        case Family::path: return make_path(spec);
        case Family::star_gadget: return make_star_gadget(spec);
        case Family::k2m_gadget: return make_k2m_gadget(spec);
        case Family::buffer_gadget: return make_buffer_gadget(spec);
        case Family::random_planar: return make_random_planar(spec);
    }
    throw input_error("unknown family");
}

}  // namespace tj
