#include "permlab/bipolar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace permlab {

bool Walk2D::increments_admissible() const {
    for (int t = 1; t < size(); ++t) {
        int dx = points[static_cast<size_t>(t)].first - points[static_cast<size_t>(t) - 1].first;
        int dy = points[static_cast<size_t>(t)].second - points[static_cast<size_t>(t) - 1].second;
        bool tandem_step = (dx == 1 && dy == -1);
        bool face_step = (dx <= 0 && dy >= 0);
        if (!tandem_step && !face_step) return false;
    }
    return true;
}

bool Walk2D::is_tandem() const {
    if (size() == 0) return false;
    if (!increments_admissible()) return false;
    for (const auto& [x, y] : points)
        if (x < 0 || y < 0) return false;
    return points.front().first == 0 && points.back().second == 0;
}

std::string Walk2D::to_json() const {
    nlohmann::json j;
    auto& arr = j["points"] = nlohmann::json::array();
    for (const auto& [x, y] : points) arr.push_back({x, y});
    return j.dump();
}

Walk2D Walk2D::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Walk2D w;
    for (const auto& p : j.at("points")) w.points.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    return w;
}

Walk2D reverse_walk(const Walk2D& w) {
    Walk2D out;
    out.points.reserve(w.points.size());
    for (auto it = w.points.rbegin(); it != w.points.rend(); ++it) out.points.push_back({it->second, it->first});
    return out;
}

bool BipolarMap::full() const {
    for (const auto& e : edges)
        if (e.label == 0) return false;
    return true;
}

int BipolarMap::explored_count() const {
    int c = 0;
    for (const auto& e : edges)
        if (e.label != 0) ++c;
    return c;
}

namespace {

// Chains vertices' edge lists left-to-right using the faces sitting between
// consecutive edges; `front` selects face-side anchors for outgoing
// (bottom ends) vs incoming (top ends) edges.
std::vector<std::vector<int>> chain_by_vertex(const BipolarMap& m, bool outgoing) {
    std::vector<std::vector<int>> raw(static_cast<size_t>(m.vertex_count));
    for (int e = 0; e < m.size(); ++e) {
        int v = outgoing ? m.edges[static_cast<size_t>(e)].tail : m.edges[static_cast<size_t>(e)].head;
        raw[static_cast<size_t>(v)].push_back(e);
    }
    std::vector<int> next(static_cast<size_t>(m.size()), -1);
    std::vector<char> is_target(static_cast<size_t>(m.size()), 0);
    for (const auto& f : m.faces) {
        int a = outgoing ? f.left.front() : f.left.back();
        int b = outgoing ? f.right.front() : f.right.back();
        next[static_cast<size_t>(a)] = b;
        is_target[static_cast<size_t>(b)] = 1;
    }
    std::vector<std::vector<int>> ordered(static_cast<size_t>(m.vertex_count));
    for (int v = 0; v < m.vertex_count; ++v) {
        const auto& cand = raw[static_cast<size_t>(v)];
        if (cand.empty()) continue;
        int head = -1;
        for (int e : cand)
            if (!is_target[static_cast<size_t>(e)]) {
                if (head != -1) throw std::logic_error("bipolar map: broken edge chain (two heads)");
                head = e;
            }
        if (head == -1) throw std::logic_error("bipolar map: broken edge chain (cycle)");
        auto& dst = ordered[static_cast<size_t>(v)];
        for (int e = head; e != -1; e = next[static_cast<size_t>(e)]) {
            dst.push_back(e);
            if (dst.size() > cand.size()) throw std::logic_error("bipolar map: edge chain leaves vertex");
        }
        if (dst.size() != cand.size()) throw std::logic_error("bipolar map: edge chain misses edges");
    }
    return ordered;
}

}  // namespace

std::vector<std::vector<int>> BipolarMap::outgoing_by_vertex() const { return chain_by_vertex(*this, true); }
std::vector<std::vector<int>> BipolarMap::incoming_by_vertex() const { return chain_by_vertex(*this, false); }

void BipolarMap::check_consistency() const {
    auto path_ok = [this](const std::vector<int>& boundary) {
        if (boundary.empty()) return size() == 0;
        if (edges[static_cast<size_t>(boundary.front())].tail != source) return false;
        if (edges[static_cast<size_t>(boundary.back())].head != sink) return false;
        for (size_t i = 0; i + 1 < boundary.size(); ++i)
            if (edges[static_cast<size_t>(boundary[i])].head != edges[static_cast<size_t>(boundary[i + 1])].tail)
                return false;
        return true;
    };
    if (!path_ok(left_boundary) || !path_ok(right_boundary))
        throw std::logic_error("bipolar map: outer boundaries are not source-to-sink paths");
    for (const auto& f : faces) {
        if (f.left.empty() || f.right.empty()) throw std::logic_error("bipolar map: degenerate face");
        int bottom = edges[static_cast<size_t>(f.left.front())].tail;
        int top = edges[static_cast<size_t>(f.left.back())].head;
        if (edges[static_cast<size_t>(f.right.front())].tail != bottom ||
            edges[static_cast<size_t>(f.right.back())].head != top)
            throw std::logic_error("bipolar map: face sides disagree on endpoints");
        for (const auto* side : {&f.left, &f.right})
            for (size_t i = 0; i + 1 < side->size(); ++i)
                if (edges[static_cast<size_t>((*side)[i])].head != edges[static_cast<size_t>((*side)[i + 1])].tail)
                    throw std::logic_error("bipolar map: face side is not a path");
    }
    std::vector<std::pair<int, int>> seen(static_cast<size_t>(size()), {kLeftOuter, kRightOuter});
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        for (int e : faces[static_cast<size_t>(fi)].left) seen[static_cast<size_t>(e)].second = fi;
        for (int e : faces[static_cast<size_t>(fi)].right) seen[static_cast<size_t>(e)].first = fi;
    }
    for (int e : left_boundary) seen[static_cast<size_t>(e)].first = kLeftOuter;
    for (int e : right_boundary) seen[static_cast<size_t>(e)].second = kRightOuter;
    for (int e = 0; e < size(); ++e) {
        if (seen[static_cast<size_t>(e)].first != edges[static_cast<size_t>(e)].left_face ||
            seen[static_cast<size_t>(e)].second != edges[static_cast<size_t>(e)].right_face)
            throw std::logic_error("bipolar map: edge/face adjacency mismatch");
    }
}

std::string BipolarMap::to_json() const {
    nlohmann::json j;
    j["vertices"] = vertex_count;
    j["source"] = source;
    j["sink"] = sink;
    auto& earr = j["edges"] = nlohmann::json::array();
    for (const auto& e : edges)
        earr.push_back({{"tail", e.tail},
                        {"head", e.head},
                        {"left", e.left_face},
                        {"right", e.right_face},
                        {"label", e.label}});
    auto& farr = j["faces"] = nlohmann::json::array();
    for (const auto& f : faces) farr.push_back({{"left", f.left}, {"right", f.right}});
    j["left_boundary"] = left_boundary;
    j["right_boundary"] = right_boundary;
    return j.dump();
}

Walk2D slice_walk(const Walk2D& w, int j, int k) {
    if (j < 1 || k > w.size() || j > k) throw std::invalid_argument("slice_walk: bad interval");
    Walk2D out;
    out.points.assign(w.points.begin() + (j - 1), w.points.begin() + k);
    return out;
}

std::string BipolarMap::to_dart_json() const {
    // dart 2e points out of tail(e), dart 2e+1 into head(e); "next" walks the
    // clockwise rotation at the dart's vertex: outgoing edges left to right,
    // then incoming edges right to left
    auto out = outgoing_by_vertex();
    auto in = incoming_by_vertex();
    std::vector<int> next(2 * static_cast<size_t>(size()), -1);
    for (int v = 0; v < vertex_count; ++v) {
        std::vector<int> rotation;
        for (int e : out[static_cast<size_t>(v)]) rotation.push_back(2 * e);
        for (auto it = in[static_cast<size_t>(v)].rbegin(); it != in[static_cast<size_t>(v)].rend(); ++it)
            rotation.push_back(2 * *it + 1);
        for (size_t i = 0; i < rotation.size(); ++i)
            next[static_cast<size_t>(rotation[i])] = rotation[(i + 1) % rotation.size()];
    }
    nlohmann::json j;
    j["source"] = source;
    j["sink"] = sink;
    auto& darts = j["darts"] = nlohmann::json::array();
    for (int e = 0; e < size(); ++e) {
        const auto& ed = edges[static_cast<size_t>(e)];
        darts.push_back({{"next", next[2 * static_cast<size_t>(e)]},
                         {"twin", 2 * e + 1},
                         {"vertex", ed.tail},
                         {"orient", "out"},
                         {"label", ed.label}});
        darts.push_back({{"next", next[2 * static_cast<size_t>(e) + 1]},
                         {"twin", 2 * e},
                         {"vertex", ed.head},
                         {"orient", "in"},
                         {"label", ed.label}});
    }
    return j.dump();
}

BipolarMap theta(const Walk2D& walk, int first_label) {
    if (!walk.increments_admissible()) throw std::invalid_argument("theta: increments not in A");
    const int len = walk.size();
    if (len == 0) throw std::invalid_argument("theta: empty walk");

    BipolarMap m;
    m.vertex_count = 2;
    m.source = 0;
    m.sink = 1;
    m.edges.push_back({0, 1, BipolarMap::kLeftOuter, BipolarMap::kRightOuter, first_label});
    m.left_boundary = {0};
    m.right_boundary = {0};
    int active = 0;

    auto pos_in_rb = [&m](int e) {
        auto it = std::find(m.right_boundary.begin(), m.right_boundary.end(), e);
        return static_cast<int>(it - m.right_boundary.begin());
    };

    for (int t = 1; t < len; ++t) {
        int dx = walk.points[static_cast<size_t>(t)].first - walk.points[static_cast<size_t>(t) - 1].first;
        int dy = walk.points[static_cast<size_t>(t)].second - walk.points[static_cast<size_t>(t) - 1].second;
        if (dx == 1 && dy == -1) {
            // relabel the edge right above the active one; extend past the
            // sink if the boundary is exhausted
            int p = pos_in_rb(active);
            if (p + 1 < static_cast<int>(m.right_boundary.size())) {
                active = m.right_boundary[static_cast<size_t>(p) + 1];
                m.edges[static_cast<size_t>(active)].label = first_label + t;
            } else {
                int w = m.vertex_count++;
                int e = m.size();
                m.edges.push_back({m.sink, w, BipolarMap::kLeftOuter, BipolarMap::kRightOuter, first_label + t});
                m.sink = w;
                m.left_boundary.push_back(e);
                m.right_boundary.push_back(e);
                active = e;
            }
        } else {
            // glue a face of left degree i+1, right degree j+1 onto the right
            // boundary, top-left edge identified with the active edge
            const int i = -dx, j = dy;
            const int fi = static_cast<int>(m.faces.size());
            BipolarMap::Face f;
            int p = pos_in_rb(active);
            int avail = p;
            int ext = std::max(0, i - avail);
            int glue_lo = p - (i - ext);

            std::vector<int> extension;  // new edges below the source, top-down
            int below = m.source;
            for (int c = 0; c < ext; ++c) {
                int u = m.vertex_count++;
                int e = m.size();
                m.edges.push_back({u, below, BipolarMap::kLeftOuter, fi, 0});
                extension.push_back(e);
                below = u;
            }
            m.source = below;
            for (auto it = extension.rbegin(); it != extension.rend(); ++it) f.left.push_back(*it);
            for (int idx = glue_lo; idx <= p; ++idx) {
                int e = m.right_boundary[static_cast<size_t>(idx)];
                m.edges[static_cast<size_t>(e)].right_face = fi;
                f.left.push_back(e);
            }

            int bottom = m.edges[static_cast<size_t>(f.left.front())].tail;
            int top = m.edges[static_cast<size_t>(f.left.back())].head;
            int prev = bottom;
            for (int c = 0; c <= j; ++c) {
                int nxt = (c == j) ? top : m.vertex_count++;
                int e = m.size();
                m.edges.push_back({prev, nxt, fi, BipolarMap::kRightOuter, c == 0 ? first_label + t : 0});
                f.right.push_back(e);
                prev = nxt;
            }
            active = f.right.front();

            if (ext > 0) {
                std::vector<int> lb;
                for (auto it = extension.rbegin(); it != extension.rend(); ++it) lb.push_back(*it);
                lb.insert(lb.end(), m.left_boundary.begin(), m.left_boundary.end());
                m.left_boundary = std::move(lb);
            }
            std::vector<int> rb(m.right_boundary.begin(), m.right_boundary.begin() + glue_lo);
            rb.insert(rb.end(), f.right.begin(), f.right.end());
            rb.insert(rb.end(), m.right_boundary.begin() + p + 1, m.right_boundary.end());
            m.right_boundary = std::move(rb);

            m.faces.push_back(std::move(f));
        }
    }
    m.check_consistency();
    return m;
}

std::vector<int> exploration_order(const BipolarMap& m) {
    if (!m.full()) throw std::invalid_argument("exploration_order: map has unexplored edges");
    auto out = m.outgoing_by_vertex();
    auto in = m.incoming_by_vertex();
    std::vector<int> rightmost_in(static_cast<size_t>(m.vertex_count), -1);
    for (int v = 0; v < m.vertex_count; ++v)
        if (!in[static_cast<size_t>(v)].empty())
            rightmost_in[static_cast<size_t>(v)] = in[static_cast<size_t>(v)].back();

    std::vector<int> order;
    order.reserve(static_cast<size_t>(m.size()));
    std::vector<std::pair<int, size_t>> stack;
    stack.push_back({m.source, 0});
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx >= out[static_cast<size_t>(v)].size()) {
            stack.pop_back();
            continue;
        }
        int e = out[static_cast<size_t>(v)][idx++];
        order.push_back(e);
        int w = m.edges[static_cast<size_t>(e)].head;
        if (rightmost_in[static_cast<size_t>(w)] == e) stack.push_back({w, 0});
    }
    if (static_cast<int>(order.size()) != m.size())
        throw std::logic_error("exploration_order: contour missed edges");
    return order;
}

Walk2D bow(const BipolarMap& m) {
    if (!m.full()) throw std::invalid_argument("bow: map has unexplored edges");
    auto out = m.outgoing_by_vertex();
    auto in = m.incoming_by_vertex();

    std::vector<int> hm(static_cast<size_t>(m.vertex_count), -1);
    std::function<int(int)> height_m = [&](int v) -> int {
        if (hm[static_cast<size_t>(v)] >= 0) return hm[static_cast<size_t>(v)];
        if (v == m.source) return hm[static_cast<size_t>(v)] = 0;
        int parent_edge = in[static_cast<size_t>(v)].back();  // rightmost incoming
        return hm[static_cast<size_t>(v)] = 1 + height_m(m.edges[static_cast<size_t>(parent_edge)].tail);
    };
    std::vector<int> hs(static_cast<size_t>(m.vertex_count), -1);
    std::function<int(int)> height_ss = [&](int v) -> int {
        if (hs[static_cast<size_t>(v)] >= 0) return hs[static_cast<size_t>(v)];
        if (v == m.sink) return hs[static_cast<size_t>(v)] = 0;
        int parent_edge = out[static_cast<size_t>(v)].front();  // leftmost outgoing
        return hs[static_cast<size_t>(v)] = 1 + height_ss(m.edges[static_cast<size_t>(parent_edge)].head);
    };

    std::vector<int> order = exploration_order(m);
    Walk2D w;
    w.points.reserve(order.size());
    for (int e : order)
        w.points.push_back({height_m(m.edges[static_cast<size_t>(e)].tail),
                            height_ss(m.edges[static_cast<size_t>(e)].head)});
    return w;
}

BipolarMap dual(const BipolarMap& m) {
    if (!m.full()) throw std::invalid_argument("dual: map has unexplored edges");
    auto out = m.outgoing_by_vertex();
    auto in = m.incoming_by_vertex();

    const int F = static_cast<int>(m.faces.size());
    auto dv = [](int face) {
        if (face == BipolarMap::kRightOuter) return 0;
        if (face == BipolarMap::kLeftOuter) return 1;
        return 2 + face;
    };
    std::vector<int> inner_vertices;
    std::vector<int> df(static_cast<size_t>(m.vertex_count), 0);
    for (int v = 0; v < m.vertex_count; ++v) {
        if (v == m.source || v == m.sink) continue;
        df[static_cast<size_t>(v)] = static_cast<int>(inner_vertices.size());
        inner_vertices.push_back(v);
    }
    // the dual is drawn by rotating the primal clockwise: the primal source
    // side becomes the dual left outer face, the sink side the right one
    auto dual_face_of = [&](int v) {
        if (v == m.source) return BipolarMap::kLeftOuter;
        if (v == m.sink) return BipolarMap::kRightOuter;
        return df[static_cast<size_t>(v)];
    };

    BipolarMap d;
    d.vertex_count = F + 2;
    d.source = 0;
    d.sink = 1;
    d.edges.resize(m.edges.size());
    for (int e = 0; e < m.size(); ++e) {
        const auto& pe = m.edges[static_cast<size_t>(e)];
        d.edges[static_cast<size_t>(e)] = {dv(pe.right_face), dv(pe.left_face), dual_face_of(pe.tail),
                                           dual_face_of(pe.head), pe.label};
    }
    for (int v : inner_vertices) {
        BipolarMap::Face f;
        const auto& o = out[static_cast<size_t>(v)];
        const auto& i = in[static_cast<size_t>(v)];
        f.left.assign(i.rbegin(), i.rend());
        f.right.assign(o.rbegin(), o.rend());
        d.faces.push_back(std::move(f));
    }
    const auto& source_out = out[static_cast<size_t>(m.source)];
    d.left_boundary.assign(source_out.rbegin(), source_out.rend());
    const auto& sink_in = in[static_cast<size_t>(m.sink)];
    d.right_boundary.assign(sink_in.rbegin(), sink_in.rend());
    d.check_consistency();
    return d;
}

BipolarMap reverse_map(const BipolarMap& m) {
    BipolarMap r = m;
    auto flip_face = [](int f) {
        if (f == BipolarMap::kLeftOuter) return BipolarMap::kRightOuter;
        if (f == BipolarMap::kRightOuter) return BipolarMap::kLeftOuter;
        return f;
    };
    for (auto& e : r.edges) {
        std::swap(e.tail, e.head);
        int l = e.left_face, rt = e.right_face;
        e.left_face = flip_face(rt);
        e.right_face = flip_face(l);
    }
    for (auto& f : r.faces) {
        std::vector<int> new_left(f.right.rbegin(), f.right.rend());
        std::vector<int> new_right(f.left.rbegin(), f.left.rend());
        f.left = std::move(new_left);
        f.right = std::move(new_right);
    }
    std::vector<int> lb(m.right_boundary.rbegin(), m.right_boundary.rend());
    std::vector<int> rb(m.left_boundary.rbegin(), m.left_boundary.rend());
    r.left_boundary = std::move(lb);
    r.right_boundary = std::move(rb);
    std::swap(r.source, r.sink);
    r.check_consistency();
    return r;
}

Permutation bobp(const BipolarMap& m) {
    std::vector<int> order_m = exploration_order(m);
    std::vector<int> order_d = exploration_order(dual(m));
    std::vector<int> rank_d(static_cast<size_t>(m.size()), 0);
    for (int pos = 0; pos < static_cast<int>(order_d.size()); ++pos)
        rank_d[static_cast<size_t>(order_d[static_cast<size_t>(pos)])] = pos + 1;
    std::vector<int> vals(static_cast<size_t>(m.size()));
    for (int i = 0; i < m.size(); ++i)
        vals[static_cast<size_t>(i)] = rank_d[static_cast<size_t>(order_m[static_cast<size_t>(i)])];
    return Permutation(std::move(vals));
}

std::string map_signature(const BipolarMap& m) {
    std::vector<int> order = exploration_order(m);
    std::vector<int> cv(static_cast<size_t>(m.vertex_count), -1);
    std::vector<int> cf(m.faces.size(), -1);
    int nv = 0, nf = 0;
    auto vid = [&](int v) {
        if (cv[static_cast<size_t>(v)] < 0) cv[static_cast<size_t>(v)] = nv++;
        return cv[static_cast<size_t>(v)];
    };
    auto fid = [&](int f) {
        if (f < 0) return f;
        if (cf[static_cast<size_t>(f)] < 0) cf[static_cast<size_t>(f)] = nf++;
        return cf[static_cast<size_t>(f)];
    };
    std::ostringstream out;
    out << m.size() << ';';
    for (int e : order) {
        const auto& ed = m.edges[static_cast<size_t>(e)];
        out << vid(ed.tail) << ',' << vid(ed.head) << ',' << fid(ed.left_face) << ',' << fid(ed.right_face)
            << ';';
    }
    return out.str();
}

std::string marked_signature(const BipolarMap& m) {
    std::map<int, int> by_label;
    for (int e = 0; e < m.size(); ++e)
        if (m.edges[static_cast<size_t>(e)].label != 0) by_label[m.edges[static_cast<size_t>(e)].label] = e;

    std::vector<int> cid(static_cast<size_t>(m.size()), -1);
    int next_id = 0;
    for (const auto& [label, e] : by_label) cid[static_cast<size_t>(e)] = next_id++;
    auto eid = [&](int e) {
        if (cid[static_cast<size_t>(e)] < 0) cid[static_cast<size_t>(e)] = next_id++;
        return cid[static_cast<size_t>(e)];
    };

    // faces ordered by the smallest explored label they touch
    std::vector<std::pair<int, int>> face_order;
    for (int fi = 0; fi < static_cast<int>(m.faces.size()); ++fi) {
        int best = 1 << 30;
        for (const auto* side : {&m.faces[static_cast<size_t>(fi)].left, &m.faces[static_cast<size_t>(fi)].right})
            for (int e : *side)
                if (m.edges[static_cast<size_t>(e)].label != 0)
                    best = std::min(best, m.edges[static_cast<size_t>(e)].label);
        face_order.push_back({best, fi});
    }
    std::sort(face_order.begin(), face_order.end());

    std::ostringstream out;
    out << "labels:";
    for (const auto& [label, e] : by_label) out << label << '=' << eid(e) << ',';
    out << ";faces:";
    for (const auto& [best, fi] : face_order) {
        out << '[';
        for (int e : m.faces[static_cast<size_t>(fi)].left) out << eid(e) << ',';
        out << '|';
        for (int e : m.faces[static_cast<size_t>(fi)].right) out << eid(e) << ',';
        out << ']';
    }
    return out.str();
}

BipolarMap submap(const BipolarMap& m, int j, int k) {
    std::vector<char> edge_kept(static_cast<size_t>(m.size()), 0);
    for (int e = 0; e < m.size(); ++e) {
        int l = m.edges[static_cast<size_t>(e)].label;
        if (l >= j && l <= k) edge_kept[static_cast<size_t>(e)] = 1;
    }
    std::vector<char> face_kept(m.faces.size(), 0);
    for (size_t fi = 0; fi < m.faces.size(); ++fi) {
        bool left_has = false, right_has = false;
        for (int e : m.faces[fi].left)
            if (edge_kept[static_cast<size_t>(e)]) left_has = true;
        for (int e : m.faces[fi].right)
            if (edge_kept[static_cast<size_t>(e)]) right_has = true;
        face_kept[fi] = left_has && right_has;
    }
    std::vector<char> edge_in = edge_kept;
    for (size_t fi = 0; fi < m.faces.size(); ++fi)
        if (face_kept[fi])
            for (const auto* side : {&m.faces[fi].left, &m.faces[fi].right})
                for (int e : *side) edge_in[static_cast<size_t>(e)] = 1;

    BipolarMap s;
    std::vector<int> edge_map(static_cast<size_t>(m.size()), -1);
    std::vector<int> vert_map(static_cast<size_t>(m.vertex_count), -1);
    auto vmap = [&](int v) {
        if (vert_map[static_cast<size_t>(v)] < 0) vert_map[static_cast<size_t>(v)] = s.vertex_count++;
        return vert_map[static_cast<size_t>(v)];
    };
    std::vector<int> face_map(m.faces.size(), -1);
    int nf = 0;
    for (size_t fi = 0; fi < m.faces.size(); ++fi)
        if (face_kept[fi]) face_map[fi] = nf++;
    auto fmap = [&](int f) {
        if (f < 0) return f;
        return face_kept[static_cast<size_t>(f)] ? face_map[static_cast<size_t>(f)]
                                                 : BipolarMap::kLeftOuter;
    };

    for (int e = 0; e < m.size(); ++e) {
        if (!edge_in[static_cast<size_t>(e)]) continue;
        const auto& ed = m.edges[static_cast<size_t>(e)];
        edge_map[static_cast<size_t>(e)] = s.size();
        int keep_label = (ed.label >= j && ed.label <= k) ? ed.label : 0;
        s.edges.push_back({vmap(ed.tail), vmap(ed.head), fmap(ed.left_face), fmap(ed.right_face), keep_label});
    }
    for (size_t fi = 0; fi < m.faces.size(); ++fi) {
        if (!face_kept[fi]) continue;
        BipolarMap::Face f;
        for (int e : m.faces[fi].left) f.left.push_back(edge_map[static_cast<size_t>(e)]);
        for (int e : m.faces[fi].right) f.right.push_back(edge_map[static_cast<size_t>(e)]);
        s.faces.push_back(std::move(f));
    }
    // no boundary notion for extracted submaps; compare via marked_signature
    return s;
}

namespace {

void enumerate_walks_rec(int n, int t, int x, int y, std::vector<std::pair<int, int>>& acc,
                         std::vector<Walk2D>& out) {
    if (t == n) {
        if (y == 0) out.push_back(Walk2D{acc});
        return;
    }
    if (y > n - t) return;  // y sheds at most 1 per step
    if (y >= 1) {
        acc.push_back({x + 1, y - 1});
        enumerate_walks_rec(n, t + 1, x + 1, y - 1, acc, out);
        acc.pop_back();
    }
    for (int i = 0; i <= x; ++i)
        for (int jj = 0; y + jj <= n - t - 1; ++jj) {
            acc.push_back({x - i, y + jj});
            enumerate_walks_rec(n, t + 1, x - i, y + jj, acc, out);
            acc.pop_back();
        }
}

}  // namespace

std::vector<Walk2D> enumerate_tandem_walks(int n) {
    std::vector<Walk2D> out;
    if (n <= 0) return out;
    std::vector<std::pair<int, int>> acc;
    for (int h = 0; h <= n - 1; ++h) {
        acc.push_back({0, h});
        enumerate_walks_rec(n, 1, 0, h, acc, out);
        acc.pop_back();
    }
    return out;
}

}  // namespace permlab
