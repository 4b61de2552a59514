#include "laurin/oracle.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

namespace laurin {

namespace {

std::string encode(const Row& row, const OrbitSpace& sp) {
    std::string key;
    for (const auto& f : row) {
        for (std::int64_t d = sp.lo; d <= sp.hi; ++d) {
            key += f.coeff(d).to_text();
            key += ',';
        }
        key += ';';
    }
    return key;
}

bool in_window(const LaurentPoly& f, const OrbitSpace& sp) {
    return f.is_zero() || (f.ldeg() >= sp.lo && f.hdeg() <= sp.hi);
}

} // namespace

BfsResult bfs_orbit_member(const Row& start, const Row& target, const OrbitSpace& space) {
    const RingPtr& R = space.ring;
    check(R->size().has_value() && *R->size() <= 4, ErrorKind::Precondition,
          "oracle: ring size must be <= 4");
    check(space.n <= 3 && space.hi - space.lo <= 3, ErrorKind::Precondition,
          "oracle: state space bounds exceeded");
    check(static_cast<int>(start.size()) == space.n &&
              static_cast<int>(target.size()) == space.n,
          ErrorKind::Precondition, "oracle: row length mismatch");
    for (const auto& f : start)
        check(in_window(f, space), ErrorKind::Precondition, "oracle: start outside window");
    for (const auto& f : target)
        check(in_window(f, space), ErrorKind::Precondition, "oracle: target outside window");

    // generator moves: h = c X^e over all nonzero c and window-sized e
    std::vector<LaurentPoly> hs;
    for (const auto& c : R->enumerate()) {
        if (c.is_zero()) continue;
        for (std::int64_t e = space.lo - space.hi; e <= space.hi - space.lo; ++e)
            hs.push_back(LaurentPoly::monomial(c, e));
    }

    struct Parent {
        std::string from;
        ElementaryOp op;
    };
    std::unordered_map<std::string, Parent> seen;
    std::deque<Row> frontier;
    std::string skey = encode(start, space);
    std::string tkey = encode(target, space);
    seen.emplace(skey, Parent{"", ElementaryOp{}});
    frontier.push_back(start);

    while (!frontier.empty()) {
        Row cur = std::move(frontier.front());
        frontier.pop_front();
        std::string ckey = encode(cur, space);
        if (ckey == tkey) {
            // reconstruct the path
            std::vector<ElementaryOp> path;
            std::string k = ckey;
            while (k != skey) {
                const Parent& p = seen.at(k);
                path.push_back(p.op);
                k = p.from;
            }
            std::reverse(path.begin(), path.end());
            return {true, std::move(path), seen.size()};
        }
        for (int i = 1; i <= space.n; ++i) {
            for (int j = 1; j <= space.n; ++j) {
                if (i == j) continue;
                for (const auto& h : hs) {
                    ElementaryOp op{i, j, h};
                    Row next = laurin::apply(cur, op);
                    if (!in_window(next[j - 1], space)) continue; // clip
                    std::string nkey = encode(next, space);
                    if (seen.count(nkey)) continue;
                    check(seen.size() < space.max_states, ErrorKind::Budget,
                          "oracle: state-space budget exceeded");
                    seen.emplace(nkey, Parent{ckey, op});
                    frontier.push_back(std::move(next));
                }
            }
        }
    }
    return {false, {}, seen.size()};
}

std::vector<ElementaryOp> shrink_failing(const RingPtr& ring, int n,
                                         const std::vector<ElementaryOp>& ops,
                                         const std::function<bool(const UmRow&)>& fails) {
    auto build = [&](const std::vector<ElementaryOp>& list) {
        UmRow row = UmRow::unit(ring, n);
        for (const auto& op : list) row.apply_op(op);
        return row;
    };
    check(fails(build(ops)), ErrorKind::Precondition,
          "shrink: the input case does not fail");

    std::vector<ElementaryOp> cur = ops;
    // drop ops greedily, front to back, repeating until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < cur.size(); ++i) {
            std::vector<ElementaryOp> cand = cur;
            cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(i));
            if (fails(build(cand))) {
                cur = std::move(cand);
                changed = true;
                break;
            }
        }
    }
    // shrink coefficients of the op polynomials toward small residues
    for (size_t i = 0; i < cur.size(); ++i) {
        LaurentPoly h = cur[i].h;
        for (const auto& [d, c] : h.terms()) {
            for (const Int& cand : {Int(1), Int(-1), Int(2)}) {
                if (c.num == cand) continue;
                LaurentPoly h2 = h;
                h2.set_coeff(d, ring->from_int(cand));
                std::vector<ElementaryOp> candops = cur;
                candops[i].h = h2;
                if (fails(build(candops))) {
                    cur = std::move(candops);
                    h = h2;
                    break;
                }
            }
        }
    }
    return cur;
}

std::string OracleReport::to_text() const {
    std::ostringstream os;
    os << "instances " << instances << "\nreachable " << reachable << "\nagreed " << agreed
       << "\ndisagreed " << disagreed << "\n";
    return os.str();
}

} // namespace laurin
