//! Hamiltonian alternating routes, their crossing profiles, and the
//! independent verifier used by the CLI and the test suites.

use crate::geom::Color;
use crate::set::{BicoloredSet, PositionMode};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RouteKind {
    Path,
    Cycle,
}

/// A Hamiltonian alternating path or cycle as a vertex sequence, with
/// its crossing profile precomputed against a concrete point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltRoute {
    pub kind: RouteKind,
    pub vertices: Vec<usize>,
    /// Pairs of crossing edges, as indices into `edges()`.
    pub crossings: Vec<(usize, usize)>,
    /// Crossing count per edge, parallel to `edges()`.
    pub per_edge: Vec<usize>,
}

impl AltRoute {
    /// Build a route and compute its crossing profile on `set`.
    pub fn analyzed(set: &BicoloredSet, kind: RouteKind, vertices: Vec<usize>) -> AltRoute {
        let edges = route_edges(kind, &vertices);
        let crossings = crossing_pairs(set, &edges);
        let mut per_edge = vec![0usize; edges.len()];
        for &(a, b) in &crossings {
            per_edge[a] += 1;
            per_edge[b] += 1;
        }
        AltRoute {
            kind,
            vertices,
            crossings,
            per_edge,
        }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        route_edges(self.kind, &self.vertices)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_one_plane(&self) -> bool {
        self.per_edge.iter().all(|&c| c <= 1)
    }

    pub fn max_edge_crossings(&self) -> usize {
        self.per_edge.iter().copied().max().unwrap_or(0)
    }

    /// Endpoints for a path (first and last vertex).
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        match (self.kind, self.vertices.first(), self.vertices.last()) {
            (RouteKind::Path, Some(&a), Some(&b)) => Some((a, b)),
            _ => None,
        }
    }

    /// How many of the route's edges are bridges of `set`.
    pub fn bridges_used(&self, set: &BicoloredSet) -> usize {
        let bridges: BTreeSet<(usize, usize)> = set
            .run_structure()
            .bridges
            .iter()
            .map(|&(a, b)| norm(a, b))
            .collect();
        self.edges()
            .iter()
            .filter(|&&(a, b)| bridges.contains(&norm(a, b)))
            .count()
    }
}

fn norm(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn route_edges(kind: RouteKind, vertices: &[usize]) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = vertices.windows(2).map(|w| (w[0], w[1])).collect();
    if kind == RouteKind::Cycle && vertices.len() >= 3 {
        edges.push((*vertices.last().unwrap(), vertices[0]));
    }
    edges
}

/// All properly crossing pairs among `edges`, as index pairs (i < j).
/// Convex mode runs an O((m + k) log m) interval sweep; general mode
/// tests all pairs with the exact predicate.
pub fn crossing_pairs(set: &BicoloredSet, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    match set.mode() {
        PositionMode::ConvexSequence => convex_crossing_pairs(edges),
        PositionMode::GeneralPosition => {
            let mut out = Vec::new();
            for i in 0..edges.len() {
                for j in i + 1..edges.len() {
                    if set.edges_cross(edges[i], edges[j]) {
                        out.push((i, j));
                    }
                }
            }
            out
        }
    }
}

/// Chords (a1,b1), (a2,b2) of a convex polygon cross iff their
/// normalized intervals partially overlap: a1 < a2 < b1 < b2. Sweep by
/// left endpoint, keep open intervals' right endpoints in a BTreeSet,
/// and report range hits.
fn convex_crossing_pairs(edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut ivals: Vec<(usize, usize, usize)> = edges
        .iter()
        .enumerate()
        .map(|(id, &(u, v))| {
            let (a, b) = norm(u, v);
            (a, b, id)
        })
        .collect();
    ivals.sort_unstable();
    let mut open: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut out = Vec::new();
    for &(a, b, id) in &ivals {
        // Earlier intervals whose right endpoint lies strictly inside
        // (a, b) partially overlap this one.
        for &(_, other) in open.range((a + 1, 0)..(b, 0)) {
            let (u1, v1) = edges[id];
            let (u2, v2) = edges[other];
            if u1 != u2 && u1 != v2 && v1 != u2 && v1 != v2 {
                out.push((other.min(id), other.max(id)));
            }
        }
        open.insert((b, id));
    }
    out.sort_unstable();
    out
}

/// The paper bound applicable to a route shape on this set, if the
/// color counts fit one of the covered statements.
pub fn route_bound(
    set: &BicoloredSet,
    kind: RouteKind,
    endpoints: Option<(usize, usize)>,
) -> Option<usize> {
    let reds = set.red_count();
    let blues = set.blue_count();
    let rs = set.run_structure();
    match kind {
        RouteKind::Cycle => {
            if reds == blues && reds >= 2 {
                Some(reds - rs.red_runs.max(rs.blue_runs))
            } else {
                None
            }
        }
        RouteKind::Path => {
            let (s, t) = endpoints?;
            match (set.color(s), set.color(t)) {
                (a, b) if a != b => (reds == blues).then(|| reds - rs.red_runs),
                (Color::Red, Color::Red) => (reds == blues + 1).then(|| reds - rs.blue_runs),
                (Color::Blue, Color::Blue) => (blues == reds + 1).then(|| blues - rs.red_runs),
                _ => unreachable!(),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub hamiltonian: bool,
    pub alternating: bool,
    pub one_plane: bool,
    pub crossings: usize,
    pub max_edge_crossings: usize,
    /// The applicable paper bound, when the counts fit a covered case.
    pub bound: Option<usize>,
    pub within_bound: bool,
    pub bridges_used: usize,
    pub violations: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Recompute every claim about a route from scratch: Hamiltonicity,
/// alternation, exact crossings, 1-planarity, and the paper bound.
pub fn verify_route(set: &BicoloredSet, route: &AltRoute) -> VerifyReport {
    let n = set.len();
    let verts = &route.vertices;
    let mut violations = Vec::new();

    let mut seen = vec![false; n];
    let mut hamiltonian = verts.len() == n;
    if verts.len() != n {
        violations.push(format!(
            "route visits {} vertices, set has {n}",
            verts.len()
        ));
    }
    for &v in verts {
        if v >= n {
            hamiltonian = false;
            violations.push(format!("vertex index {v} out of range"));
        } else if seen[v] {
            hamiltonian = false;
            violations.push(format!("vertex {v} visited more than once"));
        } else {
            seen[v] = true;
        }
    }

    let edges = route_edges(route.kind, verts);
    let mut alternating = true;
    for &(a, b) in &edges {
        if a < n && b < n && set.color(a) == set.color(b) {
            alternating = false;
            violations.push(format!("edge ({a},{b}) joins same-colored points"));
        }
    }
    if route.kind == RouteKind::Cycle && !verts.len().is_multiple_of(2) {
        alternating = false;
        violations.push("odd cycle cannot alternate".into());
    }

    let crossings = crossing_pairs(set, &edges);
    let mut per_edge = vec![0usize; edges.len()];
    for &(a, b) in &crossings {
        per_edge[a] += 1;
        per_edge[b] += 1;
    }
    let max_edge_crossings = per_edge.iter().copied().max().unwrap_or(0);
    let one_plane = max_edge_crossings <= 1;
    if !one_plane {
        violations.push(format!(
            "not 1-plane: an edge is crossed {max_edge_crossings} times"
        ));
    }

    let endpoints = match (route.kind, verts.first(), verts.last()) {
        (RouteKind::Path, Some(&a), Some(&b)) => Some((a, b)),
        _ => None,
    };
    let bound = route_bound(set, route.kind, endpoints);
    let within_bound = bound.is_none_or(|b| crossings.len() <= b);
    if !within_bound {
        violations.push(format!(
            "crossings {} exceed the bound {}",
            crossings.len(),
            bound.unwrap()
        ));
    }

    let tmp = AltRoute {
        kind: route.kind,
        vertices: verts.clone(),
        crossings: crossings.clone(),
        per_edge,
    };
    VerifyReport {
        hamiltonian,
        alternating,
        one_plane,
        crossings: crossings.len(),
        max_edge_crossings,
        bound,
        within_bound,
        bridges_used: tmp.bridges_used(set),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_cycle_is_clean() {
        let s = BicoloredSet::from_color_string("RBRB").unwrap();
        let route = AltRoute::analyzed(&s, RouteKind::Cycle, vec![0, 1, 2, 3]);
        let rep = verify_route(&s, &route);
        assert!(rep.passed(), "{:?}", rep.violations);
        assert_eq!(rep.crossings, 0);
        assert_eq!(rep.bound, Some(0));
        assert_eq!(rep.bridges_used, 4);
    }

    #[test]
    fn rrbb_optimum_shape() {
        let s = BicoloredSet::from_color_string("RRBB").unwrap();
        let route = AltRoute::analyzed(&s, RouteKind::Cycle, vec![0, 2, 1, 3]);
        let rep = verify_route(&s, &route);
        assert!(rep.passed(), "{:?}", rep.violations);
        assert_eq!(rep.crossings, 1);
        assert_eq!(rep.bound, Some(1));
        assert!(rep.one_plane);
    }

    #[test]
    fn repeated_vertex_flagged() {
        let s = BicoloredSet::from_color_string("RBRB").unwrap();
        let route = AltRoute::analyzed(&s, RouteKind::Cycle, vec![0, 1, 0, 3]);
        let rep = verify_route(&s, &route);
        assert!(!rep.hamiltonian);
        assert!(!rep.passed());
    }

    #[test]
    fn doubly_crossed_edge_flagged() {
        // Path 0,3,2,5,4,1 on RBRBRB: the three long chords pairwise
        // interleave, so each is crossed twice.
        let s = BicoloredSet::from_color_string("RBRBRB").unwrap();
        let route = AltRoute::analyzed(&s, RouteKind::Path, vec![0, 3, 2, 5, 4, 1]);
        let rep = verify_route(&s, &route);
        assert!(rep.hamiltonian && rep.alternating);
        assert!(!rep.one_plane);
        assert!(!rep.passed());
    }

    #[test]
    fn convex_sweep_matches_pairwise() {
        let s = BicoloredSet::from_color_string("RBRBRBRBRB").unwrap();
        let edges = vec![(0, 5), (1, 6), (2, 7), (0, 3), (4, 9), (8, 2)];
        let fast = convex_crossing_pairs(&edges);
        let mut slow = Vec::new();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                if s.edges_cross(edges[i], edges[j]) {
                    slow.push((i, j));
                }
            }
        }
        assert_eq!(fast, slow);
    }

    #[test]
    fn path_bounds_by_endpoint_color() {
        let s = BicoloredSet::from_color_string("RRBRB").unwrap();
        // |R| = 3, |B| = 2, b(S) = 2: red-red path bound is 3 - 2 = 1.
        assert_eq!(route_bound(&s, RouteKind::Path, Some((0, 1))), Some(1));
        // Opposite-color endpoints need balanced counts.
        assert_eq!(route_bound(&s, RouteKind::Path, Some((0, 2))), None);
    }
}
