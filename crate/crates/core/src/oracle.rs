//! Exhaustive ground truth on small instances: minimum crossings over
//! all Hamiltonian alternating routes, 1-plane existence, and the
//! quadrangular-swap local improver.

use crate::error::{Error, Result};
use crate::route::{AltRoute, RouteKind};
use crate::set::BicoloredSet;

pub const DEFAULT_CAP: usize = 14;

/// What the oracle should enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleQuery {
    /// Hamiltonian alternating paths with fixed endpoints.
    PathBetween(usize, usize),
    /// Hamiltonian alternating paths with free endpoints.
    PathFree,
    Cycle,
}

#[derive(Debug, Clone)]
pub struct OracleResult {
    /// None iff no Hamiltonian alternating route of the requested kind
    /// exists at all (color-count infeasibility).
    pub min_crossings: Option<usize>,
    /// Every optimum route (crossings = minimum), deduplicated.
    pub optimal_routes: Vec<AltRoute>,
    /// Does some route of the requested kind have every edge crossed
    /// at most once?
    pub exists_1plane: bool,
    /// Are all optimum routes 1-plane? (Vacuously true when none.)
    pub all_optima_1plane: bool,
}

pub fn enumerate_min(set: &BicoloredSet, query: OracleQuery) -> Result<OracleResult> {
    enumerate_min_capped(set, query, DEFAULT_CAP)
}

pub fn enumerate_min_capped(
    set: &BicoloredSet,
    query: OracleQuery,
    cap: usize,
) -> Result<OracleResult> {
    let n = set.len();
    if n > cap {
        return Err(Error::TooLarge { size: n, cap });
    }
    if let OracleQuery::PathBetween(s, t) = query {
        if s >= n || t >= n || s == t {
            return Err(Error::PreconditionViolated(
                "path endpoints must be distinct valid indices".into(),
            ));
        }
    }
    if !feasible(set, query) {
        return Ok(OracleResult {
            min_crossings: None,
            optimal_routes: Vec::new(),
            exists_1plane: false,
            all_optima_1plane: true,
        });
    }

    let mut search = Search::new(set, query);
    // Pass 1: branch-and-bound minimum.
    let min = search.run(Mode::FindMin);
    let Some(min) = min else {
        // Counts were feasible but no alternating Hamiltonian
        // arrangement exists (cannot happen in practice; kept honest).
        return Ok(OracleResult {
            min_crossings: None,
            optimal_routes: Vec::new(),
            exists_1plane: false,
            all_optima_1plane: true,
        });
    };
    // Pass 2: collect every optimum.
    search.best = Some(min);
    search.optima.clear();
    search.run(Mode::CollectOptima);
    let all_optima_1plane = search
        .optima
        .iter()
        .all(|verts| is_one_plane(set, query, verts));
    let optimal_routes: Vec<AltRoute> = search
        .optima
        .iter()
        .map(|verts| AltRoute::analyzed(set, kind_of(query), verts.clone()))
        .collect();
    // Pass 3: 1-plane existence (an optimum may not be 1-plane while a
    // longer route is).
    let exists_1plane = if all_optima_1plane && !optimal_routes.is_empty() {
        true
    } else {
        search.found_one_plane = false;
        search.run(Mode::FindOnePlane);
        search.found_one_plane
    };
    Ok(OracleResult {
        min_crossings: Some(min),
        optimal_routes,
        exists_1plane,
        all_optima_1plane,
    })
}

fn kind_of(query: OracleQuery) -> RouteKind {
    match query {
        OracleQuery::Cycle => RouteKind::Cycle,
        _ => RouteKind::Path,
    }
}

fn feasible(set: &BicoloredSet, query: OracleQuery) -> bool {
    let n = set.len();
    let reds = set.red_count();
    let blues = set.blue_count();
    match query {
        OracleQuery::Cycle => n >= 4 && reds == blues,
        OracleQuery::PathFree => n >= 2 && reds.abs_diff(blues) <= 1,
        OracleQuery::PathBetween(s, t) => {
            let (cs, ct) = (set.color(s), set.color(t));
            n >= 2
                && if cs != ct {
                    reds == blues
                } else {
                    set.count_of(cs) == set.count_of(cs.opposite()) + 1
                }
        }
    }
}

fn is_one_plane(set: &BicoloredSet, query: OracleQuery, verts: &[usize]) -> bool {
    AltRoute::analyzed(set, kind_of(query), verts.to_vec()).is_one_plane()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    FindMin,
    CollectOptima,
    FindOnePlane,
}

struct Search<'a> {
    set: &'a BicoloredSet,
    query: OracleQuery,
    verts: Vec<usize>,
    used: Vec<bool>,
    edge_cross: Vec<usize>,
    total: usize,
    best: Option<usize>,
    optima: Vec<Vec<usize>>,
    found_one_plane: bool,
    mode: Mode,
}

impl<'a> Search<'a> {
    fn new(set: &'a BicoloredSet, query: OracleQuery) -> Self {
        Search {
            set,
            query,
            verts: Vec::with_capacity(set.len()),
            used: vec![false; set.len()],
            edge_cross: Vec::with_capacity(set.len()),
            total: 0,
            best: None,
            optima: Vec::new(),
            found_one_plane: false,
            mode: Mode::FindMin,
        }
    }

    fn run(&mut self, mode: Mode) -> Option<usize> {
        self.mode = mode;
        self.verts.clear();
        self.used.fill(false);
        self.edge_cross.clear();
        self.total = 0;
        if mode == Mode::FindMin {
            self.best = None;
        }
        let n = self.set.len();
        match self.query {
            OracleQuery::PathBetween(s, _) => {
                self.push(s);
                self.dfs();
                self.pop();
            }
            OracleQuery::PathFree => {
                // Canonical form: smaller endpoint first.
                for s in 0..n {
                    self.push(s);
                    self.dfs();
                    self.pop();
                }
            }
            OracleQuery::Cycle => {
                // Canonical form: start at 0, second vertex < last.
                self.push(0);
                self.dfs();
                self.pop();
            }
        }
        self.best
    }

    fn dfs(&mut self) {
        if self.aborted() {
            return;
        }
        let n = self.set.len();
        if self.verts.len() == n {
            self.complete();
            return;
        }
        let last = *self.verts.last().unwrap();
        let need = self.set.color(last).opposite();
        for v in 0..n {
            if self.used[v] || self.set.color(v) != need {
                continue;
            }
            match self.query {
                OracleQuery::PathBetween(_, t) => {
                    // Keep the target for the final slot.
                    if v == t && self.verts.len() + 1 != n {
                        continue;
                    }
                }
                OracleQuery::PathFree => {
                    // Endpoint canonicalization at the final slot.
                    if self.verts.len() + 1 == n && v < self.verts[0] {
                        continue;
                    }
                }
                OracleQuery::Cycle => {
                    // Orientation canonicalization at the final slot.
                    if self.verts.len() + 1 == n && v < self.verts[1] {
                        continue;
                    }
                }
            }
            if self.try_push(v) {
                self.dfs();
                self.pop();
            }
            if self.aborted() {
                return;
            }
        }
    }

    fn aborted(&self) -> bool {
        self.mode == Mode::FindOnePlane && self.found_one_plane
    }

    fn complete(&mut self) {
        if let OracleQuery::PathBetween(_, t) = self.query {
            if *self.verts.last().unwrap() != t {
                return;
            }
        }
        let mut close_cross = 0;
        if self.query == OracleQuery::Cycle {
            match self.crossings_of_new_edge(self.verts[0], true) {
                Some(c) => close_cross = c,
                None => return,
            }
            if self.mode != Mode::FindOnePlane {
                if let Some(best) = self.best {
                    let limit = match self.mode {
                        Mode::FindMin => best.saturating_sub(1),
                        _ => best,
                    };
                    if self.total + close_cross > limit {
                        return;
                    }
                }
            }
        }
        let total = self.total + close_cross;
        match self.mode {
            Mode::FindMin => {
                if self.best.is_none_or(|b| total < b) {
                    self.best = Some(total);
                }
            }
            Mode::CollectOptima => {
                if Some(total) == self.best {
                    self.optima.push(self.verts.clone());
                }
            }
            Mode::FindOnePlane => {
                self.found_one_plane = true;
            }
        }
    }

    /// Crossings the edge (last, v) — or the closing edge — would add;
    /// None when 1-plane mode rules it out.
    fn crossings_of_new_edge(&self, v: usize, closing: bool) -> Option<usize> {
        let last = *self.verts.last().unwrap();
        let e = (last, v);
        let mut added = 0;
        for (i, w) in self.verts.windows(2).enumerate() {
            if self.set.edges_cross(e, (w[0], w[1])) {
                added += 1;
                if self.mode == Mode::FindOnePlane && (self.edge_cross[i] >= 1 || added >= 2) {
                    return None;
                }
            }
        }
        let _ = closing;
        Some(added)
    }

    fn try_push(&mut self, v: usize) -> bool {
        let Some(added) = self.crossings_of_new_edge(v, false) else {
            return false;
        };
        if self.mode != Mode::FindOnePlane {
            if let Some(best) = self.best {
                let limit = match self.mode {
                    Mode::FindMin => best.saturating_sub(1),
                    _ => best,
                };
                if self.total + added > limit {
                    return false;
                }
            }
        }
        // Commit: update per-edge counters.
        let e = (*self.verts.last().unwrap(), v);
        for (i, w) in self.verts.windows(2).enumerate().collect::<Vec<_>>() {
            if self.set.edges_cross(e, (w[0], w[1])) {
                self.edge_cross[i] += 1;
            }
        }
        self.edge_cross.push(
            self.verts
                .windows(2)
                .filter(|w| self.set.edges_cross(e, (w[0], w[1])))
                .count(),
        );
        self.total += added;
        self.used[v] = true;
        self.verts.push(v);
        true
    }

    fn push(&mut self, v: usize) {
        self.used[v] = true;
        self.verts.push(v);
    }

    fn pop(&mut self) {
        let v = self.verts.pop().unwrap();
        self.used[v] = false;
        if let Some(my_cross) = (!self.verts.is_empty())
            .then(|| self.edge_cross.pop())
            .flatten()
        {
            let e = (*self.verts.last().unwrap(), v);
            for (i, w) in self.verts.windows(2).enumerate().collect::<Vec<_>>() {
                if self.set.edges_cross(e, (w[0], w[1])) {
                    self.edge_cross[i] -= 1;
                }
            }
            self.total -= my_cross;
        }
    }
}

/// Replace two crossing route edges by the quadrilateral reconnection
/// (reversing the enclosed segment). Alternation is preserved exactly
/// when the reversal's boundary vertices share a color.
pub fn quadrangular_swap(
    set: &BicoloredSet,
    route: &AltRoute,
    e1: (usize, usize),
    e2: (usize, usize),
) -> Result<AltRoute> {
    let verts = &route.vertices;
    let m = verts.len();
    let edge_positions = |e: (usize, usize)| -> Option<usize> {
        let limit = match route.kind {
            RouteKind::Cycle => m,
            RouteKind::Path => m - 1,
        };
        (0..limit).find(|&i| {
            let (a, b) = (verts[i], verts[(i + 1) % m]);
            (a, b) == e || (b, a) == e
        })
    };
    let (Some(i1), Some(i2)) = (edge_positions(e1), edge_positions(e2)) else {
        return Err(Error::PreconditionViolated(
            "both edges must belong to the route".into(),
        ));
    };
    if !set.edges_cross(
        (verts[i1], verts[(i1 + 1) % m]),
        (verts[i2], verts[(i2 + 1) % m]),
    ) {
        return Err(Error::PreconditionViolated("edges do not cross".into()));
    }
    // Normalize: for a cycle rotate so the first edge sits at 0.
    let (seq, i, j) = match route.kind {
        RouteKind::Cycle => {
            let mut seq = verts.clone();
            seq.rotate_left(i1);
            (seq, 0, (i2 + m - i1) % m)
        }
        RouteKind::Path => {
            let (a, b) = (i1.min(i2), i1.max(i2));
            (verts.clone(), a, b)
        }
    };
    if set.color(seq[i + 1]) != set.color(seq[j]) {
        return Err(Error::PreconditionViolated(
            "reversal boundary vertices differ in color; swap would break alternation".into(),
        ));
    }
    let mut new_verts = seq[..=i].to_vec();
    new_verts.extend(seq[i + 1..=j].iter().rev());
    new_verts.extend_from_slice(&seq[j + 1..]);
    Ok(AltRoute::analyzed(set, route.kind, new_verts))
}
