//! Convex-position solvers: the two-list first-balance pairing, the
//! linear-time optimum cycle and consecutive-endpoint paths, the
//! special-configuration optimum path, and the quadratic DP for
//! arbitrary fixed endpoints.

mod dp;

use crate::error::{Error, Result};
use crate::geom::{Color, Direction};
use crate::route::{AltRoute, RouteKind};
use crate::set::BicoloredSet;

pub use dp::DpTables;

/// First-balance assignment computed by the two-list procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JMap {
    /// For each role-color point, its first balance partner in the
    /// scan direction (None for the single unmatched point when the
    /// role color is in excess by one).
    pub assign: Vec<Option<usize>>,
    pub direction: Direction,
    pub role_color: Color,
}

/// The two-list first-balance pairing: for each role-color point p,
/// the first point q in the scan direction such that the interval from
/// p to q contains equally many points of both colors.
pub fn j_pairs(set: &BicoloredSet, direction: Direction, role_color: Color) -> Result<JMap> {
    if !set.is_convex() {
        return Err(Error::PreconditionViolated(
            "the pairing is defined on convex sequences".into(),
        ));
    }
    let h = set.len();
    let role = set.count_of(role_color);
    let other = h - role;
    if role != other && role != other + 1 {
        return Err(Error::PreconditionViolated(format!(
            "role color count {role} must equal {other} or {}",
            other + 1
        )));
    }
    let mut assign = vec![None; h];
    let mut role_stack: Vec<usize> = Vec::with_capacity(role);
    let mut other_list: Vec<usize> = Vec::new();
    let mut step = |p: usize| {
        if set.color(p) == role_color {
            role_stack.push(p);
        } else if let Some(r) = role_stack.pop() {
            assign[r] = Some(p);
        } else {
            other_list.push(p);
        }
    };
    match direction {
        Direction::Cw => (0..h).for_each(&mut step),
        Direction::Ccw => std::iter::once(0).chain((1..h).rev()).for_each(&mut step),
    }
    // Wrap step: first unmatched opposite point pairs with the last
    // surviving role point, and so on. With a one-point excess the
    // earliest surviving role point stays unmatched.
    for &b in &other_list {
        let r = role_stack
            .pop()
            .ok_or_else(|| Error::Internal("two-list pairing ran out of role points".into()))?;
        assign[r] = Some(b);
    }
    Ok(JMap {
        assign,
        direction,
        role_color,
    })
}

/// Items of the explicit work stack used to emit arc paths without
/// recursion (arcs can be millions of points long).
enum Item {
    V(usize),
    A { lo: usize, hi: usize, rev: bool },
}

/// Optimum alternating path between the two ends of a convex arc
/// (positions are indices into `colors`). The ends must be adjacent on
/// the sub-circle, i.e. the arc is the whole circle minus that edge.
/// Valid shapes: opposite end colors with balanced counts, or equal
/// end colors holding a one-point majority.
pub fn arc_path(colors: &[Color]) -> Result<Vec<usize>> {
    let k = colors.len();
    if k == 1 {
        return Ok(vec![0]);
    }
    if k == 0 {
        return Err(Error::PreconditionViolated("empty arc".into()));
    }
    let reds = colors.iter().filter(|&&c| c == Color::Red).count();
    let blues = k - reds;
    let (c0, ce) = (colors[0], colors[k - 1]);
    let shape_ok = if c0 != ce {
        reds == blues
    } else {
        let major = colors.iter().filter(|&&c| c == c0).count();
        major == k - major + 1
    };
    if !shape_ok {
        return Err(Error::PreconditionViolated(
            "arc colors do not fit either path statement".into(),
        ));
    }

    // first_balance[i]: smallest j >= i with the interval [i..j]
    // color-balanced; computed right-to-left from prefix sums.
    let mut prefix = vec![0i64; k + 1];
    for (i, &c) in colors.iter().enumerate() {
        prefix[i + 1] = prefix[i] + if c == Color::Red { 1 } else { -1 };
    }
    let offset = k as i64;
    let mut first_pos = vec![usize::MAX; 2 * k + 1];
    let mut first_balance = vec![usize::MAX; k];
    for i in (0..k).rev() {
        first_pos[(prefix[i + 1] + offset) as usize] = i;
        let want = (prefix[i] + offset) as usize;
        first_balance[i] = first_pos[want];
    }

    let mut out: Vec<usize> = Vec::with_capacity(k);
    let push = |out: &mut Vec<usize>, v: usize| {
        if out.last() != Some(&v) {
            out.push(v);
        }
    };
    let mut stack = vec![Item::A {
        lo: 0,
        hi: k - 1,
        rev: false,
    }];
    while let Some(item) = stack.pop() {
        let (lo, hi, rev) = match item {
            Item::V(v) => {
                push(&mut out, v);
                continue;
            }
            Item::A { lo, hi, rev } => (lo, hi, rev),
        };
        let seq: &mut dyn FnMut(&mut Vec<Item>, Vec<Item>) = &mut |stack, items| {
            // LIFO: push in reverse so the first item pops first.
            for it in items.into_iter().rev() {
                stack.push(it);
            }
        };
        if hi == lo {
            push(&mut out, lo);
            continue;
        }
        if hi == lo + 1 {
            if rev {
                push(&mut out, hi);
                push(&mut out, lo);
            } else {
                push(&mut out, lo);
                push(&mut out, hi);
            }
            continue;
        }
        let (a, b) = (colors[lo], colors[hi]);
        if colors[lo + 1] != a {
            // Peel the first edge.
            let rest = Item::A {
                lo: lo + 1,
                hi,
                rev,
            };
            if rev {
                seq(&mut stack, vec![rest, Item::V(lo)]);
            } else {
                seq(&mut stack, vec![Item::V(lo), rest]);
            }
            continue;
        }
        if colors[hi - 1] != b {
            // Peel the last edge.
            let rest = Item::A {
                lo,
                hi: hi - 1,
                rev,
            };
            if rev {
                seq(&mut stack, vec![Item::V(hi), rest]);
            } else {
                seq(&mut stack, vec![rest, Item::V(hi)]);
            }
            continue;
        }
        // Both inner neighbors repeat their end's color: split at the
        // first balance point, or handle the no-interior-balance arc
        // with the two crossing chords.
        let j = first_balance[lo];
        if j == usize::MAX || j > hi {
            return Err(Error::Internal(
                "no balance point inside a shape-valid arc".into(),
            ));
        }
        if a != b && j == hi {
            let inner = Item::A {
                lo: lo + 1,
                hi: hi - 1,
                rev: !rev,
            };
            if rev {
                seq(&mut stack, vec![Item::V(hi), inner, Item::V(lo)]);
            } else {
                seq(&mut stack, vec![Item::V(lo), inner, Item::V(hi)]);
            }
        } else {
            let left = Item::A { lo, hi: j, rev };
            let right = Item::A { lo: j, hi, rev };
            if rev {
                seq(&mut stack, vec![right, left]);
            } else {
                seq(&mut stack, vec![left, right]);
            }
        }
    }
    debug_assert_eq!(out.len(), k);
    Ok(out)
}

/// Positions `start..=end` walking clockwise around a circle of `h`.
fn circular_span(h: usize, start: usize, end: usize) -> Vec<usize> {
    let mut v = Vec::new();
    let mut i = start;
    loop {
        v.push(i);
        if i == end {
            break;
        }
        i = (i + 1) % h;
    }
    v
}

fn arc_path_on(set: &BicoloredSet, span: &[usize]) -> Result<Vec<usize>> {
    let colors: Vec<Color> = span.iter().map(|&i| set.color(i)).collect();
    Ok(arc_path(&colors)?.into_iter().map(|p| span[p]).collect())
}

fn require_convex(set: &BicoloredSet) -> Result<()> {
    if !set.is_convex() {
        return Err(Error::PreconditionViolated(
            "operation requires a convex sequence".into(),
        ));
    }
    Ok(())
}

/// Optimum Hamiltonian alternating cycle on a balanced convex
/// sequence: exactly |R| - r(S) crossings, 1-plane, all bridges used.
pub fn optimum_cycle(set: &BicoloredSet) -> Result<AltRoute> {
    require_convex(set)?;
    let h = set.len();
    if h < 4 || set.red_count() != set.blue_count() {
        return Err(Error::PreconditionViolated(
            "cycle needs |R| = |B| >= 2".into(),
        ));
    }
    // First bichromatic adjacency in circular order; closing its hull
    // edge adds no crossings.
    let i = (0..h)
        .find(|&i| set.color(i) != set.color((i + 1) % h))
        .ok_or_else(|| Error::Internal("balanced sequence with one color".into()))?;
    let span = circular_span(h, (i + 1) % h, i);
    let verts = arc_path_on(set, &span)?;
    Ok(AltRoute::analyzed(set, RouteKind::Cycle, verts))
}

/// Optimum alternating path between two circularly adjacent points.
pub fn optimum_path_consecutive(set: &BicoloredSet, a: usize, b: usize) -> Result<AltRoute> {
    require_convex(set)?;
    let h = set.len();
    if a >= h || b >= h || a == b {
        return Err(Error::PreconditionViolated("invalid endpoints".into()));
    }
    let (reversed, first, last) = if (a + 1) % h == b {
        // Arc runs b, b+1, ..., a; flip at the end.
        (true, b, a)
    } else if (b + 1) % h == a {
        (false, a, b)
    } else {
        return Err(Error::PreconditionViolated(
            "endpoints are not consecutive on the circle".into(),
        ));
    };
    let span = circular_span(h, first, last);
    let mut verts = arc_path_on(set, &span)?;
    if reversed {
        verts.reverse();
    }
    Ok(AltRoute::analyzed(set, RouteKind::Path, verts))
}

/// Optimum path for a special configuration: two 1-plane sub-paths
/// plus one edge crossed exactly twice, totalling |R| - r(S).
pub fn optimum_path_special(set: &BicoloredSet, r: usize, b: usize) -> Result<AltRoute> {
    require_convex(set)?;
    if !set.is_special(r, b)? {
        return Err(Error::PreconditionViolated(
            "configuration is not special".into(),
        ));
    }
    let h = set.len();
    let prev = |i: usize| (i + h - 1) % h;
    let next = |i: usize| (i + 1) % h;
    // Route: r, [b+1 .. r-1], [b-1 .. r+1], b. The middle junction
    // edge (r-1, b-1) picks up both crossings.
    let mut verts = vec![r];
    verts.extend(arc_path_on(set, &circular_span(h, next(b), prev(r)))?);
    let mut p1 = arc_path_on(set, &circular_span(h, next(r), prev(b)))?;
    p1.reverse();
    verts.extend(p1);
    verts.push(b);
    Ok(AltRoute::analyzed(set, RouteKind::Path, verts))
}

/// Minimum-crossing alternating path between arbitrary fixed
/// endpoints: consecutive endpoints route to the linear solver,
/// special configurations to the doubly-crossed construction, and the
/// rest to the quadratic DP.
pub fn optimum_path(set: &BicoloredSet, s: usize, t: usize) -> Result<AltRoute> {
    require_convex(set)?;
    let h = set.len();
    if s >= h || t >= h || s == t {
        return Err(Error::PreconditionViolated("invalid endpoints".into()));
    }
    let (cs, ct) = (set.color(s), set.color(t));
    let reds = set.red_count();
    let blues = set.blue_count();
    let counts_ok = if cs != ct {
        reds == blues
    } else {
        set.count_of(cs) == set.count_of(cs.opposite()) + 1
    };
    if !counts_ok {
        return Err(Error::PreconditionViolated(
            "endpoint colors are inconsistent with the color counts".into(),
        ));
    }
    if (s + 1) % h == t || (t + 1) % h == s {
        return optimum_path_consecutive(set, s, t);
    }
    if cs != ct {
        let (r, b) = if cs == Color::Red { (s, t) } else { (t, s) };
        if set.is_special(r, b)? {
            let route = optimum_path_special(set, r, b)?;
            if r == s {
                return Ok(route);
            }
            let mut verts = route.vertices;
            verts.reverse();
            return Ok(AltRoute::analyzed(set, RouteKind::Path, verts));
        }
    }
    dp::optimum_path_dp(set, s, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate_min, OracleQuery};
    use crate::route::verify_route;

    fn set_of(s: &str) -> BicoloredSet {
        BicoloredSet::from_color_string(s).unwrap()
    }

    /// Brute-force first balance partner in the scan direction.
    fn brute_j(set: &BicoloredSet, i: usize, direction: Direction) -> Option<usize> {
        let h = set.len();
        let mut bal: i64 = if set.color(i) == Color::Red { 1 } else { -1 };
        for step in 1..h {
            let j = match direction {
                Direction::Cw => (i + step) % h,
                Direction::Ccw => (i + h - step % h) % h,
            };
            bal += if set.color(j) == Color::Red { 1 } else { -1 };
            if bal == 0 {
                return Some(j);
            }
        }
        None
    }

    #[test]
    fn j_pairs_examples() {
        let s = set_of("RRBB");
        let m = j_pairs(&s, Direction::Cw, Color::Red).unwrap();
        assert_eq!(m.assign[0], Some(3));
        assert_eq!(m.assign[1], Some(2));

        let s = set_of("RBRB");
        let m = j_pairs(&s, Direction::Cw, Color::Red).unwrap();
        assert_eq!(m.assign[0], Some(1));
        assert_eq!(m.assign[2], Some(3));

        let s = set_of("BBRR");
        let m = j_pairs(&s, Direction::Cw, Color::Red).unwrap();
        assert_eq!(m.assign[2], Some(1));
        assert_eq!(m.assign[3], Some(0));
    }

    #[test]
    fn j_pairs_matches_brute_force() {
        for bits in 0u32..1 << 10 {
            let colors: String = (0..10)
                .map(|k| if bits >> k & 1 == 1 { 'R' } else { 'B' })
                .collect();
            let s = set_of(&colors);
            for role in [Color::Red, Color::Blue] {
                let other = role.opposite();
                if s.count_of(role) != s.count_of(other)
                    && s.count_of(role) != s.count_of(other) + 1
                {
                    continue;
                }
                for dir in [Direction::Cw, Direction::Ccw] {
                    let m = j_pairs(&s, dir, role).unwrap();
                    for i in 0..s.len() {
                        if s.color(i) == role {
                            assert_eq!(m.assign[i], brute_j(&s, i, dir), "{colors} {i} {dir:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cycle_alternating_family() {
        let s = set_of("RBRB");
        let c = optimum_cycle(&s).unwrap();
        assert_eq!(c.crossing_count(), 0);
        assert!(verify_route(&s, &c).passed());
    }

    #[test]
    fn cycle_two_runs() {
        let s = set_of("RRBB");
        let c = optimum_cycle(&s).unwrap();
        assert_eq!(c.crossing_count(), 1);
        assert!(c.is_one_plane());
        assert_eq!(c.bridges_used(&s), 2);
    }

    #[test]
    fn cycle_extremal_family() {
        let s = set_of("RRRRRBBBBB");
        let c = optimum_cycle(&s).unwrap();
        assert_eq!(c.crossing_count(), 4);
        assert!(c.is_one_plane());
        assert!(verify_route(&s, &c).passed());
    }

    #[test]
    fn cycle_matches_oracle_small() {
        for bits in 0u32..1 << 8 {
            let colors: String = (0..8)
                .map(|k| if bits >> k & 1 == 1 { 'R' } else { 'B' })
                .collect();
            let s = set_of(&colors);
            if s.red_count() != s.blue_count() {
                continue;
            }
            let c = optimum_cycle(&s).unwrap();
            let res = enumerate_min(&s, OracleQuery::Cycle).unwrap();
            assert_eq!(Some(c.crossing_count()), res.min_crossings, "{colors}");
            assert!(c.is_one_plane(), "{colors}");
            let rs = s.run_structure();
            assert_eq!(
                c.crossing_count(),
                s.red_count() - rs.red_runs.max(rs.blue_runs),
                "{colors}"
            );
        }
    }

    #[test]
    fn consecutive_path_examples() {
        let s = set_of("RRBB");
        let p = optimum_path_consecutive(&s, 1, 2).unwrap();
        assert_eq!(p.crossing_count(), 1);
        assert_eq!(p.endpoints(), Some((1, 2)));
        assert!(verify_route(&s, &p).passed());

        let s = set_of("RB");
        let p = optimum_path_consecutive(&s, 0, 1).unwrap();
        assert_eq!(p.crossing_count(), 0);

        // |R| = 3, |B| = 2, red-red consecutive endpoints: 3 - b(S) = 1...
        let s = set_of("RRBRB");
        let p = optimum_path_consecutive(&s, 0, 1).unwrap();
        assert_eq!(p.endpoints(), Some((0, 1)));
        let res = enumerate_min(&s, OracleQuery::PathBetween(0, 1)).unwrap();
        assert_eq!(Some(p.crossing_count()), res.min_crossings);
    }

    #[test]
    fn consecutive_matches_oracle_small() {
        for bits in 0u32..1 << 8 {
            let colors: String = (0..8)
                .map(|k| if bits >> k & 1 == 1 { 'R' } else { 'B' })
                .collect();
            let s = set_of(&colors);
            let h = s.len();
            for a in 0..h {
                let b = (a + 1) % h;
                let feasible = if s.color(a) != s.color(b) {
                    s.red_count() == s.blue_count()
                } else {
                    s.count_of(s.color(a)) == s.count_of(s.color(a).opposite()) + 1
                };
                if !feasible {
                    continue;
                }
                let p = optimum_path_consecutive(&s, a, b).unwrap();
                let res = enumerate_min(&s, OracleQuery::PathBetween(a, b)).unwrap();
                assert_eq!(Some(p.crossing_count()), res.min_crossings, "{colors} {a}");
                assert!(p.is_one_plane(), "{colors} {a}");
                assert_eq!(p.endpoints(), Some((a, b)));
            }
        }
    }

    #[test]
    fn special_path_minimal() {
        let s = set_of("RRBBBR");
        let p = optimum_path_special(&s, 0, 3).unwrap();
        assert_eq!(p.crossing_count(), 2);
        assert_eq!(p.endpoints(), Some((0, 3)));
        let twice = p.per_edge.iter().filter(|&&c| c == 2).count();
        assert_eq!(twice, 1);
        assert!(p.per_edge.iter().all(|&c| c <= 2));
        let rep = verify_route(&s, &p);
        assert!(rep.hamiltonian && rep.alternating);
    }

    #[test]
    fn special_path_rejects_non_special() {
        let s = set_of("RBRB");
        assert!(optimum_path_special(&s, 0, 1).is_err());
    }

    #[test]
    fn dp_path_simple() {
        let s = set_of("RRBB");
        // 0,3,1,2 uses the chord (3,1) and two hull edges: no crossings.
        let p = optimum_path(&s, 0, 2).unwrap();
        assert_eq!(p.endpoints(), Some((0, 2)));
        assert_eq!(p.crossing_count(), 0);
        assert!(p.is_one_plane());
    }

    #[test]
    fn dp_path_reaches_special_endpoints() {
        let s = set_of("RRBBBR");
        let p = optimum_path(&s, 3, 0).unwrap();
        assert_eq!(p.endpoints(), Some((3, 0)));
        assert_eq!(p.crossing_count(), 2);
        assert!(p.per_edge.iter().all(|&c| c <= 2));
    }

    #[test]
    fn path_matches_oracle_exhaustive() {
        // Every color sequence up to 9 points, every feasible ordered
        // endpoint pair, against the brute-force minimum.
        for n in 2..=9usize {
            for mask in 0..(1u32 << n) {
                let colors: String = (0..n)
                    .map(|k| if mask >> k & 1 == 1 { 'R' } else { 'B' })
                    .collect();
                let s = set_of(&colors);
                let reds = s.red_count();
                let blues = s.blue_count();
                for a in 0..n {
                    for b in 0..n {
                        if a == b {
                            continue;
                        }
                        let (ca, cb) = (s.color(a), s.color(b));
                        let ok = if ca != cb {
                            reds == blues
                        } else {
                            s.count_of(ca) == s.count_of(ca.opposite()) + 1
                        };
                        if !ok {
                            assert!(optimum_path(&s, a, b).is_err(), "{colors} {a} {b}");
                            continue;
                        }
                        let p = optimum_path(&s, a, b)
                            .unwrap_or_else(|e| panic!("{colors} {a} {b}: {e}"));
                        let res = enumerate_min(&s, OracleQuery::PathBetween(a, b)).unwrap();
                        assert_eq!(
                            Some(p.crossing_count()),
                            res.min_crossings,
                            "{colors} {a} {b}: got {:?}",
                            p.vertices
                        );
                        assert_eq!(p.endpoints(), Some((a, b)), "{colors} {a} {b}");
                        let rep = verify_route(&s, &p);
                        assert!(rep.hamiltonian && rep.alternating, "{colors} {a} {b}");
                        if res.exists_1plane {
                            assert!(p.is_one_plane(), "{colors} {a} {b}");
                        } else {
                            assert!(p.per_edge.iter().all(|&c| c <= 2), "{colors} {a} {b}");
                        }
                    }
                }
            }
        }
    }
}
