//! Recursive construction of 1-plane Hamiltonian alternating paths and
//! cycles on point sets in general position.
//!
//! The path builder works on index subsets of the base set. Each step
//! either peels a point off via a visibility shortcut, splits the set
//! with a radial partition around an endpoint, or (in the stubborn
//! same-color-endpoint cases) routes through tangent edges between the
//! two partition hulls. Every recursive call strictly shrinks the
//! subset, and sub-hulls of the two sides only meet at the designated
//! junction vertex, which is what keeps the result 1-plane.

use crate::error::{Error, Result};
use crate::geom::{self, Color, ColoredPoint, Direction};
use crate::route::{AltRoute, RouteKind};
use crate::set::BicoloredSet;

/// 1-plane Hamiltonian alternating path between two hull points.
///
/// Accepts balanced sets with opposite-colored endpoints (rejecting
/// special configurations) or majority-plus-one sets with two
/// endpoints of the majority color.
pub fn build_path(set: &BicoloredSet, a: usize, b: usize) -> Result<AltRoute> {
    let n = set.len();
    if a >= n || b >= n || a == b {
        return Err(Error::PreconditionViolated("invalid endpoints".into()));
    }
    if !set.on_hull(a) || !set.on_hull(b) {
        return Err(Error::PreconditionViolated(
            "both endpoints must lie on the hull boundary".into(),
        ));
    }
    let (ca, cb) = (set.color(a), set.color(b));
    if ca != cb {
        if set.red_count() != set.blue_count() {
            return Err(Error::PreconditionViolated(
                "opposite-colored endpoints require balanced color counts".into(),
            ));
        }
        let (r, bl) = if ca == Color::Red { (a, b) } else { (b, a) };
        if set.is_special(r, bl)? {
            return Err(Error::SpecialConfiguration);
        }
    } else if set.count_of(ca) != set.count_of(ca.opposite()) + 1 {
        return Err(Error::PreconditionViolated(
            "same-colored endpoints require a one-point majority of their color".into(),
        ));
    }
    let ctx = Ctx { set };
    let sub: Vec<usize> = (0..n).collect();
    let verts = ctx.path(&sub, a, b)?;
    Ok(AltRoute::analyzed(set, RouteKind::Path, verts))
}

/// 1-plane Hamiltonian alternating cycle with at most
/// n - max{r(S), b(S)} crossings, for balanced sets.
pub fn build_cycle(set: &BicoloredSet) -> Result<AltRoute> {
    let n2 = set.len();
    if set.red_count() != set.blue_count() || set.red_count() < 2 {
        return Err(Error::PreconditionViolated(
            "cycles require |R| = |B| >= 2".into(),
        ));
    }
    let ctx = Ctx { set };
    let sub: Vec<usize> = (0..n2).collect();
    let hull = ctx.hull_of(&sub)?;
    let k = hull.len();
    let bichromatic = hull.iter().any(|&v| set.color(v) != set.color(hull[0]));
    let verts = if bichromatic {
        // Close the path between the first opposite-colored adjacent
        // hull pair.
        let pos = (0..k)
            .find(|&i| set.color(hull[i]) != set.color(hull[(i + 1) % k]))
            .expect("bichromatic hull has a color change");
        let (x, y) = (hull[pos], hull[(pos + 1) % k]);
        let (r, bl) = if set.color(x) == Color::Red {
            (x, y)
        } else {
            (y, x)
        };
        ctx.path(&sub, r, bl)?
    } else {
        // Monochromatic hull: glue two sub-paths at the partition
        // junction around a hull point.
        let center = *hull.iter().min().unwrap();
        let radial = ctx.radial(&without(&sub, &[center]), center, Direction::Ccw)?;
        let juncs = ctx.junctions(&radial, set.color(center));
        let m = *juncs
            .first()
            .ok_or_else(|| Error::Internal("no balanced partition around hull point".into()))?;
        let j = radial[m];
        let mut side1 = radial[..m].to_vec();
        side1.push(center);
        side1.push(j);
        let mut side2 = radial[m..].to_vec();
        side2.push(center);
        let p1 = ctx.path(&side1, center, j)?;
        let p2 = ctx.path(&side2, j, center)?;
        let mut verts = p1;
        verts.extend(p2[1..p2.len() - 1].iter().copied());
        verts
    };
    Ok(AltRoute::analyzed(set, RouteKind::Cycle, verts))
}

fn without(sub: &[usize], drop: &[usize]) -> Vec<usize> {
    sub.iter().copied().filter(|v| !drop.contains(v)).collect()
}

struct Ctx<'a> {
    set: &'a BicoloredSet,
}

impl Ctx<'_> {
    fn color(&self, i: usize) -> Color {
        self.set.color(i)
    }

    fn pts(&self, sub: &[usize]) -> Vec<ColoredPoint> {
        sub.iter().map(|&i| *self.set.point(i)).collect()
    }

    /// Convex hull of the subset, ccw, as base indices.
    fn hull_of(&self, sub: &[usize]) -> Result<Vec<usize>> {
        let hull = geom::convex_hull(&self.pts(sub))?;
        Ok(hull.vertices.into_iter().map(|k| sub[k]).collect())
    }

    /// Hull vertices of `sub` visible from base point `x` (not in
    /// `sub`), as a contiguous ccw boundary arc.
    fn visible(&self, sub: &[usize], x: usize) -> Result<Vec<usize>> {
        let vis = geom::visible_points(&self.pts(sub), self.set.point(x))?;
        Ok(vis.into_iter().map(|k| sub[k]).collect())
    }

    /// Radial order of `sub` (which excludes `center`) around `center`.
    fn radial(&self, sub: &[usize], center: usize, dir: Direction) -> Result<Vec<usize>> {
        let perm = geom::radial_order(&self.pts(sub), self.set.point(center), dir)?;
        Ok(perm.into_iter().map(|k| sub[k]).collect())
    }

    /// Positions m in the radial order where {center} ∪ radial[..=m]
    /// has balanced colors; the first one is the partition lemma's
    /// junction p_{i+1}, later ones are alternative split points.
    fn junctions(&self, radial: &[usize], center_color: Color) -> Vec<usize> {
        let mut delta: i64 = 1;
        let mut out = Vec::new();
        for (m, &v) in radial.iter().enumerate() {
            delta += if self.color(v) == center_color { 1 } else { -1 };
            if delta == 0 {
                out.push(m);
            }
        }
        out
    }

    /// Are `x` and `y` adjacent on the hull of `sub`?
    fn hull_adjacent(&self, hull: &[usize], x: usize, y: usize) -> bool {
        let k = hull.len();
        (0..k).any(|i| {
            let (u, v) = (hull[i], hull[(i + 1) % k]);
            (u == x && v == y) || (u == y && v == x)
        })
    }

    /// Special-configuration test on a subset, color-agnostic: `x` and
    /// `y` are opposite-colored hull points of the balanced `sub`.
    fn is_special_sub(&self, sub: &[usize], x: usize, y: usize) -> Result<bool> {
        let reds = sub.iter().filter(|&&v| self.color(v) == Color::Red).count();
        if reds * 2 != sub.len() {
            return Ok(false);
        }
        let hull = self.hull_of(sub)?;
        for &e in &[x, y] {
            let Some(pos) = hull.iter().position(|&v| v == e) else {
                return Ok(false);
            };
            let k = hull.len();
            let (p, nx) = (hull[(pos + k - 1) % k], hull[(pos + 1) % k]);
            if self.color(p) != self.color(e) || self.color(nx) != self.color(e) {
                return Ok(false);
            }
        }
        for (c, t) in [(x, y), (y, x)] {
            for dir in [Direction::Ccw, Direction::Cw] {
                let radial = self.radial(&without(sub, &[c]), c, dir)?;
                let juncs = self.junctions(&radial, self.color(c));
                match juncs.first() {
                    Some(&m) if radial[m] == t => {}
                    _ => return Ok(false),
                }
            }
        }
        Ok(true)
    }

    /// Path from `a` to `b` covering exactly `sub`; both endpoints are
    /// hull points of `sub` and the statement preconditions hold.
    fn path(&self, sub: &[usize], a: usize, b: usize) -> Result<Vec<usize>> {
        debug_assert!(sub.contains(&a) && sub.contains(&b) && a != b);
        if self.color(a) != self.color(b) {
            let (r, bl) = if self.color(a) == Color::Red {
                (a, b)
            } else {
                (b, a)
            };
            let p = self.stmt_i(sub, r, bl)?;
            Ok(orient(p, a))
        } else {
            let p = self.stmt_ii(sub, a, b)?;
            Ok(orient(p, a))
        }
    }

    /// Statement (i): balanced set, red `r` to blue `b`.
    fn stmt_i(&self, sub: &[usize], r: usize, b: usize) -> Result<Vec<usize>> {
        if sub.len() == 2 {
            return Ok(vec![r, b]);
        }

        // Visibility shortcut: peel an endpoint off through a visible
        // same-color-as-the-other-endpoint point.
        let others_r = without(sub, &[r]);
        for &v in &self.visible(&others_r, r)? {
            if self.color(v) == Color::Blue && v != b {
                let mut p = vec![r];
                p.extend(self.path(&others_r, v, b)?);
                return Ok(p);
            }
        }
        let others_b = without(sub, &[b]);
        for &v in &self.visible(&others_b, b)? {
            if self.color(v) == Color::Red && v != r {
                let mut p = self.path(&others_b, r, v)?;
                p.push(b);
                return Ok(p);
            }
        }

        let hull = self.hull_of(sub)?;
        if self.hull_adjacent(&hull, r, b) {
            return self.stmt_i_consecutive(sub, r, b);
        }

        // Case 2: split around an endpoint at a junction whose wedge
        // avoids the other endpoint.
        for (center, target) in [(r, b), (b, r)] {
            for dir in [Direction::Ccw, Direction::Cw] {
                let radial = self.radial(&without(sub, &[center]), center, dir)?;
                for &m in &self.junctions(&radial, self.color(center)) {
                    if radial[..=m].contains(&target) {
                        continue;
                    }
                    let j = radial[m];
                    let mut side1 = radial[..m].to_vec();
                    side1.push(center);
                    side1.push(j);
                    let side2 = radial[m..].to_vec();
                    let mut p = self.path(&side1, center, j)?;
                    p.extend(self.path(&side2, j, target)?.into_iter().skip(1));
                    return Ok(orient(p, r));
                }
            }
        }
        // Mirror split: the other endpoint sits inside the wedge, so
        // cover the far side first.
        for (center, target) in [(r, b), (b, r)] {
            for dir in [Direction::Ccw, Direction::Cw] {
                let radial = self.radial(&without(sub, &[center]), center, dir)?;
                for &m in &self.junctions(&radial, self.color(center)) {
                    if !radial[..m].contains(&target) {
                        continue;
                    }
                    let j = radial[m];
                    let mut side1 = radial[m..].to_vec();
                    side1.push(center);
                    let mut side2 = radial[..m].to_vec();
                    side2.push(j);
                    let mut p = self.path(&side1, center, j)?;
                    p.extend(self.path(&side2, j, target)?.into_iter().skip(1));
                    return Ok(orient(p, r));
                }
            }
        }
        Err(Error::Internal(
            "no valid partition for opposite-colored endpoints".into(),
        ))
    }

    /// Case 1 of statement (i): hull-consecutive endpoints. Route both
    /// through a visible opposite-colored hull-adjacent pair of the
    /// remainder.
    fn stmt_i_consecutive(&self, sub: &[usize], r: usize, b: usize) -> Result<Vec<usize>> {
        let rest = without(sub, &[r, b]);
        let hull = self.hull_of(&rest)?;
        let vis_r = self.visible(&rest, r)?;
        let vis_b = self.visible(&rest, b)?;
        let seen = |v: usize| vis_r.contains(&v) && vis_b.contains(&v);
        let k = hull.len();
        let edge_count = if k == 2 { 1 } else { k };
        for i in 0..edge_count {
            let (u, v) = (hull[i], hull[(i + 1) % k]);
            if self.color(u) != self.color(v) && seen(u) && seen(v) {
                let (bp, rp) = if self.color(u) == Color::Blue {
                    (u, v)
                } else {
                    (v, u)
                };
                let mut p = vec![r];
                p.extend(self.path(&rest, bp, rp)?);
                p.push(b);
                return Ok(p);
            }
        }
        Err(Error::Internal(
            "no visible bichromatic pair for consecutive endpoints".into(),
        ))
    }

    /// Statement (ii): one-point majority of the endpoints' color
    /// (`hot`); both endpoints hot.
    fn stmt_ii(&self, sub: &[usize], a: usize, b: usize) -> Result<Vec<usize>> {
        let hot = self.color(a);
        let cold = hot.opposite();
        if sub.len() == 3 {
            let mid = *sub.iter().find(|&&v| v != a && v != b).unwrap();
            return Ok(vec![a, mid, b]);
        }

        // If a visible arc from an endpoint carries both colors, peel
        // that endpoint through the cold half of a bichromatic
        // adjacent pair.
        let vis_a = self.visible(&without(sub, &[a]), a)?;
        let vis_b = self.visible(&without(sub, &[b]), b)?;
        for (src, dst, vis) in [(a, b, &vis_a), (b, a, &vis_b)] {
            if let Some(w) = vis
                .windows(2)
                .find(|w| self.color(w[0]) != self.color(w[1]))
            {
                let cold_pt = if self.color(w[0]) == cold { w[0] } else { w[1] };
                let mut p = vec![src];
                p.extend(self.path(&without(sub, &[src]), cold_pt, dst)?);
                return Ok(orient(p, a));
            }
        }

        let all = |vis: &[usize], c: Color| vis.iter().all(|&v| self.color(v) == c);
        if all(&vis_a, hot) {
            self.stmt_ii_hot_side(sub, a, b, &vis_a)
                .map(|p| orient(p, a))
        } else if all(&vis_b, hot) {
            self.stmt_ii_hot_side(sub, b, a, &vis_b)
                .map(|p| orient(p, a))
        } else if all(&vis_a, cold) && all(&vis_b, cold) {
            match self.stmt_ii_cold(sub, a, b) {
                Ok(p) => Ok(orient(p, a)),
                Err(Error::Internal(_)) => self.stmt_ii_cold(sub, b, a).map(|p| orient(p, a)),
                Err(e) => Err(e),
            }
        } else {
            Err(Error::Internal(
                "visible arcs are neither bichromatic nor monochromatic".into(),
            ))
        }
    }

    /// Case 3: everything `src` sees is hot. Partition around `src`;
    /// if the far side is special, bridge the two sub-hulls with a
    /// tangent edge (Case 3.2).
    fn stmt_ii_hot_side(
        &self,
        sub: &[usize],
        src: usize,
        dst: usize,
        vis_src: &[usize],
    ) -> Result<Vec<usize>> {
        let cold = self.color(src).opposite();
        for dir in [Direction::Ccw, Direction::Cw] {
            let radial = self.radial(&without(sub, &[src]), src, dir)?;
            for &m in &self.junctions(&radial, self.color(src)) {
                if radial[..=m].contains(&dst) {
                    continue;
                }
                let j = radial[m];
                let s1 = radial[..m].to_vec();
                let s2 = radial[m..].to_vec();
                if !self.is_special_sub(&s2, dst, j)? {
                    // Case 3.1.
                    let mut side1 = s1;
                    side1.push(src);
                    side1.push(j);
                    let mut p = self.path(&side1, src, j)?;
                    p.extend(self.path(&s2, j, dst)?.into_iter().skip(1));
                    return Ok(p);
                }
                // Case 3.2: needs the lemma's p_i (cold, in s1).
                if m == 0 || self.color(radial[m - 1]) != cold {
                    continue;
                }
                if let Some(p) =
                    self.stmt_ii_tangent(src, dst, &s1, &s2, radial[m - 1], j, dir, vis_src)?
                {
                    return Ok(p);
                }
            }
        }
        Err(Error::Internal(
            "no valid partition for same-colored endpoints".into(),
        ))
    }

    /// Case 3.2: the far side (s2, dst, j) is special. Connect the two
    /// sub-hulls through a tangent from a cold hull point of s2 to the
    /// boundary chain of s1; the two connector edges cross at most
    /// once, outside both hulls.
    #[allow(clippy::too_many_arguments)]
    fn stmt_ii_tangent(
        &self,
        src: usize,
        dst: usize,
        s1: &[usize],
        s2: &[usize],
        p_i: usize,
        j: usize,
        dir: Direction,
        vis_src: &[usize],
    ) -> Result<Option<Vec<usize>>> {
        let hot = self.color(src);
        // Adjacent visible pair straddling the two sides.
        let Some(w) = vis_src.windows(2).find(|w| {
            (s1.contains(&w[0]) && s2.contains(&w[1])) || (s2.contains(&w[0]) && s1.contains(&w[1]))
        }) else {
            return Ok(None);
        };
        let (r1, r2) = if s1.contains(&w[0]) {
            (w[0], w[1])
        } else {
            (w[1], w[0])
        };
        // Boundary chains from the junction pair to the straddling
        // pair; mirrored when the partition was swept clockwise.
        let (d1, d2) = match dir {
            Direction::Ccw => (Direction::Ccw, Direction::Cw),
            Direction::Cw => (Direction::Cw, Direction::Ccw),
        };
        let c1 = self.hull_walk(s1, p_i, r1, d1)?;
        let c2 = self.hull_walk(s2, j, r2, d2)?;
        let Some(f1) = c1.iter().position(|&v| self.color(v) == hot) else {
            return Ok(None);
        };
        let Some(f2) = c2.iter().position(|&v| self.color(v) == hot) else {
            return Ok(None);
        };
        if f1 == 0 || f2 == 0 {
            return Ok(None);
        }
        let q_j = c1[f1 - 1];
        let (q2_prev, q2_first_hot) = (c2[f2 - 1], c2[f2]);
        // Tangent point from the cold predecessor on s2's chain to s1.
        let arc = self.visible(s1, q2_prev)?;
        let ends = [*arc.first().unwrap(), *arc.last().unwrap()];
        let p = ends
            .iter()
            .copied()
            .filter(|e| c1.contains(e))
            .max_by_key(|e| c1.iter().position(|v| v == e))
            .ok_or_else(|| Error::Internal("tangent point misses the boundary chain".into()))?;
        if self.color(p) == hot {
            let mut path = vec![src];
            path.extend(self.path(s1, q_j, p)?);
            path.extend(self.path(s2, q2_prev, dst)?);
            Ok(Some(path))
        } else {
            if q2_first_hot == dst {
                return Ok(None);
            }
            let mut side1 = s1.to_vec();
            side1.push(j);
            let side2 = without(s2, &[j]);
            let mut path = vec![src];
            path.extend(self.path(&side1, j, p)?);
            path.extend(self.path(&side2, q2_first_hot, dst)?);
            Ok(Some(path))
        }
    }

    /// Hull boundary walk of `sub` from `from` to `to` inclusive,
    /// stepping ccw or cw.
    fn hull_walk(
        &self,
        sub: &[usize],
        from: usize,
        to: usize,
        dir: Direction,
    ) -> Result<Vec<usize>> {
        let hull = self.hull_of(sub)?;
        let k = hull.len();
        let start = hull
            .iter()
            .position(|&v| v == from)
            .ok_or_else(|| Error::Internal("walk start not on sub-hull".into()))?;
        let mut out = Vec::new();
        let mut pos = start;
        for _ in 0..=k {
            out.push(hull[pos]);
            if hull[pos] == to {
                return Ok(out);
            }
            pos = match dir {
                Direction::Ccw => (pos + 1) % k,
                Direction::Cw => (pos + k - 1) % k,
            };
        }
        Err(Error::Internal("walk end not on sub-hull".into()))
    }

    /// Case 4: both endpoints see only cold points. Detour through a
    /// cold hull neighbor of `src`.
    fn stmt_ii_cold(&self, sub: &[usize], src: usize, dst: usize) -> Result<Vec<usize>> {
        let hot = self.color(src);
        let hull = self.hull_of(sub)?;
        let k = hull.len();
        let pos = hull
            .iter()
            .position(|&v| v == src)
            .ok_or_else(|| Error::Internal("endpoint left the sub-hull".into()))?;
        let b2 = hull[(pos + k - 1) % k];
        let rest = without(sub, &[src, b2]);
        let vis2 = self.visible(&rest, b2)?;
        // Case 4.1: a hot point other than dst is visible from b2.
        if let Some(&rpp) = vis2.iter().find(|&&v| self.color(v) == hot && v != dst) {
            let mut p = vec![src, b2];
            p.extend(self.path(&rest, rpp, dst)?);
            return Ok(p);
        }
        if vis2.iter().any(|&v| self.color(v) == hot) {
            return Err(Error::Internal(
                "only the far endpoint is visible from the detour point".into(),
            ));
        }
        // Case 4.2: partition the remainder around b2.
        for dir in [Direction::Ccw, Direction::Cw] {
            let radial = self.radial(&rest, b2, dir)?;
            let juncs = self.junctions(&radial, self.color(b2));
            let Some(&m) = juncs.first() else {
                continue;
            };
            let j = radial[m];
            let s1 = radial[..m].to_vec();
            let s2 = radial[m..].to_vec();
            if dst == j {
                // Enter through b2's other boundary neighbor inside s1.
                let nb_hull = self.hull_of(&without(sub, &[src]))?;
                let kk = nb_hull.len();
                let bpos = nb_hull.iter().position(|&v| v == b2).unwrap();
                let nbs = [nb_hull[(bpos + kk - 1) % kk], nb_hull[(bpos + 1) % kk]];
                let Some(&b1p) = nbs
                    .iter()
                    .find(|&&v| s1.contains(&v) && self.color(v) != hot)
                else {
                    continue;
                };
                let mut side1 = s1;
                side1.push(b2);
                let mut side2 = s2;
                side2.push(b2);
                let mut p = vec![src];
                p.extend(self.path(&side1, b1p, b2)?);
                p.extend(self.path(&side2, b2, dst)?.into_iter().skip(1));
                return Ok(p);
            }
            if s1.contains(&dst) {
                let mut side2 = s2;
                side2.push(b2);
                let mut side1 = s1;
                side1.push(j);
                let mut p = vec![src];
                p.extend(self.path(&side2, b2, j)?);
                p.extend(self.path(&side1, j, dst)?.into_iter().skip(1));
                return Ok(p);
            }
            // dst in s2 beyond the junction.
            let mut side1 = s1;
            side1.push(b2);
            side1.push(j);
            let mut p = vec![src];
            p.extend(self.path(&side1, b2, j)?);
            p.extend(self.path(&s2, j, dst)?.into_iter().skip(1));
            return Ok(p);
        }
        Err(Error::Internal(
            "no partition around the detour point".into(),
        ))
    }
}

fn orient(mut p: Vec<usize>, first: usize) -> Vec<usize> {
    if p.first() != Some(&first) {
        p.reverse();
    }
    p
}
