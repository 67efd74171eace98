//! The bicolored point-set model: runs and bridges on the hull
//! boundary, radial partitions around a hull point, and the
//! special-configuration predicate.

use crate::error::{Error, Result};
use crate::geom::{self, Color, ColoredPoint, Direction, Hull};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositionMode {
    /// Arbitrary coordinates, no three points collinear.
    GeneralPosition,
    /// Points in convex position given as a circular color sequence in
    /// clockwise order; all combinatorics are index-based.
    ConvexSequence,
}

/// One maximal block of same-colored consecutive hull points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub color: Color,
    /// Point indices of the run, consecutive along the hull boundary.
    pub points: Vec<usize>,
}

/// Run decomposition of the hull boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunStructure {
    pub runs: Vec<Run>,
    /// r(S): number of red runs.
    pub red_runs: usize,
    /// b(S): number of blue runs.
    pub blue_runs: usize,
    /// Bichromatic hull-adjacent pairs, as point indices in boundary order.
    pub bridges: Vec<(usize, usize)>,
    /// Run id per point (None for interior points).
    pub run_id: Vec<Option<usize>>,
}

/// The (S1, S2, p_i, p_{i+1}) split of the partition lemma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub s1: Vec<usize>,
    pub s2: Vec<usize>,
    pub p_i: usize,
    pub p_i_plus_1: usize,
    pub direction: Direction,
    pub center: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionOutcome {
    /// The first radial point already has the color opposite to the
    /// center; the balanced prefix is just that neighbor.
    ImmediateNeighbor(usize),
    Split(Partition),
}

/// Result of scanning a radial color sequence for the first balanced
/// prefix (center included in the balance).
pub(crate) enum PartitionScan {
    Immediate,
    /// Position (into the radial order) of p_{i+1}.
    Split(usize),
}

/// Pure combinatorial core of the partition lemma: scan the radial
/// color sequence, balance starting from the center alone.
pub(crate) fn partition_scan(radial: &[Color], center_color: Color) -> Result<PartitionScan> {
    let first = *radial
        .first()
        .ok_or_else(|| Error::PreconditionViolated("empty radial order".into()))?;
    if first != center_color {
        return Ok(PartitionScan::Immediate);
    }
    let mut delta: i64 = 2;
    for (pos, &c) in radial.iter().enumerate().skip(1) {
        delta += if c == center_color { 1 } else { -1 };
        if delta == 0 {
            // The subsequence ...,2,1,0 forces the last two points to
            // carry the opposite color.
            debug_assert!(radial[pos] != center_color && radial[pos - 1] != center_color);
            return Ok(PartitionScan::Split(pos));
        }
    }
    Err(Error::PreconditionViolated(
        "radial sequence never balances; color counts violate the lemma".into(),
    ))
}

#[derive(Debug, Clone)]
pub struct BicoloredSet {
    points: Vec<ColoredPoint>,
    mode: PositionMode,
    hull: Hull,
    /// Position of each point along the hull boundary, if on it.
    hull_pos: Vec<Option<usize>>,
    runs: RunStructure,
}

impl BicoloredSet {
    /// Build a general-position set. Rejects duplicates and collinear
    /// triples (checked in O(n^2 log n) via radial sorts).
    pub fn from_points(points: Vec<ColoredPoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::PreconditionViolated("empty point set".into()));
        }
        check_general_position(&points)?;
        let hull = geom::convex_hull(&points)?;
        let (hull_pos, runs) = boundary_caches(&points, &hull);
        Ok(BicoloredSet {
            points,
            mode: PositionMode::GeneralPosition,
            hull,
            hull_pos,
            runs,
        })
    }

    /// Build a convex-position set from its clockwise circular color
    /// sequence. Coordinates are synthesized on a large circle for
    /// rendering only; all combinatorics stay index-based.
    pub fn from_color_sequence(colors: &[Color]) -> Result<Self> {
        let h = colors.len();
        if h == 0 {
            return Err(Error::PreconditionViolated("empty color sequence".into()));
        }
        let points = synthesize_circle(colors);
        let hull = Hull {
            vertices: (0..h).collect(),
        };
        let (hull_pos, runs) = boundary_caches(&points, &hull);
        Ok(BicoloredSet {
            points,
            mode: PositionMode::ConvexSequence,
            hull,
            hull_pos,
            runs,
        })
    }

    /// Parse a string of `R`/`B` characters as a convex sequence.
    pub fn from_color_string(s: &str) -> Result<Self> {
        let colors = s
            .chars()
            .map(|c| match c {
                'R' | 'r' => Ok(Color::Red),
                'B' | 'b' => Ok(Color::Blue),
                other => Err(Error::InvalidPattern(format!(
                    "unexpected character {other:?} in color string"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_color_sequence(&colors)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn mode(&self) -> PositionMode {
        self.mode
    }

    pub fn is_convex(&self) -> bool {
        self.mode == PositionMode::ConvexSequence
    }

    pub fn points(&self) -> &[ColoredPoint] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &ColoredPoint {
        &self.points[i]
    }

    pub fn color(&self, i: usize) -> Color {
        self.points[i].color
    }

    pub fn colors(&self) -> Vec<Color> {
        self.points.iter().map(|p| p.color).collect()
    }

    pub fn red_count(&self) -> usize {
        self.points.iter().filter(|p| p.color == Color::Red).count()
    }

    pub fn blue_count(&self) -> usize {
        self.len() - self.red_count()
    }

    pub fn count_of(&self, color: Color) -> usize {
        match color {
            Color::Red => self.red_count(),
            Color::Blue => self.blue_count(),
        }
    }

    pub fn hull(&self) -> &Hull {
        &self.hull
    }

    pub fn on_hull(&self, i: usize) -> bool {
        self.hull_pos[i].is_some()
    }

    /// Hull neighbors of a boundary point, as (ccw-previous, ccw-next)
    /// in general mode and (sequence-previous, sequence-next) in convex
    /// mode.
    pub fn hull_neighbors(&self, i: usize) -> Result<(usize, usize)> {
        let pos = self.hull_pos[i]
            .ok_or_else(|| Error::PreconditionViolated(format!("point {i} not on hull")))?;
        let k = self.hull.vertices.len();
        Ok((
            self.hull.vertices[(pos + k - 1) % k],
            self.hull.vertices[(pos + 1) % k],
        ))
    }

    pub fn run_structure(&self) -> &RunStructure {
        &self.runs
    }

    /// Do two chords/edges of this set properly cross? Convex mode uses
    /// index interleaving, general mode the exact predicate.
    pub fn edges_cross(&self, e1: (usize, usize), e2: (usize, usize)) -> bool {
        if e1.0 == e2.0 || e1.0 == e2.1 || e1.1 == e2.0 || e1.1 == e2.1 {
            return false;
        }
        match self.mode {
            PositionMode::ConvexSequence => chords_interleave(self.len(), e1, e2),
            PositionMode::GeneralPosition => geom::segments_cross(
                &self.points[e1.0],
                &self.points[e1.1],
                &self.points[e2.0],
                &self.points[e2.1],
            ),
        }
    }

    /// The clockwise or counterclockwise partition of S \ {center}
    /// around a hull point, per the partition lemma.
    pub fn partition_around(
        &self,
        center: usize,
        direction: Direction,
    ) -> Result<PartitionOutcome> {
        let ccolor = self.color(center);
        let same = self.count_of(ccolor);
        let other = self.len() - same;
        if !self.on_hull(center) {
            return Err(Error::PreconditionViolated(format!(
                "center {center} is not on the hull boundary"
            )));
        }
        let order = self.radial_order_around(center, direction)?;
        if same == other {
            // statement (i)
        } else if same == other + 1 {
            // statement (ii): the last radial point must share the
            // center's color.
            let last = *order.last().ok_or_else(|| {
                Error::PreconditionViolated("no points besides the center".into())
            })?;
            if self.color(last) != ccolor {
                return Err(Error::PreconditionViolated(
                    "last radial point does not match the center's color".into(),
                ));
            }
        } else {
            return Err(Error::PreconditionViolated(format!(
                "color counts {same}/{other} do not satisfy the partition lemma"
            )));
        }
        let radial: Vec<Color> = order.iter().map(|&i| self.color(i)).collect();
        match partition_scan(&radial, ccolor)? {
            PartitionScan::Immediate => Ok(PartitionOutcome::ImmediateNeighbor(order[0])),
            PartitionScan::Split(pos) => Ok(PartitionOutcome::Split(Partition {
                s1: order[..pos].to_vec(),
                s2: order[pos..].to_vec(),
                p_i: order[pos - 1],
                p_i_plus_1: order[pos],
                direction,
                center,
            })),
        }
    }

    /// Radial order of all other points around a hull point.
    pub fn radial_order_around(&self, center: usize, direction: Direction) -> Result<Vec<usize>> {
        match self.mode {
            PositionMode::ConvexSequence => {
                let h = self.len();
                // Stored sequence is clockwise, so walking forward from
                // the center is the clockwise sweep.
                let mut order: Vec<usize> = (1..h).map(|k| (center + k) % h).collect();
                if direction == Direction::Ccw {
                    order.reverse();
                }
                Ok(order)
            }
            PositionMode::GeneralPosition => {
                let others: Vec<usize> = (0..self.len()).filter(|&i| i != center).collect();
                let pts: Vec<ColoredPoint> = others.iter().map(|&i| self.points[i]).collect();
                let perm = geom::radial_order(&pts, &self.points[center], direction)?;
                Ok(perm.into_iter().map(|k| others[k]).collect())
            }
        }
    }

    /// The special-configuration predicate: r's hull neighbors red, b's
    /// blue, and all four partitions terminate at the other point.
    pub fn is_special(&self, r: usize, b: usize) -> Result<bool> {
        if self.color(r) != Color::Red || self.color(b) != Color::Blue {
            return Err(Error::PreconditionViolated(
                "is_special expects a red r and a blue b".into(),
            ));
        }
        if !self.on_hull(r) || !self.on_hull(b) {
            return Err(Error::PreconditionViolated(
                "is_special expects both points on the hull boundary".into(),
            ));
        }
        if self.red_count() != self.blue_count() {
            return Err(Error::PreconditionViolated(
                "is_special is defined only for |R| = |B|".into(),
            ));
        }
        let (rp, rn) = self.hull_neighbors(r)?;
        if self.color(rp) != Color::Red || self.color(rn) != Color::Red {
            return Ok(false);
        }
        let (bp, bn) = self.hull_neighbors(b)?;
        if self.color(bp) != Color::Blue || self.color(bn) != Color::Blue {
            return Ok(false);
        }
        for (center, target) in [(r, b), (b, r)] {
            for dir in [Direction::Ccw, Direction::Cw] {
                match self.partition_around(center, dir)? {
                    PartitionOutcome::Split(p) if p.p_i_plus_1 == target => {}
                    _ => return Ok(false),
                }
            }
        }
        Ok(true)
    }
}

/// Chords (a,b) and (c,d) of a convex polygon with `h` vertices cross
/// iff their endpoints interleave along the circle.
pub fn chords_interleave(h: usize, e1: (usize, usize), e2: (usize, usize)) -> bool {
    let inside = |x: usize| {
        // strict circular interval (e1.0, e1.1)
        let span = (e1.1 + h - e1.0) % h;
        let off = (x + h - e1.0) % h;
        off > 0 && off < span
    };
    inside(e2.0) != inside(e2.1)
}

fn check_general_position(points: &[ColoredPoint]) -> Result<()> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i].pos() == points[j].pos() {
                return Err(Error::DegenerateInput("duplicate point".into()));
            }
        }
    }
    if n < 3 {
        return Ok(());
    }
    // A collinear triple shows up as an angular tie around one of its
    // endpoints.
    for c in 0..n {
        let center = points[c].pos();
        let mut vecs: Vec<(i64, i64)> = points
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != c)
            .map(|(_, p)| (p.x - center.0, p.y - center.1))
            .collect();
        vecs.sort_by(|&a, &b| {
            half_of(a).cmp(&half_of(b)).then_with(|| {
                let cross = a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128;
                0i128.cmp(&cross)
            })
        });
        for w in vecs.windows(2) {
            let (a, b) = (w[0], w[1]);
            let cross = a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128;
            // Same half and parallel means same direction: an opposite
            // pair always straddles the half-plane split.
            if cross == 0 && half_of(a) == half_of(b) {
                return Err(Error::DegenerateInput("three points are collinear".into()));
            }
        }
    }
    Ok(())
}

fn half_of(v: (i64, i64)) -> u8 {
    if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
        0
    } else {
        1
    }
}

fn boundary_caches(points: &[ColoredPoint], hull: &Hull) -> (Vec<Option<usize>>, RunStructure) {
    let mut hull_pos = vec![None; points.len()];
    for (pos, &v) in hull.vertices.iter().enumerate() {
        hull_pos[v] = Some(pos);
    }
    (hull_pos, run_structure_of(points, hull))
}

fn run_structure_of(points: &[ColoredPoint], hull: &Hull) -> RunStructure {
    let h = &hull.vertices;
    let k = h.len();
    let mut run_id = vec![None; points.len()];
    let mut runs: Vec<Run> = Vec::new();
    if k == 0 {
        return RunStructure {
            runs,
            red_runs: 0,
            blue_runs: 0,
            bridges: Vec::new(),
            run_id,
        };
    }
    // Start at a color change so the circular wrap never splits a run.
    let start = (0..k)
        .find(|&i| points[h[i]].color != points[h[(i + k - 1) % k]].color)
        .unwrap_or(0);
    for step in 0..k {
        let v = h[(start + step) % k];
        let color = points[v].color;
        match runs.last_mut() {
            Some(run) if run.color == color => run.points.push(v),
            _ => runs.push(Run {
                color,
                points: vec![v],
            }),
        }
    }
    for (id, run) in runs.iter().enumerate() {
        for &v in &run.points {
            run_id[v] = Some(id);
        }
    }
    let red_runs = runs.iter().filter(|r| r.color == Color::Red).count();
    let blue_runs = runs.len() - red_runs;
    let mut bridges = Vec::new();
    if runs.len() > 1 {
        for i in 0..k {
            let a = h[i];
            let b = h[(i + 1) % k];
            if points[a].color != points[b].color {
                bridges.push((a, b));
            }
        }
    }
    RunStructure {
        runs,
        red_runs,
        blue_runs,
        bridges,
        run_id,
    }
}

fn synthesize_circle(colors: &[Color]) -> Vec<ColoredPoint> {
    let h = colors.len();
    if h == 1 {
        return vec![ColoredPoint::new(0, 0, colors[0])];
    }
    // Radius large enough that rounded points stay strictly convex and
    // pairwise distinct.
    let r = (h as i64 * h as i64 * 4).max(1 << 20) as f64;
    colors
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            // Negative angle: clockwise sequence in standard axes.
            let theta = -2.0 * std::f64::consts::PI * (k as f64) / (h as f64);
            ColoredPoint::new(
                (r * theta.cos()).round() as i64,
                (r * theta.sin()).round() as i64,
                c,
            )
        })
        .collect()
}
