//! Deterministic instance generators.

use altroute::{BicoloredSet, Color, ColoredPoint, Error, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::instance::Instance;

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` red and `n` blue uniform points in [-bbox, bbox]^2;
/// rejection-resamples whole instances until the general-position
/// checks pass.
pub fn random_general(n: usize, seed: u64, bbox: i64) -> Result<Instance> {
    if n == 0 || bbox <= 0 {
        return Err(Error::PreconditionViolated(
            "n and bbox must be positive".into(),
        ));
    }
    let mut rng = rng_for(seed);
    for _ in 0..10_000 {
        let pts: Vec<ColoredPoint> = (0..2 * n)
            .map(|i| {
                let c = if i < n { Color::Red } else { Color::Blue };
                ColoredPoint::new(rng.gen_range(-bbox..=bbox), rng.gen_range(-bbox..=bbox), c)
            })
            .collect();
        if let Ok(set) = BicoloredSet::from_points(pts) {
            return Ok(Instance {
                set,
                endpoints: None,
            });
        }
    }
    Err(Error::DegenerateInput(
        "could not sample a general-position instance; enlarge bbox".into(),
    ))
}

/// Random balanced convex sequence with `n` points per color.
pub fn convex_random(n: usize, seed: u64) -> Result<Instance> {
    if n == 0 {
        return Err(Error::PreconditionViolated("n must be positive".into()));
    }
    let mut colors: Vec<Color> = std::iter::repeat_n(Color::Red, n)
        .chain(std::iter::repeat_n(Color::Blue, n))
        .collect();
    colors.shuffle(&mut rng_for(seed));
    Ok(Instance {
        set: BicoloredSet::from_color_sequence(&colors)?,
        endpoints: None,
    })
}

/// Run-length pattern like `R5B5`, `RB`, or `RBx25` (trailing `xN`
/// repeats the whole pattern N times).
pub fn runs_pattern(pattern: &str) -> Result<Instance> {
    let bad = |msg: &str| Error::InvalidPattern(format!("{msg} in pattern {pattern:?}"));
    let (body, repeat) = match pattern.split_once(['x', 'X']) {
        Some((b, r)) => {
            let times: usize = r.parse().map_err(|_| bad("bad repeat count"))?;
            if times == 0 {
                return Err(bad("repeat count must be positive"));
            }
            (b, times)
        }
        None => (pattern, 1),
    };
    let mut one = Vec::new();
    let mut chars = body.chars().peekable();
    while let Some(c) = chars.next() {
        let color = match c {
            'R' | 'r' => Color::Red,
            'B' | 'b' => Color::Blue,
            _ => return Err(bad("expected R or B")),
        };
        let mut digits = String::new();
        while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
            digits.push(*d);
            chars.next();
        }
        let count: usize = if digits.is_empty() {
            1
        } else {
            digits.parse().map_err(|_| bad("bad run length"))?
        };
        if count == 0 {
            return Err(bad("run length must be positive"));
        }
        one.extend(std::iter::repeat_n(color, count));
    }
    if one.is_empty() {
        return Err(bad("empty pattern"));
    }
    let colors: Vec<Color> = one
        .iter()
        .copied()
        .cycle()
        .take(one.len() * repeat)
        .collect();
    Ok(Instance {
        set: BicoloredSet::from_color_sequence(&colors)?,
        endpoints: None,
    })
}

/// `n` hull points of `hull_color` on a large circle, `n` points of
/// the other color well inside; deterministic.
pub fn nested(hull_color: Color, n: usize) -> Result<Instance> {
    if n == 0 {
        return Err(Error::PreconditionViolated("n must be positive".into()));
    }
    // Irrational-step angles avoid symmetric collinearities; a retry
    // loop with growing phase shifts covers any residue from rounding.
    for attempt in 0..64u32 {
        let phase = attempt as f64 * 0.137;
        let place = |k: usize, count: usize, radius: f64, offset: f64| -> (i64, i64) {
            let ang = offset
                + phase
                + (k as f64) * std::f64::consts::TAU / (count as f64)
                + (k as f64) * 1e-3;
            (
                (radius * ang.cos()).round() as i64,
                (radius * ang.sin()).round() as i64,
            )
        };
        let mut pts = Vec::with_capacity(2 * n);
        for k in 0..n {
            let (x, y) = place(k, n, 1_000_000.0, 0.0);
            pts.push(ColoredPoint::new(x, y, hull_color));
        }
        for k in 0..n {
            let (x, y) = place(k, n, 1_000.0, 0.61);
            pts.push(ColoredPoint::new(x, y, hull_color.opposite()));
        }
        if let Ok(set) = BicoloredSet::from_points(pts) {
            // All hull vertices must carry the hull color.
            if set
                .hull()
                .vertices
                .iter()
                .all(|&v| set.color(v) == hull_color)
            {
                return Ok(Instance {
                    set,
                    endpoints: None,
                });
            }
        }
    }
    Err(Error::Internal(
        "nested generator failed to converge".into(),
    ))
}
