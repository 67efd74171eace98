//! Instance and route file formats.
//!
//! Instance files are either a point list (`x y R|B` per line) or a
//! convex color string (`convex: RRBB`), optionally followed by an
//! `endpoints: i j` line with 1-based indices. Route files start with
//! a `cycle` or `path` header followed by 1-based vertex indices.

use altroute::{BicoloredSet, Color, ColoredPoint, Error, Result, RouteKind};

#[derive(Debug, Clone)]
pub struct Instance {
    pub set: BicoloredSet,
    /// 0-based endpoint annotation, if present.
    pub endpoints: Option<(usize, usize)>,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_color(tok: &str, line: usize, column: usize) -> Result<Color> {
    match tok {
        "R" | "r" => Ok(Color::Red),
        "B" | "b" => Ok(Color::Blue),
        other => Err(parse_error(
            line,
            column,
            format!("expected R or B, got {other:?}"),
        )),
    }
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut points: Vec<ColoredPoint> = Vec::new();
    let mut convex: Option<String> = None;
    let mut endpoints: Option<(usize, usize)> = None;
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("convex:") {
            if convex.is_some() || !points.is_empty() {
                return Err(parse_error(line_no, 1, "conflicting instance sections"));
            }
            let s = rest.trim();
            if s.is_empty() || !s.chars().all(|c| matches!(c, 'R' | 'B' | 'r' | 'b')) {
                return Err(parse_error(
                    line_no,
                    9,
                    "convex string must contain only R and B",
                ));
            }
            convex = Some(s.to_uppercase());
            continue;
        }
        if let Some(rest) = line.strip_prefix("endpoints:") {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(parse_error(
                    line_no,
                    11,
                    "endpoints needs two 1-based indices",
                ));
            }
            let parse_idx = |t: &str| -> Result<usize> {
                let v: usize = t
                    .parse()
                    .map_err(|_| parse_error(line_no, 11, format!("bad index {t:?}")))?;
                if v == 0 {
                    return Err(parse_error(line_no, 11, "indices are 1-based"));
                }
                Ok(v - 1)
            };
            endpoints = Some((parse_idx(toks[0])?, parse_idx(toks[1])?));
            continue;
        }
        if convex.is_some() {
            return Err(parse_error(
                line_no,
                1,
                "unexpected line after convex string",
            ));
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(parse_error(line_no, 1, "expected `x y color`"));
        }
        let x: i64 = toks[0]
            .parse()
            .map_err(|_| parse_error(line_no, 1, format!("bad x coordinate {:?}", toks[0])))?;
        let y: i64 = toks[1]
            .parse()
            .map_err(|_| parse_error(line_no, 1, format!("bad y coordinate {:?}", toks[1])))?;
        let c = parse_color(toks[2], line_no, 1)?;
        points.push(ColoredPoint::new(x, y, c));
    }
    let set = match convex {
        Some(s) => BicoloredSet::from_color_string(&s)?,
        None => {
            if points.is_empty() {
                return Err(parse_error(1, 1, "empty instance"));
            }
            BicoloredSet::from_points(points)?
        }
    };
    if let Some((a, b)) = endpoints {
        if a >= set.len() || b >= set.len() {
            return Err(Error::PreconditionViolated(
                "endpoint annotation out of range".into(),
            ));
        }
    }
    Ok(Instance { set, endpoints })
}

pub fn serialize_instance(inst: &Instance) -> String {
    let mut out = String::new();
    if inst.set.is_convex() {
        out.push_str("convex: ");
        for c in inst.set.colors() {
            out.push(c.letter());
        }
        out.push('\n');
    } else {
        for p in inst.set.points() {
            out.push_str(&format!("{} {} {}\n", p.x, p.y, p.color.letter()));
        }
    }
    if let Some((a, b)) = inst.endpoints {
        out.push_str(&format!("endpoints: {} {}\n", a + 1, b + 1));
    }
    out
}

pub fn parse_route(text: &str) -> Result<(RouteKind, Vec<usize>)> {
    let mut toks = text.split_whitespace();
    let kind = match toks.next() {
        Some("cycle") => RouteKind::Cycle,
        Some("path") => RouteKind::Path,
        other => {
            return Err(parse_error(
                1,
                1,
                format!("route header must be `cycle` or `path`, got {other:?}"),
            ))
        }
    };
    let mut verts = Vec::new();
    for t in toks {
        let v: usize = t
            .parse()
            .map_err(|_| parse_error(1, 1, format!("bad vertex index {t:?}")))?;
        if v == 0 {
            return Err(parse_error(1, 1, "vertex indices are 1-based"));
        }
        verts.push(v - 1);
    }
    Ok((kind, verts))
}

pub fn serialize_route(kind: RouteKind, verts: &[usize]) -> String {
    let head = match kind {
        RouteKind::Cycle => "cycle",
        RouteKind::Path => "path",
    };
    let body: Vec<String> = verts.iter().map(|v| (v + 1).to_string()).collect();
    format!("{head}\n{}\n", body.join(" "))
}
