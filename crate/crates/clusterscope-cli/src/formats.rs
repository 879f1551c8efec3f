//! Line-oriented text formats: quivers (`.qvr`), surface descriptors, and
//! the small value parsers shared by the commands. All vertex numbers in
//! text are 1-based; the library API is 0-based.

use std::fmt::Write as _;
use std::str::FromStr;

use clusterscope_core::{IceQuiver, PointAssignment, SurfaceComponent, SurfaceDescriptor};
use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for FormatError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError { line, message: message.into() })
}

/// Serializes a quiver: header, vertex count, frozen list, one line per
/// positive entry of the matrix.
pub fn write_qvr(q: &IceQuiver, name: &str) -> String {
    let mut out = String::new();
    let n = q.vertex_count();
    writeln!(out, "quiver {name}").unwrap();
    writeln!(out, "vertices {n}").unwrap();
    let frozen = q.frozen_vertices();
    if frozen.is_empty() {
        writeln!(out, "frozen none").unwrap();
    } else {
        let list: Vec<String> = frozen.iter().map(|v| (v + 1).to_string()).collect();
        writeln!(out, "frozen {}", list.join(" ")).unwrap();
    }
    writeln!(out, "arrows").unwrap();
    for i in 0..n {
        for j in 0..n {
            let m = q.entry(i, j);
            if m > 0 {
                writeln!(out, "{} {} {}", i + 1, j + 1, m).unwrap();
            }
        }
    }
    writeln!(out, "end").unwrap();
    out
}

/// Parses the `.qvr` format, rejecting loops, duplicate pairs, and pairs
/// listed in both directions. Returns the quiver and its declared name.
pub fn parse_qvr(text: &str) -> Result<(IceQuiver, String), FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    parse_qvr_from_lines(&mut lines)
}

/// Same as [`parse_qvr`] but consumes from an existing line iterator, for
/// formats that embed quiver blocks.
pub fn parse_qvr_from_lines<'a, I>(lines: &mut I) -> Result<(IceQuiver, String), FormatError>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let mut next_content = || -> Option<(usize, &str)> {
        lines.by_ref().find(|(_, l)| !l.is_empty() && !l.starts_with('#'))
    };
    let Some((ln, header)) = next_content() else {
        return err(0, "missing `quiver <name>` header");
    };
    let name = match header.strip_prefix("quiver ") {
        Some(rest) if !rest.trim().is_empty() => rest.trim().to_string(),
        _ => return err(ln, "expected `quiver <name>`"),
    };
    let Some((ln, vline)) = next_content() else {
        return err(ln, "missing `vertices <n>`");
    };
    let n: usize = match vline.strip_prefix("vertices ") {
        Some(rest) => match rest.trim().parse() {
            Ok(v) => v,
            Err(_) => return err(ln, "vertex count is not a number"),
        },
        None => return err(ln, "expected `vertices <n>`"),
    };
    let Some((ln, fline)) = next_content() else {
        return err(ln, "missing `frozen` line");
    };
    let mut frozen = Vec::new();
    match fline.strip_prefix("frozen") {
        Some(rest) => {
            let rest = rest.trim();
            if rest != "none" {
                for tok in rest.split_whitespace() {
                    let v: usize = match tok.parse() {
                        Ok(v) if v >= 1 && v <= n => v,
                        _ => return err(ln, format!("bad frozen vertex `{tok}`")),
                    };
                    frozen.push(v - 1);
                }
            }
        }
        None => return err(ln, "expected `frozen <list>` or `frozen none`"),
    }
    match next_content() {
        Some((_, "arrows")) => {}
        Some((ln, _)) => return err(ln, "expected `arrows`"),
        None => return err(0, "expected `arrows`"),
    }
    let mut arrows: Vec<(usize, usize, i64)> = Vec::new();
    let mut seen_pairs = std::collections::BTreeSet::new();
    loop {
        let Some((ln, line)) = next_content() else {
            return err(0, "arrow list not terminated by `end`");
        };
        if line == "end" {
            break;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return err(ln, "expected `i j m`");
        }
        let parse_vertex = |tok: &str| -> Option<usize> {
            tok.parse::<usize>().ok().filter(|&v| v >= 1 && v <= n)
        };
        let (Some(i), Some(j)) = (parse_vertex(toks[0]), parse_vertex(toks[1])) else {
            return err(ln, "arrow endpoint out of range");
        };
        let m: i64 = match toks[2].parse() {
            Ok(m) if m > 0 => m,
            _ => return err(ln, "arrow count must be a positive integer"),
        };
        if i == j {
            return err(ln, "loops are not allowed");
        }
        if !seen_pairs.insert((i.min(j), i.max(j))) {
            return err(ln, format!("pair {i},{j} listed twice"));
        }
        arrows.push((i - 1, j - 1, m));
    }
    match IceQuiver::from_arrows(n, &arrows, &frozen) {
        Ok(q) => Ok((q, name)),
        Err(e) => err(0, format!("{e}")),
    }
}

/// Serializes a surface descriptor.
pub fn write_surface(d: &SurfaceDescriptor, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "surface {name}").unwrap();
    for c in &d.components {
        let boundary = if c.boundary.is_empty() {
            "none".to_string()
        } else {
            c.boundary.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        };
        writeln!(
            out,
            "component genus={} boundary={} punctures={}",
            c.genus, boundary, c.punctures
        )
        .unwrap();
    }
    writeln!(out, "end").unwrap();
    out
}

/// Parses the surface descriptor format.
pub fn parse_surface(text: &str) -> Result<(SurfaceDescriptor, String), FormatError> {
    let mut name = None;
    let mut components = Vec::new();
    let mut terminated = false;
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if terminated {
            return err(ln, "content after `end`");
        }
        if name.is_none() {
            match line.strip_prefix("surface ") {
                Some(rest) if !rest.trim().is_empty() => {
                    name = Some(rest.trim().to_string());
                    continue;
                }
                _ => return err(ln, "expected `surface <name>`"),
            }
        }
        if line == "end" {
            terminated = true;
            continue;
        }
        let Some(rest) = line.strip_prefix("component ") else {
            return err(ln, "expected `component ...` or `end`");
        };
        let mut genus = None;
        let mut boundary = None;
        let mut punctures = None;
        for tok in rest.split_whitespace() {
            let Some((key, value)) = tok.split_once('=') else {
                return err(ln, format!("expected key=value, got `{tok}`"));
            };
            match key {
                "genus" => match value.parse() {
                    Ok(v) => genus = Some(v),
                    Err(_) => return err(ln, "bad genus"),
                },
                "boundary" => {
                    if value == "none" {
                        boundary = Some(Vec::new());
                    } else {
                        let mut circles = Vec::new();
                        for c in value.split(',') {
                            match c.parse() {
                                Ok(v) => circles.push(v),
                                Err(_) => return err(ln, format!("bad boundary count `{c}`")),
                            }
                        }
                        boundary = Some(circles);
                    }
                }
                "punctures" => match value.parse() {
                    Ok(v) => punctures = Some(v),
                    Err(_) => return err(ln, "bad puncture count"),
                },
                other => return err(ln, format!("unknown component field `{other}`")),
            }
        }
        match (genus, boundary, punctures) {
            (Some(genus), Some(boundary), Some(punctures)) => {
                components.push(SurfaceComponent { genus, boundary, punctures });
            }
            _ => return err(ln, "component needs genus=, boundary= and punctures="),
        }
    }
    let Some(name) = name else {
        return err(0, "missing `surface <name>` header");
    };
    if !terminated {
        return err(0, "missing `end`");
    }
    Ok((SurfaceDescriptor { components }, name))
}

/// Parses `3/4`, `-2`, ... into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    BigRational::from_str(text.trim()).map_err(|e| format!("bad rational `{text}`: {e}"))
}

/// Parses `v=r,v=r,...` (1-based vertices) into a full assignment of
/// length `n`. Missing vertices get `fill`; duplicate or out-of-range
/// vertices are errors. `require_all` additionally insists every vertex
/// appears.
pub fn parse_assignment(
    text: &str,
    n: usize,
    fill: BigRational,
    require_all: bool,
) -> Result<PointAssignment, String> {
    let mut values = vec![fill; n];
    let mut seen = vec![false; n];
    for item in text.split(',').filter(|s| !s.trim().is_empty()) {
        let Some((v, r)) = item.split_once('=') else {
            return Err(format!("expected v=r, got `{item}`"));
        };
        let vertex: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&v| v >= 1 && v <= n)
            .ok_or_else(|| format!("vertex `{}` out of range 1..={n}", v.trim()))?;
        if seen[vertex - 1] {
            return Err(format!("vertex {vertex} assigned twice"));
        }
        seen[vertex - 1] = true;
        values[vertex - 1] = parse_rational(r)?;
    }
    if require_all {
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(format!("vertex {} has no value", v + 1));
        }
    }
    Ok(PointAssignment::new(values))
}

/// Parses a comma-separated 1-based mutation path into 0-based indices.
pub fn parse_path(text: &str) -> Result<Vec<usize>, String> {
    if text.trim() == "none" || text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .ok()
                .filter(|&v| v >= 1)
                .map(|v| v - 1)
                .ok_or_else(|| format!("bad vertex `{}` in path", tok.trim()))
        })
        .collect()
}

/// Formats a 0-based path as 1-based comma-separated text, `none` if
/// empty.
pub fn path_text(path: &[usize]) -> String {
    if path.is_empty() {
        "none".to_string()
    } else {
        path.iter().map(|k| (k + 1).to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn rational_text(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
