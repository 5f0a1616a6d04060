//! Plain-text formats for quivers, representations, category objects and
//! friezes.
//!
//! All formats are line-oriented; blank lines and lines starting with `#`
//! are ignored. Vertex labels in files are 1-based.
//!
//! * Quiver: a line `n`, then lines `i j m` meaning `m` arrows `i → j`.
//! * Representation: a line with the dimension vector, then one matrix
//!   block per arrow of the fixed quiver shape (rows of integers).
//! * Arc object: one line `polygon N; arcs (i,j) (k,l) …`.
//! * Module object: the representation format, followed by `shift i` lines.
//! * Frieze: the quiver format, then one final line of initial values.

use num_bigint::BigInt;

use crate::clustercat::{Arc, ArcObject, ModIndec, ModObject};
use crate::error::{Error, Result};
use crate::exactalg::Rationals;
use crate::quiver::ExchangeQuiver;
use crate::repmod::{decompose, IntRep, QuiverShape};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Content lines of a text file: trimmed, with blanks and `#` comments
/// removed.
fn content_lines(text: &str) -> Vec<&str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn parse_usize(tok: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| parse_err(format!("expected a nonnegative integer, got {tok:?}")))
}

fn parse_i64(tok: &str) -> Result<i64> {
    tok.parse::<i64>()
        .map_err(|_| parse_err(format!("expected an integer, got {tok:?}")))
}

// ---------------------------------------------------------------------------
// Quiver format
// ---------------------------------------------------------------------------

fn quiver_from_lines(lines: &[&str]) -> Result<ExchangeQuiver> {
    let first = lines.first().ok_or_else(|| parse_err("empty quiver file"))?;
    let n = parse_usize(first)?;
    let mut b = vec![vec![0i64; n]; n];
    for line in &lines[1..] {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(parse_err(format!("arrow line must be \"i j m\", got {line:?}")));
        }
        let i = parse_usize(toks[0])?;
        let j = parse_usize(toks[1])?;
        let m = parse_i64(toks[2])?;
        if i < 1 || i > n || j < 1 || j > n {
            return Err(parse_err(format!("vertex out of range 1..={n} in {line:?}")));
        }
        if m < 0 {
            return Err(parse_err(format!("negative arrow multiplicity in {line:?}")));
        }
        if i == j {
            return Err(parse_err(format!("loop at vertex {i} in {line:?}")));
        }
        b[i - 1][j - 1] += m;
        b[j - 1][i - 1] -= m;
    }
    ExchangeQuiver::new(b)
}

/// Parse the quiver format: a line `n`, then lines `i j m` for `m` arrows
/// `i → j` (1-based vertices).
pub fn parse_quiver(text: &str) -> Result<ExchangeQuiver> {
    quiver_from_lines(&content_lines(text))
}

/// Render a quiver in the format accepted by [`parse_quiver`].
pub fn render_quiver(q: &ExchangeQuiver) -> String {
    let mut out = format!("{}\n", q.n);
    for i in 0..q.n {
        for j in (i + 1)..q.n {
            let m = q.b[i][j];
            if m > 0 {
                out.push_str(&format!("{} {} {}\n", i + 1, j + 1, m));
            } else if m < 0 {
                out.push_str(&format!("{} {} {}\n", j + 1, i + 1, -m));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Representation format
// ---------------------------------------------------------------------------

fn rep_from_lines(shape: &QuiverShape, lines: &[&str]) -> Result<(IntRep, usize)> {
    let first = lines
        .first()
        .ok_or_else(|| parse_err("empty representation"))?;
    let dims: Vec<usize> = first
        .split_whitespace()
        .map(parse_usize)
        .collect::<Result<_>>()?;
    if dims.len() != shape.n {
        return Err(parse_err(format!(
            "dimension vector has {} entries, quiver has {} vertices",
            dims.len(),
            shape.n
        )));
    }
    let mut used = 1;
    let mut maps = Vec::with_capacity(shape.arrows.len());
    for &(s, t) in &shape.arrows {
        let (rows, cols) = (dims[t], dims[s]);
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let line = lines.get(used).ok_or_else(|| {
                parse_err(format!("missing row {r} of the matrix for arrow {s}→{t}"))
            })?;
            used += 1;
            let row: Vec<i64> = line
                .split_whitespace()
                .map(parse_i64)
                .collect::<Result<_>>()?;
            if row.len() != cols {
                return Err(parse_err(format!(
                    "matrix row for arrow {s}→{t} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        maps.push(entries);
    }
    Ok((IntRep { shape: shape.clone(), dims, maps }, used))
}

/// Parse the representation format against a fixed quiver shape: a
/// dimension-vector line, then one matrix block per arrow (row-major,
/// `dims[t]` lines of `dims[s]` integers; empty blocks take no lines).
pub fn parse_rep(shape: &QuiverShape, text: &str) -> Result<IntRep> {
    let lines = content_lines(text);
    let (rep, used) = rep_from_lines(shape, &lines)?;
    if used != lines.len() {
        return Err(parse_err("trailing content after the last matrix block"));
    }
    Ok(rep)
}

/// Render a representation in the format accepted by [`parse_rep`].
pub fn render_rep(rep: &IntRep) -> String {
    let mut out = String::new();
    let dims: Vec<String> = rep.dims.iter().map(|d| d.to_string()).collect();
    out.push_str(&dims.join(" "));
    out.push('\n');
    for (a, &(s, t)) in rep.shape.arrows.iter().enumerate() {
        let (rows, cols) = (rep.dims[t], rep.dims[s]);
        for r in 0..rows {
            let row: Vec<String> = (0..cols)
                .map(|c| rep.maps[a][r * cols + c].to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Arc-object format
// ---------------------------------------------------------------------------

/// Parse an arc object: `polygon N; arcs (i,j) (k,l) …` (the arc list may
/// be empty, giving the zero object).
pub fn parse_arc_object(text: &str) -> Result<ArcObject> {
    let lines = content_lines(text);
    if lines.len() != 1 {
        return Err(parse_err("arc object must be a single line"));
    }
    let (head, tail) = lines[0]
        .split_once(';')
        .ok_or_else(|| parse_err("expected \"polygon N; arcs …\""))?;
    let head_toks: Vec<&str> = head.split_whitespace().collect();
    if head_toks.len() != 2 || head_toks[0] != "polygon" {
        return Err(parse_err(format!("expected \"polygon N\", got {head:?}")));
    }
    let big_n = parse_usize(head_toks[1])?;
    if big_n < 4 {
        return Err(parse_err("polygon must have at least 4 vertices"));
    }
    let tail = tail.trim();
    let rest = tail
        .strip_prefix("arcs")
        .ok_or_else(|| parse_err(format!("expected \"arcs …\", got {tail:?}")))?;
    let mut arcs = Vec::new();
    for tok in rest.split_whitespace() {
        let inner = tok
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| parse_err(format!("expected \"(i,j)\", got {tok:?}")))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| parse_err(format!("expected \"(i,j)\", got {tok:?}")))?;
        let (a, b) = (parse_usize(a.trim())?, parse_usize(b.trim())?);
        if a < 1 || a > big_n || b < 1 || b > big_n || a == b {
            return Err(parse_err(format!("({a},{b}) is not a chord of the {big_n}-gon")));
        }
        // Boundary edges are the zero object and contribute no summand.
        if let Some(arc) = Arc::reduce(big_n, a, b) {
            arcs.push(arc);
        }
    }
    Ok(ArcObject::new(big_n, arcs))
}

/// Render an arc object in the format accepted by [`parse_arc_object`].
pub fn render_arc_object(obj: &ArcObject) -> String {
    let mut out = format!("polygon {}; arcs", obj.big_n);
    for arc in &obj.arcs {
        out.push_str(&format!(" ({},{})", arc.a, arc.b));
    }
    out.push('\n');
    out
}

// ---------------------------------------------------------------------------
// Module-object format
// ---------------------------------------------------------------------------

/// Parse a module-backend object of rank `n`: the representation format
/// over the linear type-A quiver, followed by `shift i` lines (1-based
/// shifted projective summands).
pub fn parse_mod_object(n: usize, text: &str) -> Result<ModObject> {
    let shape = QuiverShape::linear_a(n);
    let lines = content_lines(text);
    let split = lines
        .iter()
        .position(|l| l.starts_with("shift"))
        .unwrap_or(lines.len());
    let (rep, used) = rep_from_lines(&shape, &lines[..split])?;
    if used != split {
        return Err(parse_err("trailing content after the last matrix block"));
    }
    let mut summands = Vec::new();
    let k = Rationals;
    for (iv, mult) in decompose(&rep.to_field(&k))? {
        for _ in 0..mult {
            summands.push(ModIndec::Interval(iv));
        }
    }
    for line in &lines[split..] {
        let rest = line
            .strip_prefix("shift")
            .ok_or_else(|| parse_err(format!("expected \"shift i\", got {line:?}")))?;
        let v = parse_usize(rest.trim())?;
        if v < 1 || v > n {
            return Err(parse_err(format!("shift index {v} out of range 1..={n}")));
        }
        summands.push(ModIndec::Shift(v));
    }
    Ok(ModObject::new(summands))
}

/// Render a module-backend object in the format accepted by
/// [`parse_mod_object`].
pub fn render_mod_object(n: usize, obj: &ModObject) -> String {
    let shape = QuiverShape::linear_a(n);
    let mut rep = IntRep::zero(&shape);
    let mut shifts = Vec::new();
    for s in &obj.summands {
        match s {
            ModIndec::Interval(iv) => rep = rep.direct_sum(&iv.clone().to_rep(&shape)),
            ModIndec::Shift(v) => shifts.push(*v),
        }
    }
    let mut out = render_rep(&rep);
    shifts.sort_unstable();
    for v in shifts {
        out.push_str(&format!("shift {v}\n"));
    }
    out
}

// ---------------------------------------------------------------------------
// Frieze format
// ---------------------------------------------------------------------------

/// Parse a frieze file: the quiver format, then one final line holding the
/// frieze's values on the initial cluster variables.
pub fn parse_frieze_file(text: &str) -> Result<(ExchangeQuiver, Vec<BigInt>)> {
    let lines = content_lines(text);
    if lines.len() < 2 {
        return Err(parse_err("frieze file needs a quiver and a line of values"));
    }
    let quiver = quiver_from_lines(&lines[..lines.len() - 1])?;
    let values: Vec<BigInt> = lines[lines.len() - 1]
        .split_whitespace()
        .map(|t| {
            t.parse::<BigInt>()
                .map_err(|_| parse_err(format!("expected an integer value, got {t:?}")))
        })
        .collect::<Result<_>>()?;
    if values.len() != quiver.n {
        return Err(parse_err(format!(
            "{} values given for a quiver with {} vertices",
            values.len(),
            quiver.n
        )));
    }
    Ok((quiver, values))
}

/// Render a frieze file in the format accepted by [`parse_frieze_file`].
pub fn render_frieze_file(quiver: &ExchangeQuiver, values: &[BigInt]) -> String {
    let mut out = render_quiver(quiver);
    let vals: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    out.push_str(&vals.join(" "));
    out.push('\n');
    out
}
