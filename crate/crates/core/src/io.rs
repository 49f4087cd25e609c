//! JSON encodings of every input and output type.
//!
//! Numbers are written as canonical rational strings (`"3/2"`, `"-4"`,
//! `"inf"`); on input, JSON integers and decimal strings are accepted too.
//! Objects are emitted with sorted keys so output bytes are deterministic.

use serde_json::{json, Map, Value};

use crate::compare::GridClustering;
use crate::error::{Error, Result};
use crate::filtration::{IntFiltration, RFiltration};
use crate::formigram::{CosheafCode, Formigram, Metric, Ultrametric};
use crate::lattice::{GroundSet, SubPartition};
use crate::persistence::{Bar, Barcode};
use crate::rational::{Ext, ExtDist, Rat};
use crate::staircase::{Ambient, Generator, Profile, Staircase};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing field {key:?}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| parse_err(format!("{what} must be an array")))
}

fn number_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.trim().to_string()),
        Value::Number(n) if n.is_i64() => Ok(n.to_string()),
        _ => Err(parse_err(format!(
            "expected a number as a string or integer, got {v}"
        ))),
    }
}

pub fn rat_from_json(v: &Value) -> Result<Rat> {
    number_text(v)?.parse()
}

pub fn ext_from_json(v: &Value) -> Result<Ext> {
    number_text(v)?.parse()
}

pub fn rat_to_json(r: &Rat) -> Value {
    Value::String(r.to_string())
}

pub fn ext_to_json(e: &Ext) -> Value {
    Value::String(e.to_string())
}

pub fn distance_to_json(d: &ExtDist) -> Value {
    json!({ "distance": d.to_string() })
}

fn rats_from_json(v: &Value, what: &str) -> Result<Vec<Rat>> {
    array(v, what)?.iter().map(rat_from_json).collect()
}

fn rats_to_json(rs: &[Rat]) -> Value {
    Value::Array(rs.iter().map(rat_to_json).collect())
}

fn names_from_json(v: &Value, what: &str) -> Result<Vec<String>> {
    array(v, what)?
        .iter()
        .map(|n| {
            n.as_str()
                .map(str::to_string)
                .ok_or_else(|| parse_err(format!("{what} entries must be strings")))
        })
        .collect()
}

pub fn ground_from_json(v: &Value) -> Result<GroundSet> {
    GroundSet::new(names_from_json(v, "ground")?)
}

pub fn ground_to_json(g: &GroundSet) -> Value {
    json!(g.names())
}

fn blocks_from_json(ground: &GroundSet, v: &Value) -> Result<SubPartition> {
    let blocks = array(v, "blocks")?
        .iter()
        .map(|b| names_from_json(b, "block"))
        .collect::<Result<Vec<_>>>()?;
    SubPartition::from_named_blocks(ground, &blocks)
}

/// `{"ground": [...], "blocks": [[...], ...]}`.
pub fn subpartition_from_json(v: &Value) -> Result<SubPartition> {
    let ground = ground_from_json(field(v, "ground")?)?;
    blocks_from_json(&ground, field(v, "blocks")?)
}

/// A subpartition over a known ground set: either a bare block list or an
/// object whose `ground`, if present, must match.
fn value_over(ground: &GroundSet, v: &Value) -> Result<SubPartition> {
    if v.is_array() {
        return blocks_from_json(ground, v);
    }
    if let Some(g) = v.get("ground") {
        ground.check_same(&ground_from_json(g)?)?;
    }
    blocks_from_json(ground, field(v, "blocks")?)
}

pub fn subpartition_to_json(p: &SubPartition) -> Value {
    json!({ "ground": ground_to_json(p.ground()), "blocks": p.named_blocks() })
}

/// `{"ground": [...], "crit": [...], "values": [...]}` with `2m + 1` values.
pub fn formigram_from_json(v: &Value) -> Result<Formigram> {
    let ground = ground_from_json(field(v, "ground")?)?;
    let crit = rats_from_json(field(v, "crit")?, "crit")?;
    let values = array(field(v, "values")?, "values")?
        .iter()
        .map(|p| value_over(&ground, p))
        .collect::<Result<Vec<_>>>()?;
    Formigram::new(&ground, crit, values)
}

pub fn formigram_to_json(f: &Formigram) -> Value {
    let values: Vec<Vec<Vec<String>>> = f.values().iter().map(|p| p.named_blocks()).collect();
    json!({
        "ground": ground_to_json(f.ground()),
        "crit": rats_to_json(f.crit()),
        "values": values,
    })
}

fn matrix_from_json(v: &Value) -> Result<Vec<Vec<Rat>>> {
    array(v, "d")?
        .iter()
        .map(|row| rats_from_json(row, "matrix row"))
        .collect()
}

fn matrix_to_json(ground: &GroundSet, rows: impl Fn(usize, usize) -> Rat) -> Value {
    let n = ground.len();
    let d: Vec<Value> = (0..n)
        .map(|x| Value::Array((0..n).map(|y| rat_to_json(&rows(x, y))).collect()))
        .collect();
    json!({ "points": ground_to_json(ground), "d": d })
}

/// `{"points": [...], "d": [[...], ...]}`.
pub fn metric_from_json(v: &Value) -> Result<Metric> {
    let ground = ground_from_json(field(v, "points")?)?;
    Metric::new(&ground, matrix_from_json(field(v, "d")?)?)
}

pub fn metric_to_json(m: &Metric) -> Value {
    matrix_to_json(m.ground(), |x, y| m.get(x, y).clone())
}

pub fn ultrametric_from_json(v: &Value) -> Result<Ultrametric> {
    let ground = ground_from_json(field(v, "points")?)?;
    Ultrametric::new(&ground, matrix_from_json(field(v, "d")?)?)
}

pub fn ultrametric_to_json(u: &Ultrametric) -> Value {
    matrix_to_json(u.ground(), |x, y| u.get(x, y).clone())
}

fn ambient_name(a: Ambient) -> &'static str {
    match a {
        Ambient::Int => "int",
        Ambient::Plane => "plane",
    }
}

/// `{"ambient": "int"|"plane", "generators": [[u, v], ...]}`.
///
/// Over the interval poset a pair is `(l, r)`, the region
/// `{a ≤ l, b ≥ r}`. In the plane a pair is the corner `(p, q)` of the
/// quadrant `{x ≥ p, y ≥ q}`.
pub fn staircase_from_json(v: &Value) -> Result<Staircase> {
    let ambient = match field(v, "ambient")?.as_str() {
        Some("int") => Ambient::Int,
        Some("plane") => Ambient::Plane,
        _ => return Err(parse_err("ambient must be \"int\" or \"plane\"")),
    };
    let gens = array(field(v, "generators")?, "generators")?
        .iter()
        .map(|g| {
            let pair = array(g, "generator")?;
            let [u, w] = pair.as_slice() else {
                return Err(parse_err("a generator is a pair of numbers"));
            };
            let (u, w) = (ext_from_json(u)?, ext_from_json(w)?);
            match ambient {
                Ambient::Int => Generator::new(u, w),
                Ambient::Plane => Generator::corner(u, w),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Staircase::normalize(gens, ambient))
}

pub fn staircase_to_json(s: &Staircase) -> Value {
    let gens: Vec<Value> = s
        .generators()
        .iter()
        .map(|g| {
            let (u, w) = match s.ambient() {
                Ambient::Int => (g.l().clone(), g.r().clone()),
                Ambient::Plane => g.to_corner(),
            };
            json!([ext_to_json(&u), ext_to_json(&w)])
        })
        .collect();
    json!({ "ambient": ambient_name(s.ambient()), "generators": gens })
}

/// Plotting dump: breakpoints and `(slope, value at left end)` per piece.
pub fn profile_to_json(p: &Profile) -> Value {
    let pieces: Vec<Value> = p
        .pieces()
        .iter()
        .map(|(slope, left)| json!({ "slope": rat_to_json(slope), "value_at_left": ext_to_json(left) }))
        .collect();
    json!({ "breakpoints": rats_to_json(&p.breakpoints()), "pieces": pieces })
}

/// `{"bars": [[birth, death], ...]}`.
pub fn barcode_from_json(v: &Value) -> Result<Barcode> {
    let bars = array(field(v, "bars")?, "bars")?
        .iter()
        .map(|b| {
            let pair = array(b, "bar")?;
            let [p, q] = pair.as_slice() else {
                return Err(parse_err("a bar is a pair [birth, death]"));
            };
            Bar::new(rat_from_json(p)?, ext_from_json(q)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Barcode::new(bars))
}

pub fn barcode_to_json(b: &Barcode) -> Value {
    let bars: Vec<Value> = b
        .bars()
        .iter()
        .map(|bar| json!([rat_to_json(bar.birth()), ext_to_json(bar.death())]))
        .collect();
    json!({ "bars": bars })
}

fn simplex_from_json(ground: &GroundSet, v: &Value) -> Result<Vec<usize>> {
    names_from_json(field(v, "verts")?, "verts")?
        .iter()
        .map(|n| ground.lookup(n))
        .collect()
}

fn simplex_names(ground: &GroundSet, verts: &[usize]) -> Vec<String> {
    verts.iter().map(|&v| ground.name(v).to_string()).collect()
}

/// `{"vertices": [...], "simplices": [{"verts": [...], "birth": b}, ...]}`.
pub fn rfiltration_from_json(v: &Value) -> Result<RFiltration> {
    let ground = ground_from_json(field(v, "vertices")?)?;
    let simplices = array(field(v, "simplices")?, "simplices")?
        .iter()
        .map(|s| Ok((simplex_from_json(&ground, s)?, rat_from_json(field(s, "birth")?)?)))
        .collect::<Result<Vec<_>>>()?;
    RFiltration::new(&ground, simplices)
}

pub fn rfiltration_to_json(f: &RFiltration) -> Value {
    let simplices: Vec<Value> = f
        .simplices()
        .map(|(verts, b)| json!({ "verts": simplex_names(f.ground(), &verts), "birth": rat_to_json(b) }))
        .collect();
    json!({ "vertices": ground_to_json(f.ground()), "simplices": simplices })
}

/// As for real-line filtrations, with a `"support"` staircase per simplex.
pub fn intfiltration_from_json(v: &Value) -> Result<IntFiltration> {
    let ground = ground_from_json(field(v, "vertices")?)?;
    let simplices = array(field(v, "simplices")?, "simplices")?
        .iter()
        .map(|s| {
            Ok((
                simplex_from_json(&ground, s)?,
                staircase_from_json(field(s, "support")?)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    IntFiltration::new(&ground, simplices)
}

pub fn intfiltration_to_json(f: &IntFiltration) -> Value {
    let simplices: Vec<Value> = f
        .simplices()
        .map(|(verts, s)| {
            json!({ "verts": simplex_names(f.ground(), &verts), "support": staircase_to_json(s) })
        })
        .collect();
    json!({ "vertices": ground_to_json(f.ground()), "simplices": simplices })
}

/// `{"ground", "x_cuts", "y_cuts", "cells"}` with `cells[row][col]`
/// starting from the lower-left unbounded cell.
pub fn grid_from_json(v: &Value) -> Result<GridClustering> {
    let ground = ground_from_json(field(v, "ground")?)?;
    let x_cuts = rats_from_json(field(v, "x_cuts")?, "x_cuts")?;
    let y_cuts = rats_from_json(field(v, "y_cuts")?, "y_cuts")?;
    let cells = array(field(v, "cells")?, "cells")?
        .iter()
        .map(|row| {
            array(row, "cell row")?
                .iter()
                .map(|c| value_over(&ground, c))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    GridClustering::new(&ground, x_cuts, y_cuts, cells)
}

pub fn grid_to_json(g: &GridClustering) -> Value {
    let cells: Vec<Vec<Vec<Vec<String>>>> = g
        .cells()
        .iter()
        .map(|row| row.iter().map(|c| c.named_blocks()).collect())
        .collect();
    json!({
        "ground": ground_to_json(g.ground()),
        "x_cuts": rats_to_json(g.x_cuts()),
        "y_cuts": rats_to_json(g.y_cuts()),
        "cells": cells,
    })
}

/// One entry per pair `x ≤ x'` with its staircase.
pub fn code_to_json(code: &CosheafCode) -> Value {
    let g = code.ground();
    let entries: Vec<Value> = code
        .iter()
        .map(|((x, y), s)| {
            let mut m = Map::new();
            m.insert("pair".into(), json!([g.name(x), g.name(y)]));
            m.insert("staircase".into(), staircase_to_json(s));
            Value::Object(m)
        })
        .collect();
    json!({ "ground": ground_to_json(g), "code": entries })
}
