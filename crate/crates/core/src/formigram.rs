//! Formigrams, dendrograms and the interleaving distance `d_F`.
//!
//! A formigram with critical points `t_1 < ... < t_m` is stored piecewise:
//! the `2m + 1` pieces alternate between open intervals and critical points,
//!
//! ```text
//! piece:  0          1     2           3     ...  2m
//! domain: (-inf,t_1) {t_1} (t_1,t_2)   {t_2} ...  (t_m,+inf)
//! ```
//!
//! Local maximality asks every point value to dominate both neighbouring
//! interval values.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{GroundSet, SubPartition, Surjection};
use crate::rational::{Ext, ExtDist, Rat};
use crate::staircase::{Ambient, Generator, Staircase};
use crate::unionfind::DisjointSets;

/// A failed local-maximality check at critical point `index` (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "critical point {}: {}", self.index + 1, self.message)
    }
}

#[derive(Clone)]
pub struct Formigram {
    ground: GroundSet,
    crit: Vec<Rat>,
    values: Vec<SubPartition>,
}

impl Formigram {
    /// Checks the piece layout; local maximality is left to
    /// [`Formigram::validate`].
    pub fn new(ground: &GroundSet, crit: Vec<Rat>, values: Vec<SubPartition>) -> Result<Formigram> {
        if values.len() != 2 * crit.len() + 1 {
            return Err(Error::invalid(format!(
                "{} critical points need {} values, got {}",
                crit.len(),
                2 * crit.len() + 1,
                values.len()
            )));
        }
        if let Some(w) = crit.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::invalid(format!(
                "critical points must be strictly increasing ({} then {})",
                w[0], w[1]
            )));
        }
        for v in &values {
            ground.check_same(v.ground())?;
        }
        Ok(Formigram {
            ground: ground.clone(),
            crit,
            values,
        })
    }

    pub fn constant(value: SubPartition) -> Formigram {
        Formigram {
            ground: value.ground().clone(),
            crit: Vec::new(),
            values: vec![value],
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn crit(&self) -> &[Rat] {
        &self.crit
    }

    pub fn values(&self) -> &[SubPartition] {
        &self.values
    }

    pub fn piece_count(&self) -> usize {
        self.values.len()
    }

    /// Index of the piece containing `t`.
    pub fn piece_of(&self, t: &Rat) -> usize {
        match self.crit.binary_search(t) {
            Ok(i) => 2 * i + 1,
            Err(i) => 2 * i,
        }
    }

    /// Infimum of piece `k`.
    pub fn piece_left_end(&self, k: usize) -> Ext {
        if k % 2 == 1 {
            Ext::Fin(self.crit[k / 2].clone())
        } else if k == 0 {
            Ext::NegInf
        } else {
            Ext::Fin(self.crit[k / 2 - 1].clone())
        }
    }

    /// Supremum of piece `k`.
    pub fn piece_right_end(&self, k: usize) -> Ext {
        if k % 2 == 1 || k / 2 < self.crit.len() {
            Ext::Fin(self.crit[k / 2].clone())
        } else {
            Ext::PosInf
        }
    }

    /// Some point inside piece `k`.
    pub fn piece_sample(&self, k: usize) -> Rat {
        let m = self.crit.len();
        if m == 0 {
            return Rat::zero();
        }
        if k % 2 == 1 {
            return self.crit[k / 2].clone();
        }
        let i = k / 2;
        if i == 0 {
            &self.crit[0] - Rat::one()
        } else if i == m {
            &self.crit[m - 1] + Rat::one()
        } else {
            self.crit[i - 1].midpoint(&self.crit[i])
        }
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        for i in 0..self.crit.len() {
            let point = &self.values[2 * i + 1];
            if !self.values[2 * i].refines_unchecked(point) {
                return Err(Violation {
                    index: i,
                    message: format!(
                        "value {} before t = {} does not refine the point value {}",
                        self.values[2 * i],
                        self.crit[i],
                        point
                    ),
                });
            }
            if !self.values[2 * i + 2].refines_unchecked(point) {
                return Err(Violation {
                    index: i,
                    message: format!(
                        "value {} after t = {} does not refine the point value {}",
                        self.values[2 * i + 2],
                        self.crit[i],
                        point
                    ),
                });
            }
        }
        Ok(())
    }

    pub fn evaluate(&self, t: &Rat) -> &SubPartition {
        &self.values[self.piece_of(t)]
    }

    /// Drops critical points across which the value does not change.
    pub fn simplified(&self) -> Formigram {
        let mut crit = Vec::with_capacity(self.crit.len());
        let mut values = vec![self.values[0].clone()];
        for (i, t) in self.crit.iter().enumerate() {
            let (point, after) = (&self.values[2 * i + 1], &self.values[2 * i + 2]);
            if point == after && values.last() == Some(point) {
                continue;
            }
            crit.push(t.clone());
            values.push(point.clone());
            values.push(after.clone());
        }
        Formigram {
            ground: self.ground.clone(),
            crit,
            values,
        }
    }

    fn join_pieces(&self, first: usize, last: usize) -> SubPartition {
        self.values[first + 1..=last]
            .iter()
            .fold(self.values[first].clone(), |acc, v| acc.join_unchecked(v))
    }

    /// The `ε`-smoothing `t ↦ ⋁ {θ(s) : |s - t| ≤ ε}`.
    pub fn smooth(&self, eps: &Rat) -> Result<Formigram> {
        if eps.is_negative() {
            return Err(Error::NegativeEpsilon);
        }
        if eps.is_zero() || self.crit.is_empty() {
            return Ok(self.clone());
        }
        let mut crit: Vec<Rat> = self
            .crit
            .iter()
            .flat_map(|t| [t - eps, t + eps])
            .collect();
        crit.sort();
        crit.dedup();
        let mut shell = Formigram {
            ground: self.ground.clone(),
            crit,
            values: Vec::new(),
        };
        let values = (0..2 * shell.crit.len() + 1)
            .map(|k| {
                let t = shell.piece_sample(k);
                self.join_pieces(self.piece_of(&(&t - eps)), self.piece_of(&(&t + eps)))
            })
            .collect();
        shell.values = values;
        Ok(shell.simplified())
    }

    /// First and last piece met by the open interval `(a, b)`.
    pub fn pieces_meeting(&self, a: &Rat, b: &Rat) -> Result<(usize, usize)> {
        if a >= b {
            return Err(Error::EmptyInterval {
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        let (pa, pb) = (self.piece_of(a), self.piece_of(b));
        let first = if pa % 2 == 1 { pa + 1 } else { pa };
        let last = if pb % 2 == 1 { pb - 1 } else { pb };
        Ok((first, last))
    }

    /// `θ̂((a, b)) = ⋁ {θ(s) : a < s < b}`.
    pub fn evaluate_cosheaf(&self, a: &Rat, b: &Rat) -> Result<SubPartition> {
        let (first, last) = self.pieces_meeting(a, b)?;
        Ok(self.join_pieces(first, last))
    }

    pub fn cosheaf_table(&self) -> CosheafTable {
        CosheafTable::new(self)
    }

    pub fn cosheaf_code(&self) -> CosheafCode {
        let table = self.cosheaf_table();
        let n = self.ground.len();
        let p = self.piece_count();
        let mut entries = Vec::with_capacity(n * (n + 1) / 2);
        for x in 0..n {
            for y in x..n {
                let mut gens = Vec::new();
                let mut j = 0;
                for i in 0..p {
                    // The least merging end j*(i) is non-decreasing in i.
                    j = j.max(i);
                    while j < p && !table.get(i, j).related(x, y) {
                        j += 1;
                    }
                    if j == p {
                        break;
                    }
                    gens.push(
                        Generator::new(self.piece_right_end(i), self.piece_left_end(j))
                            .expect("piece ends are never the excluded infinities"),
                    );
                }
                entries.push(Staircase::normalize(gens, Ambient::Int));
            }
        }
        CosheafCode {
            ground: self.ground.clone(),
            entries,
        }
    }

    /// Interleaving distance, computed as the largest Hausdorff distance
    /// between corresponding cosheaf-code staircases.
    pub fn d_f(&self, other: &Formigram) -> Result<ExtDist> {
        self.ground.check_same(&other.ground)?;
        self.cosheaf_code().distance(&other.cosheaf_code())
    }

    /// Pointwise pullback along `φ`.
    pub fn pullback(&self, phi: &Surjection) -> Result<Formigram> {
        self.ground.check_same(phi.target())?;
        Ok(Formigram {
            ground: phi.source().clone(),
            crit: self.crit.clone(),
            values: self
                .values
                .iter()
                .map(|v| v.pullback_unchecked(phi))
                .collect(),
        })
    }
}

impl PartialEq for Formigram {
    fn eq(&self, other: &Formigram) -> bool {
        let (a, b) = (self.simplified(), other.simplified());
        a.ground == b.ground && a.crit == b.crit && a.values == b.values
    }
}

impl fmt::Debug for Formigram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.values[0])?;
        for (i, t) in self.crit.iter().enumerate() {
            write!(f, " |{t}: {}| {}", self.values[2 * i + 1], self.values[2 * i + 2])?;
        }
        Ok(())
    }
}

/// The joins `P[i][j] = θ(piece i) ∨ ... ∨ θ(piece j)` for all `i ≤ j`.
#[derive(Clone, Debug)]
pub struct CosheafTable {
    pieces: usize,
    cells: Vec<SubPartition>,
}

impl CosheafTable {
    fn new(theta: &Formigram) -> CosheafTable {
        let p = theta.piece_count();
        let mut cells = Vec::with_capacity(p * (p + 1) / 2);
        for i in 0..p {
            let mut acc = theta.values[i].clone();
            cells.push(acc.clone());
            for v in &theta.values[i + 1..] {
                acc = acc.join_unchecked(v);
                cells.push(acc.clone());
            }
        }
        CosheafTable { pieces: p, cells }
    }

    pub fn pieces(&self) -> usize {
        self.pieces
    }

    /// `P[i][j]` for `i ≤ j`.
    pub fn get(&self, i: usize, j: usize) -> &SubPartition {
        assert!(i <= j && j < self.pieces, "cell ({i}, {j}) out of range");
        // Row i starts after rows of lengths p, p - 1, ..., p - i + 1.
        let start = i * self.pieces - i * i.saturating_sub(1) / 2;
        &self.cells[start + (j - i)]
    }
}

/// The staircases `U_{x,x'}(θ)` for all unordered pairs, `x = x'` included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosheafCode {
    ground: GroundSet,
    entries: Vec<Staircase>,
}

impl CosheafCode {
    fn index(&self, x: usize, y: usize) -> usize {
        let (x, y) = if x <= y { (x, y) } else { (y, x) };
        let n = self.ground.len();
        x * n - x * x.saturating_sub(1) / 2 + (y - x)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn get(&self, x: usize, y: usize) -> &Staircase {
        &self.entries[self.index(x, y)]
    }

    /// `((x, y), U_{x,y})` for `x ≤ y`.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &Staircase)> + '_ {
        let n = self.ground.len();
        (0..n)
            .flat_map(move |x| (x..n).map(move |y| (x, y)))
            .zip(&self.entries)
    }

    /// Largest Hausdorff distance between corresponding entries.
    pub fn distance(&self, other: &CosheafCode) -> Result<ExtDist> {
        self.ground.check_same(&other.ground)?;
        let mut best = ExtDist::zero();
        for (u, v) in self.entries.iter().zip(&other.entries) {
            best = best.max(u.hausdorff(v)?);
            if best == ExtDist::Infinite {
                break;
            }
        }
        Ok(best)
    }

    /// The pair attaining [`CosheafCode::distance`].
    pub fn witness(&self, other: &CosheafCode) -> Result<((usize, usize), ExtDist)> {
        self.ground.check_same(&other.ground)?;
        let mut best = ((0, 0), ExtDist::zero());
        for (((x, y), u), v) in self.iter().zip(&other.entries) {
            let d = u.hausdorff(v)?;
            if d > best.1 {
                best = ((x, y), d);
            }
        }
        Ok(best)
    }
}

/// A finite metric over a ground set, as input to single linkage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    ground: GroundSet,
    d: Vec<Vec<Rat>>,
}

fn check_square(ground: &GroundSet, d: &[Vec<Rat>]) -> Result<()> {
    let n = ground.len();
    if d.len() != n || d.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidMetric(format!("expected a {n}x{n} matrix")));
    }
    for x in 0..n {
        if !d[x][x].is_zero() {
            return Err(Error::InvalidMetric(format!(
                "nonzero diagonal entry at {:?}",
                ground.name(x)
            )));
        }
        for y in 0..n {
            if d[x][y] != d[y][x] {
                return Err(Error::InvalidMetric(format!(
                    "asymmetric entries for {:?} and {:?}",
                    ground.name(x),
                    ground.name(y)
                )));
            }
            if d[x][y].is_negative() {
                return Err(Error::InvalidMetric(format!(
                    "negative entry for {:?} and {:?}",
                    ground.name(x),
                    ground.name(y)
                )));
            }
        }
    }
    Ok(())
}

impl Metric {
    pub fn new(ground: &GroundSet, d: Vec<Vec<Rat>>) -> Result<Metric> {
        check_square(ground, &d)?;
        Ok(Metric {
            ground: ground.clone(),
            d,
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn get(&self, x: usize, y: usize) -> &Rat {
        &self.d[x][y]
    }

    /// Single-linkage hierarchical clustering.
    pub fn single_linkage(&self) -> Result<Dendrogram> {
        let n = self.ground.len();
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for x in 0..n {
            for y in x + 1..n {
                if self.d[x][y].is_zero() {
                    return Err(Error::InvalidMetric(format!(
                        "{:?} and {:?} are at distance zero",
                        self.ground.name(x),
                        self.ground.name(y)
                    )));
                }
                edges.push((&self.d[x][y], x, y));
            }
        }
        edges.sort();
        let mut ds = DisjointSets::new(n);
        let mut crit = vec![Rat::zero()];
        let discrete = SubPartition::discrete(&self.ground);
        let mut values = vec![
            SubPartition::empty(&self.ground),
            discrete.clone(),
            discrete,
        ];
        for (k, &(t, x, y)) in edges.iter().enumerate() {
            ds.union(x, y);
            let last_at_t = edges.get(k + 1).is_none_or(|next| next.0 != t);
            if last_at_t {
                let raw: Vec<Option<usize>> = (0..n).map(|z| Some(ds.find(z))).collect();
                let current = SubPartition::from_labels(&self.ground, &raw);
                if values.last() != Some(&current) {
                    crit.push(t.clone());
                    values.push(current.clone());
                    values.push(current);
                }
            }
        }
        Dendrogram::new(Formigram::new(&self.ground, crit, values)?)
    }
}

/// A formigram that is `∅` before time 0 and a monotone family of
/// partitions from the discrete partition up to `{X}` afterwards.
#[derive(Clone, Debug, PartialEq)]
pub struct Dendrogram(Formigram);

impl Dendrogram {
    pub fn new(theta: Formigram) -> Result<Dendrogram> {
        let theta = theta.simplified();
        let fail = |msg: String| Err(Error::NotADendrogram(msg));
        let g = theta.ground.clone();
        if theta.crit.first() != Some(&Rat::zero()) {
            return fail("the first critical point must be 0".into());
        }
        if !theta.values[0].is_empty() {
            return fail("value before time 0 must be empty".into());
        }
        if theta.values[1] != SubPartition::discrete(&g) {
            return fail("value at time 0 must be the discrete partition".into());
        }
        for (k, v) in theta.values.iter().enumerate().skip(1) {
            if !v.is_partition() {
                return fail(format!("value {v} is not a partition of the ground set"));
            }
            if k % 2 == 1 && theta.values[k + 1] != *v {
                return fail(format!("not right-continuous at t = {}", theta.crit[k / 2]));
            }
            if let Some(next) = theta.values.get(k + 1) {
                if !v.refines_unchecked(next) {
                    return fail(format!("not monotone: {v} then {next}"));
                }
            }
        }
        if theta.values.last() != Some(&SubPartition::whole(&g)) {
            return fail("final value must be the single block {X}".into());
        }
        Ok(Dendrogram(theta))
    }

    pub fn formigram(&self) -> &Formigram {
        &self.0
    }

    /// `u(x, x') = min {t : x ∼ x' in θ(t)}`.
    pub fn ultrametric(&self) -> Ultrametric {
        let theta = &self.0;
        let n = theta.ground.len();
        let mut d = vec![vec![Rat::zero(); n]; n];
        for x in 0..n {
            for y in x + 1..n {
                let i = (0..theta.crit.len())
                    .find(|&i| theta.values[2 * i + 1].related(x, y))
                    .expect("dendrograms end in a single block");
                d[x][y] = theta.crit[i].clone();
                d[y][x] = theta.crit[i].clone();
            }
        }
        Ultrametric {
            ground: theta.ground.clone(),
            d,
        }
    }
}

impl TryFrom<Formigram> for Dendrogram {
    type Error = Error;

    fn try_from(theta: Formigram) -> Result<Dendrogram> {
        Dendrogram::new(theta)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ultrametric {
    ground: GroundSet,
    d: Vec<Vec<Rat>>,
}

impl Ultrametric {
    pub fn new(ground: &GroundSet, d: Vec<Vec<Rat>>) -> Result<Ultrametric> {
        check_square(ground, &d)?;
        let n = ground.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if d[x][z] > d[x][y].clone().max(d[y][z].clone()) {
                        return Err(Error::InvalidMetric(format!(
                            "ultra-triangle inequality fails for {:?}, {:?}, {:?}",
                            ground.name(x),
                            ground.name(y),
                            ground.name(z)
                        )));
                    }
                }
            }
        }
        Ok(Ultrametric {
            ground: ground.clone(),
            d,
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn get(&self, x: usize, y: usize) -> &Rat {
        &self.d[x][y]
    }

    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> GroundSet {
        GroundSet::new(["x", "y"]).unwrap()
    }

    fn loop_pair(delta: &Rat) -> (Formigram, Formigram) {
        let g = xy();
        let merged = SubPartition::whole(&g);
        let apart = SubPartition::discrete(&g);
        let theta = Formigram::constant(merged.clone());
        let theta_prime = Formigram::new(
            &g,
            vec![-delta, delta.clone()],
            vec![merged.clone(), merged.clone(), apart, merged.clone(), merged],
        )
        .unwrap();
        (theta, theta_prime)
    }

    #[test]
    fn layout_and_evaluation() {
        let delta = Rat::new(3, 2);
        let (theta, tp) = loop_pair(&delta);
        let g = xy();
        assert_eq!(tp.evaluate(&Rat::zero()), &SubPartition::discrete(&g));
        assert_eq!(tp.evaluate(&delta), &SubPartition::whole(&g));
        assert_eq!(theta.evaluate(&Rat::int(100)), &SubPartition::whole(&g));
        assert_eq!(tp.piece_of(&Rat::int(-2)), 0);
        assert_eq!(tp.piece_of(&-&delta), 1);
        assert_eq!(tp.piece_of(&Rat::zero()), 2);
        assert_eq!(tp.piece_right_end(0), Ext::Fin(-&delta));
        assert_eq!(tp.piece_left_end(4), Ext::Fin(delta.clone()));
        assert_eq!(tp.piece_right_end(4), Ext::PosInf);
        assert!(Formigram::new(&g, vec![Rat::one(), Rat::zero()], vec![SubPartition::empty(&g); 5]).is_err());
        assert!(Formigram::new(&g, vec![Rat::one()], vec![SubPartition::empty(&g); 2]).is_err());
    }

    #[test]
    fn validation() {
        let delta = Rat::new(3, 2);
        let (theta, tp) = loop_pair(&delta);
        assert!(theta.validate().is_ok());
        assert!(tp.validate().is_ok());
        let g = xy();
        let mut values = tp.values().to_vec();
        values[1] = SubPartition::discrete(&g);
        let bad = Formigram::new(&g, tp.crit().to_vec(), values).unwrap();
        assert_eq!(bad.validate().unwrap_err().index, 0);
    }

    #[test]
    fn loop_smoothing() {
        let delta = Rat::new(3, 2);
        let (theta, tp) = loop_pair(&delta);
        let g = xy();
        assert_eq!(tp.smooth(&Rat::zero()).unwrap(), tp);
        for eps in [Rat::new(1, 2), Rat::one(), Rat::new(7, 5)] {
            assert_eq!(
                tp.smooth(&eps).unwrap().evaluate(&Rat::zero()),
                &SubPartition::discrete(&g)
            );
        }
        assert_eq!(tp.smooth(&delta).unwrap(), theta);
        assert_eq!(tp.smooth(&Rat::int(5)).unwrap(), theta);
        assert!(tp.smooth(&Rat::int(-1)).is_err());
    }

    #[test]
    fn smoothing_composes() {
        let delta = Rat::new(3, 2);
        let (_, tp) = loop_pair(&delta);
        let a = Rat::new(1, 3);
        let b = Rat::new(1, 2);
        assert_eq!(
            tp.smooth(&a).unwrap().smooth(&b).unwrap(),
            tp.smooth(&(&a + &b)).unwrap()
        );
    }

    #[test]
    fn cosheaf_table_and_evaluation() {
        let delta = Rat::new(3, 2);
        let (theta, tp) = loop_pair(&delta);
        let g = xy();
        let t = tp.cosheaf_table();
        assert_eq!(t.pieces(), 5);
        assert_eq!(t.get(2, 2), &SubPartition::discrete(&g));
        assert_eq!(t.get(1, 2), &SubPartition::whole(&g));
        assert_eq!(t.get(0, 4), &SubPartition::whole(&g));
        assert_eq!(theta.cosheaf_table().get(0, 0), &SubPartition::whole(&g));
        assert_eq!(
            tp.evaluate_cosheaf(&Rat::new(-3, 1), &Rat::zero()).unwrap(),
            SubPartition::whole(&g)
        );
        assert_eq!(
            tp.evaluate_cosheaf(&-&delta, &delta).unwrap(),
            SubPartition::discrete(&g)
        );
        assert!(matches!(
            tp.evaluate_cosheaf(&Rat::one(), &Rat::one()),
            Err(Error::EmptyInterval { .. })
        ));
    }

    #[test]
    fn table_cells_match_direct_joins() {
        let g = GroundSet::indexed(3);
        let vals: Vec<SubPartition> = (0..7)
            .map(|k| {
                let raw: Vec<Option<usize>> = (0..3).map(|x| ((x + k) % 3 != 0).then_some((x * k) % 2)).collect();
                SubPartition::from_labels(&g, &raw)
            })
            .collect();
        let f = Formigram::new(&g, vec![Rat::int(0), Rat::int(1), Rat::int(2)], vals.clone()).unwrap();
        let table = f.cosheaf_table();
        for i in 0..7 {
            for j in i..7 {
                let direct = SubPartition::join_all(&g, &vals[i..=j]).unwrap();
                assert_eq!(table.get(i, j), &direct, "cell ({i}, {j})");
            }
        }
    }

    #[test]
    fn loop_code_and_distance() {
        let delta = Rat::new(3, 2);
        let (theta, tp) = loop_pair(&delta);
        let code = tp.cosheaf_code();
        let expected = Staircase::normalize(
            vec![
                Generator::new(Ext::Fin(-&delta), Ext::NegInf).unwrap(),
                Generator::new(Ext::PosInf, Ext::Fin(delta.clone())).unwrap(),
            ],
            Ambient::Int,
        );
        assert_eq!(code.get(0, 1), &expected);
        assert!(code.get(0, 0).is_full());
        assert!(theta.cosheaf_code().get(1, 0).is_full());
        assert_eq!(theta.d_f(&tp).unwrap(), delta);
        assert_eq!(tp.d_f(&tp).unwrap(), ExtDist::zero());
        let (w, d) = theta.cosheaf_code().witness(&code).unwrap();
        assert_eq!((w, d), ((0, 1), ExtDist::Finite(delta)));
    }

    #[test]
    fn bounded_merge_is_infinitely_far_from_constant() {
        let g = xy();
        let merged = SubPartition::whole(&g);
        let apart = SubPartition::discrete(&g);
        let late = Formigram::new(
            &g,
            vec![Rat::zero(), Rat::one()],
            vec![apart.clone(), merged.clone(), merged.clone(), merged.clone(), apart],
        )
        .unwrap();
        assert_eq!(
            Formigram::constant(merged).d_f(&late).unwrap(),
            ExtDist::Infinite
        );
    }

    #[test]
    fn single_linkage_examples() {
        let g = GroundSet::new(["a"]).unwrap();
        let d = Metric::new(&g, vec![vec![Rat::zero()]]).unwrap().single_linkage().unwrap();
        assert_eq!(d.formigram().crit(), &[Rat::zero()]);
        assert_eq!(d.formigram().evaluate(&Rat::int(3)), &SubPartition::whole(&g));

        let g = GroundSet::new(["a", "b"]).unwrap();
        let m = Metric::new(&g, vec![vec![Rat::zero(), Rat::int(2)], vec![Rat::int(2), Rat::zero()]]).unwrap();
        let d = m.single_linkage().unwrap();
        assert_eq!(d.formigram().evaluate(&Rat::new(3, 2)), &SubPartition::discrete(&g));
        assert_eq!(d.formigram().evaluate(&Rat::int(2)), &SubPartition::whole(&g));
        assert_eq!(d.ultrametric().get(0, 1), &Rat::int(2));

        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let n = |v: i64| Rat::int(v);
        let m = Metric::new(
            &g,
            vec![vec![n(0), n(1), n(5)], vec![n(1), n(0), n(2)], vec![n(5), n(2), n(0)]],
        )
        .unwrap();
        let u = m.single_linkage().unwrap().ultrametric();
        assert_eq!((u.get(0, 1), u.get(1, 2), u.get(0, 2)), (&n(1), &n(2), &n(2)));
        assert!((0..3).all(|x| u.get(x, x).is_zero()));
        assert!(Ultrametric::new(&g, u.matrix().to_vec()).is_ok());
    }

    #[test]
    fn single_linkage_with_redundant_last_edge() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let n = |v: i64| Rat::int(v);
        let m = Metric::new(
            &g,
            vec![vec![n(0), n(1), n(2)], vec![n(1), n(0), n(2)], vec![n(2), n(2), n(0)]],
        )
        .unwrap();
        let u = m.single_linkage().unwrap().ultrametric();
        assert_eq!((u.get(0, 2), u.get(1, 2)), (&n(2), &n(2)));
    }

    #[test]
    fn invalid_metrics() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let z = Rat::zero();
        assert!(Metric::new(&g, vec![vec![z.clone(), Rat::one()], vec![Rat::int(2), z.clone()]]).is_err());
        let m = Metric::new(&g, vec![vec![z.clone(), z.clone()], vec![z.clone(), z]]).unwrap();
        assert!(matches!(m.single_linkage(), Err(Error::InvalidMetric(_))));
    }

    #[test]
    fn dendrogram_validation() {
        let g = xy();
        let (theta, _) = loop_pair(&Rat::one());
        assert!(matches!(Dendrogram::new(theta), Err(Error::NotADendrogram(_))));
        let ok = Formigram::new(
            &g,
            vec![Rat::zero(), Rat::one()],
            vec![
                SubPartition::empty(&g),
                SubPartition::discrete(&g),
                SubPartition::discrete(&g),
                SubPartition::whole(&g),
                SubPartition::whole(&g),
            ],
        )
        .unwrap();
        assert!(Dendrogram::new(ok).is_ok());
    }

    #[test]
    fn pullback_of_loop() {
        let (theta, _) = loop_pair(&Rat::one());
        let z = GroundSet::new(["z1", "z2", "z3"]).unwrap();
        let phi = Surjection::new(&z, &xy(), vec![0, 0, 1]).unwrap();
        let pulled = theta.pullback(&phi).unwrap();
        assert_eq!(pulled, Formigram::constant(SubPartition::whole(&z)));
        assert_eq!(theta.pullback(&Surjection::identity(&xy())).unwrap(), theta);
        let empty = Formigram::constant(SubPartition::empty(&xy()));
        assert!(empty.pullback(&phi).unwrap().values()[0].is_empty());
    }
}
