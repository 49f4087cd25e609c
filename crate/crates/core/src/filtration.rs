//! Simplicial filtrations indexed by the real line or by the interval
//! poset, and the tripod distance between them.
//!
//! Simplices are nonempty vertex sets encoded as bitmasks over the ground
//! set, so ground sets are limited to 64 vertices.

use std::collections::BTreeMap;

use crate::compare::correspondences;
use crate::error::{Error, Result};
use crate::formigram::Metric;
use crate::lattice::{GroundSet, Surjection};
use crate::rational::{Ext, ExtDist, Rat};
use crate::staircase::{Ambient, Generator, Staircase};

/// Largest vertex set whose subsets are enumerated explicitly.
pub const SUBSET_GUARD: usize = 20;

fn mask_of(ground: &GroundSet, simplex: &[usize]) -> Result<u64> {
    if simplex.is_empty() {
        return Err(Error::EmptySimplex);
    }
    if ground.len() > 64 {
        return Err(Error::invalid("filtrations support at most 64 vertices"));
    }
    let mut mask = 0u64;
    for &v in simplex {
        if v >= ground.len() {
            return Err(Error::invalid(format!("vertex index {v} out of range")));
        }
        mask |= 1 << v;
    }
    Ok(mask)
}

fn names_of(ground: &GroundSet, mask: u64) -> String {
    let names: Vec<&str> = (0..ground.len())
        .filter(|v| mask >> v & 1 == 1)
        .map(|v| ground.name(v))
        .collect();
    format!("{{{}}}", names.join(","))
}

/// Codimension-one faces of `mask`.
fn facets(mask: u64) -> impl Iterator<Item = u64> {
    (0..64)
        .filter(move |v| mask >> v & 1 == 1)
        .map(move |v| mask & !(1 << v))
        .filter(|&f| f != 0)
}

fn image(phi: &Surjection, sigma: u64) -> u64 {
    (0..phi.source().len())
        .filter(|z| sigma >> z & 1 == 1)
        .fold(0u64, |m, z| m | 1 << phi.apply(z))
}

/// A filtration over the real line, stored as finite birth times.
/// Simplices without a stored birth are never born.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RFiltration {
    ground: GroundSet,
    births: BTreeMap<u64, Rat>,
}

impl RFiltration {
    pub fn new(ground: &GroundSet, simplices: Vec<(Vec<usize>, Rat)>) -> Result<RFiltration> {
        let mut births = BTreeMap::new();
        for (simplex, birth) in simplices {
            let mask = mask_of(ground, &simplex)?;
            if births.insert(mask, birth).is_some() {
                return Err(Error::InvalidFiltration(format!(
                    "simplex {} listed twice",
                    names_of(ground, mask)
                )));
            }
        }
        Ok(RFiltration {
            ground: ground.clone(),
            births,
        })
    }

    /// The Vietoris-Rips filtration up to dimension `max_dim`: vertices are
    /// born at 0, higher simplices at their diameter.
    pub fn vietoris_rips(metric: &Metric, max_dim: usize) -> Result<RFiltration> {
        let ground = metric.ground();
        let n = ground.len();
        Error::guard("vertex set", n, SUBSET_GUARD)?;
        let mut simplices = Vec::new();
        for mask in 1u64..(1u64 << n) {
            let verts: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            if verts.len() > max_dim + 1 {
                continue;
            }
            let mut diam = Rat::zero();
            for (i, &a) in verts.iter().enumerate() {
                for &b in &verts[i + 1..] {
                    diam = diam.max(metric.get(a, b).clone());
                }
            }
            simplices.push((verts, diam));
        }
        RFiltration::new(ground, simplices)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// `(vertices, birth)` for every stored simplex.
    pub fn simplices(&self) -> impl Iterator<Item = (Vec<usize>, &Rat)> + '_ {
        let n = self.ground.len();
        self.births
            .iter()
            .map(move |(&m, b)| ((0..n).filter(|v| m >> v & 1 == 1).collect(), b))
    }

    /// Checks face closure and monotone births.
    pub fn validate(&self) -> Result<()> {
        for (&mask, birth) in &self.births {
            for face in facets(mask) {
                match self.births.get(&face) {
                    None => {
                        return Err(Error::InvalidFiltration(format!(
                            "face {} of {} is missing",
                            names_of(&self.ground, face),
                            names_of(&self.ground, mask)
                        )))
                    }
                    Some(fb) if fb > birth => {
                        return Err(Error::InvalidFiltration(format!(
                            "{} is born at {birth}, before its face {} at {fb}",
                            names_of(&self.ground, mask),
                            names_of(&self.ground, face)
                        )))
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn birth(&self, simplex: &[usize]) -> Result<Ext> {
        Ok(self.birth_of_mask(mask_of(&self.ground, simplex)?))
    }

    pub(crate) fn birth_of_mask(&self, mask: u64) -> Ext {
        self.births
            .get(&mask)
            .map_or(Ext::PosInf, |b| Ext::Fin(b.clone()))
    }

    /// `b_{φ*F}(σ) = b_F(φ(σ))`.
    pub fn pullback(&self, phi: &Surjection) -> Result<RFiltration> {
        self.ground.check_same(phi.target())?;
        let nz = phi.source().len();
        Error::guard("source vertex set", nz, SUBSET_GUARD)?;
        let births = (1u64..(1u64 << nz))
            .filter_map(|s| self.births.get(&image(phi, s)).map(|b| (s, b.clone())))
            .collect();
        Ok(RFiltration {
            ground: phi.source().clone(),
            births,
        })
    }

    /// The interval-indexed filtration with supports `{b ≥ b_F(σ)}`.
    pub fn to_int(&self) -> IntFiltration {
        let supports = self
            .births
            .iter()
            .map(|(&m, b)| {
                let g = Generator::new(Ext::PosInf, Ext::Fin(b.clone())).expect("finite birth");
                (m, Staircase::normalize(vec![g], Ambient::Int))
            })
            .collect();
        IntFiltration {
            ground: self.ground.clone(),
            supports,
        }
    }
}

/// A filtration over the interval poset: every simplex carries the upper
/// set of intervals on which it is present. Absent simplices have empty
/// support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntFiltration {
    ground: GroundSet,
    supports: BTreeMap<u64, Staircase>,
}

impl IntFiltration {
    pub fn new(ground: &GroundSet, simplices: Vec<(Vec<usize>, Staircase)>) -> Result<IntFiltration> {
        let mut supports = BTreeMap::new();
        for (simplex, support) in simplices {
            let mask = mask_of(ground, &simplex)?;
            if support.ambient() != Ambient::Int {
                return Err(Error::AmbientMismatch);
            }
            if supports.insert(mask, support).is_some() {
                return Err(Error::InvalidFiltration(format!(
                    "simplex {} listed twice",
                    names_of(ground, mask)
                )));
            }
        }
        Ok(IntFiltration {
            ground: ground.clone(),
            supports,
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn simplices(&self) -> impl Iterator<Item = (Vec<usize>, &Staircase)> + '_ {
        let n = self.ground.len();
        self.supports
            .iter()
            .map(move |(&m, s)| ((0..n).filter(|v| m >> v & 1 == 1).collect(), s))
    }

    /// Checks that every face's support contains its coface's support.
    pub fn validate(&self) -> Result<()> {
        for (&mask, support) in &self.supports {
            if support.is_empty() {
                continue;
            }
            for face in facets(mask) {
                let fs = self.support_of_mask(face);
                if !support.subset(&fs)? {
                    return Err(Error::InvalidFiltration(format!(
                        "support of {} is not contained in the support of its face {}",
                        names_of(&self.ground, mask),
                        names_of(&self.ground, face)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn support(&self, simplex: &[usize]) -> Result<Staircase> {
        Ok(self.support_of_mask(mask_of(&self.ground, simplex)?))
    }

    pub(crate) fn support_of_mask(&self, mask: u64) -> Staircase {
        self.supports
            .get(&mask)
            .cloned()
            .unwrap_or_else(|| Staircase::empty(Ambient::Int))
    }

    /// `U_σ(φ*F) = U_{φ(σ)}(F)`.
    pub fn pullback(&self, phi: &Surjection) -> Result<IntFiltration> {
        self.ground.check_same(phi.target())?;
        let nz = phi.source().len();
        Error::guard("source vertex set", nz, SUBSET_GUARD)?;
        let supports = (1u64..(1u64 << nz))
            .filter_map(|s| self.supports.get(&image(phi, s)).map(|u| (s, u.clone())))
            .collect();
        Ok(IntFiltration {
            ground: phi.source().clone(),
            supports,
        })
    }
}

/// `min_R max_{σ ⊆ R} value(π_X σ, π_Y σ)` over correspondences `R`.
///
/// Rather than enumerating subsets of `R`, the image pairs `(A, B)` are
/// sorted by value once; for each `R` the first realizable pair gives the
/// maximum. `(A, B)` is realizable iff every `x ∈ A` is related to some
/// `y ∈ B` and vice versa.
fn tripod_search(nx: usize, ny: usize, guard: usize, values: &[ExtDist]) -> Result<ExtDist> {
    let by_pair = |a: u64, b: u64| (a as usize - 1) * ((1usize << ny) - 1) + (b as usize - 1);
    let mut order: Vec<(u64, u64)> = (1u64..(1u64 << nx))
        .flat_map(|a| (1u64..(1u64 << ny)).map(move |b| (a, b)))
        .collect();
    order.sort_by(|p, q| values[by_pair(q.0, q.1)].cmp(&values[by_pair(p.0, p.1)]));

    let mut best: Option<ExtDist> = None;
    for r in correspondences(nx, ny, guard)? {
        let (rows, cols) = (r.rows(), r.cols());
        let realizable = |a: u64, b: u64| {
            (0..nx).all(|x| a >> x & 1 == 0 || rows[x] & b != 0)
                && (0..ny).all(|y| b >> y & 1 == 0 || cols[y] & a != 0)
        };
        let &(a, b) = order
            .iter()
            .find(|&&(a, b)| realizable(a, b))
            .expect("single pairs of R are realizable");
        let worst = &values[by_pair(a, b)];
        if best.as_ref().is_none_or(|b| worst < b) {
            best = Some(worst.clone());
        }
    }
    Ok(best.expect("at least one correspondence exists"))
}

/// Tripod distance between real-line filtrations, with `|∞ - ∞| = 0`.
pub fn d_t_r(f: &RFiltration, g: &RFiltration, guard: usize) -> Result<ExtDist> {
    let (nx, ny) = (f.ground.len(), g.ground.len());
    Error::guard("|X|·|Y|", nx * ny, guard)?;
    let mut values = Vec::with_capacity(((1 << nx) - 1) * ((1 << ny) - 1));
    for a in 1u64..(1u64 << nx) {
        let ba = f.birth_of_mask(a);
        for b in 1u64..(1u64 << ny) {
            values.push(ExtDist::between(&ba, &g.birth_of_mask(b)));
        }
    }
    tripod_search(nx, ny, guard, &values)
}

/// Generalized tripod distance between interval-indexed filtrations.
pub fn d_t_int(f: &IntFiltration, g: &IntFiltration, guard: usize) -> Result<ExtDist> {
    let (nx, ny) = (f.ground.len(), g.ground.len());
    Error::guard("|X|·|Y|", nx * ny, guard)?;
    let supports_g: Vec<Staircase> = (1u64..(1u64 << ny)).map(|b| g.support_of_mask(b)).collect();
    let mut values = Vec::with_capacity(((1 << nx) - 1) * supports_g.len());
    for a in 1u64..(1u64 << nx) {
        let ua = f.support_of_mask(a);
        for ub in &supports_g {
            values.push(ua.hausdorff(ub)?);
        }
    }
    tripod_search(nx, ny, guard, &values)
}

/// Comparison with a filtration over a one-point set:
/// `max_σ d_H(U_σ(F), supp(G))`, no correspondence search needed.
pub fn one_point_tripod(f: &IntFiltration, g: &IntFiltration) -> Result<ExtDist> {
    if g.ground.len() != 1 {
        return Err(Error::NotOnePoint);
    }
    let n = f.ground.len();
    Error::guard("vertex set", n, SUBSET_GUARD)?;
    let point = g.support_of_mask(1);
    let mut best = ExtDist::zero();
    for a in 1u64..(1u64 << n) {
        best = best.max(f.support_of_mask(a).hausdorff(&point)?);
    }
    Ok(best)
}
