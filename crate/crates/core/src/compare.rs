//! Distances that search over correspondences, and two-parameter
//! hierarchical clusterings.
//!
//! A tripod `X ↞ Z ↠ Y` only matters through the relation it realizes, so
//! the searches below run over bi-surjective relations `R ⊆ X × Y`.
//! Exhaustive search is exponential in `|X|·|Y|` and is refused beyond a
//! guard.

use crate::error::{Error, Result};
use crate::formigram::{CosheafCode, Formigram, Ultrametric};
use crate::lattice::{GroundSet, SubPartition};
use crate::rational::{Ext, ExtDist, Rat};
use crate::staircase::{Ambient, Generator, Staircase};

/// Default bound on `|X|·|Y|` for correspondence searches.
pub const DEFAULT_PAIR_GUARD: usize = 12;

/// A relation `R ⊆ X × Y` whose projections onto both factors are onto.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Correspondence {
    nx: usize,
    ny: usize,
    mask: u64,
}

impl Correspondence {
    pub fn new(nx: usize, ny: usize, pairs: &[(usize, usize)]) -> Result<Correspondence> {
        Error::guard("|X|·|Y|", nx * ny, 64)?;
        let mut mask = 0u64;
        for &(x, y) in pairs {
            if x >= nx || y >= ny {
                return Err(Error::invalid(format!("pair ({x}, {y}) out of range")));
            }
            mask |= 1 << (x * ny + y);
        }
        let c = Correspondence { nx, ny, mask };
        if !c.is_bisurjective() {
            return Err(Error::invalid("relation is not surjective onto both factors"));
        }
        Ok(c)
    }

    /// The diagonal of `X × X`.
    pub fn identity(n: usize) -> Correspondence {
        let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
        Correspondence::new(n, n, &pairs).expect("the diagonal is a correspondence")
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.mask >> (x * self.ny + y) & 1 == 1
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.nx)
            .flat_map(|x| (0..self.ny).map(move |y| (x, y)))
            .filter(|&(x, y)| self.contains(x, y))
            .collect()
    }

    /// For each `x`, the set of related `y` as a bitmask.
    pub fn rows(&self) -> Vec<u64> {
        (0..self.nx)
            .map(|x| (self.mask >> (x * self.ny)) & ((1u64 << self.ny) - 1))
            .collect()
    }

    /// For each `y`, the set of related `x` as a bitmask.
    pub fn cols(&self) -> Vec<u64> {
        (0..self.ny)
            .map(|y| {
                (0..self.nx)
                    .filter(|&x| self.contains(x, y))
                    .fold(0u64, |m, x| m | 1 << x)
            })
            .collect()
    }

    fn is_bisurjective(&self) -> bool {
        self.rows().iter().all(|&r| r != 0) && self.cols().iter().all(|&c| c != 0)
    }
}

/// All correspondences between sets of sizes `nx` and `ny`.
pub(crate) fn correspondences(
    nx: usize,
    ny: usize,
    guard: usize,
) -> Result<impl Iterator<Item = Correspondence>> {
    Error::guard("|X|·|Y|", nx * ny, guard.min(63))?;
    let bits = nx * ny;
    Ok((1u64..(1u64 << bits))
        .map(move |mask| Correspondence { nx, ny, mask })
        .filter(Correspondence::is_bisurjective))
}

/// Every correspondence between `x` and `y`, each exactly once.
pub fn enumerate_correspondences(
    x: &GroundSet,
    y: &GroundSet,
    guard: usize,
) -> Result<Vec<Correspondence>> {
    Ok(correspondences(x.len(), y.len(), guard)?.collect())
}

/// `min_R max_{(x,y),(x',y') ∈ R} cost(x, x', y, y')` over correspondences.
fn minimax<F>(nx: usize, ny: usize, guard: usize, cost: F) -> Result<ExtDist>
where
    F: Fn(usize, usize, usize, usize) -> ExtDist,
{
    let mut best: Option<ExtDist> = None;
    for r in correspondences(nx, ny, guard)? {
        let pairs = r.pairs();
        let mut worst = ExtDist::zero();
        'scan: for (i, &(x, y)) in pairs.iter().enumerate() {
            for &(x2, y2) in &pairs[i..] {
                let c = cost(x, x2, y, y2);
                if c > worst {
                    worst = c;
                    if best.as_ref().is_some_and(|b| &worst >= b) {
                        break 'scan;
                    }
                }
            }
        }
        if best.as_ref().is_none_or(|b| &worst < b) {
            best = Some(worst);
        }
    }
    Ok(best.expect("at least one correspondence exists"))
}

fn pair_index(n: usize, x: usize, y: usize) -> usize {
    let (x, y) = if x <= y { (x, y) } else { (y, x) };
    x * n - x * x.saturating_sub(1) / 2 + (y - x)
}

/// Gromov-Hausdorff distance between formigrams over different sets,
/// `½ min_R max d_H(U_{x,x'}(θ_X), U_{y,y'}(θ_Y))`.
pub fn d_gh_formigrams(theta_x: &Formigram, theta_y: &Formigram, guard: usize) -> Result<ExtDist> {
    let (nx, ny) = (theta_x.ground().len(), theta_y.ground().len());
    Error::guard("|X|·|Y|", nx * ny, guard)?;
    let (cx, cy): (CosheafCode, CosheafCode) = (theta_x.cosheaf_code(), theta_y.cosheaf_code());
    let px: Vec<&Staircase> = cx.iter().map(|(_, s)| s).collect();
    let py: Vec<&Staircase> = cy.iter().map(|(_, s)| s).collect();
    let mut table = Vec::with_capacity(px.len() * py.len());
    for u in &px {
        for v in &py {
            table.push(u.hausdorff(v)?);
        }
    }
    let d = minimax(nx, ny, guard, |x, x2, y, y2| {
        table[pair_index(nx, x, x2) * py.len() + pair_index(ny, y, y2)].clone()
    })?;
    Ok(d.half())
}

/// `½ min_R max |u_X(x, x') - u_Y(y, y')|`.
pub fn gh_ultrametric(ux: &Ultrametric, uy: &Ultrametric, guard: usize) -> Result<ExtDist> {
    let (nx, ny) = (ux.ground().len(), uy.ground().len());
    Error::guard("|X|·|Y|", nx * ny, guard)?;
    let d = minimax(nx, ny, guard, |x, x2, y, y2| {
        ExtDist::Finite((ux.get(x, x2) - uy.get(y, y2)).abs())
    })?;
    Ok(d.half())
}

/// An order-preserving map from the plane to subpartitions that is
/// constant on the cells of a rectangular grid.
///
/// Cells are half-open, `[cut_i, cut_{i+1})` on each axis, so a point on a
/// cut line takes the value of the cell above and to the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridClustering {
    ground: GroundSet,
    x_cuts: Vec<Rat>,
    y_cuts: Vec<Rat>,
    /// `cells[row][col]`, rows indexed by y band from the bottom.
    cells: Vec<Vec<SubPartition>>,
}

impl GridClustering {
    pub fn new(
        ground: &GroundSet,
        x_cuts: Vec<Rat>,
        y_cuts: Vec<Rat>,
        cells: Vec<Vec<SubPartition>>,
    ) -> Result<GridClustering> {
        for cuts in [&x_cuts, &y_cuts] {
            if cuts.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::invalid("grid cuts must be strictly increasing"));
            }
        }
        if cells.len() != y_cuts.len() + 1 || cells.iter().any(|row| row.len() != x_cuts.len() + 1) {
            return Err(Error::invalid(format!(
                "expected {} rows of {} cells",
                y_cuts.len() + 1,
                x_cuts.len() + 1
            )));
        }
        for row in &cells {
            for v in row {
                ground.check_same(v.ground())?;
            }
        }
        for (i, row) in cells.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let right = row.get(j + 1);
                let up = cells.get(i + 1).map(|r| &r[j]);
                for next in right.into_iter().chain(up) {
                    if !v.refines_unchecked(next) {
                        return Err(Error::invalid(format!(
                            "not order-preserving: cell ({i}, {j}) has {v}, neighbour has {next}"
                        )));
                    }
                }
            }
        }
        Ok(GridClustering {
            ground: ground.clone(),
            x_cuts,
            y_cuts,
            cells,
        })
    }

    pub fn constant(value: SubPartition) -> GridClustering {
        GridClustering {
            ground: value.ground().clone(),
            x_cuts: Vec::new(),
            y_cuts: Vec::new(),
            cells: vec![vec![value]],
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn x_cuts(&self) -> &[Rat] {
        &self.x_cuts
    }

    pub fn y_cuts(&self) -> &[Rat] {
        &self.y_cuts
    }

    pub fn cells(&self) -> &[Vec<SubPartition>] {
        &self.cells
    }

    pub fn value_at(&self, x: &Rat, y: &Rat) -> &SubPartition {
        let col = self.x_cuts.partition_point(|c| c <= x);
        let row = self.y_cuts.partition_point(|c| c <= y);
        &self.cells[row][col]
    }

    /// `U_{x,x'}(F)`: the closed region where `x` and `x'` share a block
    /// (membership of `x` when `x == x'`), as a plane staircase.
    pub fn upper_set(&self, x: usize, x2: usize) -> Staircase {
        let lower = |cuts: &[Rat], k: usize| {
            if k == 0 {
                Ext::NegInf
            } else {
                Ext::Fin(cuts[k - 1].clone())
            }
        };
        let mut gens = Vec::new();
        for (i, row) in self.cells.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if v.related(x, x2) {
                    gens.push(
                        Generator::corner(lower(&self.x_cuts, j), lower(&self.y_cuts, i))
                            .expect("lower cell corners are never +inf"),
                    );
                }
            }
        }
        Staircase::normalize(gens, Ambient::Plane)
    }

    /// Interleaving distance for the diagonal flow `p ↦ p + ε(1, 1)`,
    /// computed pair by pair.
    pub fn d_i(&self, other: &GridClustering) -> Result<ExtDist> {
        self.ground.check_same(&other.ground)?;
        let n = self.ground.len();
        let mut best = ExtDist::zero();
        for x in 0..n {
            for y in x..n {
                best = best.max(self.upper_set(x, y).hausdorff(&other.upper_set(x, y))?);
            }
        }
        Ok(best)
    }
}
