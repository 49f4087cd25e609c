//! Brute-force reference implementations that certify the fast paths.
//!
//! Everything here favours transparency over speed and may be
//! exponential. Distances are found by scanning a finite candidate set:
//! the interleaving predicates only change truth value when some shifted
//! coordinate crosses another coordinate, which happens at a difference
//! `u - v` of two coordinates, or at `(u - v)/2` when two coordinates
//! move towards each other (this is where the slope-½ diagonal pieces
//! of clamped staircases come from).

use crate::compare::{correspondences, GridClustering};
use crate::error::{Error, Result};
use crate::filtration::{IntFiltration, RFiltration};
use crate::formigram::{CosheafCode, Formigram, Metric};
use crate::lattice::{enumerate_subpartitions, GroundSet, SubPartition, Surjection};
use crate::persistence::Barcode;
use crate::rational::{Ext, ExtDist, Rat};
use crate::staircase::{Ambient, Staircase};

/// Largest number of critical coordinates scanned by the candidate search.
pub const COORDINATE_GUARD: usize = 64;

/// Sorted, deduplicated `{0} ∪ {|u - v|, |u - v|/2}` over a coordinate set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSet(Vec<Rat>);

impl CandidateSet {
    pub fn from_coordinates<'a, I: IntoIterator<Item = &'a Rat>>(coords: I) -> CandidateSet {
        let mut coords: Vec<&Rat> = coords.into_iter().collect();
        coords.sort();
        coords.dedup();
        let mut values = vec![Rat::zero()];
        for (i, u) in coords.iter().enumerate() {
            for v in &coords[..i] {
                let d = (*u).clone() - *v;
                values.push(d.half());
                values.push(d);
            }
        }
        values.sort();
        values.dedup();
        CandidateSet(values)
    }

    pub fn values(&self) -> &[Rat] {
        &self.0
    }

    /// The least candidate accepted by `pred`, or `Infinite`.
    /// `pred` must be monotone.
    pub fn least<F: FnMut(&Rat) -> Result<bool>>(&self, mut pred: F) -> Result<ExtDist> {
        for c in &self.0 {
            if pred(c)? {
                return Ok(ExtDist::Finite(c.clone()));
            }
        }
        Ok(ExtDist::Infinite)
    }
}

/// Sorted sample points hitting every open gap and every point of `cuts`,
/// including both unbounded ends.
fn samples(mut cuts: Vec<Rat>) -> Vec<Rat> {
    cuts.sort();
    cuts.dedup();
    let (Some(first), Some(last)) = (cuts.first().cloned(), cuts.last().cloned()) else {
        return vec![Rat::zero()];
    };
    let mut out = vec![first - Rat::one()];
    for w in cuts.windows(2) {
        out.push(w[0].clone());
        out.push(w[0].midpoint(&w[1]));
    }
    out.push(last.clone());
    out.push(last + Rat::one());
    out
}

fn window_join(theta: &Formigram, lo: &Rat, hi: &Rat) -> SubPartition {
    let mut points = vec![lo.clone(), hi.clone()];
    points.extend(theta.crit().iter().filter(|c| *c > lo && *c < hi).cloned());
    points.sort();
    let mut mids: Vec<Rat> = points.windows(2).map(|w| w[0].midpoint(&w[1])).collect();
    points.append(&mut mids);
    let parts: Vec<&SubPartition> = points.iter().map(|t| theta.evaluate(t)).collect();
    SubPartition::join_all(theta.ground(), parts).expect("same ground set")
}

/// `θ ≤ S_ε(θ')` and `θ' ≤ S_ε(θ)` pointwise, with the smoothing
/// evaluated directly as a join over the window `[t - ε, t + ε]`.
pub fn formigram_interleaved(theta: &Formigram, other: &Formigram, eps: &Rat) -> Result<bool> {
    theta.ground().check_same(other.ground())?;
    if eps.is_negative() {
        return Err(Error::NegativeEpsilon);
    }
    let mut cuts = Vec::new();
    for c in theta.crit().iter().chain(other.crit()) {
        cuts.push(c.clone());
        cuts.push(c.clone() - eps);
        cuts.push(c.clone() + eps);
    }
    for t in samples(cuts) {
        let (lo, hi) = (t.clone() - eps, t.clone() + eps);
        if !theta.evaluate(&t).refines_unchecked(&window_join(other, &lo, &hi))
            || !other.evaluate(&t).refines_unchecked(&window_join(theta, &lo, &hi))
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn formigram_candidates(theta: &Formigram, other: &Formigram) -> Result<CandidateSet> {
    let n = theta.crit().len() + other.crit().len();
    Error::guard("critical points", n, COORDINATE_GUARD)?;
    Ok(CandidateSet::from_coordinates(theta.crit().iter().chain(other.crit())))
}

/// The least candidate ε for which the direct interleaving predicate holds.
pub fn oracle_d_f(theta: &Formigram, other: &Formigram) -> Result<ExtDist> {
    theta.ground().check_same(other.ground())?;
    formigram_candidates(theta, other)?.least(|e| formigram_interleaved(theta, other, e))
}

/// Rebuilds `θ(I)` as the join of the parts `{{x, x'}}` whose staircase
/// in the code contains `I = (a, b)`.
pub fn reconstruct(code: &CosheafCode, a: &Rat, b: &Rat) -> Result<SubPartition> {
    if a >= b {
        return Err(Error::EmptyInterval {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    let ground = code.ground();
    let mut parts = Vec::new();
    for ((x, y), u) in code.iter() {
        if u.contains(a, b)? {
            parts.push(if x == y {
                SubPartition::singleton(ground, x)
            } else {
                SubPartition::pair(ground, x, y)
            });
        }
    }
    SubPartition::join_all(ground, &parts)
}

/// Outcome of comparing the direct infimum with the max over parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartsReport {
    pub direct: ExtDist,
    pub by_parts: ExtDist,
    pub witness: (usize, usize),
}

impl PartsReport {
    pub fn agrees(&self) -> bool {
        self.direct == self.by_parts
    }
}

pub fn parts_equality_check(theta: &Formigram, other: &Formigram) -> Result<PartsReport> {
    let direct = oracle_d_f(theta, other)?;
    let (witness, by_parts) = theta.cosheaf_code().witness(&other.cosheaf_code())?;
    Ok(PartsReport {
        direct,
        by_parts,
        witness,
    })
}

fn flow(u: &Staircase, eps: &Rat) -> Vec<(Ext, Ext)> {
    u.generators()
        .iter()
        .map(|g| (g.l().shift(eps), g.r().shift(&-eps)))
        .collect()
}

/// Geometric containment of staircases given by generator lists.
///
/// A generator region lies in a union of generator regions iff its
/// minimal points do. In the plane that is the single corner; over the
/// interval poset a generator with `l > r` is cut by the diagonal and its
/// minimal points are the diagonal segment from `(r, r)` to `(l, l)`.
fn covered(u: &[(Ext, Ext)], v: &[(Ext, Ext)], ambient: Ambient) -> bool {
    u.iter().all(|(l, r)| {
        if v.iter().any(|(lv, rv)| l <= lv && r >= rv) {
            return true;
        }
        if ambient == Ambient::Plane || l <= r {
            return false;
        }
        let mut segments: Vec<&(Ext, Ext)> = v.iter().filter(|(lv, rv)| rv <= lv).collect();
        segments.sort_by(|p, q| p.1.cmp(&q.1));
        let mut reach = r.clone();
        for (lv, rv) in segments {
            if rv > &reach {
                break;
            }
            reach = reach.max(lv.clone());
        }
        &reach >= l
    })
}

fn staircase_interleaved(u: &Staircase, v: &Staircase, eps: &Rat) -> bool {
    let ambient = u.ambient();
    let own = |s: &Staircase| flow(s, &Rat::zero());
    covered(&own(u), &flow(v, eps), ambient) && covered(&own(v), &flow(u, eps), ambient)
}

/// Hausdorff distance by scanning candidate ε with a geometric
/// containment test.
pub fn staircase_hausdorff(u: &Staircase, v: &Staircase) -> Result<ExtDist> {
    if u.ambient() != v.ambient() {
        return Err(Error::AmbientMismatch);
    }
    let coords: Vec<Rat> = u
        .generators()
        .iter()
        .chain(v.generators())
        .flat_map(|g| [g.l().fin().cloned(), g.r().fin().cloned()])
        .flatten()
        .collect();
    CandidateSet::from_coordinates(&coords).least(|e| Ok(staircase_interleaved(u, v, e)))
}

/// Whether the rank functions are ε-interleaved:
/// `rk_1(a - ε, b + ε) ≤ rk_2(a, b)` and symmetrically, for all `a < b`.
pub fn rank_interleaved(b1: &Barcode, b2: &Barcode, eps: &Rat) -> bool {
    let mut cuts = Vec::new();
    for bar in b1.bars().iter().chain(b2.bars()) {
        for c in [Some(bar.birth()), bar.death().fin()].into_iter().flatten() {
            cuts.push(c.clone());
            cuts.push(c.clone() - eps);
            cuts.push(c.clone() + eps);
        }
    }
    let base = samples(cuts);
    // Quarter points give two ordered samples inside every gap.
    let mut pts = base.clone();
    for w in base.windows(2) {
        let gap = w[1].clone() - &w[0];
        pts.push(w[0].clone() + gap.clone() * Rat::new(1, 4));
        pts.push(w[0].clone() + gap * Rat::new(3, 4));
    }
    pts.sort();
    pts.dedup();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            let (wa, wb) = (a.clone() - eps, b.clone() + eps);
            let r1 = b1.rank(a, b).expect("a < b");
            let r2 = b2.rank(a, b).expect("a < b");
            if b1.rank(&wa, &wb).expect("a < b") > r2 || b2.rank(&wa, &wb).expect("a < b") > r1 {
                return false;
            }
        }
    }
    true
}

/// Infimum of the ε for which the rank functions are interleaved.
///
/// The predicate is constant on each open gap between consecutive
/// candidates, and may fail at the infimum itself, so each gap is probed
/// at its midpoint.
pub fn erosion_oracle(b1: &Barcode, b2: &Barcode) -> ExtDist {
    let coords: Vec<Rat> = b1
        .bars()
        .iter()
        .chain(b2.bars())
        .flat_map(|bar| [Some(bar.birth().clone()), bar.death().fin().cloned()])
        .flatten()
        .collect();
    let cands = CandidateSet::from_coordinates(&coords);
    let values = cands.values();
    for (k, c) in values.iter().enumerate() {
        let probe = match values.get(k + 1) {
            Some(next) => c.midpoint(next),
            None => c.clone() + Rat::one(),
        };
        if rank_interleaved(b1, b2, c) || rank_interleaved(b1, b2, &probe) {
            return ExtDist::Finite(c.clone());
        }
    }
    ExtDist::Infinite
}

/// Bottleneck distance by trying every partial matching.
pub fn bottleneck_brute(b1: &Barcode, b2: &Barcode) -> ExtDist {
    fn go(b1: &Barcode, b2: &Barcode, i: usize, used: &mut Vec<bool>, acc: ExtDist) -> ExtDist {
        if i == b1.len() {
            let rest = b2
                .bars()
                .iter()
                .zip(used.iter())
                .filter(|(_, u)| !**u)
                .map(|(b, _)| b.half_length());
            return acc.max(ExtDist::max_of(rest));
        }
        let bar = &b1.bars()[i];
        let mut best = go(b1, b2, i + 1, used, acc.clone().max(bar.half_length()));
        for j in 0..b2.len() {
            if !used[j] {
                used[j] = true;
                let c = acc.clone().max(bar.cost(&b2.bars()[j]));
                best = best.min(go(b1, b2, i + 1, used, c));
                used[j] = false;
            }
        }
        best
    }
    go(b1, b2, 0, &mut vec![false; b2.len()], ExtDist::zero())
}

/// Single-linkage ultrametric by thresholding: `u(x, y)` is the least
/// distance value at which `x` and `y` are connected by edges of at most
/// that length.
pub fn single_linkage_ultrametric(metric: &Metric) -> Vec<Vec<Rat>> {
    let n = metric.ground().len();
    let mut thresholds: Vec<&Rat> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| metric.get(x, y))
        .collect();
    thresholds.sort();
    thresholds.dedup();
    let mut u = vec![vec![None; n]; n];
    for t in thresholds {
        let mut reach: Vec<Vec<bool>> = (0..n)
            .map(|x| (0..n).map(|y| metric.get(x, y) <= t).collect())
            .collect();
        for k in 0..n {
            for x in 0..n {
                for y in 0..n {
                    if reach[x][k] && reach[k][y] {
                        reach[x][y] = true;
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if reach[x][y] && u[x][y].is_none() {
                    u[x][y] = Some(t.clone());
                }
            }
        }
    }
    u.into_iter()
        .map(|row| row.into_iter().map(|v| v.expect("the largest threshold connects all")).collect())
        .collect()
}

/// The least upper bound of `p` and `q` found by enumeration, if unique.
pub fn join_by_enumeration(p: &SubPartition, q: &SubPartition) -> Result<Option<SubPartition>> {
    let all = enumerate_subpartitions(p.ground())?;
    let upper: Vec<&SubPartition> = all
        .iter()
        .filter(|s| p.refines_unchecked(s) && q.refines_unchecked(s))
        .collect();
    Ok(upper
        .iter()
        .find(|s| upper.iter().all(|t| s.refines_unchecked(t)))
        .map(|s| (*s).clone()))
}

/// The greatest lower bound of `p` and `q` found by enumeration, if unique.
pub fn meet_by_enumeration(p: &SubPartition, q: &SubPartition) -> Result<Option<SubPartition>> {
    let all = enumerate_subpartitions(p.ground())?;
    let lower: Vec<&SubPartition> = all
        .iter()
        .filter(|s| s.refines_unchecked(p) && s.refines_unchecked(q))
        .collect();
    Ok(lower
        .iter()
        .find(|s| lower.iter().all(|t| t.refines_unchecked(s)))
        .map(|s| (*s).clone()))
}

fn tripod_brute<F>(nx: usize, ny: usize, guard: usize, value: F) -> Result<ExtDist>
where
    F: Fn(u64, u64) -> Result<ExtDist>,
{
    let mut best: Option<ExtDist> = None;
    for r in correspondences(nx, ny, guard)? {
        let pairs = r.pairs();
        let mut worst = ExtDist::zero();
        for sigma in 1u64..(1u64 << pairs.len()) {
            let (mut a, mut b) = (0u64, 0u64);
            for (k, &(x, y)) in pairs.iter().enumerate() {
                if sigma >> k & 1 == 1 {
                    a |= 1 << x;
                    b |= 1 << y;
                }
            }
            worst = worst.max(value(a, b)?);
        }
        best = Some(best.map_or(worst.clone(), |b| b.min(worst)));
    }
    Ok(best.expect("at least one correspondence exists"))
}

/// Tripod distance by enumerating every subset of every correspondence.
pub fn tripod_brute_r(f: &RFiltration, g: &RFiltration, guard: usize) -> Result<ExtDist> {
    let (nx, ny) = (f.ground().len(), g.ground().len());
    Error::guard("|X|·|Y|", nx * ny, guard)?;
    tripod_brute(nx, ny, guard, |a, b| {
        Ok(ExtDist::between(&f.birth_of_mask(a), &g.birth_of_mask(b)))
    })
}

pub fn tripod_brute_int(f: &IntFiltration, g: &IntFiltration, guard: usize) -> Result<ExtDist> {
    let (nx, ny) = (f.ground().len(), g.ground().len());
    Error::guard("|X|·|Y|", nx * ny, guard)?;
    tripod_brute(nx, ny, guard, |a, b| {
        f.support_of_mask(a).hausdorff(&g.support_of_mask(b))
    })
}

/// `½ min_R d_F(φ_X* θ_X, φ_Y* θ_Y)` with `φ_X, φ_Y` the projections of
/// the correspondence `R`.
pub fn gh_via_pullbacks(theta_x: &Formigram, theta_y: &Formigram, guard: usize) -> Result<ExtDist> {
    let (nx, ny) = (theta_x.ground().len(), theta_y.ground().len());
    Error::guard("|X|·|Y|", nx * ny, guard)?;
    let mut best: Option<ExtDist> = None;
    for r in correspondences(nx, ny, guard)? {
        let pairs = r.pairs();
        let z = GroundSet::indexed(pairs.len());
        let px = Surjection::new(&z, theta_x.ground(), pairs.iter().map(|p| p.0).collect())?;
        let py = Surjection::new(&z, theta_y.ground(), pairs.iter().map(|p| p.1).collect())?;
        let d = theta_x.pullback(&px)?.d_f(&theta_y.pullback(&py)?)?;
        best = Some(best.map_or(d.clone(), |b| b.min(d)));
    }
    Ok(best.expect("at least one correspondence exists").half())
}

/// `F(p) ≤ G(p + ε(1, 1))` and `G(p) ≤ F(p + ε(1, 1))` at every grid
/// sample point.
pub fn grid_interleaved(f: &GridClustering, g: &GridClustering, eps: &Rat) -> Result<bool> {
    f.ground().check_same(g.ground())?;
    if eps.is_negative() {
        return Err(Error::NegativeEpsilon);
    }
    let axis = |cuts_f: &[Rat], cuts_g: &[Rat]| {
        let mut cuts = Vec::new();
        for c in cuts_f.iter().chain(cuts_g) {
            cuts.push(c.clone());
            cuts.push(c.clone() - eps);
        }
        samples(cuts)
    };
    let xs = axis(f.x_cuts(), g.x_cuts());
    let ys = axis(f.y_cuts(), g.y_cuts());
    for x in &xs {
        for y in &ys {
            let (sx, sy) = (x.clone() + eps, y.clone() + eps);
            if !f.value_at(x, y).refines_unchecked(g.value_at(&sx, &sy))
                || !g.value_at(x, y).refines_unchecked(f.value_at(&sx, &sy))
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn grid_oracle_d_i(f: &GridClustering, g: &GridClustering) -> Result<ExtDist> {
    f.ground().check_same(g.ground())?;
    let coords: Vec<&Rat> = [f.x_cuts(), f.y_cuts(), g.x_cuts(), g.y_cuts()]
        .into_iter()
        .flatten()
        .collect();
    Error::guard("grid cuts", coords.len(), COORDINATE_GUARD)?;
    CandidateSet::from_coordinates(coords).least(|e| grid_interleaved(f, g, e))
}
